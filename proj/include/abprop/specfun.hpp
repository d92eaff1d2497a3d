#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace abprop {

using Complex = std::complex<double>;

namespace specfun {

/// sin(pi*x) and cos(pi*x) with exact argument reduction, so that large
/// orders and half-integers produce exact zeros.
double sinpi(double x);
double cospi(double x);

/// Bessel function of the first kind J_nu(x) for real nu >= 0 and x >= 0.
///
/// Orders and arguments of any size are handled by one scheme: backward
/// (Miller) recurrence from above the turning point, normalised with the
/// Wronskian against Y_mu, Y_{mu+1} at the reduced order |mu| <= 1/2.
/// Those come from Temme's series for x < 2 and from Steed's continued
/// fraction for the Hankel log-derivative otherwise. Cost is O(max(nu, x)).
double bessel_j(double nu, double x);

/// Bessel function of the second kind. Negative orders go through
/// Y_{-nu} = sin(nu pi) J_nu + cos(nu pi) Y_nu; integer orders need no
/// special treatment. Throws PoleError at x = 0.
double bessel_y(double nu, double x);

struct BesselJY {
    double j = 0.0;
    double y = 0.0;
};

/// J_nu(x) and Y_nu(x) from a single recurrence pass (nu >= 0, x > 0).
BesselJY bessel_jy(double nu, double x);

/// H^{(1)}_nu(x) = J_nu(x) + i Y_nu(x) for any real order, x > 0.
Complex hankel1(double nu, double x);

/// {H^{(1)}_nu(x), H^{(1)}_{nu+1}(x)} for nu >= 0, x > 0.
std::array<Complex, 2> hankel1_pair(double nu, double x);

/// J_{nu0 + k}(x) for k = 0 .. count-1 (nu0 >= 0, x >= 0), one pass.
std::vector<double> bessel_j_sequence(double nu0, double x, std::size_t count);

/// I_nu(-i z) = exp(-i nu pi / 2) J_nu(z), the rotated modified Bessel
/// function carried by every partial wave. Requires nu >= 0, z > 0.
Complex bessel_i_rotated(double nu, double z);

/// Same phase convention applied to a precomputed J value.
Complex rotate_to_i(double nu, double j_value);

/// Scaled Hankel function H^{(1)}_nu(zeta) * exp(-i zeta) for complex zeta
/// from its large-argument expansion, summed to the minimal term. Intended
/// for |zeta| >= 10 and |nu| <= 2 where the expansion reaches machine
/// precision.
Complex hankel1_scaled_asymptotic(double nu, Complex zeta);

/// F(a) = (1/sqrt(i pi)) * integral_a^inf exp(i x^2) dx.
///
/// F(-inf) = 1, F(0) = 1/2, F(+inf) = 0, and F(-a) = 1 - F(a). Evaluated
/// through the Fresnel integrals in t = a sqrt(2/pi): power series for
/// t <= 1.6, continued fraction for the complementary error function
/// beyond. Absolute accuracy is near machine precision.
Complex fresnel_upper(double a);

struct FresnelCS {
    double c = 0.0;
    double s = 0.0;
};

/// Standard Fresnel integrals C(t) = int_0^t cos(pi s^2/2) ds, S likewise.
FresnelCS fresnel_cs(double t);

/// Truncated two-series large-argument expansion of I_nu(x) at x = -i z.
struct AsymptoticExpansion {
    Complex first;    ///< exp(x)/sqrt(2 pi x) * sum_k (-1)^k a_k / (2x)^k
    Complex second;   ///< exp(-x - (nu + 1/2) pi i)/sqrt(2 pi x) * sum_k a_k / (2x)^k
    Complex value;    ///< first + second
    int kmax = 0;
    double first_omitted_term = 0.0;  ///< |a_{kmax+1}| / (2z)^{kmax+1}
    /// Set when the retained terms already grew past the smallest one, i.e.
    /// the expansion was summed beyond its optimal truncation.
    bool past_minimal_term = false;
};

AsymptoticExpansion bessel_i_asymptotic(double nu, double z, int kmax);

/// Index of the smallest term of the expansion (optimal truncation),
/// searched up to max_k.
int optimal_truncation(double nu, double z, int max_k = 400);

/// Lowest-order limit form with the Gaussian order dependence
/// exp(-/+ nu^2/(2x)) in both exponentials, x = -i z.
Complex bessel_i_limit_form(double nu, double z);

/// Coefficients of prod_{j=1..k} (nu^2 - (j - 1/2)^2) as a polynomial in
/// nu^2, lowest power first. These are k! a_k(nu), the numerators of the
/// k-th term of both series.
std::vector<double> expansion_term_polynomial(int k);

}  // namespace specfun
}  // namespace abprop
