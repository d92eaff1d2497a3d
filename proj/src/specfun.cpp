#include "abprop/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "abprop/errors.hpp"

namespace abprop::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 100000;

// Taylor coefficients of 1/Gamma(1+t) about t = 0.
constexpr double kReciprocalGamma[] = {
    1.0,
    0.5772156649015328606065,
    -0.655878071520253881077,
    -0.042002635034095235529,
    0.1665386113822914895017,
    -0.04219773455554433674821,
    -0.009621971527876973562115,
    0.007218943246663099542395,
    -0.001165167591859065112114,
    -0.0002152416741149509728157,
    0.0001280502823881161861532,
    -0.00002013485478078823865569,
    -0.000001250493482142670657345,
    0.000001133027231981695882374,
    -2.05633841697760710345e-7,
    6.116095104481415817862e-9,
    5.002007644469222930056e-9,
    -1.181274570487020144588e-9,
    1.043426711691100510492e-10,
    7.78226343990507125405e-12,
    -3.696805618642205708188e-12,
    5.100370287454475979015e-13,
    -2.058326053566506783222e-14,
    -5.34812253942301798237e-15,
    1.226778628238260790159e-15,
    -1.181259301697458769514e-16,
};

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be finite");
    }
}

// Y_mu(x), Y_{mu+1}(x) for |mu| <= 1/2.
struct LowOrderY {
    double y0;
    double y1;
};

// Temme's series; converges well for 0 < x < 2.
LowOrderY temme_y(double mu, double x) {
    // gamma1 = (1/G(1-mu) - 1/G(1+mu)) / (2 mu), gamma2 = (1/G(1-mu) + 1/G(1+mu)) / 2,
    // both even in mu, summed from the reciprocal-gamma Taylor series.
    const double mu2 = mu * mu;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    constexpr int n = static_cast<int>(std::size(kReciprocalGamma));
    for (int k = n - 1; k >= 0; --k) {
        if (k % 2 == 0) {
            gamma2 = gamma2 * mu2 + kReciprocalGamma[k];
        } else {
            gamma1 = gamma1 * mu2 - kReciprocalGamma[k];
        }
    }
    const double rgamma_plus = gamma2 - mu * gamma1;   // 1/Gamma(1+mu)
    const double rgamma_minus = gamma2 + mu * gamma1;  // 1/Gamma(1-mu)

    const double half_x = 0.5 * x;
    const double pi_mu = kPi * mu;
    const double ln_2_over_x = -std::log(half_x);
    const double sigma = mu * ln_2_over_x;
    const double pi_mu_over_sin = std::abs(pi_mu) < kEps ? 1.0 : pi_mu / std::sin(pi_mu);
    const double sinh_ratio = std::abs(sigma) < kEps ? 1.0 : std::sinh(sigma) / sigma;

    double f = (2.0 / kPi) * pi_mu_over_sin *
               (gamma1 * std::cosh(sigma) + gamma2 * sinh_ratio * ln_2_over_x);
    const double pow_2_over_x = std::exp(sigma);
    double p = pow_2_over_x / (kPi * rgamma_plus);
    double q = 1.0 / (pow_2_over_x * kPi * rgamma_minus);

    const double half_pi_mu = 0.5 * pi_mu;
    const double sinc = std::abs(half_pi_mu) < kEps ? 1.0 : std::sin(half_pi_mu) / half_pi_mu;
    const double r = kPi * half_pi_mu * sinc * sinc;  // 2 sin^2(pi mu / 2) / mu

    double c = 1.0;
    const double step = -half_x * half_x;
    double sum0 = f + r * q;
    double sum1 = p;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double di = static_cast<double>(i);
        f = (di * f + p + q) / (di * di - mu2);
        c *= step / di;
        p /= di - mu;
        q /= di + mu;
        const double d0 = c * (f + r * q);
        sum0 += d0;
        const double d1 = c * p - di * d0;
        sum1 += d1;
        if (std::abs(d0) < (1.0 + std::abs(sum0)) * kEps &&
            std::abs(d1) < (1.0 + std::abs(sum1)) * kEps) {
            return {-sum0, -sum1 * (2.0 / x)};
        }
    }
    throw ConvergenceError("Temme series for Y did not converge");
}

// H'_mu/H_mu for H = H^{(1)}_mu(x), Steed's continued fraction; x >= 2.
Complex hankel_log_derivative(double mu, double x) {
    const double mu2 = mu * mu;
    const double a1 = 0.25 - mu2;
    Complex cf = 0.0;
    if (a1 != 0.0) {
        // Tail t = b1 + a2/(b2 + a3/(b3 + ...)) by modified Lentz.
        Complex t = Complex(2.0 * x, 2.0);
        Complex cc = t;
        Complex dd = 0.0;
        bool converged = false;
        for (int k = 2; k <= kMaxIter; ++k) {
            const double kk = static_cast<double>(k) - 0.5;
            const double a = kk * kk - mu2;
            const Complex b(2.0 * x, 2.0 * k);
            dd = b + a * dd;
            if (std::abs(dd) == 0.0) dd = kTiny;
            cc = b + a / cc;
            if (std::abs(cc) == 0.0) cc = kTiny;
            dd = 1.0 / dd;
            const Complex delta = cc * dd;
            t *= delta;
            if (std::abs(delta - 1.0) <= kEps) {
                converged = true;
                break;
            }
        }
        if (!converged) throw ConvergenceError("Hankel continued fraction did not converge");
        cf = a1 / t;
    }
    return Complex(-0.5 / x, 1.0) + Complex(0.0, 1.0 / x) * cf;
}

// J_{mu+k}(x) for k = 0..top together with Y_mu, Y_{mu+1}; |mu| <= 1/2, x > 0.
struct MillerResult {
    std::vector<double> j;
    double y0 = 0.0;
    double y1 = 0.0;
};

MillerResult miller(double mu, double x, std::size_t top) {
    top = std::max<std::size_t>(top, 1);
    // Start far enough above the turning point that the seed's Y admixture
    // is negligible at every order we keep.
    const std::size_t start = std::max(top, static_cast<std::size_t>(std::ceil(x))) + 20 +
                              static_cast<std::size_t>(std::ceil(15.0 * std::cbrt(x)));

    std::vector<double> f(top + 1);
    std::vector<int> scale(top + 1);
    double current = 1.0;  // f_k
    double upper = 0.0;    // f_{k+1}
    int exponent = 0;
    for (std::size_t k = start; k > 0; --k) {
        if (k <= top) {
            f[k] = current;
            scale[k] = exponent;
        }
        const double next = (2.0 * (mu + static_cast<double>(k)) / x) * current - upper;
        upper = current;
        current = next;
        if (std::abs(current) > 0x1p500) {
            current = std::ldexp(current, -500);
            upper = std::ldexp(upper, -500);
            exponent += 500;
        }
    }
    f[0] = current;
    scale[0] = exponent;

    const double f0 = f[0];
    const double f1 = std::ldexp(f[1], scale[1] - scale[0]);
    const double wronskian = 2.0 / (kPi * x);

    MillerResult out;
    double norm = 0.0;
    if (x < 2.0) {
        const LowOrderY y = temme_y(mu, x);
        norm = wronskian / (f1 * y.y0 - f0 * y.y1);
        out.y0 = y.y0;
        out.y1 = y.y1;
    } else {
        // With J' = (mu/x) J - J_{mu+1} and (J' + iY')/(J + iY) = p + iq,
        // J^2 + Y^2 = W/q fixes the scale; the seed above the turning point
        // makes the sign positive.
        const Complex w = hankel_log_derivative(mu, x);
        const double p = w.real();
        const double q = w.imag();
        const double g = (mu / x) * f0 - f1;
        const double t = (p * f0 - g) / q;
        norm = std::sqrt(wronskian / q) / std::hypot(f0, t);
        const double j0 = norm * f0;
        out.y0 = norm * t;
        const double y_prime = q * j0 + p * out.y0;
        out.y1 = (mu / x) * out.y0 - y_prime;
    }
    out.j.resize(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        out.j[k] = norm * std::ldexp(f[k], scale[k] - scale[0]);
    }
    return out;
}

// Split nu >= -1/2 into mu in [-1/2, 1/2) and an integer offset.
struct ReducedOrder {
    double mu;
    std::size_t n;
};

ReducedOrder reduce_order(double nu) {
    const double n = std::floor(nu + 0.5);
    return {nu - n, static_cast<std::size_t>(std::max(0.0, n))};
}

// Leading terms of the ascending series; used only for x so small that the
// recurrence coefficients 2 nu / x would be extreme.
double j_tiny_argument(double nu, double x) {
    const double half_x = 0.5 * x;
    const double lead = nu < 150.0 ? std::pow(half_x, nu) / std::tgamma(nu + 1.0)
                                   : std::exp(nu * std::log(half_x) - std::lgamma(nu + 1.0));
    return lead * (1.0 - half_x * half_x / (nu + 1.0));
}

constexpr double kTinyArgument = 1e-6;

void check_j_arguments(double nu, double x) {
    require_finite(nu, "Bessel order");
    require_finite(x, "Bessel argument");
    if (nu < 0.0) throw DomainError("bessel_j requires nu >= 0");
    if (x < 0.0) throw DomainError("bessel_j requires x >= 0");
}

double y_from_base(const MillerResult& base, double mu, double x, std::size_t n) {
    double lower = base.y0;
    double current = base.y1;
    if (n == 0) return lower;
    for (std::size_t k = 1; k < n; ++k) {
        const double next = (2.0 * (mu + static_cast<double>(k)) / x) * current - lower;
        lower = current;
        current = next;
    }
    return current;
}

}  // namespace

double sinpi(double x) {
    if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
    double r = std::fmod(x, 2.0);
    if (r > 1.0) r -= 2.0;
    if (r < -1.0) r += 2.0;
    if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == -0.5) return -1.0;
    if (r > 0.5) r = 1.0 - r;
    if (r < -0.5) r = -1.0 - r;
    return std::sin(kPi * r);
}

double cospi(double x) {
    if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
    double r = std::fmod(std::abs(x), 2.0);
    if (r > 1.0) r = 2.0 - r;
    if (r == 0.5) return 0.0;
    return r < 0.5 ? std::cos(kPi * r) : -std::cos(kPi * (1.0 - r));
}

double bessel_j(double nu, double x) {
    check_j_arguments(nu, x);
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (x < kTinyArgument) return j_tiny_argument(nu, x);
    const ReducedOrder order = reduce_order(nu);
    return miller(order.mu, x, order.n).j[order.n];
}

BesselJY bessel_jy(double nu, double x) {
    require_finite(nu, "Bessel order");
    require_finite(x, "Bessel argument");
    if (nu < 0.0) throw DomainError("bessel_jy requires nu >= 0");
    if (x == 0.0) throw PoleError("Y_nu has a pole at x = 0");
    if (x < 0.0) throw DomainError("bessel_jy requires x > 0");
    const ReducedOrder order = reduce_order(nu);
    const MillerResult base = miller(order.mu, x, order.n);
    return {base.j[order.n], y_from_base(base, order.mu, x, order.n)};
}

double bessel_y(double nu, double x) {
    require_finite(nu, "Bessel order");
    if (nu >= 0.0) return bessel_jy(nu, x).y;
    const BesselJY pos = bessel_jy(-nu, x);
    return sinpi(-nu) * pos.j + cospi(-nu) * pos.y;
}

Complex hankel1(double nu, double x) {
    require_finite(nu, "Hankel order");
    const BesselJY jy = bessel_jy(std::abs(nu), x);
    const Complex h(jy.j, jy.y);
    if (nu >= 0.0) return h;
    // H^{(1)}_{-v} = exp(i v pi) H^{(1)}_v
    return Complex(cospi(-nu), sinpi(-nu)) * h;
}

std::array<Complex, 2> hankel1_pair(double nu, double x) {
    require_finite(nu, "Hankel order");
    require_finite(x, "Hankel argument");
    if (nu < 0.0) throw DomainError("hankel1_pair requires nu >= 0");
    if (x == 0.0) throw PoleError("Hankel function has a pole at x = 0");
    if (x < 0.0) throw DomainError("hankel1_pair requires x > 0");
    const ReducedOrder order = reduce_order(nu);
    const MillerResult base = miller(order.mu, x, order.n + 1);
    const double y_n = y_from_base(base, order.mu, x, order.n);
    const double y_n1 = y_from_base(base, order.mu, x, order.n + 1);
    return {Complex(base.j[order.n], y_n), Complex(base.j[order.n + 1], y_n1)};
}

std::vector<double> bessel_j_sequence(double nu0, double x, std::size_t count) {
    check_j_arguments(nu0, x);
    std::vector<double> out(count, 0.0);
    if (count == 0) return out;
    if (x == 0.0) {
        if (nu0 == 0.0) out[0] = 1.0;
        return out;
    }
    if (x < kTinyArgument) {
        for (std::size_t k = 0; k < count; ++k) {
            out[k] = j_tiny_argument(nu0 + static_cast<double>(k), x);
        }
        return out;
    }
    const ReducedOrder order = reduce_order(nu0);
    const MillerResult base = miller(order.mu, x, order.n + count - 1);
    std::copy(base.j.begin() + static_cast<std::ptrdiff_t>(order.n), base.j.end(), out.begin());
    return out;
}

Complex rotate_to_i(double nu, double j_value) {
    return Complex(cospi(0.5 * nu), -sinpi(0.5 * nu)) * j_value;
}

Complex bessel_i_rotated(double nu, double z) {
    require_finite(z, "argument z");
    if (z <= 0.0) throw DomainError("bessel_i_rotated requires z > 0");
    return rotate_to_i(nu, bessel_j(nu, z));
}

Complex hankel1_scaled_asymptotic(double nu, Complex zeta) {
    // H e^{-i zeta} = sqrt(2/(pi zeta)) e^{-i(nu pi/2 + pi/4)} sum_k i^k a_k(nu) / zeta^k
    const double four_nu2 = 4.0 * nu * nu;
    const Complex inv_zeta = 1.0 / zeta;
    Complex term = 1.0;
    Complex sum = 1.0;
    double previous = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= Complex(0.0, 1.0) * ((four_nu2 - odd * odd) / (8.0 * k)) * inv_zeta;
        const double magnitude = std::abs(term);
        if (magnitude > previous) break;  // past the minimal term
        sum += term;
        if (magnitude <= kEps * std::abs(sum)) break;
        previous = magnitude;
    }
    const Complex phase = std::exp(Complex(0.0, -(0.5 * nu + 0.25) * kPi));
    return std::sqrt(2.0 / (kPi * zeta)) * phase * sum;
}

FresnelCS fresnel_cs(double t) {
    const double a = t * std::sqrt(0.5 * kPi);
    // C + iS = (1+i)/2 - (1+i) F(a)
    const Complex cs = Complex(0.5, 0.5) - Complex(1.0, 1.0) * fresnel_upper(a);
    return {cs.real(), cs.imag()};
}

Complex fresnel_upper(double a) {
    if (std::isnan(a)) return {std::numeric_limits<double>::quiet_NaN(), 0.0};
    if (std::isinf(a)) return a < 0.0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);

    const double u = std::abs(a);
    const double t = u * std::sqrt(2.0 / kPi);
    // tail = integral_t^inf exp(i pi s^2 / 2) ds
    Complex tail;
    if (t <= 1.6) {
        // C + iS = sum_n (i pi/2)^n t^{2n+1} / (n! (2n+1))
        const Complex step = Complex(0.0, 0.5 * kPi * t * t);
        Complex power = t;
        Complex sum = t;
        for (int n = 1; n < 200; ++n) {
            power *= step / static_cast<double>(n);
            const Complex term = power / static_cast<double>(2 * n + 1);
            sum += term;
            if (std::abs(term) < kEps * std::abs(sum)) break;
        }
        tail = Complex(0.5, 0.5) - sum;
    } else {
        // erfc continued fraction: tail = t exp(i a^2) h with
        // h = 1/(b0 - 1*2/(b0 + 4 - 3*4/(b0 + 8 - ...))), b0 = 1 - i pi t^2.
        Complex b(1.0, -kPi * t * t);
        Complex cc = 1.0 / kTiny;
        Complex dd = 1.0 / b;
        Complex h = dd;
        bool converged = false;
        for (int k = 1; k < kMaxIter; ++k) {
            const double odd = 2.0 * k - 1.0;
            const double coef = -odd * (odd + 1.0);
            b += 4.0;
            dd = 1.0 / (coef * dd + b);
            cc = b + coef / cc;
            const Complex delta = cc * dd;
            h *= delta;
            if (std::abs(delta - 1.0) < kEps) {
                converged = true;
                break;
            }
        }
        if (!converged) throw ConvergenceError("Fresnel continued fraction did not converge");
        tail = t * std::exp(Complex(0.0, u * u)) * h;
    }
    const Complex upper = Complex(0.5, -0.5) * tail;
    return a >= 0.0 ? upper : 1.0 - upper;
}

namespace {

// a_k(nu) / (2z)^k magnitudes share a recursive ratio.
double term_ratio(double nu, int k, double z) {
    const double odd = 2.0 * k - 1.0;
    return (4.0 * nu * nu - odd * odd) / (8.0 * k * z);
}

}  // namespace

AsymptoticExpansion bessel_i_asymptotic(double nu, double z, int kmax) {
    require_finite(nu, "order");
    require_finite(z, "argument z");
    if (z <= 0.0) throw DomainError("bessel_i_asymptotic requires z > 0");
    if (kmax < 0) throw DomainError("bessel_i_asymptotic requires kmax >= 0");

    const Complex x(0.0, -z);
    const Complex inv_two_x = 1.0 / (2.0 * x);
    Complex term = 1.0;  // a_k / (2x)^k
    Complex sum_alternating = 1.0;
    Complex sum_plain = 1.0;
    double smallest = 1.0;
    int smallest_index = 0;
    for (int k = 1; k <= kmax; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= ((4.0 * nu * nu - odd * odd) / (4.0 * k)) * inv_two_x;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum_alternating += sign * term;
        sum_plain += term;
        const double magnitude = std::abs(term);
        if (magnitude < smallest) {
            smallest = magnitude;
            smallest_index = k;
        }
    }

    AsymptoticExpansion out;
    out.kmax = kmax;
    out.first_omitted_term = std::abs(term) * std::abs(term_ratio(nu, kmax + 1, z));
    out.past_minimal_term = smallest_index < kmax && std::abs(term) > smallest;

    const Complex prefactor = 1.0 / std::sqrt(2.0 * kPi * x);
    const Complex second_phase = std::exp(Complex(0.0, z)) *
                                 Complex(cospi(nu + 0.5), -sinpi(nu + 0.5));
    out.first = prefactor * std::exp(x) * sum_alternating;
    out.second = prefactor * second_phase * sum_plain;
    out.value = out.first + out.second;
    return out;
}

int optimal_truncation(double nu, double z, int max_k) {
    double magnitude = 1.0;
    double best = 1.0;
    int best_k = 0;
    for (int k = 1; k <= max_k; ++k) {
        magnitude *= std::abs(term_ratio(nu, k, z));
        if (magnitude == 0.0) return k;  // series terminates (half-integer order)
        if (magnitude < best) {
            best = magnitude;
            best_k = k;
        } else if (k > best_k + 1) {
            break;
        }
    }
    return best_k;
}

Complex bessel_i_limit_form(double nu, double z) {
    require_finite(nu, "order");
    if (!(z > 0.0)) throw DomainError("bessel_i_limit_form requires z > 0");
    const Complex x(0.0, -z);
    const Complex gauss = nu * nu / (2.0 * x);
    const Complex second_phase = Complex(cospi(nu + 0.5), -sinpi(nu + 0.5));
    return (std::exp(x - gauss) + second_phase * std::exp(-x + gauss)) /
           std::sqrt(2.0 * kPi * x);
}

std::vector<double> expansion_term_polynomial(int k) {
    if (k < 0) throw DomainError("expansion_term_polynomial requires k >= 0");
    std::vector<double> poly{1.0};
    for (int j = 1; j <= k; ++j) {
        const double shift = (j - 0.5) * (j - 0.5);
        std::vector<double> next(poly.size() + 1, 0.0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= shift * poly[i];
        }
        poly = std::move(next);
    }
    return poly;
}

}  // namespace abprop::specfun
