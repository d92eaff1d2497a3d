#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "abprop/specfun.hpp"

namespace abprop {

enum class Method {
    series,
    integral,
    halfflux,
    semiclassical,
    backward,
    forward,
    op,
    spf,
    whirls,
};

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);
const std::vector<Method>& all_methods();

/// Dimensionless propagation point. Build through the factories; the angle
/// that was supplied is stored exactly and the other one derived from it.
struct ReducedConfig {
    double z = 1.0;
    double delta_phi = 0.0;
    double alpha = 0.0;
    double phi_b = 0.0;   ///< in (-pi, pi]
    double phi_f = 0.0;   ///< in (-pi, pi]
    std::int64_t winding = 0;

    static ReducedConfig from_delta_phi(double z, double delta_phi, double alpha);
    static ReducedConfig from_phi_b(double z, double phi_b, double alpha);
    static ReducedConfig from_phi_f(double z, double phi_f, double alpha);
};

/// sign with sign(0) = +1
inline double sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

struct FluxTriple {
    double charge = 0.0;
    double light_speed = 1.0;
    double flux = 0.0;
};

struct PhysicalConfig {
    double mass = 1.0;
    double r_start = 1.0;
    double r_end = 1.0;
    double phi_start = 0.0;
    double phi_end = 0.0;
    double t_start = 0.0;
    double t_end = 1.0;
    double hbar = 1.0;
    std::variant<double, FluxTriple> flux = 0.0;  ///< alpha, or (e, c, Phi)

    /// chi = -(e/c) Phi / (2 pi), or alpha * hbar.
    double chi() const;
    double alpha() const { return chi() / hbar; }
};

struct MethodResult {
    Complex value;
    double err_estimate = 0.0;
    std::int64_t work = 0;
    Method method = Method::series;
};

/// |S/S_free|^2 and arg(S/S_free).
double abs2_norm(Complex s, const ReducedConfig& cfg);
double arg_norm(Complex s, const ReducedConfig& cfg);

struct Reduction {
    ReducedConfig config;
    Complex prefactor;  ///< m/(2 pi i hbar t) exp(i m (r''^2 + r'^2)/(2 hbar t))
};

Reduction reduce_physical(const PhysicalConfig& cfg);

Complex free_kernel(const ReducedConfig& cfg);

/// Coefficients of the partial-wave sum for fixed (z, alpha). The sum splits
/// into the orders a + k (l >= l0) and b + k (l < l0) with a, b in [0, 1];
/// both runs come from one recurrence pass each and are reused for every
/// angle.
class PartialWaveTable {
public:
    /// Precomputes orders up to z + 12 z^{1/3} + 200.
    PartialWaveTable(double z, double alpha);

    double z() const { return z_; }
    double alpha() const { return alpha_; }

    /// sum_l exp(-i |l+alpha| pi/2) J_{|l+alpha|}(z) exp(i l phi) truncated
    /// at tol. Throws ConvergenceError if the table is exhausted.
    MethodResult sum(double phi, double tol) const;

private:
    double z_;
    double alpha_;
    std::int64_t l0_;
    std::vector<Complex> upper_;  // exp(-i(a+k)pi/2) J_{a+k}(z)
    std::vector<Complex> lower_;  // exp(-i(b+k)pi/2) J_{b+k}(z)
};

constexpr double kDefaultSeriesTol = 1e-10;

MethodResult reduced_kernel_series(const ReducedConfig& cfg, double tol = kDefaultSeriesTol);

/// Exact only when 2 alpha is odd; throws DomainError otherwise.
MethodResult half_flux_closed_form(const ReducedConfig& cfg);

/// sum_l (-i)^{|l+alpha|} J_{|l+alpha|}(kr) exp(i l phi)
Complex ab_wavefunction(double kr, double phi, double alpha, double tol = kDefaultSeriesTol);

double principal_function(const PhysicalConfig& cfg);
double canonical_angular_momentum(const PhysicalConfig& cfg);

}  // namespace abprop
