#include "abprop/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "abprop/errors.hpp"

namespace abprop {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr std::array<std::pair<Method, std::string_view>, 9> kMethodNames{{
    {Method::series, "series"},
    {Method::integral, "integral"},
    {Method::halfflux, "halfflux"},
    {Method::semiclassical, "semiclassical"},
    {Method::backward, "backward"},
    {Method::forward, "forward"},
    {Method::op, "op"},
    {Method::spf, "spf"},
    {Method::whirls, "whirls"},
}};

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

void require_z(double z) {
    require_finite(z, "z");
    if (z <= 0.0) throw DomainError("z must be positive");
}

// phi_f = sign(phi_b) pi - phi_b; the same map is its own inverse.
double flip_axis(double phi) { return sign_of(phi) * kPi - phi; }

}  // namespace

std::string_view method_name(Method m) {
    for (const auto& [method, name] : kMethodNames) {
        if (method == m) return name;
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
    for (const auto& [method, known] : kMethodNames) {
        if (known == name) return method;
    }
    return std::nullopt;
}

const std::vector<Method>& all_methods() {
    static const std::vector<Method> methods = [] {
        std::vector<Method> out;
        for (const auto& entry : kMethodNames) out.push_back(entry.first);
        return out;
    }();
    return methods;
}

ReducedConfig ReducedConfig::from_delta_phi(double z, double delta_phi, double alpha) {
    require_z(z);
    require_finite(delta_phi, "delta_phi");
    require_finite(alpha, "alpha");
    ReducedConfig cfg;
    cfg.z = z;
    cfg.delta_phi = delta_phi;
    cfg.alpha = alpha;
    auto winding = static_cast<std::int64_t>(std::ceil((delta_phi - kPi) / kTwoPi));
    double phi_b = delta_phi - kTwoPi * static_cast<double>(winding);
    if (phi_b > kPi) {
        ++winding;
        phi_b -= kTwoPi;
    } else if (phi_b <= -kPi) {
        --winding;
        phi_b += kTwoPi;
    }
    cfg.winding = winding;
    cfg.phi_b = phi_b;
    cfg.phi_f = flip_axis(phi_b);
    return cfg;
}

ReducedConfig ReducedConfig::from_phi_b(double z, double phi_b, double alpha) {
    require_finite(phi_b, "phi_b");
    if (phi_b <= -kPi || phi_b > kPi) {
        return from_delta_phi(z, phi_b, alpha);
    }
    require_z(z);
    require_finite(alpha, "alpha");
    ReducedConfig cfg;
    cfg.z = z;
    cfg.delta_phi = phi_b;
    cfg.alpha = alpha;
    cfg.phi_b = phi_b;
    cfg.phi_f = flip_axis(phi_b);
    return cfg;
}

ReducedConfig ReducedConfig::from_phi_f(double z, double phi_f, double alpha) {
    require_finite(phi_f, "phi_f");
    if (phi_f <= -kPi || phi_f > kPi) {
        throw DomainError("phi_f must lie in (-pi, pi]");
    }
    require_z(z);
    require_finite(alpha, "alpha");
    ReducedConfig cfg;
    cfg.z = z;
    cfg.alpha = alpha;
    cfg.phi_f = phi_f;
    cfg.phi_b = flip_axis(phi_f);
    cfg.delta_phi = cfg.phi_b;
    return cfg;
}

double PhysicalConfig::chi() const {
    if (const double* a = std::get_if<double>(&flux)) return *a * hbar;
    const FluxTriple& t = std::get<FluxTriple>(flux);
    return -(t.charge / t.light_speed) * t.flux / kTwoPi;
}

double abs2_norm(Complex s, const ReducedConfig& cfg) {
    return std::norm(s / free_kernel(cfg));
}

double arg_norm(Complex s, const ReducedConfig& cfg) {
    return std::arg(s * std::conj(free_kernel(cfg)));
}

namespace {

void validate_physical(const PhysicalConfig& cfg) {
    const double values[] = {cfg.mass, cfg.r_start, cfg.r_end, cfg.phi_start, cfg.phi_end,
                             cfg.t_start, cfg.t_end, cfg.hbar};
    for (double v : values) require_finite(v, "physical parameter");
    if (cfg.mass <= 0.0) throw DomainError("mass must be positive");
    if (cfg.hbar <= 0.0) throw DomainError("hbar must be positive");
    if (cfg.r_start <= 0.0 || cfg.r_end <= 0.0) throw DomainError("radii must be positive");
    if (!(cfg.t_end > cfg.t_start)) throw DomainError("t_end must exceed t_start");
    if (const auto* t = std::get_if<FluxTriple>(&cfg.flux)) {
        require_finite(t->charge, "charge");
        require_finite(t->flux, "flux");
        require_finite(t->light_speed, "light_speed");
        if (t->light_speed == 0.0) throw DomainError("light_speed must be non-zero");
    } else {
        require_finite(std::get<double>(cfg.flux), "alpha");
    }
}

}  // namespace

Reduction reduce_physical(const PhysicalConfig& cfg) {
    validate_physical(cfg);
    const double t = cfg.t_end - cfg.t_start;
    const double z = cfg.mass * cfg.r_end * cfg.r_start / (cfg.hbar * t);
    if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("z must be positive and finite");
    Reduction out;
    out.config = ReducedConfig::from_delta_phi(z, cfg.phi_end - cfg.phi_start, cfg.alpha());
    const double phase = cfg.mass * (cfg.r_end * cfg.r_end + cfg.r_start * cfg.r_start) /
                         (2.0 * cfg.hbar * t);
    const Complex scale = cfg.mass / (Complex(0.0, kTwoPi) * cfg.hbar * t);
    out.prefactor = scale * std::polar(1.0, phase);
    return out;
}

Complex free_kernel(const ReducedConfig& cfg) {
    return std::polar(1.0, -cfg.z * std::cos(cfg.phi_b));
}

PartialWaveTable::PartialWaveTable(double z, double alpha) : z_(z), alpha_(alpha) {
    if (!std::isfinite(z) || z < 0.0) throw DomainError("z must be finite and non-negative");
    require_finite(alpha, "alpha");
    l0_ = static_cast<std::int64_t>(std::ceil(-alpha));
    const double a = static_cast<double>(l0_) + alpha;
    const double b = 1.0 - a;
    const auto count = static_cast<std::size_t>(std::ceil(z + 12.0 * std::cbrt(z) + 200.0)) + 1;
    const auto ja = specfun::bessel_j_sequence(a, z, count);
    const auto jb = specfun::bessel_j_sequence(b, z, count);
    upper_.resize(count);
    lower_.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double kd = static_cast<double>(k);
        upper_[k] = specfun::rotate_to_i(a + kd, ja[k]);
        lower_[k] = specfun::rotate_to_i(b + kd, jb[k]);
    }
}

MethodResult PartialWaveTable::sum(double phi, double tol) const {
    if (!(tol > 0.0)) throw DomainError("tol must be positive");
    require_finite(phi, "phi");
    const double floor_k = z_ + 10.0;
    Complex total = 0.0;
    double magnitude_sum = 0.0;
    double recent[3] = {0.0, 0.0, 0.0};
    int quiet = 0;
    std::size_t k = 0;
    for (; k < upper_.size(); ++k) {
        const auto kd = static_cast<double>(k);
        const double l_up = static_cast<double>(l0_) + kd;
        const double l_lo = static_cast<double>(l0_) - 1.0 - kd;
        const Complex pair = upper_[k] * std::polar(1.0, l_up * phi) +
                             lower_[k] * std::polar(1.0, l_lo * phi);
        total += pair;
        const double size = std::abs(pair);
        magnitude_sum += std::abs(upper_[k]) + std::abs(lower_[k]);
        recent[k % 3] = size;
        if (size < tol * (std::abs(total) + 1e-300)) {
            ++quiet;
        } else {
            quiet = 0;
        }
        if (quiet >= 3 && kd >= floor_k) break;
    }
    if (k == upper_.size()) {
        throw ConvergenceError("partial-wave series did not reach tolerance");
    }
    MethodResult out;
    out.value = total;
    out.err_estimate = recent[0] + recent[1] + recent[2] +
                       magnitude_sum * std::numeric_limits<double>::epsilon();
    out.work = static_cast<std::int64_t>(2 * (k + 1));
    out.method = Method::series;
    return out;
}

MethodResult reduced_kernel_series(const ReducedConfig& cfg, double tol) {
    require_z(cfg.z);
    if (!(tol > 0.0)) throw DomainError("tol must be positive");
    return PartialWaveTable(cfg.z, cfg.alpha).sum(cfg.phi_b, tol);
}

namespace {

bool is_half_odd(double alpha) {
    const double twice = 2.0 * alpha;
    const double r = std::round(twice);
    return std::abs(twice - r) <= 1e-12 * std::max(1.0, std::abs(twice)) &&
           std::fmod(std::abs(r), 2.0) == 1.0;
}

}  // namespace

MethodResult half_flux_closed_form(const ReducedConfig& cfg) {
    require_z(cfg.z);
    if (!is_half_odd(cfg.alpha)) {
        throw DomainError("half-flux closed form requires 2*alpha to be an odd integer");
    }
    const double phi = cfg.phi_b;
    const Complex f = specfun::fresnel_upper(-std::sqrt(2.0 * cfg.z) * std::cos(0.5 * phi));
    const Complex direct = std::polar(1.0, -cfg.alpha * phi);
    const Complex wound = std::polar(1.0, -cfg.alpha * (phi - sign_of(phi) * kTwoPi));
    MethodResult out;
    out.value = free_kernel(cfg) * (direct * f + wound * (1.0 - f));
    out.err_estimate = 1e-15;
    out.work = 1;
    out.method = Method::halfflux;
    return out;
}

Complex ab_wavefunction(double kr, double phi, double alpha, double tol) {
    if (!std::isfinite(kr) || kr < 0.0) throw DomainError("kr must be finite and non-negative");
    return PartialWaveTable(kr, alpha).sum(phi, tol).value;
}

double principal_function(const PhysicalConfig& cfg) {
    validate_physical(cfg);
    const double t = cfg.t_end - cfg.t_start;
    const double dphi = cfg.phi_end - cfg.phi_start;
    const double r1 = cfg.r_start;
    const double r2 = cfg.r_end;
    return 0.5 * cfg.mass * (r2 * r2 + r1 * r1 - 2.0 * r2 * r1 * std::cos(dphi)) / t -
           cfg.chi() * dphi;
}

double canonical_angular_momentum(const PhysicalConfig& cfg) {
    validate_physical(cfg);
    const double t = cfg.t_end - cfg.t_start;
    const double dphi = cfg.phi_end - cfg.phi_start;
    return cfg.mass * cfg.r_end * cfg.r_start * std::sin(dphi) / t - cfg.chi();
}

}  // namespace abprop
