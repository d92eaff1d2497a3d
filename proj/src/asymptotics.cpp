#include "abprop/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "abprop/errors.hpp"

namespace abprop {

namespace {

constexpr double kPi = std::numbers::pi;

// Nominal size of the first neglected order of the large-z expansion.
double asymptotic_error(const ReducedConfig& cfg) {
    return (1.0 + 4.0 * cfg.alpha * cfg.alpha) / (8.0 * cfg.z);
}

MethodResult make_result(Complex value, double err, Method method) {
    MethodResult out;
    out.value = value;
    out.err_estimate = err;
    out.work = 1;
    out.method = method;
    return out;
}

// exp(-i alpha (pi - phi_f)) F + exp(i alpha (pi + phi_f)) (1 - F)
Complex split_bracket(double alpha, double phi_f, Complex f) {
    return std::polar(1.0, -alpha * (kPi - phi_f)) * f +
           std::polar(1.0, alpha * (kPi + phi_f)) * (1.0 - f);
}

}  // namespace

MethodResult semiclassical_kernel(const ReducedConfig& cfg) {
    const Complex value = free_kernel(cfg) * std::polar(1.0, -cfg.alpha * cfg.phi_b);
    return make_result(value, asymptotic_error(cfg), Method::semiclassical);
}

MethodResult backward_quadratic(const ReducedConfig& cfg) {
    const double phi = cfg.phi_b;
    const double phase = -cfg.z + 0.5 * cfg.z * phi * phi - cfg.alpha * phi;
    const double taylor = cfg.z * phi * phi * phi * phi / 24.0;
    return make_result(std::polar(1.0, phase), asymptotic_error(cfg) + taylor, Method::backward);
}

MethodResult forward_split_wave(const ReducedConfig& cfg) {
    const double phi = cfg.phi_f;
    const Complex f = specfun::fresnel_upper(-std::sqrt(0.5 * cfg.z) * phi);
    const Complex carrier = std::polar(1.0, cfg.z - 0.5 * cfg.z * phi * phi);
    return make_result(carrier * split_bracket(cfg.alpha, phi, f), asymptotic_error(cfg),
                       Method::forward);
}

MethodResult olariu_popescu(const ReducedConfig& cfg) {
    const double phi = cfg.phi_f;
    const Complex f = specfun::fresnel_upper(-std::sqrt(2.0 * cfg.z) * std::sin(0.5 * phi));
    return make_result(free_kernel(cfg) * split_bracket(cfg.alpha, phi, f), asymptotic_error(cfg),
                       Method::op);
}

Complex half_wave(const ReducedConfig& cfg, int branch) {
    if (branch != 1 && branch != -1) throw DomainError("half_wave branch must be +1 or -1");
    const Complex f =
        specfun::fresnel_upper(-std::sqrt(2.0 * cfg.z) * std::sin(0.5 * cfg.phi_f));
    return free_kernel(cfg) * (branch == 1 ? f : 1.0 - f);
}

MethodResult stationary_phase_forward(const ReducedConfig& cfg) {
    const double phi = cfg.phi_f;
    if (phi == 0.0) throw DomainError("stationary-phase forward form is undefined at phi_f = 0");
    const double dirac = phi > 0.0 ? -cfg.alpha * (kPi - phi) : cfg.alpha * (kPi + phi);
    const Complex value = std::polar(1.0, cfg.z - 0.5 * cfg.z * phi * phi + dirac);
    const double u = std::sqrt(0.5 * cfg.z) * std::abs(phi);
    return make_result(value, asymptotic_error(cfg) + 1.0 / (2.0 * std::sqrt(kPi) * u),
                       Method::spf);
}

ScalingPoint scaling_coordinate(const ReducedConfig& cfg) {
    return {0.5 * cfg.z * cfg.phi_f * cfg.phi_f, sign_of(cfg.phi_f)};
}

}  // namespace abprop
