#include "abprop/integralrep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "abprop/errors.hpp"
#include "quadrature.hpp"

namespace abprop {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI(0.0, 1.0);
// Orders stay within [-1, 1], where the large-argument Hankel expansion
// reaches machine precision from here on.
constexpr double kAsymptoticArgument = 25.0;

}  // namespace

std::int64_t l_chi(double alpha) {
    if (!std::isfinite(alpha)) throw DomainError("alpha must be finite");
    return -static_cast<std::int64_t>(std::floor(alpha));
}

MethodResult kernel_integral_rep(const ReducedConfig& cfg, const QuadSpec& quad) {
    if (!(cfg.z > 0.0) || !std::isfinite(cfg.z)) throw DomainError("z must be positive");
    if (!(quad.rel_tol > 0.0) || !(quad.rotation_margin > 0.0) || quad.max_evals <= 0) {
        throw DomainError("invalid quadrature specification");
    }
    const double phi = cfg.phi_b;
    if (std::abs(phi) > kPi - quad.rotation_margin) {
        throw ValidityError("|phi_b| too close to pi for the rotated contour");
    }

    const std::int64_t l = l_chi(cfg.alpha);
    const double beta = static_cast<double>(l) + cfg.alpha;
    const Complex direct = std::polar(1.0, -cfg.alpha * phi);

    MethodResult out;
    out.method = Method::integral;
    if (beta == 0.0) {
        out.value = direct * free_kernel(cfg);
        out.err_estimate = 1e-15;
        out.work = 0;
        return out;
    }

    const double c = std::cos(phi);
    const double decay = 1.0 + c;
    const Complex tilt = -kI * std::polar(1.0, -phi);
    const Complex reflect = std::polar(1.0, beta * kPi);  // H_{-beta} = e^{i beta pi} H_beta
    const double abs_tol = 0.05 * quad.rel_tol;

    // real segment
    const double z_bend = std::min(50.0, 10.0 * 2.0 * kPi / decay);
    const double z_turn = cfg.z + z_bend;
    auto on_axis = [&](double zeta) -> Complex {
        if (zeta >= kAsymptoticArgument) {
            const Complex w(zeta, 0.0);
            const Complex h_upper = specfun::hankel1_scaled_asymptotic(1.0 - beta, w);
            const Complex h_lower = specfun::hankel1_scaled_asymptotic(-beta, w);
            return std::polar(1.0, zeta * decay) * (h_upper + tilt * h_lower);
        }
        const Complex h_upper = specfun::hankel1(1.0 - beta, zeta);
        const Complex h_lower = reflect * specfun::hankel1(beta, zeta);
        return std::polar(1.0, zeta * c) * (h_upper + tilt * h_lower);
    };
    const int initial = std::max(1, static_cast<int>(std::ceil(z_bend * decay / kPi)));
    const quad::Result axis = quad::adaptive(on_axis, cfg.z, z_turn, 0.1 * quad.rel_tol, abs_tol,
                                             quad.max_evals, initial);
    std::int64_t evals = axis.evals;
    if (!axis.converged) throw ConvergenceError("integral representation: real segment budget");

    // vertical ray zeta = z_turn + i s, with exp(i zeta) taken out of the
    // Hankel functions so the exponentials combine to exp(i zeta (1 + cos phi))
    auto on_ray = [&](double s) -> Complex {
        const Complex zeta(z_turn, s);
        const Complex h_upper = specfun::hankel1_scaled_asymptotic(1.0 - beta, zeta);
        const Complex h_lower = specfun::hankel1_scaled_asymptotic(-beta, zeta);
        return std::exp(-s * decay) * (h_upper + tilt * h_lower);
    };
    const double width = 4.0 / decay;
    Complex ray = 0.0;
    double ray_error = 0.0;
    for (double s0 = 0.0;; s0 += width) {
        const quad::Result piece =
            quad::adaptive(on_ray, s0, s0 + width, 0.1 * quad.rel_tol, 0.1 * abs_tol,
                           quad.max_evals - evals);
        evals += piece.evals;
        if (!piece.converged) throw ConvergenceError("integral representation: ray budget");
        ray += piece.value;
        ray_error += piece.error;
        // remaining tail is bounded by |integrand(s)| / decay
        const double tail = std::abs(on_ray(s0 + width)) / decay;
        if (tail < 0.1 * quad.rel_tol * std::max(std::abs(ray), 1.0)) break;
    }
    const Complex ray_total = kI * std::polar(1.0, z_turn * decay) * ray;

    const Complex integral = axis.value + ray_total;
    const Complex coefficient = -0.5 * kI * std::polar(1.0, static_cast<double>(l) * phi -
                                                              0.5 * kPi * beta) *
                                specfun::sinpi(beta);
    out.value = free_kernel(cfg) * (direct + coefficient * integral);
    out.err_estimate = std::abs(coefficient) * (axis.error + ray_error);
    out.work = evals;
    return out;
}

}  // namespace abprop
