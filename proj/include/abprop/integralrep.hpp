#pragma once

#include <cstdint>

#include "abprop/kernel.hpp"

namespace abprop {

/// The integer with 0 <= l_chi + alpha < 1.
std::int64_t l_chi(double alpha);

struct QuadSpec {
    double rel_tol = 1e-10;
    std::int64_t max_evals = 2'000'000;
    double rotation_margin = 0.1;  ///< required distance of |phi_b| from pi
};

/// Exact kernel through the semi-infinite Hankel integral
///
///   I = int_z^inf exp(i zeta cos phi_b) (H_{1-beta}(zeta) - i exp(-i phi_b) H_{-beta}(zeta)) dzeta,
///   beta = l_chi + alpha,
///
/// taken along the real axis up to z + Z_bend and then up a vertical ray,
/// where the integrand decays like exp(-s (1 + cos phi_b)).
/// Throws ValidityError when |phi_b| > pi - rotation_margin and
/// ConvergenceError when max_evals is exhausted.
MethodResult kernel_integral_rep(const ReducedConfig& cfg, const QuadSpec& quad = {});

}  // namespace abprop
