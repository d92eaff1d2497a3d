#pragma once

#include "abprop/kernel.hpp"

namespace abprop {

struct ScalingPoint {
    double r_over_hbar = 0.0;  ///< z phi_f^2 / 2
    double sign_phi_f = 1.0;
};

/// exp(-i z cos phi_b) exp(-i alpha phi_b); jumps by 2 pi alpha in phase at
/// phi_b = +-pi.
MethodResult semiclassical_kernel(const ReducedConfig& cfg);

/// exp(-i z + i z phi_b^2/2 - i alpha phi_b)
MethodResult backward_quadratic(const ReducedConfig& cfg);

/// Forward split-wave form in phi_f with Fresnel argument sqrt(z/2) phi_f.
MethodResult forward_split_wave(const ReducedConfig& cfg);

/// Split-wave form over the whole angular range, Fresnel argument
/// sqrt(2z) sin(phi_f/2). Exact when 2 alpha is odd.
MethodResult olariu_popescu(const ReducedConfig& cfg);

/// Free half-waves: branch +1 is exp(-i z cos phi_b) F(-sqrt(2z) sin(phi_f/2)),
/// branch -1 the complementary piece. The two sum to the free kernel.
Complex half_wave(const ReducedConfig& cfg, int branch);

/// One-sided stationary-phase limits of the forward split wave. Throws
/// DomainError at phi_f = 0.
MethodResult stationary_phase_forward(const ReducedConfig& cfg);

ScalingPoint scaling_coordinate(const ReducedConfig& cfg);

}  // namespace abprop
