#pragma once

#include <vector>

#include "abprop/kernel.hpp"

namespace abprop {

struct WhirlSpec {
    int n_max = 3;
    /// Order cut-off: Lambda is raised until |J_Lambda(z)| < lambda_tol max|J|.
    double lambda_tol = 1e-16;
    /// Largest lambda panel; 0 selects pi / max|phi + 2 pi n|. Larger values
    /// are clamped to that bound.
    double panel_cap = 0.0;
};

/// 12 for z < pi, 3 for z >= 8 pi, 6 in between.
int default_n_max(double z);

/// T_n(z, phi) = int_{-Lambda}^{Lambda} I_{|lambda|}(-iz) exp(i lambda (phi + 2 pi n)) dlambda
Complex whirl(int n, double z, double phi, const WhirlSpec& spec = {});

/// T_n for n = n_lo .. n_hi from one pass over the order integral.
std::vector<Complex> whirls(int n_lo, int n_hi, double z, double phi, const WhirlSpec& spec = {});

/// sum_{|n| <= n_max} T_n(z, phi_b) exp(-i alpha (phi_b + 2 pi n)). The
/// index sum is carried inside the order integral as a Dirichlet kernel, so
/// the cost does not grow with n_max beyond the finer panels it requires.
/// err_estimate is n_max times the two boundary whirls.
MethodResult whirl_sum(const ReducedConfig& cfg, const WhirlSpec& spec);

struct WhirlGroups {
    Complex even;
    Complex odd;
};

/// Even and odd whirls for half-integer alpha:
/// even = exp(-i alpha phi_b) sum_{n even} T_n,
/// odd = exp(-i alpha (phi_b -+ 2 pi)) sum_{n odd} T_n.
WhirlGroups half_flux_grouping(const ReducedConfig& cfg, const WhirlSpec& spec);

}  // namespace abprop
