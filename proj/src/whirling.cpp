#include "abprop/whirling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "abprop/errors.hpp"
#include "quadrature.hpp"

namespace abprop {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEvalBudget = 4e9;

// sum_{n=-N}^{N} exp(2 pi i n x)
double dirichlet(std::int64_t n, double x) {
    const double r = x - std::round(x);
    if (r == 0.0) return static_cast<double>(2 * n + 1);
    return specfun::sinpi(static_cast<double>(2 * n + 1) * r) / specfun::sinpi(r);
}

int order_cutoff(double z, double lambda_tol) {
    int k = static_cast<int>(std::ceil(z + 12.0 * std::cbrt(z) + 40.0));
    for (int attempt = 0; attempt < 50; ++attempt, k += 20) {
        const auto seq = specfun::bessel_j_sequence(0.0, z, static_cast<std::size_t>(k) + 1);
        double peak = 0.0;
        for (double v : seq) peak = std::max(peak, std::abs(v));
        if (std::abs(seq.back()) < lambda_tol * peak) return k;
    }
    throw ConvergenceError("whirl order cut-off not reached");
}

// Calls visit(lambda, weight, I_lambda(-iz)) for every node of a GK15 rule on
// [0, Lambda] with panels aligned to the unit grid, so each fractional offset
// needs a single recurrence pass over all integer shifts.
template <class Visit>
std::int64_t order_integral(double z, double max_freq, const WhirlSpec& spec, Visit&& visit) {
    if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("z must be positive");
    if (!(spec.lambda_tol > 0.0)) throw DomainError("lambda_tol must be positive");
    double cap = kPi / std::max(max_freq, kPi);
    if (spec.panel_cap > 0.0) cap = std::min(cap, spec.panel_cap);
    const auto per_unit = static_cast<std::int64_t>(std::ceil(1.0 / cap - 1e-12));
    const int cutoff = order_cutoff(z, spec.lambda_tol);
    const double evals = 15.0 * static_cast<double>(per_unit) * cutoff;
    if (evals > kEvalBudget) throw ConvergenceError("whirl quadrature budget exceeded");

    static const auto offsets = quad::unit_offsets();
    static const auto weights = quad::unit_weights();
    const double width = 1.0 / static_cast<double>(per_unit);
    for (std::int64_t p = 0; p < per_unit; ++p) {
        for (int j = 0; j < 15; ++j) {
            const double frac = (static_cast<double>(p) + offsets[j]) * width;
            const double w = weights[j] * width;
            const auto seq = specfun::bessel_j_sequence(frac, z, static_cast<std::size_t>(cutoff));
            for (int k = 0; k < cutoff; ++k) {
                const double lambda = frac + k;
                visit(lambda, w, specfun::rotate_to_i(lambda, seq[k]));
            }
        }
    }
    return static_cast<std::int64_t>(evals);
}

void require_n_max(const WhirlSpec& spec) {
    if (spec.n_max < 0) throw DomainError("n_max must be non-negative");
}

}  // namespace

int default_n_max(double z) {
    if (z < kPi) return 12;
    if (z >= 8.0 * kPi) return 3;
    return 6;
}

std::vector<Complex> whirls(int n_lo, int n_hi, double z, double phi, const WhirlSpec& spec) {
    if (n_hi < n_lo) throw DomainError("empty whirl range");
    if (!std::isfinite(phi)) throw DomainError("phi must be finite");
    std::vector<double> freq;
    double max_freq = 0.0;
    for (int n = n_lo; n <= n_hi; ++n) {
        freq.push_back(phi + kTwoPi * n);
        max_freq = std::max(max_freq, std::abs(freq.back()));
    }
    std::vector<Complex> out(freq.size(), 0.0);
    order_integral(z, max_freq, spec, [&](double lambda, double w, Complex i_value) {
        const Complex wi = w * i_value;
        for (std::size_t k = 0; k < freq.size(); ++k) out[k] += wi * std::cos(lambda * freq[k]);
    });
    for (auto& v : out) v *= 2.0;
    return out;
}

Complex whirl(int n, double z, double phi, const WhirlSpec& spec) {
    return whirls(n, n, z, phi, spec).front();
}

MethodResult whirl_sum(const ReducedConfig& cfg, const WhirlSpec& spec) {
    require_n_max(spec);
    const double phi = cfg.phi_b;
    const double alpha = cfg.alpha;
    const std::int64_t n = spec.n_max;
    const double edge_hi = phi + kTwoPi * static_cast<double>(n);
    const double edge_lo = phi - kTwoPi * static_cast<double>(n);
    const double max_freq = std::abs(phi) + kTwoPi * static_cast<double>(n + 1);

    Complex total = 0.0;
    Complex t_hi = 0.0;
    Complex t_lo = 0.0;
    const std::int64_t work =
        order_integral(cfg.z, max_freq, spec, [&](double lambda, double w, Complex i_value) {
            const Complex wi = w * i_value;
            total += wi * (std::polar(1.0, lambda * phi) * dirichlet(n, lambda - alpha) +
                           std::polar(1.0, -lambda * phi) * dirichlet(n, lambda + alpha));
            t_hi += wi * std::cos(lambda * edge_hi);
            t_lo += wi * std::cos(lambda * edge_lo);
        });
    MethodResult out;
    out.value = std::polar(1.0, -alpha * phi) * total;
    out.err_estimate =
        static_cast<double>(std::max<std::int64_t>(n, 1)) * 2.0 * (std::abs(t_hi) + std::abs(t_lo));
    out.work = work;
    out.method = Method::whirls;
    return out;
}

WhirlGroups half_flux_grouping(const ReducedConfig& cfg, const WhirlSpec& spec) {
    require_n_max(spec);
    const double twice = 2.0 * cfg.alpha;
    if (std::abs(twice - std::round(twice)) > 1e-12 ||
        std::fmod(std::abs(std::round(twice)), 2.0) != 1.0) {
        throw DomainError("half-flux grouping requires 2*alpha to be an odd integer");
    }
    const double phi = cfg.phi_b;
    const std::int64_t n = spec.n_max;
    const std::int64_t m = n / 2;
    const double max_freq = std::abs(phi) + kTwoPi * static_cast<double>(n + 1);

    Complex all = 0.0;
    Complex even = 0.0;
    order_integral(cfg.z, max_freq, spec, [&](double lambda, double w, Complex i_value) {
        const Complex wave = 2.0 * w * i_value * std::cos(lambda * phi);
        all += wave * dirichlet(n, lambda);
        even += wave * dirichlet(m, 2.0 * lambda);
    });
    WhirlGroups out;
    out.even = std::polar(1.0, -cfg.alpha * phi) * even;
    out.odd = std::polar(1.0, -cfg.alpha * (phi - sign_of(phi) * kTwoPi)) * (all - even);
    return out;
}

}  // namespace abprop
