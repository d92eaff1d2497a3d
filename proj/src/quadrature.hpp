#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <queue>
#include <tuple>
#include <utility>
#include <vector>

namespace abprop::quad {

// Gauss-Kronrod 15-point nodes on [-1, 1] (non-negative half) with the
// embedded 7-point Gauss weights.
inline constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

/// Offsets of the 15 nodes inside [0, 1], ascending.
inline std::array<double, 15> unit_offsets() {
    std::array<double, 15> out{};
    for (int i = 0; i < 7; ++i) {
        out[i] = 0.5 * (1.0 - kNodes[i]);
        out[14 - i] = 0.5 * (1.0 + kNodes[i]);
    }
    out[7] = 0.5;
    return out;
}

/// Kronrod weights matching unit_offsets(), for an interval of length 1.
inline std::array<double, 15> unit_weights() {
    std::array<double, 15> out{};
    for (int i = 0; i < 7; ++i) {
        out[i] = 0.5 * kKronrod[i];
        out[14 - i] = 0.5 * kKronrod[i];
    }
    out[7] = 0.5 * kKronrod[7];
    return out;
}

struct Panel {
    double a = 0.0;
    double b = 0.0;
    std::complex<double> value;
    double error = 0.0;
};

template <class F>
Panel gk15(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const std::complex<double> fc = f(c);
    std::complex<double> kronrod = kKronrod[7] * fc;
    std::complex<double> gauss = kGauss[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const std::complex<double> sum = f(c - h * kNodes[i]) + f(c + h * kNodes[i]);
        kronrod += kKronrod[i] * sum;
        if (i % 2 == 1) gauss += kGauss[i / 2] * sum;
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = kronrod * h;
    p.error = std::abs((kronrod - gauss) * h);
    return p;
}

struct Result {
    std::complex<double> value;
    double error = 0.0;
    std::int64_t evals = 0;
    bool converged = false;
};

/// Globally adaptive bisection over [a, b] starting from `initial` equal
/// panels. Stops when the summed error is below max(abs_tol, rel_tol |I|)
/// or when max_evals is reached (converged = false).
template <class F>
Result adaptive(F&& f, double a, double b, double rel_tol, double abs_tol,
                std::int64_t max_evals, int initial = 1) {
    auto worse = [](const Panel& x, const Panel& y) { return x.error < y.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> queue(worse);
    Result r;
    const double width = (b - a) / initial;
    for (int i = 0; i < initial; ++i) {
        const double lo = a + width * i;
        const double hi = i + 1 == initial ? b : lo + width;
        queue.push(gk15(f, lo, hi));
        r.evals += 15;
    }
    auto totals = [&queue]() {
        std::complex<double> v = 0.0;
        double e = 0.0;
        auto copy = queue;
        while (!copy.empty()) {
            v += copy.top().value;
            e += copy.top().error;
            copy.pop();
        }
        return std::pair{v, e};
    };
    auto [value, error] = totals();
    while (error > std::max(abs_tol, rel_tol * std::abs(value))) {
        if (r.evals + 30 > max_evals) {
            r.value = value;
            r.error = error;
            return r;
        }
        const Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = gk15(f, worst.a, mid);
        const Panel right = gk15(f, mid, worst.b);
        r.evals += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        if (queue.size() % 64 == 0) std::tie(value, error) = totals();
    }
    std::tie(value, error) = totals();
    r.value = value;
    r.error = error;
    r.converged = true;
    return r;
}

}  // namespace abprop::quad
