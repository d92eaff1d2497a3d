#include "abprop/harness.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>

#include "abprop/asymptotics.hpp"
#include "abprop/errors.hpp"

namespace abprop {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double x) {
    double r = std::remainder(x, 2.0 * kPi);
    if (r <= -kPi) r += 2.0 * kPi;
    return r;
}

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] =
            i + 1 == count ? hi : lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    }
    return out;
}

std::string json_string(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out + "\"";
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c == '\n' ? ' ' : c;
    }
    return out + "\"";
}

}  // namespace

std::shared_ptr<const PartialWaveTable> Evaluator::table(double z, double alpha) const {
    const auto key = std::make_pair(z, alpha);
    {
        std::lock_guard lock(mutex_);
        if (auto it = tables_.find(key); it != tables_.end()) return it->second;
    }
    auto built = std::make_shared<const PartialWaveTable>(z, alpha);
    std::lock_guard lock(mutex_);
    return tables_.emplace(key, std::move(built)).first->second;
}

MethodResult Evaluator::evaluate(Method method, const ReducedConfig& cfg) const {
    switch (method) {
        case Method::series:
            if (!(cfg.z > 0.0)) throw DomainError("z must be positive");
            return table(cfg.z, cfg.alpha)->sum(cfg.phi_b, options_.tol);
        case Method::integral:
            return kernel_integral_rep(cfg, options_.quad);
        case Method::halfflux:
            return half_flux_closed_form(cfg);
        case Method::semiclassical:
            return semiclassical_kernel(cfg);
        case Method::backward:
            return backward_quadratic(cfg);
        case Method::forward:
            return forward_split_wave(cfg);
        case Method::op:
            return olariu_popescu(cfg);
        case Method::spf:
            return stationary_phase_forward(cfg);
        case Method::whirls: {
            WhirlSpec spec;
            spec.n_max = options_.n_max >= 0 ? options_.n_max : default_n_max(cfg.z);
            return whirl_sum(cfg, spec);
        }
    }
    throw DomainError("unknown method");
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Record evaluate_record(const Evaluator& evaluator, Method method, const ReducedConfig& cfg) {
    Record r;
    r.method = method;
    r.config = cfg;
    try {
        r.result = evaluator.evaluate(method, cfg);
    } catch (const PoleError& e) {
        r.error = std::string("pole: ") + e.what();
    } catch (const DomainError& e) {
        r.error = std::string("domain: ") + e.what();
    } catch (const ValidityError& e) {
        r.error = std::string("validity: ") + e.what();
    } catch (const ConvergenceError& e) {
        r.error = std::string("convergence: ") + e.what();
    }
    return r;
}

std::string csv_header() {
    return "method,z,phi_b,phi_f,alpha,scaling_coord,re,im,abs2_norm,arg_norm,err_estimate,work,"
           "error";
}

std::string csv_row(const Record& record) {
    const ReducedConfig& c = record.config;
    const ScalingPoint sp = scaling_coordinate(c);
    std::string row;
    row += method_name(record.method);
    for (double v : {c.z, c.phi_b, c.phi_f, c.alpha, sp.sign_phi_f * sp.r_over_hbar}) {
        row += ',' + format_number(v);
    }
    if (record.result) {
        const MethodResult& m = *record.result;
        for (double v : {m.value.real(), m.value.imag(), abs2_norm(m.value, c),
                         arg_norm(m.value, c), m.err_estimate}) {
            row += ',' + format_number(v);
        }
        row += ',' + std::to_string(m.work) + ',';
    } else {
        row += ",,,,,,," + csv_field(record.error);
    }
    return row;
}

std::optional<AngleAxis> parse_axis(std::string_view name) {
    if (name == "backward") return AngleAxis::backward;
    if (name == "forward") return AngleAxis::forward;
    if (name == "scaling") return AngleAxis::scaling;
    return std::nullopt;
}

std::string_view axis_name(AngleAxis axis) {
    switch (axis) {
        case AngleAxis::backward: return "backward";
        case AngleAxis::forward: return "forward";
        case AngleAxis::scaling: return "scaling";
    }
    return "backward";
}

ReducedConfig axis_point(AngleAxis axis, double z, double x, double alpha) {
    switch (axis) {
        case AngleAxis::backward:
            return ReducedConfig::from_phi_b(z, x, alpha);
        case AngleAxis::forward:
            return ReducedConfig::from_phi_f(z, x, alpha);
        case AngleAxis::scaling: {
            if (!(z > 0.0)) throw DomainError("z must be positive");
            const double phi_f = sign_of(x) * std::sqrt(2.0 * std::abs(x) / z);
            return ReducedConfig::from_phi_f(z, phi_f, alpha);
        }
    }
    throw DomainError("unknown axis");
}

void check_sweep(const SweepSpec& spec) {
    if (spec.methods.empty()) throw DomainError("sweep needs at least one method");
    if (spec.z_values.empty()) throw DomainError("sweep needs at least one z value");
    if (spec.count < 2) throw DomainError("sweep count must be at least 2");
    if (!(spec.lo < spec.hi)) throw DomainError("sweep range needs lo < hi");
    if (!(spec.tol > 0.0)) throw DomainError("tol must be positive");
    if (!std::isfinite(spec.alpha)) throw DomainError("alpha must be finite");
}

std::optional<SweepSpec> sweep_preset(std::string_view name) {
    SweepSpec s;
    s.alpha = 0.25;
    if (name == "fig4") {
        s.methods = {Method::series, Method::forward};
        s.z_values = {kPi, 3.0 * kPi, 10.0 * kPi};
        s.axis = AngleAxis::forward;
        s.lo = -0.5;
        s.hi = 0.5;
        s.count = 201;
        return s;
    }
    if (name == "fig5") {
        s.methods = {Method::integral, Method::backward};
        s.z_values = {3.0 * kPi, 3.0e2 * kPi, 3.0e4 * kPi};
        s.axis = AngleAxis::backward;
        s.lo = -0.3;
        s.hi = 0.3;
        s.count = 601;
        return s;
    }
    if (name == "fig6") {
        s.methods = {Method::series, Method::forward};
        s.z_values = {10.0 * kPi, 40.0 * kPi, 160.0 * kPi};
        s.axis = AngleAxis::scaling;
        s.lo = -10.0;
        s.hi = 10.0;
        s.count = 401;
        return s;
    }
    return std::nullopt;
}

std::vector<Record> run_sweep(const SweepSpec& spec, int jobs) {
    check_sweep(spec);
    EvalOptions options;
    options.tol = spec.tol;
    options.quad.rel_tol = std::max(spec.tol, 1e-12);
    options.n_max = spec.n_max;
    const Evaluator evaluator(options);
    const auto xs = linspace(spec.lo, spec.hi, spec.count);
    const std::size_t per_method = spec.z_values.size() * xs.size();
    std::vector<Record> rows(spec.methods.size() * per_method);
    parallel_for(rows.size(), jobs, [&](std::size_t i) {
        const Method method = spec.methods[i / per_method];
        const std::size_t rest = i % per_method;
        const double z = spec.z_values[rest / xs.size()];
        const double x = xs[rest % xs.size()];
        Record r;
        r.method = method;
        try {
            r.config = axis_point(spec.axis, z, x, spec.alpha);
        } catch (const DomainError& e) {
            r.config.z = z;
            r.config.alpha = spec.alpha;
            r.config.phi_b = spec.axis == AngleAxis::backward ? x : 0.0;
            r.config.phi_f = spec.axis == AngleAxis::forward ? x : 0.0;
            r.error = std::string("domain: ") + e.what();
            rows[i] = r;
            return;
        }
        rows[i] = evaluate_record(evaluator, method, r.config);
    });
    return rows;
}

std::optional<WhirlDumpSpec> whirl_preset(std::string_view name) {
    if (name != "fig8") return std::nullopt;
    WhirlDumpSpec s;
    s.z_values = {kPi / 4.0, 8.0 * kPi};
    s.n_lo = -2;
    s.n_hi = 2;
    s.phi_lo = -3.0 * kPi;
    s.phi_hi = 3.0 * kPi;
    s.count = 601;
    return s;
}

std::vector<WhirlRow> run_whirl_dump(const WhirlDumpSpec& spec, int jobs) {
    if (spec.z_values.empty()) throw DomainError("whirl dump needs at least one z value");
    if (spec.count < 2 || !(spec.phi_lo < spec.phi_hi) || spec.n_hi < spec.n_lo) {
        throw DomainError("invalid whirl dump range");
    }
    const auto phis = linspace(spec.phi_lo, spec.phi_hi, spec.count);
    const std::size_t per_z = phis.size();
    const auto span = static_cast<std::size_t>(spec.n_hi - spec.n_lo + 1);
    std::vector<std::vector<Complex>> values(spec.z_values.size() * per_z);
    parallel_for(values.size(), jobs, [&](std::size_t i) {
        values[i] = whirls(spec.n_lo, spec.n_hi, spec.z_values[i / per_z], phis[i % per_z]);
    });
    // rows ordered by (z, n, phi)
    std::vector<WhirlRow> rows;
    rows.reserve(values.size() * span);
    for (std::size_t zi = 0; zi < spec.z_values.size(); ++zi) {
        for (std::size_t k = 0; k < span; ++k) {
            for (std::size_t p = 0; p < per_z; ++p) {
                rows.push_back({spec.z_values[zi], spec.n_lo + static_cast<int>(k), phis[p],
                                values[zi * per_z + p][k]});
            }
        }
    }
    return rows;
}

std::string whirl_csv_header() { return "z,n,phi,re,im,abs2"; }

std::string whirl_csv_row(const WhirlRow& row) {
    return format_number(row.z) + ',' + std::to_string(row.n) + ',' + format_number(row.phi) +
           ',' + format_number(row.value.real()) + ',' + format_number(row.value.imag()) + ',' +
           format_number(std::norm(row.value));
}

namespace {

using Source = std::function<Complex(const ReducedConfig&)>;

struct Comparison {
    std::vector<double> abs2_dev;
    std::vector<double> arg_dev;
    std::string error;
};

Comparison compare(const Source& a, const Source& b, const std::vector<ReducedConfig>& points,
                   int jobs) {
    Comparison out;
    out.abs2_dev.assign(points.size(), 0.0);
    out.arg_dev.assign(points.size(), 0.0);
    std::vector<std::string> errors(points.size());
    parallel_for(points.size(), jobs, [&](std::size_t i) {
        try {
            const Complex va = a(points[i]);
            const Complex vb = b(points[i]);
            out.abs2_dev[i] = std::abs(abs2_norm(va, points[i]) - abs2_norm(vb, points[i]));
            out.arg_dev[i] =
                std::abs(wrap_angle(arg_norm(va, points[i]) - arg_norm(vb, points[i])));
        } catch (const std::exception& e) {
            errors[i] = e.what();
            out.abs2_dev[i] = out.arg_dev[i] = std::numeric_limits<double>::infinity();
        }
    });
    for (const auto& e : errors) {
        if (!e.empty()) {
            out.error = e;
            break;
        }
    }
    return out;
}

PairSummary summarize(std::string a, std::string b, std::string quantity,
                      const std::vector<double>& dev, const std::vector<ReducedConfig>& points,
                      double threshold) {
    PairSummary s;
    s.a = std::move(a);
    s.b = std::move(b);
    s.quantity = std::move(quantity);
    s.threshold = threshold;
    double sum = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < dev.size(); ++i) {
        sum += dev[i];
        if (dev[i] > dev[worst]) worst = i;
    }
    s.max_abs_dev = dev.empty() ? 0.0 : dev[worst];
    s.mean_abs_dev = dev.empty() ? 0.0 : sum / static_cast<double>(dev.size());
    if (!points.empty()) {
        s.argmax_z = points[worst].z;
        s.argmax_phi = points[worst].phi_b;
        s.argmax_alpha = points[worst].alpha;
    }
    s.pass = s.max_abs_dev < threshold;
    return s;
}

void add_pair(ValidationReport& report, const std::string& a, const std::string& b,
              const Source& fa, const Source& fb, const std::vector<ReducedConfig>& points,
              double threshold, int jobs) {
    const Comparison c = compare(fa, fb, points, jobs);
    for (auto* entry : {&c.abs2_dev, &c.arg_dev}) {
        PairSummary s = summarize(a, b, entry == &c.abs2_dev ? "abs2" : "arg", *entry, points,
                                  threshold);
        s.error = c.error;
        if (!c.error.empty()) s.pass = false;
        report.pairs.push_back(std::move(s));
    }
}

}  // namespace

ValidationReport run_validation(const ValidationSpec& spec) {
    if (spec.z_values.empty()) throw DomainError("validation needs at least one z value");
    if (spec.count < 2) throw DomainError("validation count must be at least 2");
    for (double t : {spec.exact_threshold, spec.halfflux_threshold, spec.op_threshold,
                     spec.whirl_threshold, spec.tol, spec.margin, spec.forward_window}) {
        if (!(t > 0.0)) throw DomainError("thresholds must be positive");
    }
    EvalOptions options;
    options.tol = spec.tol;
    options.quad.rel_tol = std::max(spec.tol, 1e-12);
    options.quad.rotation_margin = spec.margin;
    options.n_max = spec.n_max;
    const Evaluator evaluator(options);
    auto method = [&evaluator](Method m) -> Source {
        return [&evaluator, m](const ReducedConfig& c) { return evaluator.evaluate(m, c).value; };
    };
    const Source free = [](const ReducedConfig& c) { return free_kernel(c); };

    const double edge = kPi - spec.margin;
    const auto angles = linspace(-edge, edge, spec.count);
    auto grid = [&](double alpha) {
        std::vector<ReducedConfig> pts;
        for (double z : spec.z_values) {
            for (double phi : angles) pts.push_back(ReducedConfig::from_phi_b(z, phi, alpha));
        }
        return pts;
    };
    const auto at_alpha = grid(spec.alpha);
    const auto at_half = grid(0.5);
    const auto at_zero = grid(0.0);

    ValidationReport report;
    const int jobs = spec.jobs;
    add_pair(report, "series", "integral", method(Method::series), method(Method::integral),
             at_alpha, spec.exact_threshold, jobs);
    add_pair(report, "series", "halfflux", method(Method::series), method(Method::halfflux),
             at_half, spec.halfflux_threshold, jobs);
    add_pair(report, "op", "halfflux", method(Method::op), method(Method::halfflux), at_half,
             spec.op_threshold, jobs);
    add_pair(report, "whirls", "series", method(Method::whirls), method(Method::series), at_alpha,
             spec.whirl_threshold, jobs);
    for (Method m : {Method::series, Method::integral, Method::semiclassical, Method::op,
                     Method::whirls}) {
        const double threshold = m == Method::whirls ? spec.whirl_threshold : spec.exact_threshold;
        add_pair(report, std::string(method_name(m)), "free", method(m), free, at_zero, threshold,
                 jobs);
    }

    // forward approximant against the exact kernel, trend over increasing z
    std::vector<double> zs = spec.z_values;
    std::sort(zs.begin(), zs.end());
    const auto window = linspace(-spec.forward_window, spec.forward_window, spec.count);
    std::vector<ReducedConfig> fwd_points;
    for (double z : zs) {
        for (double phi : window) fwd_points.push_back(ReducedConfig::from_phi_f(z, phi, spec.alpha));
    }
    const Comparison c = compare(method(Method::forward), method(Method::series), fwd_points, jobs);
    for (auto* entry : {&c.abs2_dev, &c.arg_dev}) {
        PairSummary s = summarize("forward", "series", entry == &c.abs2_dev ? "abs2" : "arg",
                                  *entry, fwd_points, 0.0);
        bool decreasing = c.error.empty();
        for (std::size_t zi = 0; zi < zs.size(); ++zi) {
            const auto first = entry->begin() + static_cast<std::ptrdiff_t>(zi * window.size());
            const double worst = *std::max_element(first, first + static_cast<std::ptrdiff_t>(window.size()));
            if (!s.trend.empty() && !(worst < s.trend.back().second)) decreasing = false;
            s.trend.emplace_back(zs[zi], worst);
        }
        s.pass = decreasing;
        s.error = c.error;
        report.pairs.push_back(std::move(s));
    }

    report.pass = std::all_of(report.pairs.begin(), report.pairs.end(),
                              [](const PairSummary& p) { return p.pass; });
    return report;
}

std::string to_json(const ValidationReport& report) {
    std::ostringstream out;
    out << "{\n  \"pairs\": [";
    for (std::size_t i = 0; i < report.pairs.size(); ++i) {
        const PairSummary& p = report.pairs[i];
        out << (i ? ",\n" : "\n") << "    {\"a\": " << json_string(p.a)
            << ", \"b\": " << json_string(p.b) << ", \"quantity\": " << json_string(p.quantity)
            << ", \"max_abs_dev\": " << format_number(p.max_abs_dev)
            << ", \"mean_abs_dev\": " << format_number(p.mean_abs_dev)
            << ", \"argmax\": {\"z\": " << format_number(p.argmax_z)
            << ", \"phi\": " << format_number(p.argmax_phi)
            << ", \"alpha\": " << format_number(p.argmax_alpha) << "}";
        if (p.trend.empty()) {
            out << ", \"threshold\": " << format_number(p.threshold);
        } else {
            out << ", \"trend\": [";
            for (std::size_t k = 0; k < p.trend.size(); ++k) {
                out << (k ? ", " : "") << "{\"z\": " << format_number(p.trend[k].first)
                    << ", \"max_abs_dev\": " << format_number(p.trend[k].second) << "}";
            }
            out << "]";
        }
        if (!p.error.empty()) out << ", \"error\": " << json_string(p.error);
        out << ", \"pass\": " << (p.pass ? "true" : "false") << "}";
    }
    out << "\n  ],\n  \"pass\": " << (report.pass ? "true" : "false") << "\n}\n";
    return out.str();
}

}  // namespace abprop
