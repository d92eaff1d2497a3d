#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abprop/errors.hpp"
#include "abprop/harness.hpp"

using namespace abprop;

namespace {

constexpr double kPi = std::numbers::pi;

struct PointFlags {
    std::optional<double> z;
    std::optional<double> phi_b;
    std::optional<double> phi_f;
    std::optional<double> delta_phi;
    double alpha = 0.0;
};

struct PhysicalFlags {
    std::optional<double> mass;
    std::optional<double> r_start;
    std::optional<double> r_end;
    double phi_start = 0.0;
    double phi_end = 0.0;
    double t_start = 0.0;
    std::optional<double> t_end;
    double hbar = 1.0;
    std::optional<double> charge;
    std::optional<double> light_speed;
    std::optional<double> flux;

    bool any() const { return mass || r_start || r_end || t_end || charge || flux; }
};

void add_physical(CLI::App* cmd, PhysicalFlags& p) {
    cmd->add_option("--mass", p.mass, "particle mass m");
    cmd->add_option("--r-start", p.r_start, "initial radius r'");
    cmd->add_option("--r-end", p.r_end, "final radius r''");
    cmd->add_option("--phi-start", p.phi_start, "initial angle phi'");
    cmd->add_option("--phi-end", p.phi_end, "final angle phi''");
    cmd->add_option("--t-start", p.t_start, "initial time t'");
    cmd->add_option("--t-end", p.t_end, "final time t''");
    cmd->add_option("--hbar", p.hbar, "Planck constant");
    cmd->add_option("--charge", p.charge, "charge e (with --light-speed, --flux)");
    cmd->add_option("--light-speed", p.light_speed, "speed of light c");
    cmd->add_option("--flux", p.flux, "enclosed flux Phi");
}

PhysicalConfig to_physical(const PhysicalFlags& p, std::optional<double> alpha) {
    if (!p.mass || !p.r_start || !p.r_end || !p.t_end) {
        throw DomainError("physical input needs --mass, --r-start, --r-end and --t-end");
    }
    PhysicalConfig cfg;
    cfg.mass = *p.mass;
    cfg.r_start = *p.r_start;
    cfg.r_end = *p.r_end;
    cfg.phi_start = p.phi_start;
    cfg.phi_end = p.phi_end;
    cfg.t_start = p.t_start;
    cfg.t_end = *p.t_end;
    cfg.hbar = p.hbar;
    const bool triple = p.charge || p.light_speed || p.flux;
    if (triple) {
        if (!p.charge || !p.light_speed || !p.flux) {
            throw DomainError("--charge, --light-speed and --flux must be given together");
        }
        if (alpha) throw DomainError("give either --alpha or the (charge, light speed, flux) triple");
        cfg.flux = FluxTriple{*p.charge, *p.light_speed, *p.flux};
    } else {
        cfg.flux = alpha.value_or(0.0);
    }
    return cfg;
}

ReducedConfig to_reduced(const PointFlags& f) {
    if (!f.z) throw DomainError("--z is required");
    const int given = (f.phi_b ? 1 : 0) + (f.phi_f ? 1 : 0) + (f.delta_phi ? 1 : 0);
    if (given != 1) throw DomainError("give exactly one of --phi-b, --phi-f, --delta-phi");
    if (f.phi_b) return ReducedConfig::from_phi_b(*f.z, *f.phi_b, f.alpha);
    if (f.phi_f) return ReducedConfig::from_phi_f(*f.z, *f.phi_f, f.alpha);
    return ReducedConfig::from_delta_phi(*f.z, *f.delta_phi, f.alpha);
}

std::vector<std::string> method_names() {
    std::vector<std::string> names;
    for (Method m : all_methods()) names.emplace_back(method_name(m));
    return names;
}

std::vector<Method> to_methods(const std::vector<std::string>& names) {
    std::vector<Method> out;
    for (const auto& n : names) out.push_back(*parse_method(n));
    return out;
}

// Writes to --out when set, stdout otherwise.
void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw DomainError("cannot open output file " + path);
    file << text;
}

int report_error(const char* kind, const std::exception& e) {
    std::cout << "error," << kind << ',' << e.what() << '\n';
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Aharonov-Bohm propagator: exact and semiclassical evaluation harness"};
    app.set_config("--config", "", "key=value configuration file; flags take precedence");
    app.require_subcommand(1);
    const auto names = method_names();

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate methods at one point");
    PointFlags eval_point;
    PhysicalFlags eval_phys;
    std::optional<double> eval_alpha;
    std::vector<std::string> eval_methods{"series"};
    double eval_tol = kDefaultSeriesTol;
    int eval_n_max = -1;
    int eval_jobs = 1;
    std::string eval_out;
    eval->add_option("--z", eval_point.z, "dimensionless z = m r'' r' / (hbar t)");
    auto* eval_pb = eval->add_option("--phi-b", eval_point.phi_b, "backward-centred angle");
    auto* eval_pf = eval->add_option("--phi-f", eval_point.phi_f, "forward-centred angle");
    auto* eval_dp = eval->add_option("--delta-phi", eval_point.delta_phi, "raw angle difference");
    eval_pb->excludes(eval_pf)->excludes(eval_dp);
    eval_pf->excludes(eval_dp);
    eval->add_option("--alpha", eval_alpha, "flux parameter chi/hbar");
    eval->add_option("--method", eval_methods, "method (repeatable)")
        ->check(CLI::IsMember(names))
        ->take_all();
    eval->add_option("--tol", eval_tol, "series tolerance / quadrature rel_tol");
    eval->add_option("--n-max", eval_n_max, "whirl count (default depends on z)");
    eval->add_option("--jobs", eval_jobs, "worker threads")->check(CLI::PositiveNumber);
    eval->add_option("--out", eval_out, "output file (default stdout)");
    add_physical(eval, eval_phys);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "grid sweep to CSV");
    std::string sweep_preset_name;
    std::vector<std::string> sweep_methods;
    std::vector<double> sweep_z;
    std::string sweep_axis = "backward";
    double sweep_lo = -0.5;
    double sweep_hi = 0.5;
    int sweep_count = 101;
    double sweep_alpha = 0.25;
    double sweep_tol = kDefaultSeriesTol;
    int sweep_n_max = -1;
    int sweep_jobs = 1;
    std::string sweep_out;
    sweep->add_option("--preset", sweep_preset_name, "fig4 | fig5 | fig6")
        ->check(CLI::IsMember({"fig4", "fig5", "fig6"}));
    auto* sw_method = sweep->add_option("--method", sweep_methods, "method (repeatable)")
                          ->check(CLI::IsMember(names))
                          ->take_all();
    auto* sw_z = sweep->add_option("--z", sweep_z, "z values (repeatable)")->take_all();
    auto* sw_axis = sweep->add_option("--axis", sweep_axis, "backward | forward | scaling")
                        ->check(CLI::IsMember({"backward", "forward", "scaling"}));
    auto* sw_lo = sweep->add_option("--lo", sweep_lo, "axis start");
    auto* sw_hi = sweep->add_option("--hi", sweep_hi, "axis end");
    auto* sw_count = sweep->add_option("--count", sweep_count, "points per z");
    auto* sw_alpha = sweep->add_option("--alpha", sweep_alpha, "flux parameter");
    sweep->add_option("--tol", sweep_tol, "series tolerance / quadrature rel_tol");
    sweep->add_option("--n-max", sweep_n_max, "whirl count (default depends on z)");
    sweep->add_option("--jobs", sweep_jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--out", sweep_out, "CSV output file (default stdout)");

    // validate
    auto* validate = app.add_subcommand("validate", "cross-method validation report (JSON)");
    ValidationSpec vspec;
    vspec.z_values = {kPi, 3.0 * kPi, 10.0 * kPi};
    std::string validate_out;
    validate->add_option("--z", vspec.z_values, "z values (repeatable)")->take_all();
    validate->add_option("--alpha", vspec.alpha, "flux parameter for the general pairs");
    validate->add_option("--count", vspec.count, "angles per z");
    validate->add_option("--margin", vspec.margin, "distance of the grid from phi_b = +-pi");
    validate->add_option("--tol", vspec.tol, "series tolerance / quadrature rel_tol");
    validate->add_option("--n-max", vspec.n_max, "whirl count (default depends on z)");
    validate->add_option("--exact-threshold", vspec.exact_threshold, "exact-method pairs");
    validate->add_option("--halfflux-threshold", vspec.halfflux_threshold, "series vs half flux");
    validate->add_option("--op-threshold", vspec.op_threshold, "Olariu-Popescu vs half flux");
    validate->add_option("--whirl-threshold", vspec.whirl_threshold, "whirl sum vs series");
    validate->add_option("--forward-window", vspec.forward_window, "|phi_f| range of the trend");
    validate->add_option("--jobs", vspec.jobs, "worker threads")->check(CLI::PositiveNumber);
    validate->add_option("--out", validate_out, "JSON output file (default stdout)");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "reduce physical inputs to (z, angle, alpha)");
    PhysicalFlags reduce_phys;
    std::optional<double> reduce_alpha;
    add_physical(reduce, reduce_phys);
    reduce->add_option("--alpha", reduce_alpha, "flux parameter chi/hbar");

    // whirls
    auto* whirl_cmd = app.add_subcommand("whirls", "dump individual whirling waves T_n (CSV)");
    std::string whirl_preset_name;
    WhirlDumpSpec wspec;
    int whirl_jobs = 1;
    std::string whirl_out;
    whirl_cmd->add_option("--preset", whirl_preset_name, "fig8")->check(CLI::IsMember({"fig8"}));
    auto* wh_z = whirl_cmd->add_option("--z", wspec.z_values, "z values (repeatable)")->take_all();
    auto* wh_nlo = whirl_cmd->add_option("--n-lo", wspec.n_lo, "first whirl index");
    auto* wh_nhi = whirl_cmd->add_option("--n-hi", wspec.n_hi, "last whirl index");
    auto* wh_lo = whirl_cmd->add_option("--phi-lo", wspec.phi_lo, "angle start");
    auto* wh_hi = whirl_cmd->add_option("--phi-hi", wspec.phi_hi, "angle end");
    auto* wh_count = whirl_cmd->add_option("--count", wspec.count, "angles per z");
    whirl_cmd->add_option("--jobs", whirl_jobs, "worker threads")->check(CLI::PositiveNumber);
    whirl_cmd->add_option("--out", whirl_out, "CSV output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) {
            Evaluator evaluator([&] {
                EvalOptions o;
                o.tol = eval_tol;
                o.quad.rel_tol = std::max(eval_tol, 1e-12);
                o.n_max = eval_n_max;
                return o;
            }());
            ReducedConfig cfg;
            if (eval_phys.any()) {
                cfg = reduce_physical(to_physical(eval_phys, eval_alpha)).config;
            } else {
                eval_point.alpha = eval_alpha.value_or(0.0);
                cfg = to_reduced(eval_point);
            }
            const auto methods = to_methods(eval_methods);
            std::vector<Record> rows(methods.size());
            parallel_for(rows.size(), eval_jobs, [&](std::size_t i) {
                rows[i] = evaluate_record(evaluator, methods[i], cfg);
            });
            std::string text = csv_header() + '\n';
            bool failed = false;
            for (const auto& r : rows) {
                text += csv_row(r) + '\n';
                failed = failed || !r.result;
            }
            emit(eval_out, text);
            return failed ? 2 : 0;
        }

        if (sweep->parsed()) {
            SweepSpec spec;
            if (!sweep_preset_name.empty()) spec = *sweep_preset(sweep_preset_name);
            if (sw_method->count() > 0 || spec.methods.empty()) {
                spec.methods = to_methods(sweep_methods.empty() ? std::vector<std::string>{"series"}
                                                                : sweep_methods);
            }
            if (sw_z->count() > 0 || spec.z_values.empty()) spec.z_values = sweep_z;
            if (sw_axis->count() > 0 || sweep_preset_name.empty()) spec.axis = *parse_axis(sweep_axis);
            if (sw_lo->count() > 0 || sweep_preset_name.empty()) spec.lo = sweep_lo;
            if (sw_hi->count() > 0 || sweep_preset_name.empty()) spec.hi = sweep_hi;
            if (sw_count->count() > 0 || sweep_preset_name.empty()) spec.count = sweep_count;
            if (sw_alpha->count() > 0 || sweep_preset_name.empty()) spec.alpha = sweep_alpha;
            spec.tol = sweep_tol;
            spec.n_max = sweep_n_max;
            spec.output_path = sweep_out;
            const auto rows = run_sweep(spec, sweep_jobs);
            std::string text = csv_header() + '\n';
            bool any_ok = false;
            for (const auto& r : rows) {
                text += csv_row(r) + '\n';
                any_ok = any_ok || r.result.has_value();
            }
            emit(sweep_out, text);
            return any_ok ? 0 : 2;
        }

        if (validate->parsed()) {
            const ValidationReport report = run_validation(vspec);
            emit(validate_out, to_json(report));
            return report.pass ? 0 : 1;
        }

        if (reduce->parsed()) {
            const Reduction r = reduce_physical(to_physical(reduce_phys, reduce_alpha));
            std::ostringstream out;
            out << "z=" << format_number(r.config.z) << '\n'
                << "alpha=" << format_number(r.config.alpha) << '\n'
                << "delta_phi=" << format_number(r.config.delta_phi) << '\n'
                << "phi_b=" << format_number(r.config.phi_b) << '\n'
                << "phi_f=" << format_number(r.config.phi_f) << '\n'
                << "winding=" << r.config.winding << '\n'
                << "prefactor_re=" << format_number(r.prefactor.real()) << '\n'
                << "prefactor_im=" << format_number(r.prefactor.imag()) << '\n';
            emit("", out.str());
            return 0;
        }

        if (whirl_cmd->parsed()) {
            WhirlDumpSpec spec = wspec;
            if (!whirl_preset_name.empty()) {
                spec = *whirl_preset(whirl_preset_name);
                if (wh_z->count() > 0) spec.z_values = wspec.z_values;
                if (wh_nlo->count() > 0) spec.n_lo = wspec.n_lo;
                if (wh_nhi->count() > 0) spec.n_hi = wspec.n_hi;
                if (wh_lo->count() > 0) spec.phi_lo = wspec.phi_lo;
                if (wh_hi->count() > 0) spec.phi_hi = wspec.phi_hi;
                if (wh_count->count() > 0) spec.count = wspec.count;
            }
            const auto rows = run_whirl_dump(spec, whirl_jobs);
            std::string text = whirl_csv_header() + '\n';
            for (const auto& r : rows) text += whirl_csv_row(r) + '\n';
            emit(whirl_out, text);
            return 0;
        }
    } catch (const PoleError& e) {
        return report_error("pole", e);
    } catch (const DomainError& e) {
        return report_error("domain", e);
    } catch (const ValidityError& e) {
        return report_error("validity", e);
    } catch (const ConvergenceError& e) {
        return report_error("convergence", e);
    }
    return 0;
}
