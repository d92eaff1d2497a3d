#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "abprop/integralrep.hpp"
#include "abprop/kernel.hpp"
#include "abprop/whirling.hpp"

namespace abprop {

struct EvalOptions {
    double tol = kDefaultSeriesTol;
    QuadSpec quad;
    int n_max = -1;  ///< whirl count; negative selects default_n_max(z)
};

/// Dispatches to the method modules. Partial-wave tables are cached per
/// (z, alpha) so that angle sweeps pay for the Bessel recurrence once.
class Evaluator {
public:
    explicit Evaluator(EvalOptions options = {}) : options_(options) {}

    MethodResult evaluate(Method method, const ReducedConfig& cfg) const;
    const EvalOptions& options() const { return options_; }

private:
    std::shared_ptr<const PartialWaveTable> table(double z, double alpha) const;

    EvalOptions options_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<double, double>, std::shared_ptr<const PartialWaveTable>> tables_;
};

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. Results must be
/// written by index; the first exception is rethrown after all threads join.
template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

/// %.17g
std::string format_number(double v);

struct Record {
    Method method = Method::series;
    ReducedConfig config;
    std::optional<MethodResult> result;
    std::string error;
};

/// Evaluates one method, converting library exceptions into an error text.
Record evaluate_record(const Evaluator& evaluator, Method method, const ReducedConfig& cfg);

std::string csv_header();
std::string csv_row(const Record& record);

enum class AngleAxis { backward, forward, scaling };

std::optional<AngleAxis> parse_axis(std::string_view name);
std::string_view axis_name(AngleAxis axis);

/// Point on a sweep axis. On the scaling axis x is the signed scaling
/// coordinate sign(phi_f) z phi_f^2 / 2.
ReducedConfig axis_point(AngleAxis axis, double z, double x, double alpha);

struct SweepSpec {
    std::vector<Method> methods;
    std::vector<double> z_values;
    AngleAxis axis = AngleAxis::backward;
    double lo = -0.5;
    double hi = 0.5;
    int count = 101;
    double alpha = 0.25;
    double tol = kDefaultSeriesTol;
    int n_max = -1;
    std::string output_path;
};

/// Throws DomainError on violated SweepSpec invariants.
void check_sweep(const SweepSpec& spec);

/// fig4, fig5, fig6
std::optional<SweepSpec> sweep_preset(std::string_view name);

/// Rows ordered by (method, z, angle) regardless of `jobs`.
std::vector<Record> run_sweep(const SweepSpec& spec, int jobs);

struct WhirlDumpSpec {
    std::vector<double> z_values;
    int n_lo = -2;
    int n_hi = 2;
    double phi_lo = -3.0 * 3.141592653589793;
    double phi_hi = 3.0 * 3.141592653589793;
    int count = 301;
};

std::optional<WhirlDumpSpec> whirl_preset(std::string_view name);

struct WhirlRow {
    double z = 0.0;
    int n = 0;
    double phi = 0.0;
    Complex value;
};

std::vector<WhirlRow> run_whirl_dump(const WhirlDumpSpec& spec, int jobs);
std::string whirl_csv_header();
std::string whirl_csv_row(const WhirlRow& row);

struct PairSummary {
    std::string a;
    std::string b;
    std::string quantity;  ///< "abs2" or "arg"
    double max_abs_dev = 0.0;
    double mean_abs_dev = 0.0;
    double argmax_z = 0.0;
    double argmax_phi = 0.0;  ///< phi_b of the worst point
    double argmax_alpha = 0.0;
    double threshold = 0.0;
    bool pass = false;
    /// Only for trend pairs: per-z maximum deviation, pass iff strictly
    /// decreasing.
    std::vector<std::pair<double, double>> trend;
    std::string error;
};

struct ValidationReport {
    std::vector<PairSummary> pairs;
    bool pass = false;
};

struct ValidationSpec {
    std::vector<double> z_values;
    double alpha = 0.25;
    int count = 41;
    double margin = 0.1;  ///< backward grid spans |phi_b| <= pi - margin
    double tol = kDefaultSeriesTol;
    int n_max = -1;
    double exact_threshold = 1e-6;
    double halfflux_threshold = 1e-8;
    double op_threshold = 1e-10;
    double whirl_threshold = 5e-2;
    double forward_window = 0.5;
    int jobs = 1;
};

ValidationReport run_validation(const ValidationSpec& spec);
std::string to_json(const ValidationReport& report);

}  // namespace abprop
