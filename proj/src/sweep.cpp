#include "colebrook/sweep.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace colebrook {

namespace {

double log_point(double lo, double hi, int i, int n) {
    if (n == 1 || i == 0) return lo;
    if (i == n - 1) return hi;
    double t = static_cast<double>(i) / (n - 1);
    return std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)));
}

struct PointResult {
    int count;
    Termination termination;
};

// One grid point, all methods. Shared by both sweep flavours so they do
// the same arithmetic.
void evaluate_point(std::span<const MethodId> methods, const ColebrookParams& p, const SweepOptions& o,
                    PointResult* out) {
    double x_star = oracle_root(p).value();
    FrictionVar x0(o.x0);
    for (std::size_t m = 0; m < methods.size(); ++m) {
        IterationTrace t = run(methods[m], p, x0, o.policy, o.model, x_star);
        out[m] = {t.iterations_to_solution, t.termination};
    }
}

SweepReport aggregate(std::span<const MethodId> methods, std::span<const ColebrookParams> grid,
                      const SweepOptions& o, const std::vector<PointResult>& results) {
    SweepReport r;
    r.grid_size = grid.size();
    r.x0 = o.x0;
    r.policy = o.policy;
    r.model = o.model;
    const std::size_t nm = methods.size();
    for (std::size_t m = 0; m < nm; ++m) {
        MethodSweep ms;
        ms.method = methods[m];
        bool first = true;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const PointResult& pr = results[i * nm + m];
            ++ms.histogram[pr.count];
            if (first || pr.count > ms.worst_case) {
                ms.worst_case = pr.count;
                ms.worst_point = grid[i];
                first = false;
            }
            if (!converged(pr.termination)) ms.failures.push_back({grid[i], pr.termination});
        }
        r.methods.push_back(std::move(ms));
    }
    return r;
}

void check_inputs(std::span<const MethodId> methods, const SweepOptions& o) {
    if (methods.empty()) throw DomainError("sweep: empty method list");
    o.policy.validate();
    FrictionVar{o.x0};
}

}  // namespace

void GridSpec::validate() const {
    if (re_points < 1 || rough_points < 1) throw DomainError("grid: point counts must be >= 1");
    if (!(re_min <= re_max) || !(rough_min <= rough_max)) throw DomainError("grid: empty range");
    if (!(rough_min > 0.0)) throw DomainError("grid: log spacing needs roughness > 0");
    if (!in_domain(re_min, rough_min) || !in_domain(re_max, rough_max))
        throw DomainError("grid: range outside the Colebrook domain");
}

std::vector<ColebrookParams> generate_grid(const GridSpec& spec) {
    spec.validate();
    std::vector<ColebrookParams> grid;
    grid.reserve(spec.size());
    for (int i = 0; i < spec.re_points; ++i) {
        double re = log_point(spec.re_min, spec.re_max, i, spec.re_points);
        for (int j = 0; j < spec.rough_points; ++j)
            grid.emplace_back(re, log_point(spec.rough_min, spec.rough_max, j, spec.rough_points));
    }
    return grid;
}

std::vector<ColebrookParams> perturb(std::span<const ColebrookParams> grid, double re_factor, double rough_factor) {
    std::vector<ColebrookParams> out;
    out.reserve(grid.size());
    for (const auto& p : grid)
        out.emplace_back(std::clamp(p.reynolds() * re_factor, kReynoldsMin, kReynoldsMax),
                         std::clamp(p.roughness() * rough_factor, 0.0, kRoughnessMax));
    return out;
}

SweepReport sweep_serial(std::span<const MethodId> methods, std::span<const ColebrookParams> grid,
                         const SweepOptions& opts) {
    check_inputs(methods, opts);
    std::vector<PointResult> results(grid.size() * methods.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        evaluate_point(methods, grid[i], opts, &results[i * methods.size()]);
    return aggregate(methods, grid, opts, results);
}

SweepReport sweep(std::span<const MethodId> methods, std::span<const ColebrookParams> grid,
                  const SweepOptions& opts) {
    check_inputs(methods, opts);
    std::vector<PointResult> results(grid.size() * methods.size());
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
#ifdef _OPENMP
    int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i)
        evaluate_point(methods, grid[i], opts, &results[static_cast<std::size_t>(i) * methods.size()]);
    return aggregate(methods, grid, opts, results);
}

SweepReport sweep(std::span<const MethodId> methods, const GridSpec& spec, const SweepOptions& opts) {
    auto grid = generate_grid(spec);
    return sweep(methods, grid, opts);
}

std::vector<SummaryRow> summary_table(const SweepReport& report) {
    std::vector<SummaryRow> rows;
    rows.reserve(report.methods.size());
    for (const auto& m : report.methods) {
        const auto& mi = info(m.method);
        rows.push_back({m.method, mi.equation, mi.family, mi.log_calls, m.worst_case, mi.reference_worst_case,
                        m.worst_case - mi.reference_worst_case});
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.equation < b.equation; });
    return rows;
}

std::vector<MethodId> all_method_ids() {
    std::vector<MethodId> ids;
    for (const auto& m : all_methods()) ids.push_back(m.id);
    return ids;
}

}  // namespace colebrook
