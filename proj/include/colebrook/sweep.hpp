#pragma once

#include <map>
#include <span>
#include <vector>

#include "colebrook/engine.hpp"

namespace colebrook {

// Log-uniform Cartesian grid over (Re, eps), endpoints included.
// Points are ordered with roughness varying fastest.
struct GridSpec {
    int re_points = 37;
    int rough_points = 20;
    double re_min = 4.0e3;
    double re_max = 1.0e8;
    double rough_min = 1.0e-6;
    double rough_max = 0.05;

    void validate() const;
    std::size_t size() const noexcept { return static_cast<std::size_t>(re_points) * rough_points; }
};

std::vector<ColebrookParams> generate_grid(const GridSpec& spec);

// Multiplies every point by the given factors and clamps to the domain.
std::vector<ColebrookParams> perturb(std::span<const ColebrookParams> grid, double re_factor, double rough_factor);

struct SweepFailure {
    ColebrookParams point;
    Termination termination;
};

struct MethodSweep {
    MethodId method;
    int worst_case = 0;
    ColebrookParams worst_point{kReynoldsMin, 0.0};
    std::map<int, int> histogram;  // iteration count -> number of points
    std::vector<SweepFailure> failures;
};

struct SweepReport {
    std::size_t grid_size = 0;
    double x0 = kDefaultStart;
    StoppingPolicy policy;
    Model model = Model::spreadsheet;
    std::vector<MethodSweep> methods;
};

struct SweepOptions {
    double x0 = kDefaultStart;
    StoppingPolicy policy;
    Model model = Model::spreadsheet;
    int threads = 0;  // 0: OpenMP default
};

// Parallel over grid points. Output does not depend on thread count.
SweepReport sweep(std::span<const MethodId> methods, std::span<const ColebrookParams> grid,
                  const SweepOptions& opts = {});
// Straightforward serial loop, kept as the reference for the parallel one.
SweepReport sweep_serial(std::span<const MethodId> methods, std::span<const ColebrookParams> grid,
                         const SweepOptions& opts = {});

SweepReport sweep(std::span<const MethodId> methods, const GridSpec& spec, const SweepOptions& opts = {});

struct SummaryRow {
    MethodId method;
    int equation;
    Family family;
    int log_calls;
    int worst_case;
    int reference_worst_case;
    int delta;
};

// Rows in catalogue order, measured vs. reference worst case.
std::vector<SummaryRow> summary_table(const SweepReport& report);

std::vector<MethodId> all_method_ids();

}  // namespace colebrook
