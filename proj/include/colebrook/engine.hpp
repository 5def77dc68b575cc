#pragma once

#include <string_view>
#include <vector>

#include "colebrook/core.hpp"
#include "colebrook/methods.hpp"

namespace colebrook {

inline constexpr double kDefaultStart = 7.273626085;

struct StoppingPolicy {
    int decimal_agreement = 9;
    double abs_tol = 0.5e-9;
    int max_iterations = 100;
    // |F| below this at the last finite iterate turns a division by zero
    // into convergence.
    double div0_residual = 1e-7;

    void validate() const;
};

enum class Termination {
    converged_by_agreement,
    converged_by_div0,
    failed_non_finite,
    failed_left_domain,
    failed_max_iter,
};

std::string_view to_string(Termination t) noexcept;
inline bool converged(Termination t) noexcept {
    return t == Termination::converged_by_agreement || t == Termination::converged_by_div0;
}

struct IterationTrace {
    MethodId method;
    ColebrookParams problem;
    FrictionVar start;
    StoppingPolicy policy;
    Model model;
    std::vector<double> iterates;  // x1, x2, ...
    Termination termination;
    StepStatus last_step;          // outcome of the step that ended the run
    int iterations_to_solution;    // counted against the oracle root
    double solution;               // best available root estimate
    double residual_at_final;      // exact F at `solution`
};

// Runs steps from x0 until successive iterates agree, a step divides by zero,
// a step fails, or max_iterations is reached.
IterationTrace run(MethodId method, const ColebrookParams& p, FrictionVar x0, const StoppingPolicy& policy,
                   Model model);

// Same, with the oracle root supplied by the caller (the sweep reuses one
// root for all methods at a grid point).
IterationTrace run(MethodId method, const ColebrookParams& p, FrictionVar x0, const StoppingPolicy& policy,
                   Model model, double x_star);

// Bisection on [1, 15] then Newton polishing with exact derivatives.
FrictionVar oracle_root(const ColebrookParams& p);

// Smallest i >= 1 with |x_i - x*| < abs_tol; 0 when x0 already is; otherwise
// policy.max_iterations + 1. A div0 stop whose internal best point is within
// tolerance counts as the step that produced it.
int count_iterations(const IterationTrace& trace, double x_star, double abs_tol);

}  // namespace colebrook
