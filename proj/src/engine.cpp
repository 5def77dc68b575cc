#include "colebrook/engine.hpp"

#include <cmath>

namespace colebrook {

void StoppingPolicy::validate() const {
    if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) throw DomainError("stopping policy: abs_tol must be > 0");
    if (max_iterations < 1) throw DomainError("stopping policy: max_iterations must be >= 1");
}

std::string_view to_string(Termination t) noexcept {
    switch (t) {
    case Termination::converged_by_agreement: return "converged_by_agreement";
    case Termination::converged_by_div0: return "converged_by_div0";
    case Termination::failed_non_finite: return "failed_non_finite";
    case Termination::failed_left_domain: return "failed_left_domain";
    case Termination::failed_max_iter: return "failed_max_iter";
    }
    return "?";
}

FrictionVar oracle_root(const ColebrookParams& p) {
    double lo = 1.0, hi = 15.0;
    double flo = residual(p, FrictionVar(lo));
    double fhi = residual(p, FrictionVar(hi));
    if (flo > 0.0 || fhi < 0.0) throw DomainError("oracle_root: root not bracketed by [1, 15]");

    // F is increasing, so keep F(lo) <= 0 <= F(hi).
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = residual(p, FrictionVar(mid));
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        (fm < 0.0 ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 8; ++i) {
        FrictionVar v(x);
        double f = residual(p, v);
        if (f == 0.0) break;
        double next = x - f / first_derivative(p, v);
        if (next == x) break;
        x = next;
    }
    return FrictionVar(x);
}

int count_iterations(const IterationTrace& trace, double x_star, double abs_tol) {
    if (std::abs(trace.start.value() - x_star) < abs_tol) return 0;
    for (std::size_t i = 0; i < trace.iterates.size(); ++i)
        if (std::abs(trace.iterates[i] - x_star) < abs_tol) return static_cast<int>(i) + 1;
    // The step that divided by zero may still have landed on the root internally.
    if (trace.termination == Termination::converged_by_div0 && std::abs(trace.solution - x_star) < abs_tol)
        return static_cast<int>(trace.iterates.size()) + 1;
    return trace.policy.max_iterations + 1;
}

IterationTrace run(MethodId method, const ColebrookParams& p, FrictionVar x0, const StoppingPolicy& policy,
                   Model model) {
    return run(method, p, x0, policy, model, oracle_root(p).value());
}

IterationTrace run(MethodId method, const ColebrookParams& p, FrictionVar x0, const StoppingPolicy& policy,
                   Model model, double x_star) {
    policy.validate();
    IterationTrace t{method, p, x0, policy, model, {}, Termination::failed_max_iter, StepStatus::advanced, 0,
                     x0.value(), 0.0};
    t.iterates.reserve(16);

    double x = x0.value();
    double solution = x;
    bool done = false;
    for (int i = 0; i < policy.max_iterations && !done; ++i) {
        StepOutcome s = step(method, p, FrictionVar(x), model);
        t.last_step = s.status;
        switch (s.status) {
        case StepStatus::advanced:
            t.iterates.push_back(s.next);
            solution = s.next;
            if (std::abs(s.next - x) < policy.abs_tol) {
                t.termination = Termination::converged_by_agreement;
                done = true;
            }
            x = s.next;
            break;
        case StepStatus::division_by_zero: {
            double fx = std::abs(Evaluation::f(p, x, Model::exact));
            if (fx < policy.div0_residual) {
                t.termination = Termination::converged_by_div0;
                double fb = std::abs(Evaluation::f(p, s.best_point, Model::exact));
                if (s.best_point > 0.0 && fb < fx) solution = s.best_point;
            } else {
                t.termination = Termination::failed_non_finite;
            }
            done = true;
            break;
        }
        case StepStatus::non_finite:
            t.termination = Termination::failed_non_finite;
            done = true;
            break;
        case StepStatus::left_domain:
            t.termination = Termination::failed_left_domain;
            done = true;
            break;
        }
    }

    t.solution = solution;
    t.residual_at_final = Evaluation::f(p, solution, Model::exact);
    t.iterations_to_solution = count_iterations(t, x_star, policy.abs_tol);
    return t;
}

}  // namespace colebrook
