#include <cmath>
#include <random>

#include "doctest.h"

#include "colebrook/engine.hpp"
#include "colebrook/report.hpp"
#include "colebrook/sweep.hpp"
#include "oracle.hpp"

using namespace colebrook;

namespace {
constexpr double x0 = 7.273626085;

ColebrookParams ex(int i) {
    const auto& e = report::example(i);
    return {e.reynolds, e.roughness};
}

IterationTrace sheet_run(MethodId m, const ColebrookParams& p, double start = x0) {
    return run(m, p, FrictionVar(start), {}, Model::spreadsheet);
}
}  // namespace

TEST_CASE("fixed point on the fifth example") {
    auto t = sheet_run(MethodId::fixed_point, ex(5));
    REQUIRE(t.iterates.size() == 8);
    CHECK(report::fixed(t.iterates[6], 9) == "4.222041030");
    CHECK(report::fixed(t.iterates[7], 9) == "4.222041030");
    CHECK(t.termination == Termination::converged_by_agreement);
    CHECK(t.iterations_to_solution == 7);
}

TEST_CASE("division by zero at the root counts as converged") {
    auto t = sheet_run(MethodId::sharma_arora, ex(3));
    REQUIRE(t.iterates.size() == 1);
    CHECK(std::abs(t.iterates[0] - 4.128359435) < 5e-9);
    CHECK(t.last_step == StepStatus::division_by_zero);
    CHECK(t.termination == Termination::converged_by_div0);
    CHECK(t.iterations_to_solution == 1);
    CHECK(std::abs(t.residual_at_final) < 1e-7);
}

TEST_CASE("starting on the root needs no iterations") {
    for (const auto& m : all_methods())
        for (int i = 1; i <= 5; ++i) {
            auto p = ex(i);
            auto t = run(m.id, p, oracle_root(p), {}, Model::exact);
            CHECK(t.iterations_to_solution == 0);
            CHECK(converged(t.termination));
        }
}

TEST_CASE("reference: Neta-Johnson on the fifth example takes twelve iterates") {
    auto t = sheet_run(MethodId::neta_johnson, ex(5));
    CHECK(t.iterates.size() == 12);
    if (!t.iterates.empty()) CHECK(report::fixed(t.iterates.back(), 9) == "4.222041030");
}

TEST_CASE("oracle root") {
    const double want[] = {5.274511499, 4.928634498, 4.128359435, 7.331277467, 4.22204103};
    for (int i = 1; i <= 5; ++i) {
        auto p = ex(i);
        double r = oracle_root(p).value();
        CHECK(std::abs(r - want[i - 1]) < 5e-9);
        CHECK(std::abs(residual(p, FrictionVar(r))) < 1e-13);
    }
    ColebrookParams c(1e6, 3.71 * (1e-2 - 2.51 * 4 / 1e6));
    CHECK(std::abs(oracle_root(c).value() - 4.0) < 1e-12);
}

TEST_CASE("oracle root agrees with high-precision bisection") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> lre(std::log(4e3), std::log(1e8)), ueps(0.0, 0.05);
    for (int i = 0; i < 100; ++i) {
        ColebrookParams p(std::exp(lre(rng)), ueps(rng));
        double r = oracle_root(p).value();
        CHECK(std::abs(r - oracle::root(p.reynolds(), p.roughness())) < 1e-12);
        // further Newton polishing does not move it
        FrictionVar v(r);
        double polished = r - residual(p, v) / first_derivative(p, v);
        CHECK(std::abs(polished - r) < 1e-12);
    }
}

TEST_CASE("bracket failure is a domain error") {
    CHECK_THROWS_AS(oracle_root(ColebrookParams::unchecked(1e14, 0.0)), DomainError);
}

TEST_CASE("counting against the root") {
    // the reference listing: x5 = 4.928634490 is 7.5e-9 off, x6 is the first hit
    auto t2 = sheet_run(MethodId::fixed_point, ex(2));
    IterationTrace listed = t2;
    listed.iterates = {4.905054156, 4.928874894, 4.928632047, 4.928634523, 4.928634490, 4.928634498, 4.928634498};
    double root2 = oracle_root(ex(2)).value();
    CHECK(count_iterations(listed, root2, 0.5e-9) == 6);
    // recomputed, x5 = 4.9286344973 is already within 0.5e-9
    CHECK(count_iterations(t2, root2, 0.5e-9) == 5);
    auto t1 = sheet_run(MethodId::neta, ex(1));
    CHECK(count_iterations(t1, oracle_root(ex(1)).value(), 0.5e-9) == 1);

    IterationTrace none = t2;
    none.iterates.clear();
    none.termination = Termination::failed_non_finite;
    CHECK(count_iterations(none, 1.0, 0.5e-9) == none.policy.max_iterations + 1);
    CHECK(count_iterations(none, x0, 0.5e-9) == 0);
}

TEST_CASE("count is monotone in the tolerance") {
    auto grid = generate_grid({.re_points = 7, .rough_points = 5});
    for (const auto& m : all_methods())
        for (const auto& p : grid) {
            double root = oracle_root(p).value();
            auto t = run(m.id, p, FrictionVar(x0), {}, Model::spreadsheet, root);
            int prev = 1 << 30;
            for (double tol : {1e-12, 1e-10, 0.5e-9, 1e-8, 1e-6, 1e-3, 1.0}) {
                int c = count_iterations(t, root, tol);
                CHECK(c <= prev);
                prev = c;
            }
        }
}

TEST_CASE("termination semantics on the grid") {
    auto grid = generate_grid({});
    for (Model model : {Model::spreadsheet, Model::exact})
        for (const auto& m : all_methods())
            for (std::size_t i = 0; i < grid.size(); i += 7) {
                const auto& p = grid[i];
                double root = oracle_root(p).value();
                auto t = run(m.id, p, FrictionVar(x0), {}, model, root);
                if (t.termination == Termination::converged_by_div0) {
                    double last = t.iterates.empty() ? x0 : t.iterates.back();
                    CHECK(std::abs(residual(p, FrictionVar(last))) < 1e-7);
                }
                if (converged(t.termination)) {
                    INFO(m.name, " Re=", p.reynolds(), " eps=", p.roughness(), " model=", to_string(model));
                    CHECK(std::abs(t.solution - root) < 0.5e-9);
                    CHECK(t.iterations_to_solution <= t.policy.max_iterations);
                }
            }
}

TEST_CASE("runs are deterministic") {
    for (const auto& m : all_methods()) {
        auto a = sheet_run(m.id, ex(2)), b = sheet_run(m.id, ex(2));
        CHECK(a.iterates == b.iterates);
        CHECK(a.termination == b.termination);
        CHECK(a.solution == b.solution);
    }
}

TEST_CASE("invalid policy") {
    StoppingPolicy bad;
    bad.abs_tol = 0;
    CHECK_THROWS_AS(run(MethodId::neta, ex(1), FrictionVar(x0), bad, Model::exact), DomainError);
    bad = {};
    bad.max_iterations = 0;
    CHECK_THROWS_AS(run(MethodId::neta, ex(1), FrictionVar(x0), bad, Model::exact), DomainError);
}

TEST_CASE("iteration cap") {
    StoppingPolicy pol;
    pol.max_iterations = 2;
    auto t = run(MethodId::fixed_point, ex(5), FrictionVar(x0), pol, Model::spreadsheet);
    CHECK(t.termination == Termination::failed_max_iter);
    CHECK(t.iterates.size() == 2);
    CHECK(t.iterations_to_solution == 3);
}
