#include <algorithm>
#include <cmath>

#include "doctest.h"

#include "colebrook/report.hpp"
#include "colebrook/sweep.hpp"

using namespace colebrook;

namespace {
const SweepReport& default_report() {
    static const SweepReport r = sweep(all_method_ids(), GridSpec{});
    return r;
}
int worst(const SweepReport& r, MethodId id) {
    for (const auto& m : r.methods)
        if (m.method == id) return m.worst_case;
    return -1;
}
}  // namespace

TEST_CASE("default grid") {
    auto g = generate_grid({});
    REQUIRE(g.size() == 740);
    CHECK(g.front() == ColebrookParams(4000, 1e-6));
    CHECK(g.back() == ColebrookParams(1e8, 0.05));
    for (const auto& p : g) CHECK(in_domain(p.reynolds(), p.roughness()));
    // log spacing: constant ratio along each axis
    double r1 = g[20].reynolds() / g[0].reynolds(), r2 = g[40].reynolds() / g[20].reynolds();
    CHECK(r1 == doctest::Approx(r2).epsilon(1e-12));
}

TEST_CASE("two by two grid is the corners") {
    auto g = generate_grid({.re_points = 2, .rough_points = 2});
    REQUIRE(g.size() == 4);
    CHECK(g[0] == ColebrookParams(4000, 1e-6));
    CHECK(g[1] == ColebrookParams(4000, 0.05));
    CHECK(g[2] == ColebrookParams(1e8, 1e-6));
    CHECK(g[3] == ColebrookParams(1e8, 0.05));
}

TEST_CASE("invalid grids") {
    CHECK_THROWS_AS(generate_grid({.re_points = 0}), DomainError);
    CHECK_THROWS_AS(generate_grid({.re_min = 1e3}), DomainError);
    CHECK_THROWS_AS(generate_grid({.rough_min = 0.0}), DomainError);
    CHECK_THROWS_AS(generate_grid({.rough_min = 0.04, .rough_max = 0.01}), DomainError);
    std::vector<ColebrookParams> g{{1e5, 0.01}};
    CHECK_THROWS_AS(sweep(std::vector<MethodId>{}, g), DomainError);
}

TEST_CASE("roots on the grid stay inside the bracket") {
    for (const auto& p : generate_grid({})) {
        double r = oracle_root(p).value();
        CHECK(r > 1.0);
        CHECK(r < 15.0);
    }
}

TEST_CASE("reference: single point sweep on the second example") {
    std::vector<ColebrookParams> g{{6.23e4, 0.012}};
    std::vector<MethodId> m{MethodId::fixed_point};
    auto r = sweep(m, g);
    REQUIRE(r.methods.size() == 1);
    CHECK(r.methods[0].worst_case == 6);
    CHECK(r.methods[0].worst_point == g[0]);
}

TEST_CASE("histograms cover the grid") {
    const auto& r = default_report();
    CHECK(r.grid_size == 740);
    REQUIRE(r.methods.size() == 23);
    for (const auto& m : r.methods) {
        int total = 0;
        for (auto [c, n] : m.histogram) total += n;
        CHECK(total == 740);
        CHECK(m.histogram.rbegin()->first == m.worst_case);
    }
}

TEST_CASE("parallel and serial sweeps agree byte for byte") {
    auto grid = generate_grid({.re_points = 12, .rough_points = 8});
    auto ids = all_method_ids();
    auto ref = report::sweep_csv(sweep_serial(ids, grid));
    auto ref_json = report::sweep_json(sweep_serial(ids, grid)).dump();
    for (int threads : {0, 1, 2, 4, 7}) {
        auto r = sweep(ids, grid, {.threads = threads});
        CHECK(report::sweep_csv(r) == ref);
        CHECK(report::sweep_json(r).dump() == ref_json);
    }
}

TEST_CASE("perturbation clamps to the domain") {
    auto g = generate_grid({});
    for (double f : {0.98, 1.02}) {
        auto q = perturb(g, f, f);
        REQUIRE(q.size() == g.size());
        for (const auto& p : q) CHECK(in_domain(p.reynolds(), p.roughness()));
        CHECK(q[300].reynolds() == doctest::Approx(g[300].reynolds() * f));
    }
}

TEST_CASE("summary table") {
    CHECK(summary_table(SweepReport{}).empty());
    const auto& r = default_report();
    auto rows = summary_table(r);
    REQUIRE(rows.size() == 23);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].equation == static_cast<int>(i) + 3);
    auto find = [&](MethodId id) { return *std::find_if(rows.begin(), rows.end(), [&](auto& x) { return x.method == id; }); };
    CHECK(find(MethodId::kung_traub).reference_worst_case == 4);
    CHECK(find(MethodId::sharma_guha_gupta).reference_worst_case == 2);
    for (const auto& row : rows) CHECK(row.delta == row.worst_case - row.reference_worst_case);
}

TEST_CASE("reference: worst cases for single methods") {
    const auto& r = default_report();
    CHECK(worst(r, MethodId::neta) <= 2);
    int mu = worst(r, MethodId::murakami);
    CHECK(mu >= 11);
    CHECK(mu <= 13);
}

TEST_CASE("reference: no failures on the default grid") {
    for (const auto& m : default_report().methods) {
        INFO(to_string(m.method), " failures: ", m.failures.size());
        CHECK(m.failures.empty());
    }
}

TEST_CASE("reference: family ranking") {
    const auto& r = default_report();
    int one = 0, two = 0, three = 0;
    for (const auto& m : r.methods) {
        const auto& mi = info(m.method);
        if (m.method == MethodId::murakami || m.method == MethodId::wang_liu || m.method == MethodId::neta_johnson)
            continue;
        int& slot = mi.family == Family::one_point ? one : mi.family == Family::two_point ? two : three;
        slot = std::max(slot, m.worst_case);
    }
    CHECK(three <= 4);
    CHECK(two <= 7);
    CHECK(one <= 7);
    CHECK(three <= two);
    CHECK(two <= one);
}

TEST_CASE("reference: recommended methods") {
    const auto& r = default_report();
    for (MethodId id : {MethodId::sharma_guha_gupta, MethodId::sharma_sharma, MethodId::sharma_arora,
                        MethodId::dzunic_petkovic_petkovic, MethodId::jain_steffensen, MethodId::neta}) {
        INFO(to_string(id));
        CHECK(worst(r, id) <= 2);
    }
    CHECK(worst(r, MethodId::bi_ren_wu) <= 3);
    CHECK(worst(r, MethodId::chun_neta) <= 3);
}
