#include "colebrook/report.hpp"

#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace colebrook::report {

namespace {

constexpr std::array<Example, 5> kExamples{{
    {3.78e6, 0.00854, 5.274511499},
    {6.23e4, 0.012, 4.928634498},
    {1.18e7, 0.032, 4.128359435},
    {5.74e7, 0.0008, 7.331277467},
    {8.31e3, 0.024, 4.22204103},
}};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

const Example& example(int index) {
    if (index < 1 || index > 5) throw std::out_of_range("example index must be 1..5");
    return kExamples[static_cast<std::size_t>(index - 1)];
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string trace_text(const IterationTrace& t) {
    std::ostringstream os;
    std::size_t i = 1;
    for (double x : t.iterates) os << 'x' << i++ << " = " << fixed(x, 9) << '\n';
    if (t.last_step == StepStatus::division_by_zero)
        os << 'x' << i << " = #div0!\n";
    else if (t.last_step == StepStatus::non_finite)
        os << 'x' << i << " = #num!\n";
    else if (t.last_step == StepStatus::left_domain)
        os << 'x' << i << " = (non-positive)\n";
    os << "# " << to_string(t.termination) << '\n';
    return os.str();
}

std::string solve_text(const IterationTrace& t) {
    std::ostringstream os;
    os << "method       " << to_string(t.method) << '\n'
       << "Re           " << sci(t.problem.reynolds()) << '\n'
       << "eps          " << sci(t.problem.roughness()) << '\n'
       << "x            " << fixed(t.solution, 9) << '\n'
       << "lambda       " << fixed(1.0 / (t.solution * t.solution), 12) << '\n'
       << "iterations   " << t.iterations_to_solution << '\n'
       << "termination  " << to_string(t.termination) << '\n'
       << "residual     " << sci(t.residual_at_final) << '\n';
    return os.str();
}

std::string sweep_csv(const SweepReport& r) {
    std::ostringstream os;
    os << "method_id,equation,family,log_calls,worst_case,paper_worst_case,delta\n";
    for (const auto& row : summary_table(r))
        os << to_string(row.method) << ',' << row.equation << ',' << to_string(row.family) << ',' << row.log_calls
           << ',' << row.worst_case << ',' << row.reference_worst_case << ',' << row.delta << '\n';
    return os.str();
}

std::string sweep_table(const SweepReport& r) {
    std::ostringstream os;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-26s %3s  %-11s %4s %6s %6s %6s %8s\n", "method", "eq", "family", "logs",
                  "worst", "ref", "delta", "failures");
    os << buf;
    for (const auto& row : summary_table(r)) {
        std::size_t failures = 0;
        for (const auto& m : r.methods)
            if (m.method == row.method) failures = m.failures.size();
        std::snprintf(buf, sizeof buf, "%-26s %3d  %-11s %4d %6d %6d %+6d %8zu\n",
                      std::string(to_string(row.method)).c_str(), row.equation,
                      std::string(to_string(row.family)).c_str(), row.log_calls, row.worst_case,
                      row.reference_worst_case, row.delta, failures);
        os << buf;
    }
    os << "# " << r.grid_size << " grid points, x0 = " << fixed(r.x0, 9) << ", model = " << to_string(r.model)
       << '\n';
    return os.str();
}

nlohmann::ordered_json trace_json(const IterationTrace& t) {
    nlohmann::ordered_json j;
    j["method"] = to_string(t.method);
    j["equation"] = info(t.method).equation;
    j["iterates"] = t.iterates;
    j["termination"] = to_string(t.termination);
    j["last_step"] = to_string(t.last_step);
    j["iterations_to_solution"] = t.iterations_to_solution;
    j["x"] = t.solution;
    j["lambda"] = 1.0 / (t.solution * t.solution);
    j["residual"] = t.residual_at_final;
    return j;
}

nlohmann::ordered_json sweep_json(const SweepReport& r) {
    nlohmann::ordered_json methods = nlohmann::ordered_json::array();
    auto rows = summary_table(r);
    for (const auto& row : rows) {
        const MethodSweep* ms = nullptr;
        for (const auto& m : r.methods)
            if (m.method == row.method) ms = &m;
        nlohmann::ordered_json hist = nlohmann::ordered_json::object();
        for (auto [count, n] : ms->histogram) hist[std::to_string(count)] = n;
        nlohmann::ordered_json fails = nlohmann::ordered_json::array();
        for (const auto& f : ms->failures)
            fails.push_back({{"re", f.point.reynolds()},
                             {"eps", f.point.roughness()},
                             {"termination", to_string(f.termination)}});
        methods.push_back({{"method_id", to_string(row.method)},
                           {"equation", row.equation},
                           {"family", to_string(row.family)},
                           {"log_calls", row.log_calls},
                           {"worst_case", row.worst_case},
                           {"paper_worst_case", row.reference_worst_case},
                           {"delta", row.delta},
                           {"worst_point", {{"re", ms->worst_point.reynolds()}, {"eps", ms->worst_point.roughness()}}},
                           {"histogram", hist},
                           {"failures", fails}});
    }
    return {{"grid_size", r.grid_size}, {"model", to_string(r.model)}, {"methods", methods}};
}

nlohmann::ordered_json envelope(std::string_view command, nlohmann::ordered_json inputs, nlohmann::ordered_json results) {
    return {{"schema_version", kSchemaVersion},
            {"command", command},
            {"inputs", std::move(inputs)},
            {"results", std::move(results)}};
}

}  // namespace colebrook::report
