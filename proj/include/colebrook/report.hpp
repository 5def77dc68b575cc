#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "colebrook/engine.hpp"
#include "colebrook/sweep.hpp"

namespace colebrook::report {

inline constexpr std::string_view kSchemaVersion = "1.0";

enum class Format { table, csv, json };

// The five standard pipe flow cases, index 1..5.
struct Example {
    double reynolds;
    double roughness;
    double root;  // reference final solution, 9 decimals
};
const Example& example(int index);

// Iterate listing with nine decimals, ending in "#div0!" when the last step
// divided by zero.
std::string trace_text(const IterationTrace& t);
std::string solve_text(const IterationTrace& t);

std::string sweep_csv(const SweepReport& r);
std::string sweep_table(const SweepReport& r);

nlohmann::ordered_json trace_json(const IterationTrace& t);
nlohmann::ordered_json sweep_json(const SweepReport& r);

// Wraps results in the common envelope {schema_version, command, inputs, results}.
nlohmann::ordered_json envelope(std::string_view command, nlohmann::ordered_json inputs, nlohmann::ordered_json results);

// Fixed-point decimal with `digits` places, "%.*f" semantics.
std::string fixed(double v, int digits);

}  // namespace colebrook::report
