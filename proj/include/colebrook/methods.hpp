#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>

#include "colebrook/core.hpp"

namespace colebrook {

// Listed from the simplest scheme to the most elaborate.
enum class MethodId : std::uint8_t {
    fixed_point,
    newton_raphson,
    halley,
    euler_chebyshev,
    basto_semiao_calheiros,
    super_halley,
    murakami,
    ostrowski_king,
    kung_traub,
    maheshwari,
    khattri_babajee,
    jarratt_hermite,
    wang_liu,
    neta,
    chun_neta,
    dzunic_petkovic_petkovic,
    neta_johnson,
    jain_steffensen,
    bi_ren_wu,
    cordero,
    sharma_arora,
    sharma_sharma,
    sharma_guha_gupta,
};

inline constexpr std::size_t kMethodCount = 23;

enum class Family { one_point, two_point, three_point };

std::string_view to_string(Family f) noexcept;

struct EvalCounts {
    int f = 0;
    int df = 0;
    int d2f = 0;
    friend bool operator==(const EvalCounts&, const EvalCounts&) = default;
};

struct MethodInfo {
    MethodId id;
    std::string_view name;   // kebab-case, stable CLI/JSON id
    std::string_view title;  // human-readable
    int equation;            // 3..25
    Family family;
    int log_calls;           // per iteration, by family
    int derivative_points;   // distinct points where F' is needed
    int function_points;     // F evaluations per full step
    EvalCounts per_step;     // instrumented counts of a step that completes
    int reference_worst_case;
    bool recommended;        // false for the four schemes with poor worst cases
};

const MethodInfo& info(MethodId id) noexcept;
std::span<const MethodInfo> all_methods() noexcept;
std::optional<MethodId> parse_method(std::string_view name) noexcept;
inline std::string_view to_string(MethodId id) noexcept { return info(id).name; }

enum class StepStatus {
    advanced,
    division_by_zero,
    non_finite,
    left_domain,  // finite but non-positive next iterate
};

std::string_view to_string(StepStatus s) noexcept;

// Intermediate quantities of one step. Fields a method does not use stay NaN.
struct StepWorkspace {
    static constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    double y = nan, z = nan;
    double L = nan;
    double omega = nan, eta = nan;
    double delta = nan;
    double H = nan;
    double phi_xy = nan, phi_xz = nan, phi_yz = nan;
    double w = nan;
    double P = nan, Q = nan, R = nan;
};

struct StepOutcome {
    StepStatus status = StepStatus::non_finite;
    double next = StepWorkspace::nan;
    // Point with the smallest |F| seen during the step and that residual.
    // After a division by zero this is often a better root than x_i.
    double best_point = StepWorkspace::nan;
    double best_residual = StepWorkspace::nan;
    EvalCounts evaluations;
    StepWorkspace workspace;
};

struct StepOptions {
    // Weight of F(y) in the Khattri-Babajee denominator F'(x) + w*F(y).
    // -0.001 reproduces the reference iterates; see README.
    double khattri_weight = -0.001;
};

StepOutcome step(MethodId method, const ColebrookParams& p, FrictionVar x, Model model,
                 const StepOptions& opts = {});

// (F(a) - F(b)) / (a - b) with given function values.
double divided_difference(double a, double fa, double b, double fb) noexcept;

}  // namespace colebrook
