#include "colebrook/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace colebrook {

namespace {

constexpr double kA = 2.51;
constexpr double kB = 3.71;
constexpr double kLn10 = std::numbers::ln10;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// 2^-49: relative size below which a spreadsheet reports x + t as 0.
constexpr double kSnap = 1.7763568394002505e-15;

double log_arg(double re, double eps, double x) noexcept { return kA * x / re + eps / kB; }

void require_arg(double arg) {
    if (!(arg > 0.0) || !std::isfinite(arg))
        throw DomainError("colebrook: non-positive log argument");
}

}  // namespace

bool in_domain(double re, double eps) noexcept {
    return std::isfinite(re) && std::isfinite(eps) && re >= kReynoldsMin && re <= kReynoldsMax &&
           eps >= 0.0 && eps <= kRoughnessMax;
}

ColebrookParams::ColebrookParams(double re, double eps) : re_(re), eps_(eps) {
    if (!in_domain(re, eps))
        throw DomainError("colebrook: (Re=" + std::to_string(re) + ", eps=" + std::to_string(eps) +
                          ") outside 4000 <= Re <= 1e8, 0 <= eps <= 0.05");
}

ColebrookParams ColebrookParams::unchecked(double re, double eps) {
    if (!(re > 0.0) || !std::isfinite(re) || !std::isfinite(eps) || eps < 0.0)
        throw DomainError("colebrook: Reynolds number must be positive and finite");
    return ColebrookParams(re, eps, NoCheck{});
}

FrictionVar::FrictionVar(double x) : x_(x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("colebrook: x = 1/sqrt(lambda) must be positive");
}

double lambda_of_x(FrictionVar x) noexcept { return x.lambda(); }

FrictionVar x_of_lambda(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("colebrook: lambda must be positive");
    return FrictionVar(1.0 / std::sqrt(lambda));
}

double residual(const ColebrookParams& p, FrictionVar x) {
    double a = log_arg(p.reynolds(), p.roughness(), x.value());
    require_arg(a);
    return x.value() + 2.0 * std::log10(a);
}

double first_derivative(const ColebrookParams& p, FrictionVar x) {
    double a = log_arg(p.reynolds(), p.roughness(), x.value());
    require_arg(a);
    return 2.0 * kA / (kLn10 * p.reynolds() * a) + 1.0;
}

double second_derivative(const ColebrookParams& p, FrictionVar x) {
    double a = log_arg(p.reynolds(), p.roughness(), x.value());
    require_arg(a);
    double re = p.reynolds();
    return -2.0 * kA * kA / (kLn10 * (re * re) * (a * a));
}

const char* to_string(Model m) noexcept { return m == Model::exact ? "exact" : "spreadsheet"; }

double Evaluation::f(const ColebrookParams& p, double x, Model m) noexcept {
    double a = log_arg(p.reynolds(), p.roughness(), x);
    if (!(a > 0.0) || !std::isfinite(a)) return kNaN;
    double t = 2.0 * std::log10(a);
    double r = x + t;
    if (m == Model::spreadsheet && std::abs(r) <= kSnap * std::max(std::abs(x), std::abs(t))) return 0.0;
    return r;
}

double Evaluation::df(const ColebrookParams& p, double x, Model m) noexcept {
    double re = p.reynolds();
    double eps = m == Model::spreadsheet ? 10.0 * p.roughness() : p.roughness();
    double a = eps / kB + kA * x / re;
    if (!(log_arg(re, p.roughness(), x) > 0.0) || !(a > 0.0)) return kNaN;
    return 5.02 / (kLn10 * re * a) + 1.0;
}

double Evaluation::d2f(const ColebrookParams& p, double x, Model m) noexcept {
    double re = p.reynolds();
    double a = p.roughness() / kB + kA * x / re;
    if (!(a > 0.0) || !std::isfinite(a)) return kNaN;
    double c = m == Model::spreadsheet ? 12.6 : 2.0 * kA * kA;
    return -c / (kLn10 * (re * re) * (a * a));
}

}  // namespace colebrook
