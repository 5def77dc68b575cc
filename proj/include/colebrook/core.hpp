#pragma once

#include <stdexcept>

namespace colebrook {

// Raised for inputs outside the turbulent Colebrook domain or for an
// invalid log argument. Not used to signal convergence trouble.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr double kReynoldsMin = 4.0e3;
inline constexpr double kReynoldsMax = 1.0e8;
inline constexpr double kRoughnessMax = 0.05;

// One problem instance: Reynolds number and relative roughness.
// Bounds are closed so the sweep grid may include its endpoints;
// roughness 0 is the smooth-pipe edge.
class ColebrookParams {
public:
    ColebrookParams(double reynolds, double roughness);

    double reynolds() const noexcept { return re_; }
    double roughness() const noexcept { return eps_; }

    // Skips validation; for evaluating F outside the practical domain
    // (asymptotic checks). Still requires finite, positive Re.
    static ColebrookParams unchecked(double reynolds, double roughness);

    friend bool operator==(const ColebrookParams&, const ColebrookParams&) = default;

private:
    struct NoCheck {};
    ColebrookParams(double re, double eps, NoCheck) noexcept : re_(re), eps_(eps) {}
    double re_;
    double eps_;
};

bool in_domain(double reynolds, double roughness) noexcept;

// x = 1/sqrt(lambda), always positive and finite.
class FrictionVar {
public:
    explicit FrictionVar(double x);
    double value() const noexcept { return x_; }
    double lambda() const noexcept { return 1.0 / (x_ * x_); }

    friend auto operator<=>(const FrictionVar&, const FrictionVar&) = default;

private:
    double x_;
};

double lambda_of_x(FrictionVar x) noexcept;
FrictionVar x_of_lambda(double lambda);

// Exact residual and analytic derivatives. All throw DomainError when the
// log argument 2.51 x/Re + eps/3.71 is not positive.
double residual(const ColebrookParams& p, FrictionVar x);
double first_derivative(const ColebrookParams& p, FrictionVar x);
double second_derivative(const ColebrookParams& p, FrictionVar x);

// How F, F' and F'' are evaluated inside the iterative methods.
//
// exact       - the analytic expressions above.
// spreadsheet - reproduces the reference iterate listings, which were
//               produced in a spreadsheet: F' carries 10*eps/3.71 in its
//               log-argument term, F'' uses the rounded coefficient 12.6,
//               and F snaps to zero when x and 2*log10(...) cancel to
//               within 2^-49 of their magnitude (spreadsheet subtraction
//               rounds such results to 0, which is where the reference
//               #div0! entries come from).
enum class Model { exact, spreadsheet };

const char* to_string(Model m) noexcept;

// Non-throwing evaluation for use inside steppers: an invalid log argument
// or non-finite x yields NaN.
struct Evaluation {
    static double f(const ColebrookParams& p, double x, Model m) noexcept;
    static double df(const ColebrookParams& p, double x, Model m) noexcept;
    static double d2f(const ColebrookParams& p, double x, Model m) noexcept;
};

}  // namespace colebrook
