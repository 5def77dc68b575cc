#include "colebrook/methods.hpp"

#include <array>
#include <cmath>

namespace colebrook {

namespace {

using M = MethodId;
using Fam = Family;

// id, name, title, eq, family, log calls, F' points, F points, {F, F', F''} per step, reference, recommended
constexpr std::array<MethodInfo, kMethodCount> kCatalog{{
    {M::fixed_point, "fixed-point", "Fixed-point", 3, Fam::one_point, 1, 0, 1, {1, 0, 0}, 7, true},
    {M::newton_raphson, "newton-raphson", "Newton-Raphson", 4, Fam::one_point, 1, 1, 1, {1, 1, 0}, 7, true},
    {M::halley, "halley", "Halley", 5, Fam::one_point, 1, 1, 1, {1, 1, 1}, 7, true},
    {M::euler_chebyshev, "euler-chebyshev", "Euler-Chebyshev", 6, Fam::one_point, 1, 1, 1, {1, 1, 1}, 7, true},
    {M::basto_semiao_calheiros, "basto-semiao-calheiros", "Basto-Semiao-Calheiros", 7, Fam::one_point, 1, 1, 1,
     {1, 1, 1}, 7, true},
    {M::super_halley, "super-halley", "Super-Halley", 8, Fam::one_point, 1, 1, 1, {1, 1, 1}, 7, true},
    {M::murakami, "murakami", "Murakami", 9, Fam::one_point, 1, 3, 1, {1, 3, 0}, 12, false},
    {M::ostrowski_king, "ostrowski-king", "Ostrowski-King", 10, Fam::two_point, 2, 1, 2, {2, 1, 0}, 4, true},
    {M::kung_traub, "kung-traub", "Kung-Traub", 11, Fam::two_point, 2, 1, 2, {2, 1, 0}, 4, true},
    {M::maheshwari, "maheshwari", "Maheshwari", 12, Fam::two_point, 2, 1, 2, {2, 1, 0}, 4, true},
    {M::khattri_babajee, "khattri-babajee", "Khattri-Babajee", 13, Fam::two_point, 2, 1, 2, {2, 1, 0}, 4, true},
    {M::jarratt_hermite, "jarratt-hermite", "Jarratt-Hermite", 14, Fam::two_point, 2, 3, 2, {2, 3, 0}, 4, true},
    {M::wang_liu, "wang-liu", "Wang-Liu", 15, Fam::two_point, 2, 2, 2, {2, 2, 0}, 7, false},
    {M::neta, "neta", "Neta", 16, Fam::three_point, 3, 1, 3, {3, 1, 0}, 2, true},
    {M::chun_neta, "chun-neta", "Chun-Neta", 17, Fam::three_point, 3, 1, 3, {3, 1, 0}, 2, true},
    {M::dzunic_petkovic_petkovic, "dzunic-petkovic-petkovic", "Dzunic-Petkovic-Petkovic", 18, Fam::three_point, 3,
     1, 3, {3, 1, 0}, 2, true},
    {M::neta_johnson, "neta-johnson", "Neta-Johnson", 19, Fam::three_point, 3, 3, 2, {2, 3, 0}, 11, false},
    {M::jain_steffensen, "jain-steffensen", "Jain (Steffensen-type)", 20, Fam::three_point, 3, 0, 3, {3, 0, 0}, 2,
     true},
    {M::bi_ren_wu, "bi-ren-wu", "Bi-Ren-Wu", 21, Fam::three_point, 3, 1, 3, {3, 1, 0}, 3, true},
    {M::cordero, "cordero", "Cordero et al.", 22, Fam::three_point, 3, 1, 3, {3, 1, 0}, 4, false},
    {M::sharma_arora, "sharma-arora", "Sharma-Arora", 23, Fam::three_point, 3, 1, 3, {3, 1, 0}, 2, true},
    {M::sharma_sharma, "sharma-sharma", "Sharma-Sharma", 24, Fam::three_point, 3, 1, 3, {3, 1, 0}, 2, true},
    {M::sharma_guha_gupta, "sharma-guha-gupta", "Sharma-Guha-Gupta", 25, Fam::three_point, 3, 1, 3, {3, 1, 0}, 2,
     true},
}};

struct Halt {
    StepStatus status;
};

double dv(double a, double b) {
    if (b == 0.0) throw Halt{StepStatus::division_by_zero};
    return a / b;
}

// Evaluation context for one step. Counts calls, remembers the point with
// the smallest |F|, and aborts on a zero denominator or a bad evaluation.
class Ctx {
public:
    Ctx(const ColebrookParams& p, Model m, StepOutcome& out) : p_(p), m_(m), out_(out) {}

    double F(double x) {
        ++out_.evaluations.f;
        double r = Evaluation::f(p_, x, m_);
        if (!std::isfinite(r)) throw Halt{StepStatus::non_finite};
        if (!(std::abs(r) >= std::abs(out_.best_residual))) {
            out_.best_point = x;
            out_.best_residual = r;
        }
        return r;
    }
    double D1(double x) {
        ++out_.evaluations.df;
        return checked(Evaluation::df(p_, x, m_));
    }
    double D2(double x) {
        ++out_.evaluations.d2f;
        return checked(Evaluation::d2f(p_, x, m_));
    }
private:
    static double checked(double v) {
        if (!std::isfinite(v)) throw Halt{StepStatus::non_finite};
        return v;
    }
    const ColebrookParams& p_;
    Model m_;
    StepOutcome& out_;
};

double phi(double a, double fa, double b, double fb) { return dv(fa - fb, a - b); }

// Hermite correction shared by Jarratt and Wang-Liu.
double hermite(double x, double y, double z, double f, double fy, double g, double gz) {
    double D = x + 2 * y - 3 * z;
    return f + g * dv((z - x) * ((z - y) * (z - y)), (y - x) * D) + gz * dv((z - y) * (x - z), D) -
           dv(f - fy, x - y) * dv(std::pow(z - x, 3), (y - x) * D);
}

double compute(MethodId id, Ctx& c, double x, StepWorkspace& w, const StepOptions& opt) {
    switch (id) {
    case M::fixed_point:
        return x - c.F(x);

    case M::newton_raphson: {
        double f = c.F(x), g = c.D1(x);
        return x - dv(f, g);
    }
    case M::halley: {
        double f = c.F(x), g = c.D1(x), h = c.D2(x);
        return x - dv(dv(f, g), 1 - dv(h * f, 2 * g * g));
    }
    case M::euler_chebyshev: {
        double f = c.F(x), g = c.D1(x), h = c.D2(x);
        return x - dv(f, g) - dv(f * f * h, 2 * std::pow(g, 3));
    }
    case M::basto_semiao_calheiros: {
        double f = c.F(x), g = c.D1(x), h = c.D2(x);
        return x - dv(f, g) - dv(f * f * h, 2 * g * (g * g - f * h));
    }
    case M::super_halley: {
        double f = c.F(x), g = c.D1(x), h = c.D2(x);
        w.L = dv(f * h, g * g);
        return x - (1 + 0.5 * dv(w.L, 1 - w.L)) * dv(f, g);
    }
    case M::murakami: {
        double f = c.F(x), g = c.D1(x);
        w.omega = x - dv(f, g);
        w.eta = x - 0.5 * dv(f, g);
        double gw = c.D1(w.omega), ge = c.D1(w.eta);
        return x - 0.3 * dv(f, g) + 0.5 * dv(f, gw) - 2.0 / 3 * dv(f, ge) - dv(32 * f, 75 * gw - 15 * f);
    }

    case M::ostrowski_king: {
        double f = c.F(x), g = c.D1(x);
        double y = w.y = x - dv(f, g);
        double fy = c.F(y);
        return y - dv(fy, g) * dv(f, f - 2 * fy);
    }
    case M::kung_traub: {
        double f = c.F(x), g = c.D1(x);
        double y = w.y = x - dv(f, g);
        double fy = c.F(y);
        return y - dv(fy, g) * dv(1, std::pow(1 - dv(fy, f), 2));
    }
    case M::maheshwari: {
        // x - (F/F') [u^2 - F(x)/(F(y) - F(x))], u = F(y)/F(x)
        double f = c.F(x), g = c.D1(x);
        double y = w.y = x - dv(f, g);
        double fy = c.F(y);
        double u = dv(fy, f);
        return x - dv(f, g) * (u * u - dv(f, fy - f));
    }
    case M::khattri_babajee: {
        double f = c.F(x), g = c.D1(x);
        double y = w.y = x - dv(f, g);
        double fy = c.F(y);
        return y - dv(f * fy, f - 2 * fy) * (dv(3, g + opt.khattri_weight * fy) - dv(2, g));
    }
    case M::jarratt_hermite: {
        // z uses the derivative ratio F'(y)/F'(x)
        double f = c.F(x), g = c.D1(x);
        double y = w.y = x - 2.0 / 3 * dv(f, g);
        double fy = c.F(y), gy = c.D1(y);
        double z = w.z = x - 0.5 * dv(f, g) * (1 + dv(1, 1 + 1.5 * (dv(gy, g) - 1)));
        double gz = c.D1(z);
        w.H = hermite(x, y, z, f, fy, g, gz);
        return z - dv(w.H, gz);
    }
    case M::wang_liu: {
        double f = c.F(x), g = c.D1(x);
        double y = w.y = x - dv(f, g);
        double fy = c.F(y);
        double z = w.z = y - dv(fy, g) * dv(f, f - 2 * fy);
        double gz = c.D1(z);
        w.H = hermite(x, y, z, f, fy, g, gz);
        return z - dv(w.H, gz);
    }

    case M::neta: {
        double f = c.F(x), g = c.D1(x);
        double y = w.y = x - dv(f, g);
        double fy = c.F(y);
        double z = w.z = y - dv(fy, g) * dv(f - 0.5 * fy, f - 2.5 * fy);
        double fz = c.F(z);
        return z - dv(fz, g) * dv(f - fy, f - 3 * fy);
    }
    case M::chun_neta: {
        double f = c.F(x), g = c.D1(x);
        double y = w.y = x - dv(f, g);
        double fy = c.F(y);
        double z = w.z = y - dv(fy, g) * dv(1, std::pow(1 - dv(fy, f), 2));
        double fz = c.F(z);
        return z - dv(fz, g) * dv(1, std::pow(1 - dv(fy, f) - dv(fz, f), 2));
    }
    case M::dzunic_petkovic_petkovic: {
        double f = c.F(x), g = c.D1(x);
        double y = w.y = x - dv(f, g);
        double fy = c.F(y);
        double z = w.z = y - dv(f, f - 2 * fy) * dv(fy, g);
        double fz = c.F(z);
        double u = dv(fy, f);
        return z - dv(fz, g * (1 - 2 * u - u * u) * (1 - dv(fz, fy)) * (1 - 2 * dv(fz, f)));
    }
    case M::neta_johnson: {
        double f = c.F(x), g = c.D1(x);
        double y = w.y = x - dv(f, g);
        double gy = c.D1(y);
        w.delta = x - 1.0 / 8 * dv(f, g) - 3.0 / 8 * dv(f, gy);
        double gd = c.D1(w.delta);
        double z = w.z = x - dv(f, g / 6 + gy / 6 + 2.0 / 3 * gd);
        double fz = c.F(z);
        return z - dv(fz, g) * dv(g + gy - gd, -2 * g + 2 * gy - gd);
    }
    case M::jain_steffensen: {
        double f = c.F(x);
        double fs = c.F(x + f);
        double y = w.y = x - dv(f * f, fs - f);
        double fy = c.F(y);
        return x - dv(std::pow(f, 3), (fs - f) * (f - fy));
    }
    case M::bi_ren_wu: {
        double f = c.F(x), g = c.D1(x);
        double y = w.y = x - dv(f, g);
        double fy = c.F(y);
        double z = w.z = y - dv(fy, g) * dv(f, f - 2 * fy);
        double fz = c.F(z);
        w.phi_xy = phi(y, fy, x, f);
        w.phi_yz = phi(z, fz, y, fy);
        return z - dv(fz, w.phi_yz + w.phi_xy - g);
    }
    case M::cordero: {
        // z denominator read as 1 - 2u - u^2 - u^3/2
        double f = c.F(x), g = c.D1(x);
        double y = w.y = x - dv(f, g);
        double fy = c.F(y);
        double u = dv(fy, f);
        double z = w.z = y - dv(fy, g) * dv(1, 1 - 2 * u - u * u - std::pow(u, 3) / 2);
        double fz = c.F(z);
        w.phi_yz = phi(z, fz, y, fy);
        w.phi_xz = phi(z, fz, x, f);
        double pzxx = dv(w.phi_xz - g, z - x);
        double v = dv(fz, f);
        return z - dv(1 + 3 * v, 1 + v) * dv(fz, w.phi_yz + pzxx * (z - y));
    }
    case M::sharma_arora: {
        double f = c.F(x), g = c.D1(x);
        double y = w.y = x - dv(f, g);
        double fy = c.F(y);
        w.phi_xy = phi(y, fy, x, f);
        double z = w.z = y - dv(fy, 2 * w.phi_xy - g);
        double fz = c.F(z);
        w.phi_xz = phi(z, fz, x, f);
        w.phi_yz = phi(z, fz, y, fy);
        return z - dv(w.phi_yz, w.phi_xz) * dv(fz, 2 * w.phi_yz - w.phi_xz);
    }
    case M::sharma_sharma: {
        double f = c.F(x), g = c.D1(x);
        double y = w.y = x - dv(f, g);
        double fy = c.F(y);
        double z = w.z = y - dv(fy, g) * dv(1, 1 - 2 * dv(fy, f));
        double fz = c.F(z);
        w.w = 1 + dv(dv(fz, f), 1 + dv(fz, f));
        w.phi_xy = phi(x, f, y, fy);
        w.phi_xz = phi(x, f, z, fz);
        w.phi_yz = phi(y, fy, z, fz);
        return z - w.w * dv(fz * w.phi_xy, w.phi_xz * w.phi_yz);
    }
    case M::sharma_guha_gupta: {
        double f = c.F(x), g = c.D1(x);
        double y = w.y = x - dv(f, g);
        double fy = c.F(y);
        double z = w.z = y - dv(1, 1 - 2 * dv(fy, f)) * dv(fy, g);
        double fz = c.F(z);
        w.P = (x - y) * f * fy;
        w.Q = (y - z) * fy * fz;
        w.R = (z - x) * fz * f;
        w.phi_xz = phi(z, fz, x, f);
        w.phi_xy = phi(y, fy, x, f);
        return x - dv(w.P + w.Q + w.R, w.P * w.phi_xz + w.Q * g + w.R * w.phi_xy) * f;
    }
    }
    throw Halt{StepStatus::non_finite};
}

}  // namespace

std::string_view to_string(Family f) noexcept {
    switch (f) {
    case Family::one_point: return "one-point";
    case Family::two_point: return "two-point";
    case Family::three_point: return "three-point";
    }
    return "?";
}

std::string_view to_string(StepStatus s) noexcept {
    switch (s) {
    case StepStatus::advanced: return "advanced";
    case StepStatus::division_by_zero: return "division_by_zero";
    case StepStatus::non_finite: return "non_finite";
    case StepStatus::left_domain: return "left_domain";
    }
    return "?";
}

const MethodInfo& info(MethodId id) noexcept { return kCatalog[static_cast<std::size_t>(id)]; }

std::span<const MethodInfo> all_methods() noexcept { return kCatalog; }

std::optional<MethodId> parse_method(std::string_view name) noexcept {
    for (const auto& m : kCatalog)
        if (m.name == name) return m.id;
    return std::nullopt;
}

double divided_difference(double a, double fa, double b, double fb) noexcept { return (fa - fb) / (a - b); }

StepOutcome step(MethodId method, const ColebrookParams& p, FrictionVar x, Model model, const StepOptions& opts) {
    StepOutcome out;
    Ctx ctx(p, model, out);
    try {
        double next = compute(method, ctx, x.value(), out.workspace, opts);
        if (!std::isfinite(next)) {
            out.status = StepStatus::non_finite;
        } else if (next <= 0.0) {
            out.status = StepStatus::left_domain;
        } else {
            out.status = StepStatus::advanced;
            out.next = next;
        }
    } catch (const Halt& h) {
        out.status = h.status;
    }
    return out;
}

}  // namespace colebrook
