// colebrook: solve, trace and benchmark iterative Colebrook solvers.
//
//   colebrook solve --re 3.78e6 --eps 0.00854 --method neta
//   colebrook trace --paper-examples 4 --method kung-traub
//   colebrook sweep --methods neta,jain-steffensen --format json
//   colebrook table

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "colebrook/engine.hpp"
#include "colebrook/report.hpp"
#include "colebrook/sweep.hpp"

namespace cb = colebrook;
namespace rp = colebrook::report;

namespace {

enum Exit { ok = 0, not_converged = 1, usage = 2, domain = 3, io = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<double> re, eps;
    std::string method;
    std::vector<std::string> methods;
    double x0 = cb::kDefaultStart;
    double tol = 0.5e-9;
    int max_iter = 100;
    std::string format;
    std::string out;
    std::string model;
    int example = 0;
    cb::GridSpec grid;
};

rp::Format pick_format(const Options& o, rp::Format terminal_default) {
    if (o.format.empty()) return (o.out.empty() && ::isatty(STDOUT_FILENO)) ? terminal_default : rp::Format::csv;
    if (o.format == "table") return rp::Format::table;
    if (o.format == "csv") return rp::Format::csv;
    if (o.format == "json") return rp::Format::json;
    throw UsageError("unknown format '" + o.format + "' (table, csv, json)");
}

cb::Model pick_model(const Options& o, cb::Model fallback) {
    if (o.model.empty()) return fallback;
    if (o.model == "exact") return cb::Model::exact;
    if (o.model == "spreadsheet" || o.model == "sheet") return cb::Model::spreadsheet;
    throw UsageError("unknown model '" + o.model + "' (exact, spreadsheet)");
}

cb::MethodId pick_method(const std::string& name) {
    auto id = cb::parse_method(name);
    if (!id) throw UsageError("unknown method '" + name + "'");
    return *id;
}

cb::ColebrookParams pick_params(const Options& o) {
    if (o.example != 0) {
        if (o.example < 1 || o.example > 5) throw UsageError("--paper-examples takes 1..5");
        const auto& e = rp::example(o.example);
        return {e.reynolds, e.roughness};
    }
    if (!o.re || !o.eps) throw UsageError("--re and --eps are required (or --paper-examples N)");
    return {*o.re, *o.eps};
}

cb::StoppingPolicy pick_policy(const Options& o) {
    cb::StoppingPolicy p;
    p.abs_tol = o.tol;
    p.max_iterations = o.max_iter;
    try {
        p.validate();
    } catch (const cb::DomainError& e) {
        throw UsageError(e.what());
    }
    return p;
}

int env_threads() {
    const char* s = std::getenv("COLEBROOK_THREADS");
    if (!s || !*s) return 0;
    char* end = nullptr;
    long n = std::strtol(s, &end, 10);
    if (*end != '\0' || n < 0 || n > 4096) throw UsageError("COLEBROOK_THREADS must be a non-negative integer");
    return static_cast<int>(n);
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text << std::flush;
        return;
    }
    namespace fs = std::filesystem;
    fs::path target(o.out);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot write " + tmp.string());
        f << text;
        if (!f.flush()) throw IoError("write failed: " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot write " + target.string());
    }
}

nlohmann::ordered_json point_inputs(const Options& o, const cb::ColebrookParams& p, cb::Model model) {
    return {{"re", p.reynolds()}, {"eps", p.roughness()}, {"method", o.method}, {"x0", o.x0},
            {"tol", o.tol},       {"max_iter", o.max_iter}, {"model", cb::to_string(model)}};
}

int cmd_solve(const Options& o) {
    auto model = pick_model(o, cb::Model::exact);
    auto fmt = pick_format(o, rp::Format::table);
    auto id = pick_method(o.method);
    auto policy = pick_policy(o);
    auto p = pick_params(o);
    auto t = cb::run(id, p, cb::FrictionVar(o.x0), policy, model);

    std::string text;
    if (fmt == rp::Format::json) {
        text = rp::envelope("solve", point_inputs(o, p, model), rp::trace_json(t)).dump(2) + "\n";
    } else if (fmt == rp::Format::csv) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%.17g,%d,%s,%.17g\n",
                      std::string(cb::to_string(id)).c_str(), p.reynolds(), p.roughness(), t.solution,
                      1.0 / (t.solution * t.solution), t.iterations_to_solution,
                      std::string(cb::to_string(t.termination)).c_str(), t.residual_at_final);
        text = std::string("method_id,re,eps,x,lambda,iterations,termination,residual\n") + buf;
    } else {
        text = rp::solve_text(t);
    }
    emit(o, text);
    return cb::converged(t.termination) ? Exit::ok : Exit::not_converged;
}

int cmd_trace(const Options& o) {
    auto model = pick_model(o, cb::Model::spreadsheet);
    auto fmt = pick_format(o, rp::Format::table);
    auto id = pick_method(o.method);
    auto policy = pick_policy(o);
    auto p = pick_params(o);
    auto t = cb::run(id, p, cb::FrictionVar(o.x0), policy, model);

    std::string text;
    if (fmt == rp::Format::json) {
        text = rp::envelope("trace", point_inputs(o, p, model), rp::trace_json(t)).dump(2) + "\n";
    } else if (fmt == rp::Format::csv) {
        std::ostringstream os;
        os << "step,x\n";
        std::size_t i = 1;
        for (double x : t.iterates) os << i++ << ',' << rp::fixed(x, 9) << '\n';
        if (t.last_step == cb::StepStatus::division_by_zero) os << i << ",#div0!\n";
        text = os.str();
    } else {
        text = rp::trace_text(t);
    }
    emit(o, text);
    return cb::converged(t.termination) ? Exit::ok : Exit::not_converged;
}

int cmd_sweep(const Options& o, const char* command, rp::Format terminal_default) {
    auto model = pick_model(o, cb::Model::spreadsheet);
    auto fmt = pick_format(o, terminal_default);
    if (std::string_view(command) == "table" && o.format.empty()) fmt = rp::Format::table;
    auto policy = pick_policy(o);
    std::vector<cb::MethodId> ids;
    for (const auto& m : o.methods) ids.push_back(pick_method(m));
    if (ids.empty()) ids = cb::all_method_ids();

    std::vector<cb::ColebrookParams> grid;
    try {
        grid = cb::generate_grid(o.grid);
    } catch (const cb::DomainError& e) {
        throw UsageError(e.what());
    }
    cb::SweepOptions so{o.x0, policy, model, env_threads()};
    auto t0 = std::chrono::steady_clock::now();
    auto report = cb::sweep(ids, grid, so);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::string text;
    if (fmt == rp::Format::json) {
        std::vector<std::string> names;
        for (auto id : ids) names.emplace_back(cb::to_string(id));
        nlohmann::ordered_json inputs = {{"methods", names},
                                 {"re_points", o.grid.re_points},
                                 {"rough_points", o.grid.rough_points},
                                 {"x0", o.x0},
                                 {"tol", o.tol},
                                 {"max_iter", o.max_iter},
                                 {"model", cb::to_string(model)}};
        text = rp::envelope(command, inputs, rp::sweep_json(report)).dump(2) + "\n";
    } else if (fmt == rp::Format::csv) {
        text = rp::sweep_csv(report);
    } else {
        text = rp::sweep_table(report);
        char buf[64];
        std::snprintf(buf, sizeof buf, "# %.3f s\n", secs);
        text += buf;
    }
    emit(o, text);
    return Exit::ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Iterative solvers for the Colebrook friction equation"};
    app.require_subcommand(1);
    Options o;

    auto point_flags = [&o](CLI::App* sc) {
        sc->add_option("--re", o.re, "Reynolds number");
        sc->add_option("--eps", o.eps, "relative roughness");
        sc->add_option("--method", o.method, "method id, e.g. newton-raphson")->required();
        sc->add_option("--paper-examples", o.example, "use example pipe 1..5 instead of --re/--eps");
    };
    auto common_flags = [&o](CLI::App* sc) {
        sc->add_option("--x0", o.x0, "start point x0 = 1/sqrt(lambda0)")->capture_default_str();
        sc->add_option("--tol", o.tol, "agreement tolerance")->capture_default_str();
        sc->add_option("--max-iter", o.max_iter, "iteration cap")->capture_default_str();
        sc->add_option("--format", o.format, "table, csv or json");
        sc->add_option("--out", o.out, "write output to file");
        sc->add_option("--model", o.model, "exact or spreadsheet arithmetic");
    };
    auto grid_flags = [&o](CLI::App* sc) {
        sc->add_option("--methods", o.methods, "comma-separated method ids")->delimiter(',');
        sc->add_option("--re-points", o.grid.re_points)->capture_default_str();
        sc->add_option("--rough-points", o.grid.rough_points)->capture_default_str();
        sc->add_option("--re-min", o.grid.re_min)->capture_default_str();
        sc->add_option("--re-max", o.grid.re_max)->capture_default_str();
        sc->add_option("--rough-min", o.grid.rough_min)->capture_default_str();
        sc->add_option("--rough-max", o.grid.rough_max)->capture_default_str();
    };

    auto* solve = app.add_subcommand("solve", "solve one pipe");
    point_flags(solve);
    common_flags(solve);
    auto* trace = app.add_subcommand("trace", "print every iterate");
    point_flags(trace);
    common_flags(trace);
    auto* sweep = app.add_subcommand("sweep", "worst-case iteration counts over the grid");
    grid_flags(sweep);
    common_flags(sweep);
    auto* table = app.add_subcommand("table", "sweep shown as a comparison table");
    grid_flags(table);
    common_flags(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Exit::usage;
    }

    try {
        if (*solve) return cmd_solve(o);
        if (*trace) return cmd_trace(o);
        if (*sweep) return cmd_sweep(o, "sweep", rp::Format::table);
        if (*table) return cmd_sweep(o, "table", rp::Format::table);
    } catch (const UsageError& e) {
        std::cerr << "colebrook: " << e.what() << '\n';
        return Exit::usage;
    } catch (const cb::DomainError& e) {
        std::cerr << "colebrook: " << e.what() << '\n';
        return Exit::domain;
    } catch (const IoError& e) {
        std::cerr << "colebrook: " << e.what() << '\n';
        return Exit::io;
    }
    return Exit::usage;
}
