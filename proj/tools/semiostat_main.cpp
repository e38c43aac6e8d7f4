// Command-line surface for the semiostat engine: scenario runs, law checks,
// and the scalar update map.
//
// Exit codes: 0 success, 1 scenario/law failure, 2 usage or parse error.
// All errors go to stderr as `error[CODE]: message`.

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "semiostat/errors.hpp"
#include "semiostat/plot.hpp"
#include "semiostat/runner.hpp"
#include "semiostat/scalar_dynamics.hpp"
#include "semiostat/scenario.hpp"

namespace {

using namespace semiostat;

constexpr const char* kUsage =
    "usage: semiostat <command> [options]\n"
    "\n"
    "commands:\n"
    "  run <file.scn> [--out DIR]          parse and execute a scenario; report to stdout\n"
    "  check <file.scn>                    parse and run law checks only\n"
    "  scalar --alpha A --beta B [--x0 X] [--eps E] [--plot]\n"
    "                                      iterate the scalar update map\n"
    "  fixed-points --alpha A --beta B --range LO,HI\n"
    "                                      locate fixed points with stability\n"
    "\n"
    "The output directory defaults to $SEMIOSTAT_OUT, then to the current directory.\n";

struct UsageError : Error {
    explicit UsageError(const std::string& message) : Error(ErrorCode::Usage, message) {}
};

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::Usage:
        case ErrorCode::Parse:
        case ErrorCode::Resolve:
        case ErrorCode::Io:
            return 2;
        default:
            return 1;
    }
}

std::string default_out_dir() {
    if (const char* env = std::getenv("SEMIOSTAT_OUT"); env && *env) return env;
    return ".";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct Flags {
    std::vector<std::string> positional;
    std::vector<std::pair<std::string, std::string>> values;
    std::vector<std::string> switches;

    std::optional<std::string> value(const std::string& name) const {
        for (const auto& [k, v] : values)
            if (k == name) return v;
        return std::nullopt;
    }
    bool has_switch(const std::string& name) const {
        for (const auto& s : switches)
            if (s == name) return true;
        return false;
    }
};

Flags parse_flags(int argc, char** argv, int start,
                  const std::vector<std::string>& value_flags,
                  const std::vector<std::string>& switch_flags) {
    Flags out;
    for (int i = start; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg.rfind("--", 0) == 0) {
            const std::string name = arg.substr(2);
            if (std::find(switch_flags.begin(), switch_flags.end(), name) != switch_flags.end()) {
                out.switches.push_back(name);
                continue;
            }
            if (std::find(value_flags.begin(), value_flags.end(), name) == value_flags.end())
                throw UsageError("unknown option '--" + name + "'");
            if (i + 1 >= argc)
                throw UsageError("option '--" + name + "' needs a value");
            out.values.emplace_back(name, argv[++i]);
        } else {
            out.positional.push_back(arg);
        }
    }
    return out;
}

double require_number(const Flags& flags, const std::string& name) {
    auto v = flags.value(name);
    if (!v) throw UsageError("missing required option '--" + name + "'");
    char* end = nullptr;
    const double x = std::strtod(v->c_str(), &end);
    if (end != v->c_str() + v->size())
        throw UsageError("option '--" + name + "' expects a number, got '" + *v + "'");
    return x;
}

int cmd_run(int argc, char** argv) {
    const Flags flags = parse_flags(argc, argv, 2, {"out"}, {});
    if (flags.positional.size() != 1)
        throw UsageError("run expects exactly one scenario file");
    const std::string out_dir = flags.value("out").value_or(default_out_dir());

    const auto scenario = dsl::parse_scenario(read_file(flags.positional[0]));
    const auto report = dsl::run_scenario(scenario, out_dir);
    std::cout << report.text;

    const auto report_path =
        std::filesystem::path(out_dir) / (report.scenario_name + ".report.txt");
    std::ofstream out(report_path);
    if (out) out << report.text;

    return report.success ? 0 : 1;
}

int cmd_check(int argc, char** argv) {
    const Flags flags = parse_flags(argc, argv, 2, {}, {});
    if (flags.positional.size() != 1)
        throw UsageError("check expects exactly one scenario file");
    const auto scenario = dsl::parse_scenario(read_file(flags.positional[0]));
    const auto report = dsl::check_scenario(scenario);
    std::cout << report.text;
    return report.success ? 0 : 1;
}

int cmd_scalar(int argc, char** argv) {
    const Flags flags =
        parse_flags(argc, argv, 2, {"alpha", "beta", "x0", "eps", "tol", "max-iter", "out"},
                    {"plot"});
    scalar::ScalarParams params;
    params.alpha = require_number(flags, "alpha");
    params.beta = require_number(flags, "beta");
    if (flags.value("eps")) params.epsilon = require_number(flags, "eps");
    if (flags.value("tol")) params.tol = require_number(flags, "tol");
    if (flags.value("max-iter"))
        params.max_iter = static_cast<int>(require_number(flags, "max-iter"));
    const double x0 = flags.value("x0") ? require_number(flags, "x0") : 1.0;
    scalar::validate(params);

    std::cout << "phi(x) = beta*tanh(x + alpha*sin(x)), alpha=" << scalar::format_short(params.alpha)
              << ", beta=" << scalar::format_short(params.beta) << "\n";
    const auto contraction = scalar::contraction_report(params);
    std::cout << "contraction bound beta*(1+alpha) = " << scalar::format_short(contraction.bound)
              << (contraction.is_certified ? " < 1: certified contraction"
                                           : " >= 1: not certified") << "\n";
    std::cout << "empirical max |phi'| on [-10, 10]: "
              << scalar::format_short(contraction.empirical_max) << "\n";

    const auto record = scalar::iterate(params, x0);
    std::cout << "x0 = " << scalar::format_short(x0) << "\n";
    switch (record.status) {
        case scalar::TrajectoryRecord::Status::Converged:
            std::cout << "converged at t=" << record.converged_at
                      << ": x* = " << scalar::format_short(record.fixed_point) << "\n";
            break;
        case scalar::TrajectoryRecord::Status::CycleDetected:
            std::cout << "cycle detected, period " << record.cycle_period << "\n";
            break;
        case scalar::TrajectoryRecord::Status::MaxIterReached:
            std::cout << "no convergence within " << params.max_iter << " iterations\n";
            break;
    }

    if (flags.has_switch("plot")) {
        const std::string out_dir = flags.value("out").value_or(default_out_dir());
        std::filesystem::create_directories(out_dir);
        const auto data = scalar::map_plot_data(params, -3.0, 3.0);
        const auto csv = std::filesystem::path(out_dir) / "map.csv";
        const auto svg = std::filesystem::path(out_dir) / "map.svg";
        const auto traj = std::filesystem::path(out_dir) / "trajectory.csv";
        scalar::write_map_plot_csv(data, csv.string());
        scalar::write_map_plot_svg(data, svg.string());
        scalar::write_trajectory_csv(record, traj.string());
        std::cout << "artifacts: " << csv.string() << ", " << svg.string() << ", "
                  << traj.string() << "\n";
    }
    return 0;
}

int cmd_fixed_points(int argc, char** argv) {
    const Flags flags = parse_flags(argc, argv, 2, {"alpha", "beta", "range", "eps"}, {});
    scalar::ScalarParams params;
    params.alpha = require_number(flags, "alpha");
    params.beta = require_number(flags, "beta");
    auto range = flags.value("range");
    if (!range) throw UsageError("missing required option '--range'");
    const auto comma = range->find(',');
    if (comma == std::string::npos)
        throw UsageError("option '--range' expects LO,HI");
    char* end = nullptr;
    const std::string lo_text = range->substr(0, comma);
    const std::string hi_text = range->substr(comma + 1);
    const double lo = std::strtod(lo_text.c_str(), &end);
    if (end != lo_text.c_str() + lo_text.size())
        throw UsageError("bad range lower bound '" + lo_text + "'");
    const double hi = std::strtod(hi_text.c_str(), &end);
    if (end != hi_text.c_str() + hi_text.size())
        throw UsageError("bad range upper bound '" + hi_text + "'");
    scalar::validate(params);

    const auto points = scalar::find_fixed_points(params, lo, hi);
    std::cout << "fixed points of phi on [" << scalar::format_short(lo) << ", "
              << scalar::format_short(hi) << "] (alpha=" << scalar::format_short(params.alpha)
              << ", beta=" << scalar::format_short(params.beta) << "):\n";
    if (points.empty()) {
        std::cout << "(none)\n";
        return 0;
    }
    for (const auto& fp : points) {
        const char* stability = fp.stability == scalar::Stability::Attracting  ? "attracting"
                                : fp.stability == scalar::Stability::Repelling ? "repelling"
                                                                               : "neutral";
        std::cout << "x* = " << scalar::format_short(fp.x) << " (" << stability
                  << ", phi' = " << scalar::format_short(fp.derivative) << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        if (argc < 2) throw UsageError("missing command");
        const std::string command = argv[1];
        if (command == "run") return cmd_run(argc, argv);
        if (command == "check") return cmd_check(argc, argv);
        if (command == "scalar") return cmd_scalar(argc, argv);
        if (command == "fixed-points") return cmd_fixed_points(argc, argv);
        if (command == "--help" || command == "-h" || command == "help") {
            std::cout << kUsage;
            return 0;
        }
        throw UsageError("unknown command '" + command + "'");
    } catch (const UsageError& e) {
        std::cerr << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n\n"
                  << kUsage;
        return 2;
    } catch (const Error& e) {
        std::cerr << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error[E_INTERNAL]: " << e.what() << "\n";
        return 1;
    }
}
