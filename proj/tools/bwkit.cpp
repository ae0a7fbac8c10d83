// bwkit: command-line front end. Flags map one-to-one onto the Params keys of
// each command; `run` executes scenario files.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "bwkit/commands.hpp"
#include "bwkit/momentum.hpp"

namespace fs = std::filesystem;
using namespace bwkit;

namespace {

// one row per criterion: checks are named "c<N>.<check>"
std::string summary_table(const Report& r) {
    std::map<std::string, std::array<int, 3>> rows;
    for (const auto& c : r.checks) {
        auto& row = rows[c.name.substr(0, c.name.find('.'))];
        ++row[c.status == Status::pass ? 0 : c.status == Status::fail ? 1 : 2];
    }
    std::ostringstream os;
    os << "\ncriterion  pass  fail  info\n";
    for (const auto& [k, v] : rows) {
        std::string id = k.substr(1);
        os << std::string(9 - id.size(), ' ') << id << std::setw(6) << v[0] << std::setw(6) << v[1] << std::setw(6)
           << v[2] << (v[1] ? "  FAIL" : "") << "\n";
    }
    return os.str();
}

struct Emitter {
    bool json = false;
    int worst = 0;

    void emit(const Report& r, double seconds) {
        std::cout << (json ? render_json(r) : render_text(r));
        if (!json && r.command == "verify-all") std::cout << summary_table(r);
        worst = std::max(worst, r.exit_code());
        // timing never enters the payload: stderr in text mode, a sidecar file if requested
        if (!json) std::cerr << "elapsed: " << seconds << " s\n";
        if (const char* dir = std::getenv("BWKIT_REPORT_DIR")) {
            std::string stem = r.scenario.empty() ? r.command : r.scenario;
            fs::create_directories(dir);
            std::ofstream(fs::path(dir) / (stem + ".json")) << render_json(r);
            std::ofstream(fs::path(dir) / (stem + ".timing.json")) << Json{{"elapsed_s", seconds}}.dump() << "\n";
        }
    }
};

template <class F>
Report timed(F&& f, double& seconds) {
    auto t0 = std::chrono::steady_clock::now();
    Report r = f();
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bwkit: exact checks for Bargmann-Wigner-type higher-spin equations"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    double tolerance = 1e-12;
    app.add_flag("--json", json, "machine-readable report (bwkit-report/1)");
    app.add_option("--tolerance", tolerance, "relative tolerance for floating-point paths")->capture_default_str();

    // per command: raw flag values, filled by CLI11 then copied into Params
    struct Bound {
        std::map<std::string, std::string> opts;
        std::map<std::string, bool> flags;
        std::string mode;
    };
    std::map<std::string, Bound> bound;
    std::map<std::string, CLI::App*> subs;
    for (const auto& spec : command_specs()) {
        auto* sub = app.add_subcommand(spec.name, spec.help);
        Bound& b = bound[spec.name];
        bool has_mode = false;
        for (const auto& [key, help] : spec.keys) {
            sub->add_option("--" + key, b.opts[key], help);
            has_mode = has_mode || key == "mode";
        }
        for (const auto& f : spec.flags) sub->add_flag("--" + f, b.flags[f]);
        if (has_mode) sub->add_option("MODE", b.mode, "same as --mode");
        subs[spec.name] = sub;
    }
    std::vector<std::string> files;
    auto* run = app.add_subcommand("run", "run scenario files (key=value or JSON); reports ordered by scenario name");
    run->add_option("files", files, "scenario files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "bwkit: argument error: " << e.what() << "\n";
        return 2;
    }

    Emitter out{json};
    try {
        if (!std::isfinite(tolerance) || tolerance <= 0) throw InputError("--tolerance: must be a positive number");
        Options opt{tolerance};
        double secs = 0;
        if (run->parsed()) {
            std::vector<Scenario> scenarios;
            for (const auto& f : files) {
                scenarios.push_back(parse_scenario(read_file(f), f));
                if (scenarios.back().name.empty()) scenarios.back().name = fs::path(f).stem().string();
            }
            std::stable_sort(scenarios.begin(), scenarios.end(),
                             [](const Scenario& a, const Scenario& b) { return a.name < b.name; });
            for (const auto& sc : scenarios) {
                Report r = timed([&] { return run_scenario(sc, opt); }, secs);
                out.emit(r, secs);
            }
            return out.worst;
        }
        for (const auto& [name, sub] : subs) {
            if (!sub->parsed()) continue;
            Bound& b = bound[name];
            Params ps;
            for (const auto& [k, v] : b.opts)
                if (sub->count("--" + k)) ps.set(k, v, "--" + k);
            for (const auto& [k, v] : b.flags)
                if (v) ps.set(k, "true", "--" + k);
            if (!b.mode.empty()) {
                if (ps.has("mode") && ps.str("mode", "") != b.mode)
                    throw InputError("MODE: conflicts with --mode=" + ps.str("mode", ""));
                ps.set("mode", b.mode, "MODE");
            }
            Report r = timed([&] { return run_command(name, ps, opt); }, secs);
            out.emit(r, secs);
        }
        return out.worst;
    } catch (const InputError& e) {
        std::cerr << "bwkit: input error: " << e.what() << "\n";
        return 2;
    } catch (const OffShell& e) {
        std::cerr << "bwkit: input error: momentum: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bwkit: input error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateInput& e) {
        std::cerr << "bwkit: input error: " << e.what() << "\n";
        return 2;
    }
}
