#pragma once

// Subcommand bodies behind the CLI, parameterized by string key/value pairs so
// that flags and scenario files share one parsing path.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bwkit/exact.hpp"
#include "bwkit/report.hpp"

namespace bwkit {

// malformed input; the message starts with its position ("file:3:7: ...", "--A: ...")
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Params {
public:
    void set(const std::string& key, std::string value, std::string origin);
    bool has(const std::string& key) const { return values_.count(key) != 0; }
    const std::map<std::string, std::string>& values() const { return values_; }

    std::string str(const std::string& key, const std::string& def) const;
    std::string choice(const std::string& key, const std::string& def, const std::vector<std::string>& allowed) const;
    Rational rational(const std::string& key, const std::optional<Rational>& def = std::nullopt) const;
    std::vector<Rational> rationals(const std::string& key, std::size_t n,
                                    const std::optional<std::vector<Rational>>& def = std::nullopt) const;
    bool flag(const std::string& key) const;
    void only(const std::vector<std::string>& known) const;  // unknown keys are input errors

    Json to_json() const;

private:
    [[noreturn]] void fail(const std::string& key, const std::string& msg) const;
    std::map<std::string, std::string> values_, origin_;
};

struct CommandSpec {
    std::string name, help;
    std::vector<std::pair<std::string, std::string>> keys;  // key, help
    std::vector<std::string> flags;                          // boolean keys
};
const std::vector<CommandSpec>& command_specs();

struct Options {
    double tolerance = 1e-12;  // float paths only
};

// InputError on bad parameters; DegenerateInput etc. propagate as input errors too
Report run_command(const std::string& command, const Params& params, const Options& opt = {});

struct Scenario {
    std::string name, command;
    Params params;
    std::map<std::string, std::string> expect;  // check name -> pass|fail|informational
};
// key=value lines ('#' comments, "expect.<check>=<status>") or a JSON object
// {"command", "name", "params", "expect"}
Scenario parse_scenario(const std::string& text, const std::string& source);
// runs the scenario and appends one check per expectation
Report run_scenario(const Scenario& sc, const Options& opt = {});

}  // namespace bwkit
