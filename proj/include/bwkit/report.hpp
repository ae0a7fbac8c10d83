#pragma once

// Report model shared by the CLI and the acceptance binary.  The JSON payload is
// deterministic: sorted keys, exact values as strings, no timing inside.

#include <string>
#include <vector>

#include <json.hpp>

#include "bwkit/exact.hpp"
#include "bwkit/polarization.hpp"

namespace bwkit {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "bwkit-report/1";

enum class Status { pass, fail, informational };
std::string status_str(Status s);

struct Check {
    std::string name;
    Status status = Status::pass;
    Json values = Json::object();
    std::string note;
};

Check verdict(std::string name, bool ok, Json values = Json::object(), std::string note = {});
Check info(std::string name, Json values = Json::object(), std::string note = {});

struct Report {
    std::string command;
    std::string scenario;  // empty unless run from a scenario file
    Json params = Json::object();
    std::vector<Check> checks;

    Status overall() const;  // fail if any check fails, else pass if any passes
    int exit_code() const { return overall() == Status::fail ? 1 : 0; }
};

Json payload(const Report& r);
std::string render_json(const Report& r);  // payload + trailing newline
std::string render_text(const Report& r);

// value encodings
Json jrat(const Rational& q);                 // "p/q"
Json jrat_f(const Rational& q);               // {"exact": "p/q", "float": double}
Json jscalar(const ExactScalar& z);           // {"re": "p/q", "im": "p/q"}
Json jradical(const RadicalScalar& s);        // {"re", "im", "radicand"}: sqrt(radicand) (re + i im)
Json jvector(const std::vector<ExactScalar>& v);
Json jmatrix(const ExactMatrix& m);
Json jpoly(const ExactPoly& p);               // ascending coefficients

}  // namespace bwkit
