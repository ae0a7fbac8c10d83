#include "bwkit/report.hpp"

#include <algorithm>
#include <sstream>

namespace bwkit {

std::string status_str(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::informational: return "informational";
    }
    return "?";
}

Check verdict(std::string name, bool ok, Json values, std::string note) {
    return {std::move(name), ok ? Status::pass : Status::fail, std::move(values), std::move(note)};
}

Check info(std::string name, Json values, std::string note) {
    return {std::move(name), Status::informational, std::move(values), std::move(note)};
}

Status Report::overall() const {
    bool any_pass = false;
    for (const auto& c : checks) {
        if (c.status == Status::fail) return Status::fail;
        if (c.status == Status::pass) any_pass = true;
    }
    return any_pass || checks.empty() ? Status::pass : Status::informational;
}

Json payload(const Report& r) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = r.command;
    j["params"] = r.params;
    if (!r.scenario.empty()) j["scenario"] = r.scenario;
    j["status"] = status_str(r.overall());
    Json checks = Json::array();
    std::size_t fails = 0, infos = 0;
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"status", status_str(c.status)}, {"values", c.values}, {"note", c.note}});
        fails += c.status == Status::fail;
        infos += c.status == Status::informational;
    }
    j["checks"] = checks;
    j["summary"] = {{"checks", r.checks.size()}, {"fail", fails}, {"informational", infos},
                    {"pass", r.checks.size() - fails - infos}};
    return j;
}

std::string render_json(const Report& r) { return payload(r).dump(2) + "\n"; }

std::string render_text(const Report& r) {
    std::ostringstream os;
    std::size_t w = 0;
    for (const auto& c : r.checks) w = std::max(w, c.name.size());
    os << r.command << (r.scenario.empty() ? "" : " [" + r.scenario + "]") << "\n";
    for (const auto& c : r.checks) {
        std::string tag = c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "INFO";
        os << "  " << tag << "  " << c.name << std::string(w - c.name.size(), ' ');
        if (!c.note.empty()) os << "  " << c.note;
        os << "\n";
        // text mode shows short fields only; --json has everything
        std::string line;
        if (c.values.is_object())
            for (auto it = c.values.begin(); it != c.values.end(); ++it) {
                std::string v = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
                if (v.size() <= 60) line += (line.empty() ? "" : "  ") + it.key() + "=" + v;
            }
        if (!line.empty()) os << "        " << line << "\n";
    }
    os << "status: " << status_str(r.overall()) << "\n";
    return os.str();
}

Json jrat(const Rational& q) { return rat_str(q); }

Json jrat_f(const Rational& q) { return {{"exact", rat_str(q)}, {"float", q.get_d()}}; }

Json jscalar(const ExactScalar& z) { return {{"re", rat_str(z.re)}, {"im", rat_str(z.im)}}; }

Json jradical(const RadicalScalar& s) {
    return {{"re", rat_str(s.z.re)}, {"im", rat_str(s.z.im)}, {"radicand", rat_str(s.radicand)}};
}

Json jvector(const std::vector<ExactScalar>& v) {
    Json a = Json::array();
    for (const auto& z : v) a.push_back(jscalar(z));
    return a;
}

Json jmatrix(const ExactMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(jvector(m.row_vec(i)));
    return a;
}

Json jpoly(const ExactPoly& p) { return jvector(p.coeffs()); }

}  // namespace bwkit
