#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "bwkit/commands.hpp"
#include "json.hpp"

using namespace bwkit;

namespace {
struct Run {
    int code;
    std::string out;
};

Run bwkit_run(const std::string& args) {
    std::string cmd = std::string(BWKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
    int st = pclose(f);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

Run bwkit_err(const std::string& args) {
    std::string cmd = std::string(BWKIT_CLI_PATH) + " " + args + " 2>&1 >/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
    int st = pclose(f);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::filesystem::path scratch(const std::string& name, const std::string& text) {
    auto dir = std::filesystem::temp_directory_path() / "bwkit_cli_test";
    std::filesystem::create_directories(dir);
    auto p = dir / name;
    std::ofstream(p) << text;
    return p;
}

const nlohmann::json* find_check(const nlohmann::json& j, const std::string& name) {
    for (const auto& c : j["checks"])
        if (c["name"] == name) return &c;
    return nullptr;
}
}  // namespace

TEST_CASE("spectrum --A=-7 --B=-8 reports the 4/3 ratio") {
    auto r = bwkit_run("spectrum --A=-7 --B=-8 --json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "bwkit-report/1");
    auto* c = find_check(j, "spectrum");
    REQUIRE(c);
    CHECK((*c)["values"]["mass2_ratio"] == "4/3");
}

TEST_CASE("spin2 nullity --standard reports both nullities") {
    auto r = bwkit_run("spin2 nullity --standard --json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    auto* c = find_check(j, "spin2.nullity");
    REQUIRE(c);
    CHECK((*c)["values"]["component_nullity"] == 35);
    CHECK((*c)["values"]["image_nullity"] == 35);
}

TEST_CASE("complex values are written as re/im rational strings") {
    auto j = nlohmann::json::parse(bwkit_run("matrices --which=dirac --json").out);
    auto* c = find_check(j, "dirac.matrices");
    REQUIRE(c);
    const auto& z = (*c)["values"]["R"][0][1];
    CHECK(z["re"] == "0/1");
    CHECK(z["im"] == "-1/1");
}

TEST_CASE("exit codes") {
    CHECK(bwkit_run("polarization").code == 0);
    CHECK(bwkit_run("spectrum --A=oops --B=1").code == 2);
    CHECK(bwkit_run("polarization --p=1,2,3 --E=5").code == 2);  // off shell
    CHECK(bwkit_run("spectrum --A=1 --B=1 --nope=3").code == 2);
    CHECK(bwkit_run("--tolerance=0 matrices").code == 2);
    CHECK(bwkit_run("no-such-command").code == 2);
    auto fail = scratch("expect_fail.txt", "command=spectrum\nA=-7\nB=-8\nexpect.spectrum=pass\n");
    CHECK(bwkit_run("run " + fail.string()).code == 1);  // informational, not pass
}

TEST_CASE("input errors carry their position") {
    auto e = bwkit_err("spectrum --A=1/0 --B=1");
    CHECK(e.code == 2);
    CHECK(e.out.find("--A:") != std::string::npos);
    auto bad = scratch("bad.txt", "command=spectrum\n# comment\nA=-7\nB = 1/x\n");
    e = bwkit_err("run " + bad.string());
    CHECK(e.code == 2);
    CHECK(e.out.find("bad.txt:4:5:") != std::string::npos);
    auto badjson = scratch("bad.json", "{\n  \"command\": \"spectrum\",\n  \"params\": {\"A\": 1,}\n}\n");
    e = bwkit_err("run " + badjson.string());
    CHECK(e.code == 2);
    CHECK(e.out.find("bad.json:3:") != std::string::npos);
}

TEST_CASE("scenario files: key=value and JSON give the same report") {
    auto kv = scratch("s.txt", "name=wth\ncommand=bw1\nmode=wth\na=2\nb=1\nc=3\nd=-1\nexpect.wth.round_trip=pass\n");
    auto js = scratch("s.json",
                      R"({"name": "wth", "command": "bw1", "params": {"mode": "wth", "a": "2", "b": "1", "c": "3", "d": "-1"},
                          "expect": {"wth.round_trip": "pass"}})");
    auto a = bwkit_run("--json run " + kv.string());
    auto b = bwkit_run("--json run " + js.string());
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["scenario"] == "wth");
}

TEST_CASE("scenario parser") {
    auto s = parse_scenario("# c\ncommand = quanta\n  m = 3/2 \nexpect.x=fail\n", "f");
    CHECK(s.command == "quanta");
    CHECK(s.params.str("m", "") == "3/2");
    CHECK(s.params.rational("m") == Rational(3, 2));
    CHECK(s.expect.at("x") == "fail");
    CHECK_THROWS_AS(parse_scenario("command=quanta\nnot a pair\n", "f"), InputError);
    CHECK_THROWS_AS(parse_scenario("m=1\n", "f"), InputError);
    CHECK_THROWS_AS(parse_scenario("command=nope\n", "f"), InputError);
    CHECK_THROWS_AS(parse_scenario("command=quanta\nm=1\nm=2\n", "f"), InputError);
    CHECK_THROWS_AS(parse_scenario(R"({"command": "quanta", "params": {"m": 1.5}})", "f"), InputError);
    try {
        parse_scenario("command=quanta\nm=1\nm=2\n", "g.txt");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).rfind("g.txt:3:", 0) == 0);
    }
}

TEST_CASE("output is deterministic") {
    auto a = bwkit_run("bw1 signs --json"), b = bwkit_run("bw1 signs --json");
    CHECK(a.out == b.out);
    CHECK(a.out.find("elapsed") == std::string::npos);
}
