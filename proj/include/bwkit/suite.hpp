#pragma once

// The nine acceptance criteria as deterministic check lists.

#include <cstdint>
#include <string>
#include <vector>

#include "bwkit/bw_spin1.hpp"
#include "bwkit/momentum.hpp"
#include "bwkit/report.hpp"

namespace bwkit {

struct CriterionInfo {
    int id;
    std::string title;
    double limit_s;  // 0: no runtime bound
};
const std::vector<CriterionInfo>& criteria();

// checks of criteria 1..8; 9 compares two serializations of 1..8
std::vector<Check> criterion_checks(int id);

struct CriterionRun {
    CriterionInfo info;
    std::vector<Check> checks;
    double elapsed_s = 0;
    bool checks_ok() const;
    bool within_limit() const { return info.limit_s <= 0 || elapsed_s < info.limit_s; }
    bool ok() const { return checks_ok() && within_limit(); }
};
CriterionRun run_criterion(int id);

Report verify_all();

// reproducible samples
std::vector<FourMomentum> sample_on_shell(std::size_t n, std::uint32_t seed);
struct OffShellPoint {
    FourMomentum k;
    Rational m;  // k^2 + m^2 != 0
};
std::vector<OffShellPoint> sample_off_shell(std::size_t n, std::uint32_t seed);
std::vector<AbcdParams> sample_wth_params(std::size_t n, std::uint32_t seed);    // b = +-d

// abcd roots == first-branch (P = -1) roots == second-branch (P = +1) roots
bool wth_round_trip(const AbcdParams& k);

}  // namespace bwkit
