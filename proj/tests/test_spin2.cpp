#include "doctest.h"

#include <algorithm>
#include <map>

#include "bwkit/spin2.hpp"

using namespace bwkit;

namespace {
bool totally_symmetric(const std::vector<ExactScalar>& psi) {
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    std::array<int, 4> ix{a, b, c, d}, s = ix;
                    std::sort(s.begin(), s.end());
                    auto at = [&](const std::array<int, 4>& i) { return psi[((i[0] * 4 + i[1]) * 4 + i[2]) * 4 + i[3]]; };
                    if (at(ix) != at(s)) return false;
                }
    return true;
}

std::vector<ExactScalar> column(const ExactMatrix& m) { return m.col_vec(0); }

// number of totally symmetric rank-4 tensors in 4 dimensions: C(4+4-1, 4)
constexpr std::size_t kSymmetric = 35;
}  // namespace

TEST_CASE("standard map is injective and its symmetric solutions are exactly the symmetric spinors") {
    auto map = multispinor_map(Spin2Coeffs::standard(), false);
    CHECK(map.matrix.rows() == 256);
    CHECK(map.matrix.cols() == 100);
    CHECK(rank_of(map.matrix) == 100);

    auto sys = symmetry_constraint_system(Spin2Coeffs::standard(), false, SymmetryConstruction::transposition);
    CHECK(sys.nullity() == kSymmetric);
    for (const auto& v : sys.nullspace) CHECK(totally_symmetric(assemble_multispinor(Spin2Coeffs::standard(), column(v), false)));

    auto other = symmetry_constraint_system(Spin2Coeffs::standard(), false, SymmetryConstruction::contraction);
    CHECK(row_space_equal(sys, other));
}

TEST_CASE("standard constraints: all but the two trace families are implied") {
    auto rep = symmetry_analysis(Spin2Coeffs::standard(), false);
    CHECK(rep.image_nullity == kSymmetric);
    CHECK(rep.constructions_agree);
    std::map<std::string, bool> fam;
    for (const auto& c : rep.constraints) {
        auto it = fam.find(c.label);
        fam[c.label] = (it == fam.end() ? true : it->second) && c.holds;
    }
    for (const auto& [label, holds] : fam) {
        if (label == "G_half_trace" || label == "R_trace_single")
            CHECK_MESSAGE(!holds, label);
        else
            CHECK_MESSAGE(holds, label);
    }
}

TEST_CASE("generic coefficients enlarge the solution space but reach the same spinors") {
    auto gen = symmetry_analysis(Spin2Coeffs::generic(), true);
    auto std_ = symmetry_analysis(Spin2Coeffs::standard(), false);
    CHECK(gen.system.nullity() > std_.system.nullity());
    CHECK(gen.image_nullity == kSymmetric);
    auto r = recover_standard_case();
    CHECK(r.row_spaces_equal);
    CHECK(r.constraints_hold);
    CHECK(r.standard_nullity == kSymmetric);
}

TEST_CASE("dynamics: 2s+1 = 5 states on shell, none off shell") {
    auto on = dynamics_system(FourMomentum::on_shell(0, 0, 4, 5, 3), 3);
    CHECK(on.system.nullity() == 5);
    CHECK(on.all_hold());
    auto rest = dynamics_system(FourMomentum::rest(2), 2);
    CHECK(rest.system.nullity() == 5);
    auto off = dynamics_system(FourMomentum::off_shell(0, 0, 4, 6), 3);
    CHECK(off.system.nullity() == 0);
    auto blocks = block_structure(rest.system.matrix);
    std::size_t total = 0;
    for (auto b : blocks) total += b;
    CHECK(total == 100);
    CHECK(std::is_sorted(blocks.rbegin(), blocks.rend()));
}

TEST_CASE("second-order form of the G equation") {
    auto p = FourMomentum::on_shell(0, 0, 4, 5, 3);
    std::array<ExactScalar, 16> zero{};
    CHECK(g_second_order_check(p, 3, zero).residual_zero);
    // a transverse-traceless G along x-y on shell
    std::array<ExactScalar, 16> tt{};
    tt[0 * 4 + 0] = 1;
    tt[1 * 4 + 1] = -1;
    auto r = g_second_order_check(p, 3, tt);
    CHECK(r.residual_zero);
    CHECK(r.trace_identity);
}
