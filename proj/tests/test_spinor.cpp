#include "doctest.h"

#include "bwkit/indices.hpp"
#include "bwkit/spinor.hpp"

using namespace bwkit;

namespace {
ExactMatrix I4() { return ExactMatrix::identity(4); }
}

TEST_CASE("Euclidean Clifford algebra") {
    auto d = build_dirac_set();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            ExactMatrix ab = d.gamma[a] * d.gamma[b] + d.gamma[b] * d.gamma[a];
            CHECK(ab == ExactScalar(a == b ? 2 : 0) * I4());
        }
    // gamma5 = g1 g2 g3 g4, squares to one, anticommutes with every gamma
    ExactMatrix g5 = d.gamma[0] * d.gamma[1] * d.gamma[2] * d.gamma[3];
    CHECK(g5 == d.gamma5);
    CHECK(g5 * g5 == I4());
    for (int a = 0; a < 4; ++a) CHECK((g5 * d.gamma[a] + d.gamma[a] * g5).is_zero());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) CHECK(g5(i, j).is_zero());
}

TEST_CASE("sigma_{mu nu} = (i/2)[g_mu, g_nu]") {
    auto d = build_dirac_set();
    for (int k = 0; k < 6; ++k) {
        int a = kPairs[k][0], b = kPairs[k][1];
        ExactMatrix s = ExactScalar(0, Rational(1, 2)) * (d.gamma[a] * d.gamma[b] - d.gamma[b] * d.gamma[a]);
        CHECK(s == d.sigma[k]);
        CHECK(d.sig(b, a) == -s);
    }
    CHECK(d.sig(2, 2).is_zero());
}

TEST_CASE("reflection matrix properties at the default phase") {
    auto d = build_dirac_set();
    CHECK(d.R * d.Rinv == I4());
    CHECK(d.R.transpose() == -d.R);
    CHECK(d.R.adjoint() == d.R);
    CHECK(d.R == d.Rinv);
    CHECK(d.Rinv * d.gamma5 * d.R == d.gamma5.transpose());
    for (int a = 0; a < 4; ++a) CHECK(d.Rinv * d.gamma[a] * d.R == -d.gamma[a].transpose());
    for (const auto& p : r_properties(d)) CHECK_MESSAGE(p.holds, p.name);
}

TEST_CASE("other phases lose R = R^-1") {
    auto d = build_dirac_set(Rational(0));
    CHECK(d.R * d.Rinv == I4());
    CHECK(d.R != d.Rinv);
    CHECK(unit_phase(Rational(1)) == ExactScalar(-1));
    CHECK(unit_phase(Rational(1, 2)) == ExactScalar::i());
}

TEST_CASE("expansion basis: 10 symmetric and 6 antisymmetric") {
    auto d = build_dirac_set();
    auto b = classify_matrix_basis(d);
    REQUIRE(b.symmetric.size() == 10);
    REQUIRE(b.antisymmetric.size() == 6);
    for (const auto& m : b.symmetric) CHECK(m.transpose() == m);
    for (const auto& m : b.antisymmetric) CHECK(m.transpose() == -m);
    CHECK(b.symmetric_rank == 10);
    CHECK(b.antisymmetric_rank == 6);
    // the 16 together span all 4x4 matrices
    std::vector<std::vector<ExactScalar>> rows;
    for (const auto& m : b.symmetric) rows.push_back(m.vec());
    for (const auto& m : b.antisymmetric) rows.push_back(m.vec());
    CHECK(rank_of(stack_rows(rows, 16)) == 16);
    for (const auto& e : b.duality) CHECK(d.gamma5 * d.sigma[e.pair] == e.coef * d.sigma[e.partner]);
}

TEST_CASE("generalized Dirac operator spectrum") {
    auto s = generalized_dirac_spectrum(5, 3);
    CHECK(s.mass2 == 16);
    CHECK_FALSE(s.tachyonic);
    // det vanishes at E = sqrt(m1^2 - m2^2)
    CHECK(s.det.eval(4).is_zero());
    CHECK_FALSE(s.det.eval(3).is_zero());
    CHECK(generalized_dirac_spectrum(3, 5).tachyonic);
}
