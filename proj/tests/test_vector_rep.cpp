#include "doctest.h"

#include "bwkit/vector_rep.hpp"

using namespace bwkit;

namespace {
// oracle: transverse modes obey (A+1) p^2 + B m^2 = 0, longitudinal (A-1) p^2 + B m^2 = 0,
// since gamma_{ab} p_a p_b = p^2 - 2 p p^T on vectors.  p^2 = -E^2 at rest.
Rational transverse_ratio(const Rational& A, const Rational& B) { return B / (A + 1); }
Rational longitudinal_ratio(const Rational& A, const Rational& B) { return B / (A - 1); }
}  // namespace

TEST_CASE("gamma_{ab} p_a p_b acts as p^2 - 2 p p^T") {
    auto v = build_vector_rep();
    auto p = FourMomentum::off_shell(2, -1, Rational(1, 3), 5);
    auto pv = p.vec();
    ExactMatrix s(4, 4), oracle = ExactScalar(p.p2()) * ExactMatrix::identity(4);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            s += pv[a] * pv[b] * v.gamma[a][b];
            oracle(a, b) -= 2 * pv[a] * pv[b];
        }
    CHECK(s == oracle);
}

TEST_CASE("trace identity and printed tables") {
    auto v = build_vector_rep();
    ExactMatrix s(4, 4);
    for (std::size_t a = 0; a < 4; ++a) s += v.gamma[a][a];
    CHECK(s == ExactScalar(2) * ExactMatrix::identity(4));
    auto pg = printed_gamma_tables();
    auto pg5 = printed_gamma5_tables();
    auto g5 = build_gamma5(v);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            CHECK(pg[a][b] == v.gamma[a][b]);
            CHECK(v.gamma[a][b] == v.gamma[b][a]);
            CHECK(g5[a][b] == gamma5_closed_form(a, b));
            CHECK(g5[a][b] == -g5[b][a]);
            CHECK(pg5[a][b] == g5[a][b]);
        }
    // parity is diag(+,+,+,-) up to sign convention: gamma_44 squares to one
    CHECK(v.parity * v.parity == ExactMatrix::identity(4));
}

TEST_CASE("dispersion: spin-1 and spin-0 branches") {
    auto s = dispersion_spectrum({-7, -8, 1});
    REQUIRE(s.mass2(1));
    CHECK(*s.mass2(1) == Rational(4, 3));
    CHECK(*s.mass2(1) == transverse_ratio(-7, -8));
    REQUIRE(s.mass2(0));
    CHECK(*s.mass2(0) == longitudinal_ratio(-7, -8));
    // A + 1 = B: spin-1 mass equals m
    for (int B : {-5, 2, 9}) CHECK(*dispersion_spectrum({B - 1, B, 1}).mass2(1) == 1);
    // A - 1 = B: spin-0 mass equals m
    for (int B : {-5, 2, 9}) CHECK(*dispersion_spectrum({B + 1, B, 1}).mass2(0) == 1);
}

TEST_CASE("wave operator is singular exactly at the predicted rest energy") {
    // A = -5, B = -16: transverse E^2 = 4 m^2, longitudinal E^2 = 8/3 m^2
    WaveOperatorParams w{-5, -16, 3};
    auto at = [&](const Rational& E) { return rank_of(wave_operator(FourMomentum::off_shell(0, 0, 0, E), w)); };
    CHECK(at(6) == 1);  // three transverse modes drop out
    CHECK(at(5) == 4);
    CHECK(at(7) == 4);
    CHECK(*dispersion_spectrum(w).mass2(1) == 4);
}

TEST_CASE("spin-split operators and parasites") {
    auto s = spin_split_operators(-8);
    CHECK(s.cross_checked);
    REQUIRE(s.spin1_parasite);
    CHECK(*s.spin1_parasite == Rational(-8) / Rational(-6));
    REQUIRE(s.spin0_parasite);
    CHECK(*s.spin0_parasite == Rational(-8) / Rational(-10));
    for (Rational t : {Rational(4, 3), Rational(-2), Rational(5)}) {
        Rational B = parasite_inverse_spin0(t);
        CHECK(B / (B - 2) == t);
    }
}

TEST_CASE("Lagrangian reproduces the wave operator") {
    std::vector<FourMomentum> samples{FourMomentum::off_shell(1, 2, 3, 4), FourMomentum::off_shell(-2, 0, 1, 7),
                                      FourMomentum::on_shell(3, 4, 12, 85, 84)};
    auto r = lagrangian_consistency({-7, -8, 1}, samples);
    CHECK(r.el_matches);
    CHECK(r.samples == 3);
    CHECK(r.expanded_identity);
    CHECK(r.total_derivative_identity);
}
