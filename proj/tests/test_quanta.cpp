#include "doctest.h"

#include <random>

#include "bwkit/quanta.hpp"

using namespace bwkit;

namespace {
// rational unit vectors from Pythagorean quadruples
std::vector<Direction> directions() {
    return {{Rational(3, 13), Rational(4, 13), Rational(12, 13)},
            {Rational(2, 3), Rational(-1, 3), Rational(2, 3)},
            {Rational(0), Rational(0), Rational(-1)},
            {Rational(2, 7), Rational(3, 7), Rational(-6, 7)}};
}

ExactMatrix pauli_dot(const Direction& n) {
    ExactMatrix sx{{0, 1}, {1, 0}}, sy{{0, -ExactScalar::i()}, {ExactScalar::i(), 0}}, sz{{1, 0}, {0, -1}};
    return ExactScalar(n[0]) * sx + ExactScalar(n[1]) * sy + ExactScalar(n[2]) * sz;
}
}  // namespace

TEST_CASE("spin-half: (sigma.n)^2 = 1 and Lambda = -i m sigma.n") {
    for (const auto& n : directions()) {
        ExactMatrix sn = pauli_dot(n);
        CHECK(sn * sn == ExactMatrix::identity(2));
        auto r = spin_half_relation(n, 5);
        CHECK(r.matrix == ExactScalar(0, -5) * sn);
        CHECK(r.involution);
        CHECK(r.self_consistent);
    }
    CHECK_THROWS_AS(spin_half_relation({1, 1, 0}, 1), NormalizationError);
}

TEST_CASE("bivector: 1 - 2 (S.n)^2 is the reflection through the plane normal to n") {
    for (const auto& n : directions()) {
        auto r = bivector_relation(n);
        // oracle: (S.n)^2 = 1 - n n^T for spin-1 Cartesian generators, so the matrix is 2 n n^T - 1
        ExactMatrix want(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) want(i, j) = ExactScalar(2 * n[i] * n[j] - (i == j ? 1 : 0));
        CHECK(r.matrix == want);
        CHECK(r.matrix * r.matrix == ExactMatrix::identity(3));
        CHECK(r.matrix.trace() == ExactScalar(-1));
    }
    auto z = bivector_relation_spherical({0, 0, 1});
    CHECK(z[0][0].z == ExactScalar(-1));
    CHECK(z[1][1].z == ExactScalar(1));
    CHECK(z[2][2].z == ExactScalar(-1));
}

TEST_CASE("propagator collapses to delta/(k^2+m^2) at mu = m") {
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> d(-9, 9);
    int done = 0;
    while (done < 25) {
        auto k = FourMomentum::off_shell(d(rng), d(rng), d(rng), d(rng));
        Rational m(std::abs(d(rng)) + 1);
        if (k.p2() + m * m == 0) continue;
        CHECK(propagator(k, m, m) == ExactScalar(Rational(1) / (k.p2() + m * m)) * ExactMatrix::identity(4));
        ++done;
    }
}

TEST_CASE("propagator at mu != m: combined k k coefficient") {
    auto k = FourMomentum::off_shell(1, 2, 3, 7);
    Rational m = 3, mu = 2, s = k.p2();
    ExactMatrix P = propagator(k, m, mu);
    auto kv = k.vec();
    ExactScalar c((m * m - mu * mu) / (mu * mu * (s + mu * mu) * (s + m * m)));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(P(i, j) == (i == j ? ExactScalar(Rational(1) / (s + mu * mu)) : ExactScalar(0)) + c * kv[i] * kv[j]);
    auto dec = propagator_kk_coefficient(m, mu);
    CHECK(dec.combined_decay == 2);
    CHECK(dec.single_decay == 1);
    CHECK_THROWS_AS(propagator(FourMomentum::off_shell(0, 0, 0, 3), 5, 3), PoleError);
}

TEST_CASE("transverse plane waves carry no scalar portion") {
    auto p = FourMomentum::on_shell(0, 0, 4, 5, 3);
    WaveOperatorParams w{-7, -8, 3};
    for (const auto& amps : std::vector<std::array<ExactScalar, 4>>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {2, ExactScalar::i(), 3, 0}}) {
        auto iv = dynamical_invariants(p, mode_superposition(p, amps), w);
        CHECK(iv.scalar_portion_zero);
        CHECK(iv.T_scalar.is_zero());
    }
    auto lon = dynamical_invariants(p, mode_superposition(p, {0, 0, 0, 1}), w);
    CHECK_FALSE(lon.scalar_portion_zero);
}

TEST_CASE("weak Lorentz condition") {
    CHECK(weak_lorentz_admits({1, 2, 3, 3}));
    CHECK_FALSE(weak_lorentz_admits({1, 2, 3, 0}));
    auto p = FourMomentum::on_shell(0, 0, 4, 5, 3);
    CHECK_THROWS_AS(mode_superposition(p, {0, 0, 1, 0}, true), DegenerateInput);
}

TEST_CASE("printed operator matrices against the defining contractions") {
    auto k = FourMomentum::on_shell(0, 0, 4, 5, 3);
    auto r = vector_rep_relations(k);
    CHECK(r.comparisons.size() == 6);
    CHECK_THROWS_AS(vector_rep_relations(FourMomentum::off_shell(0, 0, 4, 5)), DegenerateInput);
}
