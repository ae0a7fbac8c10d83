#include "doctest.h"

#include <random>

#include "bwkit/exact.hpp"

using namespace bwkit;

TEST_CASE("rational strings round-trip in lowest terms") {
    CHECK(rat_str(Rational(6, 4)) == "3/2");
    CHECK(rat_str(Rational(-3)) == "-3/1");
    CHECK(rat_str(Rational(0)) == "0/1");
    CHECK(parse_rational("-14/21") == Rational(-2, 3));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("Q(i) arithmetic agrees with complex doubles") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-9, 9);
    auto q = [&] {
        int den = d(rng);
        Rational r(d(rng), den == 0 ? 1 : den);
        r.canonicalize();
        return r;
    };
    for (int n = 0; n < 200; ++n) {
        ExactScalar a{q(), q()}, b{q(), q()};
        auto ca = a.to_complex(), cb = b.to_complex();
        CHECK(std::abs((a * b).to_complex() - ca * cb) < 1e-12);
        CHECK(std::abs((a - b).to_complex() - (ca - cb)) < 1e-12);
        if (!b.is_zero()) {
            CHECK(std::abs((a / b).to_complex() - ca / cb) < 1e-9);
            CHECK((a / b) * b == a);
        }
    }
    CHECK(ExactScalar::i() * ExactScalar::i() == ExactScalar(-1));
    CHECK(ipow(ExactScalar::i(), 7) == -ExactScalar::i());
}

TEST_CASE("rank and nullspace of a product of thin factors") {
    // A (6x2) * B (2x5) has rank 2 and nullity 3 for generic integer entries
    ExactMatrix A{{1, 2}, {0, 1}, {3, -1}, {2, 2}, {-1, 4}, {5, 0}};
    ExactMatrix B{{1, 0, 2, -1, 3}, {0, 1, 1, 4, -2}};
    ExactMatrix M = A * B;
    auto sys = rank_nullspace(M);
    CHECK(sys.rank == 2);
    REQUIRE(sys.nullity() == 3);
    for (const auto& v : sys.nullspace) CHECK((M * v).is_zero());
    for (std::size_t i = 0; i < M.rows(); ++i) CHECK(sys.contains(M.row_vec(i)));
    CHECK_FALSE(sys.contains({1, 0, 0, 0, 0}));
}

TEST_CASE("determinant of a Hilbert matrix") {
    // det H_4 = 1/6048000
    ExactMatrix H(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) H(i, j) = Rational(1, static_cast<long>(i + j + 1));
    CHECK(det(H) == ExactScalar(Rational(1, 6048000)));
    CHECK(H * inverse(H) == ExactMatrix::identity(4));
    CHECK_THROWS_AS(inverse(ExactMatrix{{1, 2}, {2, 4}}), DegenerateInput);
}

TEST_CASE("polynomial determinant matches pointwise determinants") {
    ExactPoly x = ExactPoly::x();
    PolyMatrix m{{x + 1, ExactPoly(2), x}, {ExactPoly(0), x * x, ExactPoly(ExactScalar::i())}, {ExactPoly(3), x, ExactPoly(1) - x}};
    ExactPoly dp = det_poly(m);
    for (int t = -3; t <= 3; ++t) CHECK(dp.eval(t) == det(eval_poly_matrix(m, t)));
}

TEST_CASE("rational roots with multiplicities") {
    ExactPoly x = ExactPoly::x();
    ExactPoly p = (x - ExactPoly(Rational(1, 2))) * (x - ExactPoly(Rational(1, 2))) * (x + 3) * (x * x + 1);
    auto r = rational_root_masses(p);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0].root == -3);
    CHECK(r.roots[0].multiplicity == 1);
    CHECK(r.roots[1].root == Rational(1, 2));
    CHECK(r.roots[1].multiplicity == 2);
    CHECK_FALSE(r.fully_resolved());
    CHECK(r.unresolved.degree() == 2);
}

TEST_CASE("polynomial division") {
    ExactPoly x = ExactPoly::x();
    ExactPoly a = x * x * x - 2 * x + 5, b = x - 1;
    auto [q, rem] = poly_divmod(a, b);
    CHECK(q * b + rem == a);
    CHECK(rem.degree() <= 0);
    CHECK_THROWS_AS(poly_divmod(a, ExactPoly()), DegenerateInput);
}
