#include "doctest.h"

#include "bwkit/polarization.hpp"

using namespace bwkit;

namespace {
// momenta with rational |p|, p_t and E
std::vector<FourMomentum> momenta() {
    return {FourMomentum::on_shell(3, 4, 12, 85, 84), FourMomentum::on_shell(0, 0, 4, 5, 3),
            FourMomentum::on_shell(-6, 8, 24, 170, 168), FourMomentum::on_shell(12, 16, 21, 421, 420)};
}

// Euclidean bilinear pairing, exact in sqrt(r1 r2) when it is rational
ExactScalar pairing(const RadicalVector& a, const RadicalVector& b) {
    ExactScalar s;
    for (std::size_t i = 0; i < 4; ++i) s += a.c[i] * b.c[i];
    return s;
}

// spatial helicity oracle: (S_k)_{ij} = -i eps_{kij} contracted with p/|p|
ExactMatrix helicity_oracle(const FourMomentum& p) {
    Rational n = *exact_sqrt(p.spatial2());
    ExactMatrix h(4, 4);
    auto eps = [](int k, int i, int j) { return (i - j) * (j - k) * (k - i) / 2; };
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                h(i, j) += ExactScalar(0, -eps(k, i, j)) * ExactScalar(p.p(k) / n);
    return h;
}
}  // namespace

TEST_CASE("standard vectors: transverse, complete, parity (+,+,+,-)") {
    for (const auto& p : momenta()) {
        auto b = standard_basis(p);
        CHECK(completeness(b) == ExactMatrix::identity(4));
        // the three spatial-type vectors are transverse to -p (the boost goes toward -p)
        auto mp = p.reversed().vec();
        for (int s = 0; s < 3; ++s) {
            ExactScalar dot;
            for (std::size_t i = 0; i < 4; ++i) dot += mp[i] * b[s].v.c[i];
            CHECK(dot.is_zero());
        }
        auto par = parity_check(p, Basis::standard);
        CHECK(par.eigenvalues == std::array<int, 4>{1, 1, 1, -1});
    }
}

TEST_CASE("boost preserves the Euclidean pairing") {
    auto rest = rest_frame_basis();
    for (const auto& p : momenta()) {
        ExactMatrix L = boost_matrix(p);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                auto a = apply(L, rest[i].v), b = apply(L, rest[j].v);
                CHECK(pairing(a, b) * ExactScalar(a.radicand * b.radicand) ==
                      pairing(rest[i].v, rest[j].v) * ExactScalar(rest[i].v.radicand * rest[j].v.radicand));
            }
    }
}

TEST_CASE("helicity vectors are eigenvectors of the spatial helicity operator") {
    for (const auto& p : momenta()) {
        auto b = helicity_basis(p);
        ExactMatrix h = helicity_oracle(p);
        CHECK(h == helicity_operator(p));
        const int want[4] = {1, -1, 0, 0};
        for (int s = 0; s < 4; ++s) CHECK(apply(h, b[s].v) == apply(ExactScalar(want[s]) * ExactMatrix::identity(4), b[s].v));
        auto ev = helicity_eigenvalues(b);
        CHECK(ev[0] == 1);
        CHECK(ev[1] == -1);
        CHECK(ev[2] == 0);
        CHECK(ev[3] == 0);
        CHECK(completeness(b) == ExactMatrix::identity(4));
    }
}

TEST_CASE("helicity +-1 vectors are not parity eigenvectors, they swap") {
    for (const auto& p : momenta()) {
        auto r = parity_check(p, Basis::helicity);
        CHECK_FALSE(r.is_eigen[0]);
        CHECK_FALSE(r.is_eigen[1]);
        CHECK(r.cross_plus.has_value());
        CHECK(r.cross_minus.has_value());
    }
}

TEST_CASE("longitudinal mode: E along p, B = 0") {
    for (const auto& p : momenta()) {
        auto f = eb_from_potential(helicity_basis(p)[2]);
        for (const auto& b : f.B) CHECK(b.is_zero());
        // E x p = 0
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            CHECK((f.E[j] * ExactScalar(p.p(k)) - f.E[k] * ExactScalar(p.p(j))).is_zero());
        }
        CHECK(same_fields(f, eb_printed(p, "0")));
    }
}

TEST_CASE("transverse E and B closed forms carry the azimuthal phase exp(+-i phi)") {
    for (const auto& p : momenta()) {
        Rational pt = *exact_sqrt(p.p(0) * p.p(0) + p.p(1) * p.p(1));
        if (sgn(pt) == 0) continue;
        HelicityPhases ph{ExactScalar(p.p(0) / pt, p.p(1) / pt), ExactScalar(p.p(0) / pt, -p.p(1) / pt)};
        auto b = helicity_basis(p, ph);
        CHECK(same_fields(eb_from_potential(b[0]), eb_printed(p, "+1")));
        CHECK(same_fields(eb_from_potential(b[1]), eb_printed(p, "-1")));
        CHECK_FALSE(same_fields(eb_from_potential(helicity_basis(p)[0]), eb_printed(p, "+1")));
    }
}

TEST_CASE("notoph tensor from the wedge of the transverse vectors") {
    for (const auto& p : momenta()) {
        ExactMatrix t = notoph_tensor(p);
        CHECK(t == notoph_from_wedge(p));
        CHECK(t.transpose() == -t);
    }
}

TEST_CASE("float path agrees with the exact vectors") {
    auto p = FourMomentum::on_shell(3, 4, 12, 85, 84);
    FloatMomentum f{3, 4, 12, 84};
    CHECK(f.E() == doctest::Approx(85));
    auto ef = helicity_basis_float(f);
    auto ex = helicity_basis(p);
    for (int s = 0; s < 4; ++s) {
        auto c = ex[s].v.to_complex();
        for (int i = 0; i < 4; ++i) CHECK(std::abs(c[i] - ef[s][i]) < 1e-12);
    }
    // generic momentum with irrational E
    FloatMomentum g{0.3, -1.7, 2.2, 1.1};
    CHECK(completeness_defect_float(helicity_basis_float(g)) < 1e-12);
    CHECK(completeness_defect_float(standard_basis_float(g)) < 1e-12);
    CHECK(helicity_defect_float(g, helicity_basis_float(g)) < 1e-12);
}

TEST_CASE("off-shell input is rejected") {
    CHECK_THROWS_AS(FourMomentum::on_shell(1, 2, 2, 4, 3), OffShell);
    CHECK(standard_to_helicity(FourMomentum::on_shell(0, 0, 4, 5, 3)).unitary);
}
