#include "doctest.h"

#include <set>

#include "bwkit/bw_spin1.hpp"
#include "bwkit/indices.hpp"
#include "bwkit/suite.hpp"

using namespace bwkit;

namespace {
// Psi = i (g_mu R) A_mu + sigma_{mu nu} R F_{mu nu}, summed over all ordered pairs
ExactMatrix assemble(const DiracSet& d, const ExactMatrix& x) {
    ExactMatrix psi(4, 4);
    for (int mu = 0; mu < 4; ++mu) psi += ExactScalar::i() * x(mu, 0) * (d.gamma[mu] * d.R);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            ExactScalar f = ExactScalar(pair_sign(a, b)) * x(4 + pair_index(a, b), 0);
            psi += f * (d.sig(a, b) * d.R);
        }
    return psi;
}

ExactMatrix dirac(const DiracSet& d, const FourMomentum& p, const Rational& m) {
    ExactMatrix D = ExactScalar(-m) * ExactMatrix::identity(4);
    for (int mu = 0; mu < 4; ++mu) D += ExactScalar::i() * p.comp(mu) * d.gamma[mu];
    return D;
}
}  // namespace

TEST_CASE("on shell: three polarizations, each a symmetric solution of both equations") {
    const auto d = build_dirac_set();
    for (const auto& p : sample_on_shell(20, 4)) {
        auto sys = bw_system_spin1(p, p.mass());
        REQUIRE(sys.system.nullity() == 3);
        CHECK(sys.all_hold());
        ExactMatrix D = dirac(d, p, p.mass());
        for (const auto& x : sys.system.nullspace) {
            ExactMatrix psi = assemble(d, x);
            CHECK(psi.transpose() == psi);
            CHECK((D * psi).is_zero());
            CHECK((psi * D.transpose()).is_zero());
            // transversality of the potential
            ExactScalar pa;
            for (int mu = 0; mu < 4; ++mu) pa += p.comp(mu) * x(mu, 0);
            CHECK(pa.is_zero());
        }
    }
}

TEST_CASE("off shell: only the trivial solution") {
    for (const auto& pt : sample_off_shell(20, 4)) {
        auto sys = bw_system_spin1(pt.k, pt.m);
        CHECK(sys.system.nullity() == 0);
        CHECK(pt.k.p2() + pt.m * pt.m != 0);
    }
}

TEST_CASE("Proca pair and subtraction constraints are implied") {
    for (const auto& p : sample_on_shell(5, 41)) {
        auto r = proca_reduction_check(p, p.mass(), {});
        CHECK(r.all_hold());
    }
    // and off shell too: the constraints are consequences of the rows, not of the mass shell
    auto r = proca_reduction_check(FourMomentum::off_shell(1, 2, 3, 5), 2, {});
    CHECK(r.all_hold());
}

TEST_CASE("rescaling the potential maps the DPK pair to the textbook pair") {
    ExactMatrix S = potential_rescaling(3);
    CHECK(S.rows() == 10);
    CHECK(S(0, 0) == ExactScalar(6));
}

TEST_CASE("WTH mapping round-trips through both AST branches") {
    for (const auto& k : sample_wth_params(20, 5)) {
        CHECK((k.b == k.d || k.b == -k.d));
        CHECK(wth_round_trip(k));
    }
    CHECK_THROWS_AS(wth_mapping({1, 1, 0, 2}), DegenerateInput);
}

TEST_CASE("AST dispersion: (7, 8) gives 4/3") {
    auto d = ast_dispersion(7, 8);
    std::set<Rational> masses;
    for (const auto* b : {&d.minus, &d.plus})
        for (const auto& r : b->roots)
            if (r.mass2) masses.insert(*r.mass2);
    CHECK(masses.count(Rational(4, 3)) == 1);
}

TEST_CASE("sign-operator enumeration: 12 distinct systems") {
    auto e = sign_operator_enumeration();
    CHECK(e.systems.size() == 16);
    CHECK(e.distinct == 12);
    CHECK(e.flip_compensated);
}

TEST_CASE("(a,b,c,d) system decouples iff c = d = 0") {
    auto p = FourMomentum::on_shell(0, 0, 4, 5, 3);
    CHECK(generalized_abcd_system(p, 9, {1, 2, 0, 0}).decoupled);
    CHECK_FALSE(generalized_abcd_system(p, 9, {1, 2, 1, 0}).decoupled);
    auto a = generalized_abcd_system(p, 9, {1, 2, 3, 2});
    CHECK(a.ast_certificate);
    CHECK(a.sys.all_hold());
}

TEST_CASE("chi-Maxwell residuals") {
    ChiWave w;  // circularly polarized, k along z, omega = |k|
    w.E = {ExactScalar(1), ExactScalar::i(), ExactScalar(0)};
    w.B = {-ExactScalar::i(), ExactScalar(1), ExactScalar(0)};
    CHECK(chi_maxwell_residual(w, {0, 0, 1}, 1).zero());
    CHECK_FALSE(chi_maxwell_residual(w, {0, 0, 1}, 2).zero());

    ChiWave g;
    g.E = {ExactScalar(Rational(1, 3), 1), ExactScalar(2), ExactScalar(0, -1)};
    g.B = {ExactScalar(1), ExactScalar(2, 1), ExactScalar(3)};
    g.chi_re = ExactScalar(1, 2);
    g.chi_im = ExactScalar(-1, 1);
    CHECK(chi_maxwell_fd_check(g, {1, 2, -1}, 0.7, 8, 1e-12).pass);
}
