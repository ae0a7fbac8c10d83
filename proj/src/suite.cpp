#include "bwkit/suite.hpp"

#include <chrono>
#include <map>
#include <random>

#include "bwkit/indices.hpp"
#include "bwkit/polarization.hpp"
#include "bwkit/quanta.hpp"
#include "bwkit/spin2.hpp"
#include "bwkit/spinor.hpp"
#include "bwkit/vector_rep.hpp"

namespace bwkit {

namespace {

std::size_t us(int v) { return static_cast<std::size_t>(v); }

struct Rng {
    std::mt19937 g;
    explicit Rng(std::uint32_t seed) : g(seed) {}
    // raw modulo keeps the stream identical across standard libraries
    long pick(long lo, long hi) { return lo + static_cast<long>(g() % static_cast<std::uint32_t>(hi - lo + 1)); }
    Rational rat(long lo, long hi, long maxden) {
        Rational q(pick(lo, hi), pick(1, maxden));
        q.canonicalize();
        return q;
    }
};

Json momentum_json(const FourMomentum& p) {
    return {{"p", {jrat(p.p(0)), jrat(p.p(1)), jrat(p.p(2))}}, {"E", jrat(p.E())}, {"m", jrat(p.mass())}};
}

// rational |p| and transverse part, for the helicity basis
const std::vector<FourMomentum>& rational_norm_momenta() {
    static const std::vector<FourMomentum> v{
        FourMomentum::on_shell(3, 4, 12, 85, 84), FourMomentum::on_shell(3, 4, 0, 13, 12),
        FourMomentum::on_shell(0, 0, 4, 5, 3), FourMomentum::on_shell(-6, 8, 24, 170, 168),
        FourMomentum::on_shell(12, 16, 21, 421, 420)};
    return v;
}

std::vector<Check> c1_representations() {
    std::vector<Check> out;
    const DiracSet d = build_dirac_set();
    bool cliff = true;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            cliff = cliff && anticommutator(d.gamma[us(a)], d.gamma[us(b)]) ==
                                 ExactScalar(a == b ? 2 : 0) * ExactMatrix::identity(4);
    out.push_back(verdict("c1.dirac_clifford", cliff, {}, "{g_mu, g_nu} = 2 delta"));

    Json props = Json::object();
    bool all = true;
    for (const auto& r : r_properties(d)) {
        props[r.name] = r.holds;
        all = all && r.holds;
    }
    out.push_back(verdict("c1.r_properties", all, props));

    SymmetricBasis sb = classify_matrix_basis(d);
    out.push_back(verdict("c1.expansion_basis", sb.symmetric_rank == 10 && sb.antisymmetric_rank == 6,
                          {{"symmetric_rank", sb.symmetric_rank}, {"antisymmetric_rank", sb.antisymmetric_rank}}));

    const VectorRepSet v = build_vector_rep();
    ExactMatrix s(4, 4);
    for (int a = 0; a < 4; ++a) s += v.gamma[us(a)][us(a)];
    out.push_back(verdict("c1.vector_gamma_trace", s == ExactScalar(2) * ExactMatrix::identity(4), {},
                          "sum_a gamma_aa = 2 delta"));

    const Family g5 = build_gamma5(v), pg = printed_gamma_tables(), pg5 = printed_gamma5_tables();
    bool closed = true, tab = true, tab5 = true;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            closed = closed && g5[us(a)][us(b)] == gamma5_closed_form(a, b);
            tab = tab && pg[us(a)][us(b)] == v.gamma[us(a)][us(b)];
            tab5 = tab5 && pg5[us(a)][us(b)] == g5[us(a)][us(b)];
        }
    out.push_back(verdict("c1.gamma5_closed_form", closed, {}, "commutator formula vs closed form, 16 pairs"));
    out.push_back(verdict("c1.printed_gamma_tables", tab, {}, "entry-for-entry"));
    out.push_back(verdict("c1.printed_gamma5_tables", tab5, {}, "entry-for-entry"));
    ExactMatrix P(4, 4);
    for (std::size_t i = 0; i < 4; ++i) P(i, i) = i == 3 ? -1 : 1;
    out.push_back(verdict("c1.parity_matrix", v.parity == P, {}, "gamma_44 = diag(1,1,1,-1)"));
    return out;
}

std::vector<Check> c2_spectrum() {
    std::vector<Check> out;
    auto s = dispersion_spectrum({-7, -8, 1});
    auto m1 = s.mass2(1);
    out.push_back(verdict("c2.dispersion_A-7_B-8", m1 && *m1 == Rational(4, 3),
                          {{"spin1_mass2_ratio", m1 ? jrat_f(*m1) : Json()}, {"det", jpoly(s.det)}}));

    auto ast = ast_dispersion(7, 8);
    bool found = false;
    Json roots = Json::array();
    for (const AstBranch* b : {&ast.minus, &ast.plus})
        for (const auto& r : b->roots) {
            roots.push_back({{"parity", b->parity}, {"sector", r.sector},
                             {"mass2", r.mass2 ? jrat(*r.mass2) : Json("inf")}, {"multiplicity", r.multiplicity}});
            found = found || (r.mass2 && *r.mass2 == Rational(4, 3));
        }
    out.push_back(verdict("c2.ast_dispersion_7_8", found, {{"roots", roots}}, "second mass state 4/3"));

    bool plus_ok = true, minus_ok = true;
    Json cases = Json::array();
    for (auto [A, B] : std::vector<std::pair<Rational, Rational>>{{3, 4}, {-3, -2}, {5, 6}, {Rational(1, 2), Rational(3, 2)}}) {
        auto m = dispersion_spectrum({A, B, 1}).mass2(1);
        plus_ok = plus_ok && m && *m == 1;
        cases.push_back({{"A", jrat(A)}, {"B", jrat(B)}, {"spin1_mass2_ratio", m ? jrat(*m) : Json()}});
    }
    out.push_back(verdict("c2.A_plus_1_eq_B", plus_ok, cases, "spin-1 branch: mass^2 = m^2"));
    cases = Json::array();
    for (auto [A, B] : std::vector<std::pair<Rational, Rational>>{{3, 2}, {-3, -4}, {5, 4}}) {
        auto m = dispersion_spectrum({A, B, 1}).mass2(0);
        minus_ok = minus_ok && m && *m == 1;
        cases.push_back({{"A", jrat(A)}, {"B", jrat(B)}, {"spin0_mass2_ratio", m ? jrat(*m) : Json()}});
    }
    out.push_back(verdict("c2.A_minus_1_eq_B", minus_ok, cases, "spin-0 branch: mass^2 = m^2"));
    return out;
}

std::vector<Check> c3_polarization() {
    std::vector<Check> out;
    bool std_par = true, hel = true, hel_par = true, eb = true;
    for (const auto& p : rational_norm_momenta()) {
        auto ps = parity_check(p, Basis::standard);
        std_par = std_par && ps.eigenvalues == std::array<int, 4>{1, 1, 1, -1};
        auto ev = helicity_eigenvalues(helicity_basis(p));
        hel = hel && ev[0] == 1 && ev[1] == -1 && ev[2] == 0 && ev[3] == 0;
        auto ph = parity_check(p, Basis::helicity);
        hel_par = hel_par && !ph.is_eigen[0] && !ph.is_eigen[1];

        // E(p, 0) = (i m / |p|) p, B(p, 0) = 0
        Rational ap = *exact_sqrt(p.spatial2());
        FieldStrengthPair expect;
        for (int i = 0; i < 3; ++i) expect.E[us(i)] = ExactScalar(Rational(0), p.mass() * p.p(i) / ap);
        eb = eb && same_fields(eb_from_potential(helicity_basis(p)[2]), expect);
    }
    Json pts = Json::array();
    for (const auto& p : rational_norm_momenta()) pts.push_back(momentum_json(p));
    out.push_back(verdict("c3.standard_parity_eigenvalues", std_par, {{"momenta", pts}}, "(+,+,+,-)"));
    out.push_back(verdict("c3.helicity_eigenvalues", hel, {}, "(+1,-1,0,0)"));
    out.push_back(verdict("c3.helicity_pm1_not_parity_eigen", hel_par, {}, "P e(-p) != +-e(p) for helicity +-1"));
    out.push_back(verdict("c3.eb_longitudinal", eb, {}, "E = (i m/p) p, B = 0"));
    return out;
}

std::vector<Check> c4_spin1() {
    std::vector<Check> out;
    auto on = sample_on_shell(20, 4);
    bool on_ok = true, off_ok = true, derived = true;
    Json nul_on = Json::array(), nul_off = Json::array();
    for (const auto& p : on) {
        auto s = bw_system_spin1(p, p.mass());
        on_ok = on_ok && s.system.nullity() == 3;
        derived = derived && s.all_hold();
        nul_on.push_back(s.system.nullity());
        auto q = FourMomentum::off_shell(p.p(0), p.p(1), p.p(2), p.E() + 1);
        auto t = bw_system_spin1(q, p.mass());
        off_ok = off_ok && t.system.nullity() == 0;
        nul_off.push_back(t.system.nullity());
    }
    out.push_back(verdict("c4.on_shell_nullity", on_ok, {{"nullity", nul_on}}, "3 at 20 exact momenta"));
    out.push_back(verdict("c4.off_shell_nullity", off_ok, {{"nullity", nul_off}}, "0 at 20 exact momenta"));
    out.push_back(verdict("c4.dpk_relations", derived, {}, "dF = (m/2)A and 2mF = dA - dA in the row space"));

    bool proca = true;
    Json rel = Json::object();
    for (const auto& p : rational_norm_momenta()) {
        auto s = proca_reduction_check(p, p.mass(), {});
        proca = proca && s.all_hold();
        for (const auto& r : s.derived) rel[r.label] = rel.value(r.label, true) && r.holds;
    }
    out.push_back(verdict("c4.proca_and_subtraction", proca, rel));
    return out;
}

std::vector<Check> c5_generalized_spin1() {
    std::vector<Check> out;
    bool ok = true;
    Json pts = Json::array();
    for (const auto& k : sample_wth_params(20, 5)) {
        bool r = wth_round_trip(k);
        ok = ok && r;
        pts.push_back({{"a", jrat(k.a)}, {"b", jrat(k.b)}, {"c", jrat(k.c)}, {"d", jrat(k.d)}, {"ok", r}});
    }
    out.push_back(verdict("c5.wth_round_trip", ok, {{"samples", pts}}));
    auto e = sign_operator_enumeration();
    out.push_back(verdict("c5.sign_enumeration", e.systems.size() == 16 && e.distinct == 12,
                          {{"combinations", e.systems.size()}, {"distinct", e.distinct}}));
    out.push_back(verdict("c5.flip_compensation", e.flip_compensated, {}, "eps -> -eps undone by F -> -F"));
    return out;
}

std::vector<Check> c6_spin2_standard() {
    std::vector<Check> out;
    auto rep = symmetry_analysis(Spin2Coeffs::standard(), false);
    // one verdict per family, in display order
    std::vector<std::string> order;
    std::map<std::string, std::pair<std::size_t, std::size_t>> fam;
    for (const auto& r : rep.constraints) {
        if (!fam.count(r.label)) order.push_back(r.label);
        auto& f = fam[r.label];
        f.first += r.holds;
        ++f.second;
    }
    for (const auto& l : order) {
        auto [in, n] = fam[l];
        out.push_back(verdict("c6.constraint." + l, in == n, {{"in_row_space", in}, {"rows", n}}));
    }
    out.push_back(verdict("c6.constructions_agree", rep.constructions_agree, {},
                          "transposition and antisymmetric-contraction row spaces equal"));
    out.push_back(info("c6.nullity_vs_claim",
                       {{"component_nullity", rep.system.nullity()}, {"image_nullity", rep.image_nullity},
                        {"claimed", 0}, {"rank", rep.system.rank}},
                       "nonzero: the totally symmetric rank-4 spinors (C(7,4) = 35) survive"));
    return out;
}

std::vector<Check> c7_spin2_generalized() {
    std::vector<Check> out;
    auto g = symmetry_analysis(Spin2Coeffs::generic(), true);
    auto s = symmetry_constraint_system(Spin2Coeffs::standard(), false, SymmetryConstruction::transposition);
    out.push_back(verdict("c7.nullity_exceeds_standard", g.system.nullity() > s.nullity(),
                          {{"generic", g.system.nullity()}, {"standard", s.nullity()}, {"image_nullity", g.image_nullity}}));
    bool ess = true;
    for (const auto& r : g.constraints) ess = ess && r.holds;
    out.push_back(verdict("c7.essential_constraints", ess, {}, "alpha1 beta1 G trace and antisymmetric part"));
    out.push_back(verdict("c7.constructions_agree", g.constructions_agree));

    auto rc = recover_standard_case();
    out.push_back(verdict("c7.recover_row_space", rc.row_spaces_equal,
                          {{"standard_nullity", rc.standard_nullity}, {"specialized_nullity", rc.specialized_nullity}},
                          "specialized system equals the embedded standard system"));
    out.push_back(verdict("c7.recover_constraints", rc.constraints_hold));
    out.push_back(info("c7.beta9_perturbation",
                       {{"nullity", rc.perturbed_nullity}, {"row_space_changes", rc.perturbation_changes}},
                       "beta9 -> 1 with alpha3 = 0"));

    Spin2Coeffs scaled = Spin2Coeffs::generic();
    scaled.alpha[1] = 3;
    scaled.beta[4] = 5;
    auto a = symmetry_constraint_system(scaled, true, SymmetryConstruction::transposition);
    Spin2Coeffs both = scaled;
    for (auto& x : both.alpha) x *= 2;
    for (auto& x : both.beta) x *= Rational(-1, 3);
    auto b = symmetry_constraint_system(both, true, SymmetryConstruction::transposition);
    out.push_back(verdict("c7.bilinear_rescaling", row_space_equal(a, b), {}, "alpha -> 2 alpha, beta -> -beta/3"));
    return out;
}

std::vector<Check> c8_quanta() {
    std::vector<Check> out;
    const std::vector<Direction> dirs{{0, 0, 1},
                                      {Rational(3, 13), Rational(4, 13), Rational(12, 13)},
                                      {Rational(2, 7), Rational(-3, 7), Rational(6, 7)},
                                      {Rational(1, 3), Rational(2, 3), Rational(-2, 3)},
                                      {Rational(-4, 9), Rational(4, 9), Rational(7, 9)}};
    bool half = true, biv = true, tr = true;
    for (const auto& n : dirs) {
        auto h = spin_half_relation(n, 2);
        half = half && h.involution && h.self_consistent;
        auto b = bivector_relation(n);
        biv = biv && b.involution;
        tr = tr && b.matrix.trace() == ExactScalar(-1);
    }
    out.push_back(verdict("c8.spin_half_square", half, {}, "(sigma.n)^2 = 1 and i(s.n)(-i)(s.n) = 1"));
    out.push_back(verdict("c8.bivector_square", biv, {}, "[1 - 2(S.n)^2]^2 = 1"));
    out.push_back(verdict("c8.bivector_trace", tr, {}, "trace -1"));

    bool prop = true;
    std::size_t npts = 0;
    for (const auto& [k, m] : sample_off_shell(25, 8)) {
        ExactMatrix expect = ExactScalar(Rational(1) / (k.p2() + m * m)) * ExactMatrix::identity(4);
        prop = prop && propagator(k, m, m) == expect;
        ++npts;
    }
    out.push_back(verdict("c8.propagator_mu_eq_m", prop, {{"points", npts}}, "= delta/(k^2 + m^2)"));
    auto dec = propagator_kk_coefficient(3, 2);
    out.push_back(verdict("c8.propagator_decay", dec.combined_decay == 2 && dec.single_decay == 1,
                          {{"combined", dec.combined_decay}, {"single", dec.single_decay}}));

    bool transverse = true, longitudinal = true;
    const WaveOperatorParams w{-7, -8, 1};
    for (const auto& p : rational_norm_momenta()) {
        auto b = standard_basis(p.reversed());
        for (std::size_t s = 0; s < 3; ++s) transverse = transverse && dynamical_invariants(p, b[s].v, w).scalar_portion_zero;
        longitudinal = longitudinal && !dynamical_invariants(p, b[3].v, w).scalar_portion_zero;
    }
    out.push_back(verdict("c8.transverse_scalar_portion", transverse, {}, "p.e = 0: scalar-portion terms of T and J vanish"));
    out.push_back(verdict("c8.longitudinal_scalar_portion", longitudinal, {}, "e ~ p: nonzero"));

    auto vr = vector_rep_relations(FourMomentum::on_shell(0, 0, 4, 5, 3));
    Json cmp = Json::array();
    for (const auto& c : vr.comparisons) {
        Json rows = Json::array();
        for (const auto& r : c.rows)
            rows.push_back({{"entries_equal", r.entries_equal}, {"scale", r.scale ? jradical(*r.scale) : Json()}});
        cmp.push_back({{"printed", c.printed}, {"contraction", c.contraction}, {"identical", c.identical},
                       {"rows", rows}});
    }
    out.push_back(info("c8.operator_matrices_diff", {{"k", "(0,0,4), E=5, m=3"}, {"comparisons", cmp}},
                       "printed vs defining contractions, per-row scale factors"));
    return out;
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
    static const std::vector<CriterionInfo> c{
        {1, "representation identities", 1},  {2, "spectrum reproduction", 1},
        {3, "polarization suite", 1},         {4, "spin-1 Bargmann-Wigner", 5},
        {5, "generalized spin-1", 5},         {6, "spin-2 standard case", 60},
        {7, "spin-2 generalized case", 60},   {8, "quanta", 1},
        {9, "determinism", 0}};
    return c;
}

std::vector<Check> criterion_checks(int id) {
    switch (id) {
        case 1: return c1_representations();
        case 2: return c2_spectrum();
        case 3: return c3_polarization();
        case 4: return c4_spin1();
        case 5: return c5_generalized_spin1();
        case 6: return c6_spin2_standard();
        case 7: return c7_spin2_generalized();
        case 8: return c8_quanta();
        case 9: {
            auto once = [] {
                Report r{"criteria-1-8", "", Json::object(), {}};
                for (int i = 1; i <= 8; ++i)
                    for (auto& c : criterion_checks(i)) r.checks.push_back(std::move(c));
                return render_json(r);
            };
            std::string a = once(), b = once();
            return {verdict("c9.payload_identical", a == b, {{"bytes", a.size()}}, "two in-process serializations")};
        }
        default: throw std::invalid_argument("no criterion " + std::to_string(id));
    }
}

bool CriterionRun::checks_ok() const {
    for (const auto& c : checks)
        if (c.status == Status::fail) return false;
    return true;
}

CriterionRun run_criterion(int id) {
    CriterionRun r;
    r.info = criteria().at(us(id - 1));
    auto t0 = std::chrono::steady_clock::now();
    r.checks = criterion_checks(id);
    r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

Report verify_all() {
    Report r{"verify-all", "", Json::object(), {}};
    for (int i = 1; i <= 9; ++i)
        for (auto& c : criterion_checks(i)) r.checks.push_back(std::move(c));
    return r;
}

std::vector<FourMomentum> sample_on_shell(std::size_t n, std::uint32_t seed) {
    Rng rng(seed);
    std::vector<FourMomentum> out;
    while (out.size() < n) {
        Rational p1 = rng.rat(-6, 6, 3), p2 = rng.rat(-6, 6, 3), p3 = rng.rat(-6, 6, 3);
        Rational s = p1 * p1 + p2 * p2 + p3 * p3;
        if (sgn(s) == 0) continue;
        // E - m = t, E + m = s / t with t^2 < s
        Rational t(1, rng.pick(1, 5));
        if (t * t >= s) continue;
        Rational E = (t + s / t) / 2, m = (s / t - t) / 2;
        out.push_back(FourMomentum::on_shell(p1, p2, p3, E, m));
    }
    return out;
}

std::vector<OffShellPoint> sample_off_shell(std::size_t n, std::uint32_t seed) {
    Rng rng(seed);
    std::vector<OffShellPoint> out;
    while (out.size() < n) {
        Rational p1 = rng.rat(-7, 7, 4), p2 = rng.rat(-7, 7, 4), p3 = rng.rat(-7, 7, 4), E = rng.rat(0, 9, 3);
        Rational m = rng.pick(1, 5);
        auto k = FourMomentum::off_shell(p1, p2, p3, E);
        if (sgn(k.p2() + m * m) == 0) continue;
        out.push_back({k, m});
    }
    return out;
}

std::vector<AbcdParams> sample_wth_params(std::size_t n, std::uint32_t seed) {
    Rng rng(seed);
    std::vector<AbcdParams> out;
    while (out.size() < n) {
        AbcdParams k{rng.rat(-5, 5, 3), rng.rat(-5, 5, 3), rng.rat(-5, 5, 3), 0};
        k.d = rng.pick(0, 1) ? k.b : Rational(-k.b);
        out.push_back(k);
    }
    return out;
}

bool wth_round_trip(const AbcdParams& k) {
    auto w = wth_mapping(k);
    auto same = [](const AstBranch& a, const AstBranch& b) {
        if (a.roots.size() != b.roots.size()) return false;
        for (std::size_t i = 0; i < a.roots.size(); ++i) {
            const auto &x = a.roots[i], &y = b.roots[i];
            if (x.sector != y.sector || x.mass2 != y.mass2 || x.multiplicity != y.multiplicity) return false;
        }
        return true;
    };
    auto base = abcd_ast_roots(k);
    return same(base, ast_dispersion(w.first.A, w.first.Bm2).minus) &&
           same(base, ast_dispersion(w.second.A, w.second.Bm2).plus);
}

}  // namespace bwkit
