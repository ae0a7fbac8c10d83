#include "bwkit/commands.hpp"

#include <algorithm>
#include <sstream>

#include "bwkit/bw_spin1.hpp"
#include "bwkit/indices.hpp"
#include "bwkit/polarization.hpp"
#include "bwkit/quanta.hpp"
#include "bwkit/spin2.hpp"
#include "bwkit/spinor.hpp"
#include "bwkit/suite.hpp"
#include "bwkit/vector_rep.hpp"

namespace bwkit {

// ---------------------------------------------------------------- params

void Params::set(const std::string& key, std::string value, std::string origin) {
    values_[key] = std::move(value);
    origin_[key] = std::move(origin);
}

void Params::fail(const std::string& key, const std::string& msg) const {
    auto it = origin_.find(key);
    std::string where = it != origin_.end() ? it->second : key;
    throw InputError(where + ": " + msg);
}

std::string Params::str(const std::string& key, const std::string& def) const {
    auto it = values_.find(key);
    return it == values_.end() ? def : it->second;
}

std::string Params::choice(const std::string& key, const std::string& def, const std::vector<std::string>& allowed) const {
    std::string v = str(key, def);
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
        std::string all;
        for (const auto& a : allowed) all += (all.empty() ? "" : "|") + a;
        fail(key, "expected one of " + all + ", got '" + v + "'");
    }
    return v;
}

Rational Params::rational(const std::string& key, const std::optional<Rational>& def) const {
    auto it = values_.find(key);
    if (it == values_.end()) {
        if (!def) throw InputError(key + ": required parameter missing");
        return *def;
    }
    try {
        return parse_rational(it->second);
    } catch (const std::invalid_argument&) {
        fail(key, "not a rational: '" + it->second + "'");
    }
}

std::vector<Rational> Params::rationals(const std::string& key, std::size_t n,
                                        const std::optional<std::vector<Rational>>& def) const {
    auto it = values_.find(key);
    if (it == values_.end()) {
        if (!def) throw InputError(key + ": required parameter missing");
        return *def;
    }
    std::vector<Rational> out;
    std::stringstream ss(it->second);
    std::string item;
    std::size_t col = 0;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_rational(item));
        } catch (const std::invalid_argument&) {
            fail(key, "item " + std::to_string(out.size() + 1) + " (char " + std::to_string(col + 1) +
                          "): not a rational: '" + item + "'");
        }
        col += item.size() + 1;
    }
    if (out.size() != n) fail(key, "expected " + std::to_string(n) + " comma-separated values, got " +
                                       std::to_string(out.size()));
    return out;
}

bool Params::flag(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return false;
    if (it->second == "1" || it->second == "true" || it->second.empty()) return true;
    if (it->second == "0" || it->second == "false") return false;
    fail(key, "expected a boolean, got '" + it->second + "'");
}

void Params::only(const std::vector<std::string>& known) const {
    for (const auto& [k, v] : values_)
        if (std::find(known.begin(), known.end(), k) == known.end()) fail(k, "unknown parameter '" + k + "'");
}

Json Params::to_json() const {
    Json j = Json::object();
    for (const auto& [k, v] : values_) j[k] = v;
    return j;
}

// ---------------------------------------------------------------- specs

const std::vector<CommandSpec>& command_specs() {
    static const std::vector<CommandSpec> specs{
        {"matrices", "Dirac and (1/2,1/2) representation matrices and their identities",
         {{"phase", "phase of R in units of pi (default 1/2)"}, {"which", "dirac|vector|all (default all)"}},
         {}},
        {"spectrum", "mass spectrum of the (A,B) vector operator or of the AST equations",
         {{"A", "coefficient A"}, {"B", "coefficient B (times m^2)"}, {"m", "mass unit (default 1)"},
          {"mode", "vector|ast|split (default vector)"}},
         {}},
        {"polarization", "standard and helicity polarization vectors at an exact momentum",
         {{"p", "p1,p2,p3 (default 3,4,12)"}, {"E", "energy (default: from p and m)"}, {"m", "mass (default 84)"}},
         {}},
        {"bw1", "spin-1 Bargmann-Wigner systems",
         {{"mode", "bw|proca|abcd|wth|signs|chi (default bw)"}, {"p", "p1,p2,p3 (default 3,4,12)"},
          {"E", "energy (default 85)"}, {"m", "mass (default 84)"}, {"sign", "mass sign in D = i g.p + s m (default -1)"},
          {"a", "abcd: a"}, {"b", "abcd: b"}, {"c", "abcd: c"}, {"d", "abcd: d"}, {"x", "abcd: d'Alembertian value"},
          {"reading", "abcd: separate|dropped"}, {"modes", "chi: three integer wave numbers (default 1,2,-1)"},
          {"omega", "chi: frequency (default 7/10)"}},
         {}},
        {"spin2", "spin-2 multispinor symmetry and dynamics",
         {{"mode", "nullity|recover|dynamics|second-order (default nullity)"},
          {"coeffs", "standard|generic (default standard)"}, {"p", "p1,p2,p3 (default 0,0,0)"},
          {"E", "energy (default m)"}, {"m", "mass (default 2)"}},
         {"standard", "generic"}},
        {"quanta", "field-operator relations, propagator and plane-wave invariants",
         {{"n", "unit direction n1,n2,n3 (default 3/13,4/13,12/13)"}, {"m", "mass (default 3)"},
          {"mu", "propagator mu (default m)"}, {"k", "propagator k1,k2,k3 (default 1,2,3)"},
          {"kE", "propagator energy (default 7)"}, {"p", "on-shell p1,p2,p3 (default 0,0,4)"},
          {"E", "on-shell energy (default 5)"}, {"A", "wave operator A (default -7)"},
          {"B", "wave operator B (default -8)"}, {"amplitudes", "mode amplitudes (+1,-1,0,0t) (default 1,0,0,0)"}},
         {"weak-lorentz"}},
        {"verify-all", "every acceptance criterion", {}, {}},
    };
    return specs;
}

namespace {

std::size_t us(int v) { return static_cast<std::size_t>(v); }

const CommandSpec& spec_of(const std::string& name) {
    for (const auto& s : command_specs())
        if (s.name == name) return s;
    throw InputError("unknown command '" + name + "'");
}

void check_known(const Params& p, const CommandSpec& s) {
    std::vector<std::string> keys;
    for (const auto& [k, h] : s.keys) keys.push_back(k);
    for (const auto& f : s.flags) keys.push_back(f);
    p.only(keys);
}

Json labels_json(const std::vector<std::string>& v) { return Json(v); }

FourMomentum momentum(const Params& ps, const std::vector<Rational>& dp, const Rational& dE, const Rational& dm,
                      bool allow_off = false) {
    auto p = ps.rationals("p", 3, dp);
    Rational m = ps.rational("m", dm);
    Rational E;
    if (ps.has("E")) {
        E = ps.rational("E");
    } else if (!ps.has("p") && !ps.has("m")) {
        E = dE;
    } else {
        auto e = exact_sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + m * m);
        if (!e) throw InputError("E: not given and sqrt(|p|^2 + m^2) is irrational");
        E = *e;
    }
    if (E * E - p[0] * p[0] - p[1] * p[1] - p[2] * p[2] == m * m) return FourMomentum::on_shell(p[0], p[1], p[2], E, m);
    if (!allow_off) throw InputError("E: momentum is off shell (E^2 - |p|^2 != m^2)");
    return FourMomentum::off_shell(p[0], p[1], p[2], E);
}

Json momentum_json(const FourMomentum& p) {
    Json j = {{"p", {jrat(p.p(0)), jrat(p.p(1)), jrat(p.p(2))}}, {"E", jrat(p.E())}, {"on_shell", p.is_on_shell()}};
    if (p.is_on_shell()) j["m"] = jrat(p.mass());
    return j;
}

Json radical_vector_json(const RadicalVector& v) {
    return {{"radicand", jrat(v.radicand)}, {"c", jvector({v.c.begin(), v.c.end()})}};
}

Json relations_json(const std::vector<Relation>& rel) {
    Json j = Json::object();
    for (const auto& r : rel) {
        // "dpk_F_12" and "dpk_F_13" share the family "dpk_F"
        std::string fam = r.label;
        auto us_pos = fam.rfind('_');
        if (us_pos != std::string::npos && us_pos + 1 < fam.size() &&
            fam.find_first_not_of("0123456789", us_pos + 1) == std::string::npos)
            fam.resize(us_pos);
        Json& e = j[fam];
        if (e.is_null()) e = {{"rows", 0}, {"in_row_space", 0}};
        e["rows"] = e["rows"].get<int>() + 1;
        e["in_row_space"] = e["in_row_space"].get<int>() + (r.holds ? 1 : 0);
    }
    return j;
}

// ---------------------------------------------------------------- matrices

void cmd_matrices(const Params& ps, Report& r) {
    const Rational phase = ps.rational("phase", Rational(1, 2));
    const std::string which = ps.choice("which", "all", {"dirac", "vector", "all"});
    if (which != "vector") {
        const DiracSet d = build_dirac_set(phase);
        Json g = Json::array();
        for (const auto& m : d.gamma) g.push_back(jmatrix(m));
        r.checks.push_back(info("dirac.matrices", {{"gamma", g}, {"gamma5", jmatrix(d.gamma5)}, {"R", jmatrix(d.R)}}));
        bool cliff = true;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                cliff = cliff && anticommutator(d.gamma[us(a)], d.gamma[us(b)]) ==
                                     ExactScalar(a == b ? 2 : 0) * ExactMatrix::identity(4);
        r.checks.push_back(verdict("dirac.clifford", cliff));
        for (const auto& p : r_properties(d)) {
            // only the default phase is claimed to have all of them
            if (phase == Rational(1, 2))
                r.checks.push_back(verdict("dirac.R." + p.name, p.holds));
            else
                r.checks.push_back(info("dirac.R." + p.name, {{"holds", p.holds}}));
        }
        auto sb = classify_matrix_basis(d);
        Json dual = Json::array();
        for (const auto& e : sb.duality)
            dual.push_back({{"pair", pair_label(e.pair)}, {"partner", pair_label(e.partner)}, {"coef", jscalar(e.coef)}});
        r.checks.push_back(verdict("dirac.expansion_basis", sb.symmetric_rank == 10 && sb.antisymmetric_rank == 6,
                                   {{"labels", labels_json(sb.labels)}, {"symmetric_rank", sb.symmetric_rank},
                                    {"antisymmetric_rank", sb.antisymmetric_rank}, {"g5_sigma_duality", dual}}));
    }
    if (which != "dirac") {
        const VectorRepSet v = build_vector_rep();
        const Family g5 = build_gamma5(v), pg = printed_gamma_tables(), pg5 = printed_gamma5_tables();
        ExactMatrix s(4, 4);
        for (int a = 0; a < 4; ++a) s += v.gamma[us(a)][us(a)];
        r.checks.push_back(verdict("vector.gamma_trace", s == ExactScalar(2) * ExactMatrix::identity(4)));
        bool closed = true, tab = true, tab5 = true;
        Json tables = Json::object();
        for (int a = 0; a < 4; ++a)
            for (int b = a; b < 4; ++b) {
                tables[std::to_string(a + 1) + std::to_string(b + 1)] = jmatrix(v.gamma[us(a)][us(b)]);
                closed = closed && g5[us(a)][us(b)] == gamma5_closed_form(a, b);
                tab = tab && pg[us(a)][us(b)] == v.gamma[us(a)][us(b)] && pg[us(b)][us(a)] == v.gamma[us(b)][us(a)];
                tab5 = tab5 && pg5[us(a)][us(b)] == g5[us(a)][us(b)] && pg5[us(b)][us(a)] == g5[us(b)][us(a)];
            }
        r.checks.push_back(info("vector.gamma_tables", tables));
        r.checks.push_back(verdict("vector.gamma5_closed_form", closed));
        r.checks.push_back(verdict("vector.printed_gamma", tab));
        r.checks.push_back(verdict("vector.printed_gamma5", tab5));
        r.checks.push_back(info("vector.parity", {{"gamma44", jmatrix(v.parity)}}));
    }
}

// ---------------------------------------------------------------- spectrum

Json branch_json(const AstBranch& b) {
    Json roots = Json::array();
    for (const auto& x : b.roots)
        roots.push_back({{"sector", x.sector}, {"mass2", x.mass2 ? jrat(*x.mass2) : Json("inf")},
                         {"multiplicity", x.multiplicity}, {"tachyonic", x.tachyonic}});
    return {{"parity", b.parity}, {"det", jpoly(b.det)}, {"roots", roots}, {"degenerate", b.degenerate}};
}

void cmd_spectrum(const Params& ps, Report& r) {
    const std::string mode = ps.choice("mode", "vector", {"vector", "ast", "split"});
    if (mode == "split") {
        const Rational B = ps.rational("B");
        auto s = spin_split_operators(B);
        auto op = [](const WaveOperatorParams& w) { return Json{{"A", jrat(w.A)}, {"B", jrat(w.B)}}; };
        r.checks.push_back(info("split.operators",
                                {{"spin0", op(s.spin0_eq)}, {"spin1", op(s.spin1_eq)},
                                 {"spin1_parasite_on_spin0", s.spin1_parasite ? jrat(*s.spin1_parasite) : Json()},
                                 {"spin0_parasite_on_spin1", s.spin0_parasite ? jrat(*s.spin0_parasite) : Json()}}));
        r.checks.push_back(verdict("split.cross_checked", s.cross_checked));
        return;
    }
    const Rational A = ps.rational("A"), B = ps.rational("B"), m = ps.rational("m", Rational(1));
    if (sgn(m) <= 0) throw InputError("m: must be positive");
    if (mode == "ast") {
        auto d = ast_dispersion(A, B);
        r.checks.push_back(info("ast.minus", branch_json(d.minus), "P = -1 equation"));
        r.checks.push_back(info("ast.plus", branch_json(d.plus), "P = +1 equation"));
        return;
    }
    auto s = dispersion_spectrum({A, B, m});
    Json br = Json::array();
    for (const auto& b : s.branches)
        br.push_back({{"spin", b.spin}, {"mass2_ratio", b.mass2_ratio ? jrat(*b.mass2_ratio) : Json()},
                      {"multiplicity", b.multiplicity}, {"status", b.status}});
    Json unresolved = Json::array();
    for (const auto& z : s.unresolved) unresolved.push_back({z.real(), z.imag()});
    auto m1 = s.mass2(1), m0 = s.mass2(0);
    Json v = {{"det", jpoly(s.det)}, {"branches", br}, {"unresolved", unresolved},
              {"mass2_ratio", m1 ? jrat(*m1) : Json()}, {"spin0_mass2_ratio", m0 ? jrat(*m0) : Json()}};
    if (m1) v["mass2"] = jrat_f(*m1 * m * m);
    r.checks.push_back(info("spectrum", v, "mass2_ratio: spin-1 branch, mass^2 / m^2"));
}

// ---------------------------------------------------------------- polarization

void cmd_polarization(const Params& ps, Report& r, const Options& opt) {
    const FourMomentum p = momentum(ps, {3, 4, 12}, 85, 84);
    if (sgn(p.mass()) <= 0) throw InputError("m: must be positive");
    r.checks.push_back(info("momentum", momentum_json(p)));

    auto sb = standard_basis(p);
    Json vecs = Json::object();
    for (const auto& e : sb) vecs[e.label] = radical_vector_json(e.v);
    r.checks.push_back(info("standard.vectors", vecs));
    r.checks.push_back(verdict("standard.completeness", completeness(sb) == ExactMatrix::identity(4)));
    auto par = parity_check(p, Basis::standard);
    r.checks.push_back(verdict("standard.parity", par.eigenvalues == std::array<int, 4>{1, 1, 1, -1},
                               {{"eigenvalues", par.eigenvalues}}));
    r.checks.push_back(verdict("standard.notoph", notoph_tensor(p) == notoph_from_wedge(p)));

    const bool rational_norm = exact_sqrt(p.spatial2()).has_value() &&
                               exact_sqrt(p.p(0) * p.p(0) + p.p(1) * p.p(1)).has_value();
    if (rational_norm && sgn(p.spatial2()) > 0) {
        auto hb = helicity_basis(p);
        Json hv = Json::object();
        for (const auto& e : hb) hv[e.label] = radical_vector_json(e.v);
        r.checks.push_back(info("helicity.vectors", hv));
        r.checks.push_back(verdict("helicity.completeness", completeness(hb) == ExactMatrix::identity(4)));
        auto ev = helicity_eigenvalues(hb);
        Json evj = Json::array();
        for (const auto& e : ev) evj.push_back(e ? Json(*e) : Json());
        r.checks.push_back(verdict("helicity.eigenvalues", ev[0] == 1 && ev[1] == -1 && ev[2] == 0 && ev[3] == 0,
                                   {{"eigenvalues", evj}}));
        auto hp = parity_check(p, Basis::helicity);
        r.checks.push_back(verdict("helicity.pm1_not_parity_eigen", !hp.is_eigen[0] && !hp.is_eigen[1],
                                   {{"eigenvalues", hp.eigenvalues},
                                    {"cross_plus", hp.cross_plus ? jradical(*hp.cross_plus) : Json()},
                                    {"cross_minus", hp.cross_minus ? jradical(*hp.cross_minus) : Json()}}));
        r.checks.push_back(verdict("helicity.eb_longitudinal", same_fields(eb_from_potential(hb[2]), eb_printed(p, "0"))));
        const Rational pt = *exact_sqrt(p.p(0) * p.p(0) + p.p(1) * p.p(1));
        if (sgn(pt) != 0) {
            // the transverse closed forms hold for the phases exp(+-i phi)
            HelicityPhases ph{ExactScalar(p.p(0) / pt, p.p(1) / pt), ExactScalar(p.p(0) / pt, -p.p(1) / pt)};
            auto hp = helicity_basis(p, ph);
            r.checks.push_back(verdict("helicity.eb_transverse",
                                       same_fields(eb_from_potential(hp[0]), eb_printed(p, "+1")) &&
                                           same_fields(eb_from_potential(hp[1]), eb_printed(p, "-1")),
                                       {}, "helicity phases exp(+-i phi)"));
        }
        r.checks.push_back(verdict("helicity.basis_change_unitary", standard_to_helicity(p).unitary));
    } else {
        r.checks.push_back(info("helicity", {}, "|p| or p_t irrational or zero: exact helicity basis skipped"));
    }

    FloatMomentum f{p.p(0).get_d(), p.p(1).get_d(), p.p(2).get_d(), p.mass().get_d()};
    double ds = completeness_defect_float(standard_basis_float(f));
    double dh = completeness_defect_float(helicity_basis_float(f));
    double hd = helicity_defect_float(f, helicity_basis_float(f));
    double scale = std::max(1.0, p.E().get_d() / p.mass().get_d());
    double tol = opt.tolerance * scale * scale;
    r.checks.push_back(verdict("float.defects", ds <= tol && dh <= tol && hd <= tol,
                               {{"tolerance", tol}, {"standard_completeness", ds <= tol},
                                {"helicity_completeness", dh <= tol}, {"helicity_eigen", hd <= tol}},
                               "relative to (E/m)^2"));
}

// ---------------------------------------------------------------- bw1

void cmd_bw1(const Params& ps, Report& r, const Options& opt) {
    const std::string mode = ps.choice("mode", "bw", {"bw", "proca", "abcd", "wth", "signs", "chi"});
    if (mode == "bw" || mode == "proca") {
        const Rational m = ps.rational("m", Rational(84));
        const FourMomentum p = momentum(ps, {3, 4, 12}, 85, 84, true);
        const Rational s = ps.rational("sign", Rational(-1));
        if (s != 1 && s != -1) throw InputError("sign: must be +1 or -1");
        const int sign = s == 1 ? 1 : -1;
        r.checks.push_back(info("momentum", momentum_json(p)));
        if (mode == "bw") {
            auto sys = bw_system_spin1(p, m, sign);
            std::size_t expect = p.is_on_shell() && p.mass() == m ? 3 : 0;
            r.checks.push_back(verdict("bw.nullity", sys.system.nullity() == expect,
                                       {{"nullity", sys.system.nullity()}, {"rank", sys.system.rank},
                                        {"expected", expect}, {"unknowns", labels_json(spin1_labels())}}));
            r.checks.push_back(verdict("bw.dpk_relations", sys.all_hold(), relations_json(sys.derived)));
        } else {
            auto sys = proca_reduction_check(p, m, {}, sign);
            r.checks.push_back(info("proca.nullity", {{"nullity", sys.system.nullity()}, {"rank", sys.system.rank}}));
            r.checks.push_back(verdict("proca.relations", sys.all_hold(), relations_json(sys.derived)));
        }
        return;
    }
    if (mode == "abcd" || mode == "wth") {
        AbcdParams k{ps.rational("a", Rational(1)), ps.rational("b", Rational(0)), ps.rational("c", Rational(0)),
                     ps.rational("d", Rational(0))};
        Json kj = {{"a", jrat(k.a)}, {"b", jrat(k.b)}, {"c", jrat(k.c)}, {"d", jrat(k.d)}};
        if (mode == "wth") {
            WthMapping w;
            try {
                w = wth_mapping(k);
            } catch (const DegenerateInput& e) {
                throw InputError(std::string("b, d: ") + e.what());
            }
            auto br = [](const WthBranch& b) { return Json{{"parity", b.parity}, {"A", jrat(b.A)}, {"Bm2", jrat(b.Bm2)}}; };
            r.checks.push_back(info("wth.mapping", {{"params", kj}, {"first", br(w.first)}, {"second", br(w.second)}}));
            r.checks.push_back(verdict("wth.round_trip", wth_round_trip(k)));
            r.checks.push_back(info("wth.abcd_roots", branch_json(abcd_ast_roots(k))));
            return;
        }
        const FourMomentum p = momentum(ps, {3, 4, 12}, 85, 84, true);
        const Rational x = ps.rational("x", p.is_on_shell() ? Rational(p.mass() * p.mass()) : Rational(1));
        const std::string rd = ps.choice("reading", "separate", {"separate", "dropped"});
        auto a = generalized_abcd_system(p, x, k, rd == "separate" ? PhiReading::separate : PhiReading::dropped);
        r.checks.push_back(info("abcd.system", {{"params", kj}, {"x", jrat(x)}, {"nullity", a.sys.system.nullity()},
                                                {"rank", a.sys.system.rank}, {"proca_rows", a.proca_rows},
                                                {"decoupled", a.decoupled}, {"coupling", jmatrix(a.coupling)}}));
        r.checks.push_back(verdict("abcd.decoupling", a.decoupled == (sgn(k.c) == 0 && sgn(k.d) == 0), {},
                                   "vector and spin-0 sectors decouple iff c = d = 0"));
        r.checks.push_back(verdict("abcd.ast_certificate", a.ast_certificate));
        r.checks.push_back(verdict("abcd.derived", a.sys.all_hold(), relations_json(a.sys.derived)));
        return;
    }
    if (mode == "signs") {
        auto e = sign_operator_enumeration();
        Json rows = Json::array();
        for (const auto& s : e.systems)
            rows.push_back({{"eps", s.eps}, {"A1", jrat(s.A1)}, {"A2", jrat(s.A2)}, {"B1", jrat(s.B1)},
                            {"B2", jrat(s.B2)}, {"group", s.group}});
        r.checks.push_back(verdict("signs.distinct", e.distinct == 12, {{"distinct", e.distinct}, {"systems", rows}}));
        r.checks.push_back(verdict("signs.flip_compensated", e.flip_compensated));
        return;
    }
    // chi
    auto md = ps.rationals("modes", 3, std::vector<Rational>{1, 2, -1});
    std::array<int, 3> modes{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (md[i].get_den() != 1) throw InputError("modes: wave numbers must be integers");
        modes[i] = static_cast<int>(md[i].get_num().get_si());
    }
    const Rational omega = ps.rational("omega", Rational(7, 10));
    ChiWave circ;
    circ.E = {ExactScalar(1), ExactScalar::i(), ExactScalar(0)};
    circ.B = {-ExactScalar::i(), ExactScalar(1), ExactScalar(0)};
    r.checks.push_back(verdict("chi.exact_residual", chi_maxwell_residual(circ, {0, 0, 1}, 1).zero(), {},
                               "circular wave along z, omega = |k|"));
    ChiWave w;
    w.E = {ExactScalar(Rational(1, 3), 1), ExactScalar(2), ExactScalar(0, -1)};
    w.B = {ExactScalar(1), ExactScalar(2, 1), ExactScalar(3)};
    w.chi_re = ExactScalar(1, 2);
    w.chi_im = ExactScalar(-1, 1);
    auto fd = chi_maxwell_fd_check(w, modes, omega.get_d(), 8, opt.tolerance);
    r.checks.push_back(verdict("chi.fd_agreement", fd.pass, {{"tolerance", opt.tolerance}},
                               "central differences vs the exact symbol"));
}

// ---------------------------------------------------------------- spin2

void cmd_spin2(const Params& ps, Report& r) {
    const std::string mode = ps.choice("mode", "nullity", {"nullity", "recover", "dynamics", "second-order"});
    std::string coeffs = ps.choice("coeffs", "standard", {"standard", "generic"});
    if (ps.flag("generic")) coeffs = "generic";
    if (ps.flag("standard") && ps.flag("generic")) throw InputError("standard, generic: mutually exclusive");
    if (mode == "nullity") {
        const bool gen = coeffs == "generic";
        auto rep = symmetry_analysis(gen ? Spin2Coeffs::generic() : Spin2Coeffs::standard(), gen);
        r.checks.push_back(info("spin2.nullity", {{"coeffs", coeffs},
                                                  {"unknowns", rep.system.unknowns()},
                                                  {"rank", rep.system.rank},
                                                  {"component_nullity", rep.system.nullity()},
                                                  {"image_nullity", rep.image_nullity}}));
        r.checks.push_back(verdict("spin2.constructions_agree", rep.constructions_agree));
        std::map<std::string, std::pair<int, int>> fam;
        std::vector<std::string> order;
        for (const auto& c : rep.constraints) {
            if (!fam.count(c.label)) order.push_back(c.label);
            fam[c.label].first += c.holds;
            ++fam[c.label].second;
        }
        for (const auto& l : order) {
            auto [in, n] = fam[l];
            Json v = {{"in_row_space", in}, {"rows", n}};
            // two displayed families cannot hold: the 35 totally symmetric spinors violate them
            if (!gen && (l == "G_half_trace" || l == "R_trace_single"))
                r.checks.push_back(info("spin2.constraint." + l, v, "not implied by the symmetry"));
            else
                r.checks.push_back(verdict("spin2.constraint." + l, in == n, v));
        }
        return;
    }
    if (mode == "recover") {
        auto rc = recover_standard_case();
        r.checks.push_back(verdict("spin2.recover_row_space", rc.row_spaces_equal,
                                   {{"standard_nullity", rc.standard_nullity},
                                    {"specialized_nullity", rc.specialized_nullity}}));
        r.checks.push_back(verdict("spin2.recover_constraints", rc.constraints_hold));
        r.checks.push_back(info("spin2.beta9_perturbation", {{"nullity", rc.perturbed_nullity},
                                                             {"row_space_changes", rc.perturbation_changes}}));
        return;
    }
    const Rational m = ps.rational("m", Rational(2));
    if (sgn(m) <= 0) throw InputError("m: must be positive");
    const FourMomentum p = momentum(ps, {0, 0, 0}, m, m, true);
    r.checks.push_back(info("momentum", momentum_json(p)));
    if (mode == "dynamics") {
        auto d = dynamics_system(p, m);
        std::size_t expect = p.is_on_shell() && p.mass() == m ? 5 : 0;
        r.checks.push_back(verdict("spin2.dynamics_nullity", d.system.nullity() == expect,
                                   {{"nullity", d.system.nullity()}, {"rank", d.system.rank}, {"expected", expect}}));
        r.checks.push_back(verdict("spin2.dynamics_relations", d.all_hold(), relations_json(d.derived)));
        r.checks.push_back(info("spin2.block_structure", {{"blocks", block_structure(d.system.matrix)}}));
        return;
    }
    // second-order: zero, transverse-traceless and longitudinal G
    std::array<ExactScalar, 16> zero{}, tt{}, lg{};
    const auto pv = p.vec();
    for (int k = 0; k < 4; ++k)
        for (int mu = 0; mu < 4; ++mu) lg[us(4 * k + mu)] = pv[us(k)] * pv[us(mu)];
    r.checks.push_back(verdict("second_order.zero", g_second_order_check(p, m, zero).residual_zero));
    if (p.is_on_shell() && sgn(p.spatial2()) > 0 && exact_sqrt(p.spatial2()) &&
        exact_sqrt(p.p(0) * p.p(0) + p.p(1) * p.p(1))) {
        auto e = helicity_basis(p)[0].v;
        for (int k = 0; k < 4; ++k)
            for (int mu = 0; mu < 4; ++mu) tt[us(4 * k + mu)] = ExactScalar(e.radicand) * e.c[us(k)] * e.c[us(mu)];
        auto rep = g_second_order_check(p, m, tt);
        r.checks.push_back(verdict("second_order.transverse_traceless", rep.residual_zero && rep.trace_identity));
    }
    auto rl = g_second_order_check(p, m, lg);
    Json res = Json::array();
    for (const auto& x : rl.residual) res.push_back(jscalar(x));
    r.checks.push_back(verdict("second_order.longitudinal_contraction", rl.trace_identity,
                               {{"residual_zero", rl.residual_zero}, {"pF", jscalar(rl.pF)}, {"residual", res}},
                               "tr(res) = -(i/m^2) p.F - (p^2/m^2 + 1) trG"));
}

// ---------------------------------------------------------------- quanta

void cmd_quanta(const Params& ps, Report& r) {
    auto nv = ps.rationals("n", 3, std::vector<Rational>{Rational(3, 13), Rational(4, 13), Rational(12, 13)});
    const Direction n{nv[0], nv[1], nv[2]};
    const Rational m = ps.rational("m", Rational(3));
    if (sgn(m) <= 0) throw InputError("m: must be positive");
    OperatorRelation h, b;
    try {
        h = spin_half_relation(n, m);
        b = bivector_relation(n);
    } catch (const NormalizationError& e) {
        throw InputError(std::string("n: ") + e.what());
    }
    r.checks.push_back(verdict("spin_half.involution", h.involution && h.self_consistent, {{"Lambda", jmatrix(h.matrix)}}));
    r.checks.push_back(verdict("bivector.involution", b.involution && b.matrix.trace() == ExactScalar(-1),
                               {{"matrix", jmatrix(b.matrix)}}));

    const Rational mu = ps.rational("mu", m);
    auto kv = ps.rationals("k", 3, std::vector<Rational>{1, 2, 3});
    const FourMomentum k = FourMomentum::off_shell(kv[0], kv[1], kv[2], ps.rational("kE", Rational(7)));
    ExactMatrix P;
    try {
        P = propagator(k, m, mu);
    } catch (const PoleError& e) {
        throw InputError(std::string("k, kE: ") + e.what());
    } catch (const DegenerateInput& e) {
        throw InputError(std::string("mu: ") + e.what());
    }
    Json pj = {{"k2", jrat(k.p2())}, {"matrix", jmatrix(P)}};
    if (mu == m)
        r.checks.push_back(verdict("propagator.cancellation",
                                   P == ExactScalar(Rational(1) / (k.p2() + m * m)) * ExactMatrix::identity(4), pj));
    else
        r.checks.push_back(info("propagator", pj));
    auto dec = propagator_kk_coefficient(m, mu);
    r.checks.push_back(info("propagator.kk_coefficient", {{"numerator", jpoly(dec.numerator)},
                                                          {"denominator", jpoly(dec.denominator)},
                                                          {"combined_decay", dec.combined_decay},
                                                          {"single_decay", dec.single_decay}}));

    const FourMomentum p = momentum(ps, {0, 0, 4}, 5, m);
    auto vr = vector_rep_relations(p);
    auto mat = [](const RadicalMatrix4& M) {
        Json a = Json::array();
        for (const auto& row : M) {
            Json jr = Json::array();
            for (const auto& x : row) jr.push_back(jradical(x));
            a.push_back(jr);
        }
        return a;
    };
    Json cmp = Json::array();
    for (const auto& c : vr.comparisons) {
        Json rows = Json::array();
        for (const auto& row : c.rows)
            rows.push_back({{"entries_equal", row.entries_equal}, {"scale", row.scale ? jradical(*row.scale) : Json()}});
        cmp.push_back({{"printed", c.printed}, {"contraction", c.contraction}, {"identical", c.identical},
                       {"proportional_rows", c.proportional_rows}, {"sign_table", c.sign_table}, {"rows", rows}});
    }
    r.checks.push_back(info("operator_relations",
                            {{"momentum", momentum_json(p)}, {"plain", mat(vr.plain)}, {"conjugated", mat(vr.conjugated)},
                             {"printed_bdagger", mat(vr.printed_bdagger)}, {"printed_a", mat(vr.printed_a)},
                             {"comparisons", cmp}},
                            "rows/cols (0t,+1,-1,0); a diff report, not an assertion"));

    const WaveOperatorParams w{ps.rational("A", Rational(-7)), ps.rational("B", Rational(-8)), m};
    auto amp = ps.rationals("amplitudes", 4, std::vector<Rational>{1, 0, 0, 0});
    std::array<ExactScalar, 4> a{amp[0], amp[1], amp[2], amp[3]};
    RadicalVector eps;
    try {
        eps = mode_superposition(p, a, ps.flag("weak-lorentz"));
    } catch (const DegenerateInput& e) {
        throw InputError(std::string("amplitudes: ") + e.what());
    }
    auto iv = dynamical_invariants(p, eps, w);
    std::vector<ExactScalar> J(iv.J.begin(), iv.J.end()), S(iv.S.begin(), iv.S.end());
    const bool transverse = sgn(amp[3]) == 0;
    Json vals = {{"T", jmatrix(iv.T)}, {"J", jvector(J)}, {"S", jvector(S)}, {"lagrangian", jscalar(iv.lagrangian)},
                 {"scalar_portion_zero", iv.scalar_portion_zero}};
    if (transverse)
        r.checks.push_back(verdict("invariants.transverse_scalar_portion", iv.scalar_portion_zero, vals));
    else
        r.checks.push_back(info("invariants", vals, "0t amplitude present: scalar portion expected"));
}

}  // namespace

Report run_command(const std::string& command, const Params& params, const Options& opt) {
    const CommandSpec& spec = spec_of(command);
    check_known(params, spec);
    Report r{command, "", params.to_json(), {}};
    try {
        if (command == "matrices") cmd_matrices(params, r);
        else if (command == "spectrum") cmd_spectrum(params, r);
        else if (command == "polarization") cmd_polarization(params, r, opt);
        else if (command == "bw1") cmd_bw1(params, r, opt);
        else if (command == "spin2") cmd_spin2(params, r);
        else if (command == "quanta") cmd_quanta(params, r);
        else if (command == "verify-all") {
            Report v = verify_all();
            r.checks = std::move(v.checks);
        }
    } catch (const OffShell& e) {
        throw InputError(std::string("momentum: ") + e.what());
    } catch (const DegenerateInput& e) {
        throw InputError(std::string("parameters: ") + e.what());
    }
    return r;
}

// ---------------------------------------------------------------- scenarios

Scenario parse_scenario(const std::string& text, const std::string& source) {
    Scenario sc;
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            // byte offset -> line:col
            std::size_t line = 1, col = 1;
            for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
                if (text[i] == '\n') {
                    ++line;
                    col = 1;
                } else {
                    ++col;
                }
            }
            throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
        }
        auto str_of = [&](const Json& v, const std::string& where) -> std::string {
            if (v.is_string()) return v.get<std::string>();
            if (v.is_number_integer() || v.is_boolean()) return v.dump();
            if (v.is_array()) {
                std::string s;
                for (const auto& x : v) {
                    if (!x.is_string() && !x.is_number_integer())
                        throw InputError(source + ":" + where + ": array items must be strings or integers");
                    s += (s.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
                }
                return s;
            }
            throw InputError(source + ":" + where + ": expected a string (write rationals as \"p/q\")");
        };
        if (!j.is_object()) throw InputError(source + ":1:1: expected a JSON object");
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() == "command") sc.command = str_of(it.value(), "/command");
            else if (it.key() == "name") sc.name = str_of(it.value(), "/name");
            else if (it.key() == "expect") {
                if (!it.value().is_object()) throw InputError(source + ":/expect: expected an object");
                for (auto e = it.value().begin(); e != it.value().end(); ++e)
                    sc.expect[e.key()] = str_of(e.value(), "/expect/" + e.key());
            }
            else if (it.key() == "params") {
                if (!it.value().is_object()) throw InputError(source + ":/params: expected an object");
                for (auto p = it.value().begin(); p != it.value().end(); ++p)
                    sc.params.set(p.key(), str_of(p.value(), "/params/" + p.key()), source + ":/params/" + p.key());
            } else {
                throw InputError(source + ":/" + it.key() + ": unknown field");
            }
        }
        if (sc.command.empty()) throw InputError(source + ": missing \"command\"");
    } else {
        std::istringstream in(text);
        std::string line;
        std::size_t ln = 0;
        while (std::getline(in, line)) {
            ++ln;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::size_t b = line.find_first_not_of(" \t");
            if (b == std::string::npos || line[b] == '#') continue;
            std::size_t eq = line.find('=');
            std::string at = source + ":" + std::to_string(ln) + ":";
            if (eq == std::string::npos) throw InputError(at + std::to_string(b + 1) + ": expected key=value");
            std::string key = line.substr(b, eq - b);
            while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
            if (key.empty()) throw InputError(at + std::to_string(b + 1) + ": empty key");
            std::size_t vb = line.find_first_not_of(" \t", eq + 1);
            std::string value = vb == std::string::npos ? "" : line.substr(vb);
            while (!value.empty() && (value.back() == ' ' || value.back() == '\t')) value.pop_back();
            std::string where = at + std::to_string((vb == std::string::npos ? eq + 1 : vb) + 1);
            if (key == "command") sc.command = value;
            else if (key == "name") sc.name = value;
            else if (key.rfind("expect.", 0) == 0) sc.expect[key.substr(7)] = value;
            else {
                if (sc.params.has(key)) throw InputError(where + ": duplicate key '" + key + "'");
                sc.params.set(key, value, where);
            }
        }
        if (sc.command.empty()) throw InputError(source + ":" + std::to_string(ln) + ": missing command=...");
    }
    bool known = false;
    for (const auto& s : command_specs()) known = known || s.name == sc.command;
    if (!known) throw InputError(source + ": unknown command '" + sc.command + "'");
    for (const auto& [k, v] : sc.expect)
        if (v != "pass" && v != "fail" && v != "informational")
            throw InputError(source + ": expect." + k + ": expected pass|fail|informational, got '" + v + "'");
    return sc;
}

Report run_scenario(const Scenario& sc, const Options& opt) {
    Report r = run_command(sc.command, sc.params, opt);
    r.scenario = sc.name;
    for (const auto& [name, want] : sc.expect) {
        auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.name == name; });
        std::string got = it == r.checks.end() ? "missing" : status_str(it->status);
        r.checks.push_back(verdict("expect." + name, got == want, {{"expected", want}, {"actual", got}}));
    }
    return r;
}

}  // namespace bwkit
