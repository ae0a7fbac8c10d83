#include "bwkit/bw_spin1.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "bwkit/indices.hpp"

namespace bwkit {

namespace {

using Row = std::vector<ExactScalar>;

ExactScalar I() { return ExactScalar::i(); }

std::size_t us(int v) { return static_cast<std::size_t>(v); }

// add c * T_{ab} to row, where T is antisymmetric and stored at offset + pair_index
void add_tensor(Row& r, std::size_t offset, int a, int b, const ExactScalar& c) {
    int s = pair_sign(a, b);
    if (s == 0 || c.is_zero()) return;
    r[offset + us(pair_index(a, b))] += ExactScalar(s) * c;
}

void check_all(MomentumSystem& ms) {
    for (auto& rel : ms.derived) rel.holds = ms.system.contains(rel.row);
}

std::vector<std::string> spin1_labels_impl() {
    std::vector<std::string> l;
    for (int mu = 0; mu < 4; ++mu) l.push_back("A" + std::to_string(mu + 1));
    for (int k = 0; k < 6; ++k) l.push_back("F" + pair_label(k));
    return l;
}

}  // namespace

bool MomentumSystem::all_hold() const {
    for (const auto& r : derived)
        if (!r.holds) return false;
    return true;
}

ExactMatrix bw_rows(const std::vector<ExactMatrix>& basis, const ExactMatrix& D1, const ExactMatrix& D2) {
    ExactMatrix out(32, basis.size());
    const ExactMatrix D2t = D2.transpose();
    for (std::size_t u = 0; u < basis.size(); ++u) {
        ExactMatrix l = D1 * basis[u], r = basis[u] * D2t;
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t c = 0; c < 4; ++c) {
                out(a * 4 + c, u) = l(a, c);
                out(16 + a * 4 + c, u) = r(a, c);
            }
    }
    return out;
}

ExactMatrix dirac_operator(const DiracSet& d, const FourMomentum& p, const ExactScalar& c0, const ExactScalar& c5) {
    ExactMatrix D = ExactMatrix::identity(4) * c0 + d.gamma5 * c5;
    for (int mu = 0; mu < 4; ++mu) D += d.gamma[us(mu)] * (I() * p.comp(mu));
    return D;
}

std::vector<std::string> spin1_labels() { return spin1_labels_impl(); }

MomentumSystem bw_system_spin1(const FourMomentum& p, const Rational& m, int mass_sign) {
    const DiracSet d = build_dirac_set();
    std::vector<ExactMatrix> basis;
    for (int mu = 0; mu < 4; ++mu) basis.push_back(I() * (d.gamma[us(mu)] * d.R));
    for (int k = 0; k < 6; ++k) basis.push_back(ExactScalar(2) * (d.sigma[us(k)] * d.R));
    ExactMatrix D = dirac_operator(d, p, ExactScalar(mass_sign) * m);

    MomentumSystem ms;
    ms.momentum = p;
    ms.system = rank_nullspace(bw_rows(basis, D, D), spin1_labels_impl());

    const auto pv = p.vec();
    const ExactScalar s(mass_sign == -1 ? 1 : -1);  // the m -> -m relabeling
    for (int mu = 0; mu < 4; ++mu) {
        Row r(10);
        for (int nu = 0; nu < 4; ++nu) add_tensor(r, 4, nu, mu, I() * pv[us(nu)]);
        r[us(mu)] -= s * ExactScalar(m / 2);
        ms.derived.push_back({"dpk_dF_" + std::to_string(mu + 1), r, false});
    }
    for (int k = 0; k < 6; ++k) {
        auto [mu, nu] = kPairs[us(k)];
        Row r(10);
        r[4 + us(k)] = s * ExactScalar(2 * m);
        r[us(nu)] -= I() * pv[us(mu)];
        r[us(mu)] += I() * pv[us(nu)];
        ms.derived.push_back({"dpk_F_" + pair_label(k), r, false});
    }
    check_all(ms);
    return ms;
}

ExactMatrix potential_rescaling(const Rational& m) {
    // columns: (A', F) -> (A, F) with A = 2m A'
    ExactMatrix S = ExactMatrix::identity(10);
    for (std::size_t mu = 0; mu < 4; ++mu) S(mu, mu) = Rational(2 * m);
    return S;
}

MomentumSystem proca_reduction_check(const FourMomentum& p, const Rational& m, const Spin1Coeffs& c, int mass_sign) {
    const DiracSet d = build_dirac_set();
    const ExactScalar kv = I(), ka = I();
    std::vector<ExactMatrix> basis;
    for (int mu = 0; mu < 4; ++mu) basis.push_back((kv * ExactScalar(c.ca * m)) * (d.gamma[us(mu)] * d.R));
    for (int mu = 0; mu < 4; ++mu) basis.push_back((kv * ExactScalar(c.cf)) * (d.gamma[us(mu)] * d.R));
    for (int k = 0; k < 6; ++k)
        basis.push_back((ka * ExactScalar(2 * c.cA * m)) * (d.gamma5 * d.sigma[us(k)] * d.R));
    for (int k = 0; k < 6; ++k) basis.push_back(ExactScalar(2 * c.cF) * (d.sigma[us(k)] * d.R));

    std::vector<std::string> labels;
    for (int mu = 0; mu < 4; ++mu) labels.push_back("A" + std::to_string(mu + 1));
    for (int mu = 0; mu < 4; ++mu) labels.push_back("f" + std::to_string(mu + 1));
    for (int k = 0; k < 6; ++k) labels.push_back("A" + pair_label(k));
    for (int k = 0; k < 6; ++k) labels.push_back("F" + pair_label(k));

    ExactMatrix D = dirac_operator(d, p, ExactScalar(mass_sign) * m);
    MomentumSystem ms;
    ms.momentum = p;
    ms.system = rank_nullspace(bw_rows(basis, D, D), labels);

    // the relations below are written for the -m sign; +m is m -> -m
    const Rational mm = mass_sign == -1 ? m : Rational(-m);
    const auto pv = p.vec();
    const ExactScalar ca(c.ca), cf(c.cf), cA(c.cA), cF(c.cF), M(mm);
    for (int k = 0; k < 6; ++k) {
        auto [mu, nu] = kPairs[us(k)];
        Row r(20);
        r[us(nu)] += ca * M * I() * pv[us(mu)];
        r[us(mu)] -= ca * M * I() * pv[us(nu)];
        r[4 + us(nu)] += cf * I() * pv[us(mu)];
        r[4 + us(mu)] -= cf * I() * pv[us(nu)];
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) add_tensor(r, 8, a, b, I() * cA * M * M * ExactScalar(eps4(a, b, mu, nu)));
        r[14 + us(k)] -= ExactScalar(2) * M * cF;
        ms.derived.push_back({"pr1_" + pair_label(k), r, false});
    }
    for (int mu = 0; mu < 4; ++mu) {
        Row r(20);
        r[us(mu)] += ca * M * M;
        r[4 + us(mu)] += cf * M;
        for (int nu = 0; nu < 4; ++nu) {
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    add_tensor(r, 8, a, b, -(I() * cA * M * ExactScalar(eps4(mu, nu, a, b)) * I() * pv[us(nu)]));
            add_tensor(r, 14, mu, nu, ExactScalar(2) * cF * I() * pv[us(nu)]);
        }
        ms.derived.push_back({"pr2_" + std::to_string(mu + 1), r, false});
    }
    {
        Row r(20);
        for (int k = 0; k < 4; ++k) {
            r[us(k)] += M * ca * I() * pv[us(k)];
            r[4 + us(k)] += cf * I() * pv[us(k)];
        }
        ms.derived.push_back({"sub1", r, false});
    }
    for (int mu = 0; mu < 4; ++mu) {
        Row r(20);
        for (int a = 0; a < 4; ++a) add_tensor(r, 8, a, mu, M * cA * I() * pv[us(a)]);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int nu = 0; nu < 4; ++nu) {
                    int e = eps4(a, b, nu, mu);
                    if (e != 0)
                        add_tensor(r, 14, b, nu,
                                   ExactScalar(Rational(0), Rational(1, 2)) * cF * ExactScalar(e) * I() * pv[us(a)]);
                }
        ms.derived.push_back({"sub2_" + std::to_string(mu + 1), r, false});
    }
    if (c.cf == 0 && c.cA == 0 && c.ca == 1 && c.cF == Rational(1, 2)) {
        for (int mu = 0; mu < 4; ++mu) {
            Row r(20);
            for (int nu = 0; nu < 4; ++nu) add_tensor(r, 14, nu, mu, I() * pv[us(nu)]);
            r[us(mu)] -= M * M;
            ms.derived.push_back({"textbook_dF_" + std::to_string(mu + 1), r, false});
        }
        for (int k = 0; k < 6; ++k) {
            auto [mu, nu] = kPairs[us(k)];
            Row r(20);
            r[14 + us(k)] = 1;
            r[us(nu)] -= I() * pv[us(mu)];
            r[us(mu)] += I() * pv[us(nu)];
            ms.derived.push_back({"textbook_F_" + pair_label(k), r, false});
        }
    }
    check_all(ms);
    return ms;
}

// ---------------------------------------------------------------- (a,b,c,d)

std::vector<std::string> abcd_labels() {
    auto l = spin1_labels_impl();
    for (int mu = 0; mu < 4; ++mu) l.push_back("At" + std::to_string(mu + 1));
    l.push_back("phi");
    l.push_back("phit");
    return l;
}

AbcdSystem generalized_abcd_system(const FourMomentum& p, const Rational& x, const AbcdParams& k, PhiReading reading) {
    constexpr std::size_t kA = 0, kF = 4, kAt = 10, kPhi = 14, kPhit = 15, N = 16;
    const auto pv = p.vec();
    const ExactScalar ab(k.a + k.b * x), cd(k.c + k.d * x);
    const ExactScalar half(Rational(1, 2));

    std::vector<Row> rows;
    std::vector<Row> one(16, Row(N)), C(16, Row(N));  // (1) and (C) for every ordered (mu, lambda)
    for (int mu = 0; mu < 4; ++mu)
        for (int la = 0; la < 4; ++la) {
            if (mu == la) continue;
            Row& r = one[us(mu * 4 + la)];
            r[kA + us(la)] += I() * pv[us(mu)];
            r[kA + us(mu)] -= I() * pv[us(la)];
            add_tensor(r, kF, mu, la, ExactScalar(-2) * ab);
            Row& s = C[us(mu * 4 + la)];
            s[kAt + us(la)] += I() * pv[us(mu)];
            s[kAt + us(mu)] -= I() * pv[us(la)];
            add_tensor(s, kF, mu, la, ExactScalar(2) * cd);
        }
    std::vector<Row> two(4, Row(N));
    for (int la = 0; la < 4; ++la) {
        Row& r = two[us(la)];
        for (int nu = 0; nu < 4; ++nu) add_tensor(r, kF, nu, la, I() * pv[us(nu)]);
        r[kA + us(la)] -= half * ab;
        r[kAt + us(la)] -= half * cd;
    }
    // Proca-like block and its constraints
    for (auto [mu, la] : kPairs) rows.push_back(one[us(mu * 4 + la)]);
    for (const auto& r : two) rows.push_back(r);
    {
        Row r(N);
        for (int mu = 0; mu < 4; ++mu) r[kA + us(mu)] = I() * pv[us(mu)];
        r[kPhit] = cd;
        rows.push_back(r);
    }
    for (int t = 0; t < 4; ++t) {
        Row r(N);
        for (int mu = 0; mu < 4; ++mu)
            for (int l = 0; l < 4; ++l)
                for (int kk = 0; kk < 4; ++kk) {
                    int e = eps4(mu, l, kk, t);
                    if (e != 0) add_tensor(r, kF, l, kk, ExactScalar(e) * I() * pv[us(mu)]);
                }
        rows.push_back(r);
    }
    if (reading == PhiReading::separate) {
        Row r(N);
        r[kPhi] = cd;
        rows.push_back(r);
    }
    const std::size_t proca_rows = rows.size();
    // spin-0 Duffin-Kemmer block and its constraints
    {
        Row r(N);
        r[kPhi] = ab;
        rows.push_back(r);
    }
    {
        Row r(N);
        for (int mu = 0; mu < 4; ++mu) r[kAt + us(mu)] = I() * pv[us(mu)];
        r[kPhit] = -ab;
        rows.push_back(r);
    }
    for (int nu = 0; nu < 4; ++nu) {
        Row r(N);
        r[kAt + us(nu)] = ab;
        r[kA + us(nu)] = cd;
        r[kPhit] = I() * pv[us(nu)];
        rows.push_back(r);
    }
    for (int mu = 0; mu < 4; ++mu) {
        Row r(N);
        r[kPhi] = I() * pv[us(mu)];
        rows.push_back(r);
    }
    for (auto [nu, la] : kPairs) rows.push_back(C[us(nu * 4 + la)]);

    AbcdSystem out;
    out.proca_rows = proca_rows;
    out.sys.momentum = p;
    out.sys.system = rank_nullspace(stack_rows(rows, N), abcd_labels());

    out.coupling = ExactMatrix(rows.size(), N);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < N; ++j) {
            bool spin0_col = j >= kAt;
            bool cross = i < proca_rows ? spin0_col : !spin0_col;
            if (cross) out.coupling(i, j) = rows[i][j];
        }
    out.decoupled = out.coupling.is_zero();

    // elimination of the potentials, as an explicit row combination
    out.ast_certificate = true;
    const ExactScalar q = cd * cd - ab * ab;
    for (auto [mu, la] : kPairs) {
        Row lhs(N), target(N);
        for (std::size_t j = 0; j < N; ++j)
            lhs[j] = I() * pv[us(mu)] * two[us(la)][j] - I() * pv[us(la)] * two[us(mu)][j] +
                     half * ab * one[us(mu * 4 + la)][j] + half * cd * C[us(mu * 4 + la)][j];
        for (int nu = 0; nu < 4; ++nu) {
            add_tensor(target, kF, nu, la, -(pv[us(mu)] * pv[us(nu)]));
            add_tensor(target, kF, nu, mu, pv[us(la)] * pv[us(nu)]);
        }
        add_tensor(target, kF, mu, la, q);
        Relation rel{"ast_" + pair_label(pair_index(mu, la)), target, false};
        if (lhs != target) out.ast_certificate = false;
        out.sys.derived.push_back(rel);
    }
    check_all(out.sys);
    return out;
}

WthMapping wth_mapping(const AbcdParams& k) {
    if (k.b != k.d && k.b != -k.d) throw DegenerateInput("WTH mapping needs b = +-d");
    Rational s = k.a * k.b - k.c * k.d;
    WthMapping w;
    w.first = {-1, 1 - 4 * s, 2 * (k.a * k.a - k.c * k.c)};
    w.second = {1, 4 * s - 1, 2 * (k.c * k.c - k.a * k.a)};
    return w;
}

PolyMatrix ast_operator(const std::array<std::array<ExactPoly, 4>, 4>& pp, const ExactPoly& q) {
    PolyMatrix m(6, std::vector<ExactPoly>(6));
    for (int r = 0; r < 6; ++r) {
        auto [al, be] = kPairs[us(r)];
        m[us(r)][us(r)] += q;
        for (int mu = 0; mu < 4; ++mu) {
            if (mu != be) {
                int c = pair_index(mu, be);
                m[us(r)][us(c)] -= pp[us(al)][us(mu)] * ExactPoly(pair_sign(mu, be));
            }
            if (mu != al) {
                int c = pair_index(mu, al);
                m[us(r)][us(c)] += pp[us(be)][us(mu)] * ExactPoly(pair_sign(mu, al));
            }
        }
    }
    return m;
}

namespace {

std::array<std::array<ExactPoly, 4>, 4> rest_pp() {
    std::array<std::array<ExactPoly, 4>, 4> pp{};
    pp[3][3] = -ExactPoly::x();  // p4 p4 = -E^2, x = E^2 / m^2
    return pp;
}

AstBranch analyse(const PolyMatrix& op, int parity) {
    AstBranch br;
    br.parity = parity;
    br.det = det_poly(op);
    const std::array<std::pair<const char*, std::array<int, 3>>, 2> sectors{
        {{"electric", {2, 4, 5}}, {"magnetic", {0, 1, 3}}}};
    for (const auto& [name, idx] : sectors) {
        PolyMatrix sub(3, std::vector<ExactPoly>(3));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) sub[i][j] = op[us(idx[i])][us(idx[j])];
        ExactPoly dsub = det_poly(sub);
        if (dsub.is_zero()) {
            br.degenerate = true;
            br.roots.push_back({name, std::nullopt, 3, false});
            continue;
        }
        RootReport rr = rational_root_masses(dsub);
        if (dsub.degree() < 3) {
            br.degenerate = true;
            br.roots.push_back({name, std::nullopt, static_cast<std::size_t>(3 - dsub.degree()), false});
        }
        for (const auto& r : rr.roots) br.roots.push_back({name, r.root, r.multiplicity, sgn(r.root) < 0});
    }
    return br;
}

}  // namespace

AstDispersion ast_dispersion(const Rational& A, const Rational& B) {
    const ExactPoly x = ExactPoly::x();
    // P = -1: + (A-1)/2 d^2 - B/2 ; P = +1: - (A+1)/2 d^2 + B/2  (d^2 -> x)
    ExactPoly qm = ExactPoly(ExactScalar(Rational((A - 1) / 2))) * x - ExactPoly(ExactScalar(Rational(B / 2)));
    ExactPoly qp = ExactPoly(ExactScalar(Rational(-(A + 1) / 2))) * x + ExactPoly(ExactScalar(Rational(B / 2)));
    AstDispersion d;
    d.minus = analyse(ast_operator(rest_pp(), qm), -1);
    d.plus = analyse(ast_operator(rest_pp(), qp), 1);
    return d;
}

AstBranch abcd_ast_roots(const AbcdParams& k) {
    const ExactPoly x = ExactPoly::x();
    ExactPoly ab = ExactPoly(ExactScalar(k.a)) + ExactPoly(ExactScalar(k.b)) * x;
    ExactPoly cd = ExactPoly(ExactScalar(k.c)) + ExactPoly(ExactScalar(k.d)) * x;
    return analyse(ast_operator(rest_pp(), cd * cd - ab * ab), 0);
}

// ---------------------------------------------------------------- sign operators

SignEnumeration sign_operator_enumeration() {
    // sample point for the system comparison: generic rationals
    const FourMomentum p = FourMomentum::off_shell(1, 2, 2, Rational(7, 3));
    const Rational m1 = 3, m2 = 5;
    const auto pv = p.vec();
    auto build = [&](const SignSystem& s, bool flip_f) {
        constexpr std::size_t kA = 0, kAt = 4, kF = 8, N = 14;
        const ExactScalar f(flip_f ? -1 : 1);
        std::vector<Row> rows;
        for (auto [mu, la] : kPairs) {
            Row r(N);
            r[kA + us(la)] += I() * pv[us(mu)];
            r[kA + us(mu)] -= I() * pv[us(la)];
            add_tensor(r, kF, mu, la, f * ExactScalar(2 * m1 * s.A1));
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    add_tensor(r, kF, a, b, f * ExactScalar(Rational(0), m2 * s.A2) * ExactScalar(eps4(a, b, mu, la)));
            rows.push_back(r);
        }
        for (int mu = 0; mu < 4; ++mu) {
            Row r(N);
            for (int la = 0; la < 4; ++la) add_tensor(r, kF, mu, la, f * I() * pv[us(la)]);
            r[kA + us(mu)] -= ExactScalar(m1 / 2 * s.A1);
            r[kAt + us(mu)] -= ExactScalar(m2 / 2 * s.B2);
            rows.push_back(r);
        }
        return rows;
    };
    // same system as written: every equation proportional to its counterpart
    auto same = [](const std::vector<Row>& a, const std::vector<Row>& b) {
        for (std::size_t r = 0; r < a.size(); ++r)
            if (rank_of(stack_rows({a[r], b[r]}, a[r].size())) != 1) return false;
        return true;
    };

    SignEnumeration out;
    std::vector<std::vector<Row>> reps;
    for (int code = 0; code < 16; ++code) {
        SignSystem s;
        for (int i = 0; i < 4; ++i) s.eps[us(i)] = (code >> (3 - i)) & 1 ? -1 : 1;
        s.A1 = Rational(s.eps[0] + s.eps[2], 2);
        s.A2 = Rational(s.eps[1] + s.eps[3], 2);
        s.B1 = Rational(s.eps[0] - s.eps[2], 2);
        s.B2 = Rational(s.eps[1] - s.eps[3], 2);
        s.A1.canonicalize();
        s.A2.canonicalize();
        s.B1.canonicalize();
        s.B2.canonicalize();
        auto cs = build(s, false);
        std::size_t g = 0;
        while (g < reps.size() && !same(reps[g], cs)) ++g;
        if (g == reps.size()) reps.push_back(cs);
        s.group = g;
        out.systems.push_back(s);
    }
    out.distinct = reps.size();
    out.flip_compensated = true;
    for (const auto& s : out.systems) {
        SignSystem f = s;
        for (auto& e : f.eps) e = -e;
        f.A1 = -s.A1;
        f.A2 = -s.A2;
        f.B1 = -s.B1;
        f.B2 = -s.B2;
        if (!same(build(s, false), build(f, true))) out.flip_compensated = false;
    }
    return out;
}

// ---------------------------------------------------------------- chi-Maxwell

bool ChiResidual::zero() const {
    for (std::size_t i = 0; i < 3; ++i)
        if (!r1[i].is_zero() || !r2[i].is_zero()) return false;
    return r3.is_zero() && r4.is_zero();
}

namespace {

template <class T>
struct ChiAlgebra {
    std::array<T, 3> r1, r2;
    T r3, r4;
};

// d_j -> i k_j, d_t -> -i w
template <class T, class K>
ChiAlgebra<T> chi_residual_impl(const std::array<T, 3>& E, const std::array<T, 3>& B, const T& cr, const T& ci,
                                const std::array<K, 3>& k, const K& w, const T& i) {
    ChiAlgebra<T> r;
    auto cross = [&](const std::array<T, 3>& v, std::size_t c) {
        std::size_t a = (c + 1) % 3, b = (c + 2) % 3;
        return T(k[a]) * v[b] - T(k[b]) * v[a];
    };
    r.r3 = T(0);
    r.r4 = T(0);
    for (std::size_t c = 0; c < 3; ++c) {
        r.r1[c] = i * cross(E, c) - i * T(w) * B[c] - i * T(k[c]) * ci;
        r.r2[c] = i * cross(B, c) + i * T(w) * E[c] - i * T(k[c]) * cr;
        r.r3 = r.r3 + i * T(k[c]) * E[c];
        r.r4 = r.r4 + i * T(k[c]) * B[c];
    }
    r.r3 = r.r3 - i * T(w) * cr;
    r.r4 = r.r4 + i * T(w) * ci;
    return r;
}

}  // namespace

ChiResidual chi_maxwell_residual(const ChiWave& w, const std::array<Rational, 3>& k, const Rational& omega) {
    std::array<ExactScalar, 3> kk{k[0], k[1], k[2]};
    auto a = chi_residual_impl<ExactScalar, ExactScalar>(w.E, w.B, w.chi_re, w.chi_im, kk, ExactScalar(omega), I());
    return {a.r1, a.r2, a.r3, a.r4};
}

ChiFdCheck chi_maxwell_fd_check(const ChiWave& w, const std::array<int, 3>& modes, double omega, int n, double tol) {
    using C = std::complex<double>;
    const double h = 1.0 / n, dt = h;
    const double tau = 2 * std::numbers::pi;
    std::array<double, 3> k{tau * modes[0], tau * modes[1], tau * modes[2]};
    std::array<C, 3> E, B;
    for (std::size_t c = 0; c < 3; ++c) {
        E[c] = w.E[c].to_complex();
        B[c] = w.B[c].to_complex();
    }
    const C cr = w.chi_re.to_complex(), ci = w.chi_im.to_complex();

    // effective symbols of the central differences
    std::array<double, 3> keff{};
    for (std::size_t c = 0; c < 3; ++c) keff[c] = std::sin(k[c] * h) / h;
    const double weff = std::sin(omega * dt) / dt;
    auto expect = chi_residual_impl<C, double>(E, B, cr, ci, keff, weff, C(0, 1));

    auto phase = [&](int ix, int iy, int iz, int it) {
        double arg = k[0] * ix * h + k[1] * iy * h + k[2] * iz * h - omega * it * dt;
        return std::polar(1.0, arg);
    };
    auto wrap = [&](int v) { return ((v % n) + n) % n; };
    ChiFdCheck out;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int pos[3] = {x, y, z};
                // D_j f = (f(+) - f(-)) / 2h for the common phase factor
                std::array<C, 3> dj;
                for (int j = 0; j < 3; ++j) {
                    int up[3] = {x, y, z}, dn[3] = {x, y, z};
                    up[j] = wrap(pos[j] + 1);
                    dn[j] = wrap(pos[j] - 1);
                    dj[us(j)] = (phase(up[0], up[1], up[2], 0) - phase(dn[0], dn[1], dn[2], 0)) / (2 * h);
                }
                C dtp = (phase(x, y, z, 1) - phase(x, y, z, -1)) / (2 * dt);
                C ph = phase(x, y, z, 0);
                auto curl = [&](const std::array<C, 3>& v, std::size_t c) {
                    std::size_t a = (c + 1) % 3, b = (c + 2) % 3;
                    return dj[a] * v[b] - dj[b] * v[a];
                };
                C divE = 0, divB = 0;
                for (std::size_t c = 0; c < 3; ++c) {
                    C r1 = curl(E, c) + dtp * B[c] - dj[c] * ci;
                    C r2 = curl(B, c) - dtp * E[c] - dj[c] * cr;
                    out.max_deviation = std::max(out.max_deviation, std::abs(r1 - expect.r1[c] * ph));
                    out.max_deviation = std::max(out.max_deviation, std::abs(r2 - expect.r2[c] * ph));
                    divE += dj[c] * E[c];
                    divB += dj[c] * B[c];
                }
                C r3 = divE + dtp * cr, r4 = divB - dtp * ci;
                out.max_deviation = std::max(out.max_deviation, std::abs(r3 - expect.r3 * ph));
                out.max_deviation = std::max(out.max_deviation, std::abs(r4 - expect.r4 * ph));
            }
    out.pass = out.max_deviation <= tol;
    return out;
}

}  // namespace bwkit
