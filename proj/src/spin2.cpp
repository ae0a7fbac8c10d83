#include "bwkit/spin2.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bwkit/indices.hpp"
#include "bwkit/spinor.hpp"

namespace bwkit {

namespace {

using Row = std::vector<ExactScalar>;

std::size_t us(int v) { return static_cast<std::size_t>(v); }
ExactScalar I() { return ExactScalar::i(); }

std::size_t slot(int a, int b, int c, int d) { return us(((a * 4 + b) * 4 + c) * 4 + d); }

enum class Set { V, S, S5 };

struct BlockSpec {
    const char* name;
    Set left, right;
    int alpha, beta;  // 1-based coefficient indices
    std::size_t size;
};

// the nine terms, in storage order
const std::array<BlockSpec, 9> kSpecs{{
    {"G", Set::V, Set::V, 1, 1, 16},
    {"F", Set::V, Set::S, 1, 2, 24},
    {"Ft", Set::V, Set::S5, 1, 3, 24},
    {"T", Set::S, Set::V, 2, 4, 24},
    {"R", Set::S, Set::S, 2, 5, 36},
    {"Rt", Set::S, Set::S5, 2, 6, 36},
    {"Tt", Set::S5, Set::V, 3, 7, 24},
    {"Dt", Set::S5, Set::S, 3, 8, 36},
    {"D", Set::S5, Set::S5, 3, 9, 36},
}};

std::vector<ExactMatrix> matrices(const DiracSet& d, Set s, bool phase) {
    std::vector<ExactMatrix> out;
    if (s == Set::V) {
        for (int mu = 0; mu < 4; ++mu) out.push_back(phase ? I() * (d.gamma[us(mu)] * d.R) : d.gamma[us(mu)] * d.R);
    } else {
        // sums over both orders of the pair: factor 2
        for (int k = 0; k < 6; ++k) {
            ExactMatrix m = d.sigma[us(k)] * d.R;
            if (s == Set::S5) m = d.gamma5 * m;
            out.push_back(ExactScalar(2) * m);
        }
    }
    return out;
}

std::string index_label(Set s, int i) {
    return s == Set::V ? std::to_string(i + 1) : pair_label(i);
}

// standard-layout helpers: G 0..15, F 16..39, T 40..63, R 64..99
struct StdIx {
    static constexpr std::size_t G0 = 0, F0 = 16, T0 = 40, R0 = 64, N = 100;
    static void G(Row& r, int k, int mu, const ExactScalar& c) { r[G0 + us(4 * k + mu)] += c; }
    static void F(Row& r, int k, int t, int mu, const ExactScalar& c) {
        int s = pair_sign(k, t);
        if (s) r[F0 + us(4 * pair_index(k, t) + mu)] += ExactScalar(s) * c;
    }
    static void T(Row& r, int k, int mu, int nu, const ExactScalar& c) {
        int s = pair_sign(mu, nu);
        if (s) r[T0 + us(6 * k + pair_index(mu, nu))] += ExactScalar(s) * c;
    }
    static void R(Row& r, int k, int t, int mu, int nu, const ExactScalar& c) {
        int s = pair_sign(k, t) * pair_sign(mu, nu);
        if (s) r[R0 + us(6 * pair_index(k, t) + pair_index(mu, nu))] += ExactScalar(s) * c;
    }
};

bool is_zero_row(const Row& r) {
    return std::all_of(r.begin(), r.end(), [](const ExactScalar& x) { return x.is_zero(); });
}

ExactMatrix symmetry_rows(const ExactMatrix& M) {
    // Psi_{abcd} - Psi_{acbd}, b < c
    ExactMatrix out(96, M.cols());
    std::size_t r = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c)
                for (int d = 0; d < 4; ++d, ++r)
                    for (std::size_t j = 0; j < M.cols(); ++j) out(r, j) = M(slot(a, b, c, d), j) - M(slot(a, c, b, d), j);
    return out;
}

}  // namespace

Spin2Coeffs Spin2Coeffs::standard() {
    Spin2Coeffs c;
    c.alpha[2] = 0;
    c.beta[2] = c.beta[5] = c.beta[8] = 0;
    return c;
}

const std::vector<Spin2Block>& spin2_blocks() {
    static const std::vector<Spin2Block> blocks = [] {
        std::vector<Spin2Block> b;
        std::size_t off = 0;
        for (const auto& s : kSpecs) {
            b.push_back({s.name, off, s.size});
            off += s.size;
        }
        return b;
    }();
    return blocks;
}

std::vector<std::size_t> standard_embedding() {
    std::vector<std::size_t> e;
    for (const auto& b : spin2_blocks())
        if (b.name == "G" || b.name == "F" || b.name == "T" || b.name == "R")
            for (std::size_t i = 0; i < b.size; ++i) e.push_back(b.offset + i);
    return e;
}

MultispinorMap multispinor_map(const Spin2Coeffs& c, bool full, bool potential_phase) {
    const DiracSet d = build_dirac_set();
    MultispinorMap out;
    std::vector<std::vector<ExactScalar>> cols;
    for (const auto& s : kSpecs) {
        std::string name = s.name;
        if (!full && name != "G" && name != "F" && name != "T" && name != "R") continue;
        out.active_blocks.push_back(name);
        ExactScalar coef = ExactScalar(c.alpha[us(s.alpha - 1)] * c.beta[us(s.beta - 1)]);
        auto L = matrices(d, s.left, potential_phase), Rm = matrices(d, s.right, potential_phase);
        // storage: right index outer, left index inner
        for (std::size_t ri = 0; ri < Rm.size(); ++ri)
            for (std::size_t li = 0; li < L.size(); ++li) {
                std::vector<ExactScalar> col(256);
                if (!coef.is_zero())
                    for (int a = 0; a < 4; ++a)
                        for (int b = 0; b < 4; ++b) {
                            const ExactScalar& l = L[li](us(a), us(b));
                            if (l.is_zero()) continue;
                            for (int cc = 0; cc < 4; ++cc)
                                for (int dd = 0; dd < 4; ++dd)
                                    col[slot(a, b, cc, dd)] = coef * l * Rm[ri](us(cc), us(dd));
                        }
                cols.push_back(std::move(col));
                out.labels.push_back(name + "_" + index_label(s.right, static_cast<int>(ri)) + "," +
                                     index_label(s.left, static_cast<int>(li)));
            }
    }
    out.matrix = ExactMatrix(256, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < 256; ++i) out.matrix(i, j) = cols[j][i];
    return out;
}

std::vector<std::string> spin2_labels(bool full) {
    return multispinor_map(Spin2Coeffs::generic(), full).labels;
}

std::vector<ExactScalar> assemble_multispinor(const Spin2Coeffs& c, const std::vector<ExactScalar>& components,
                                              bool full) {
    MultispinorMap m = multispinor_map(c, full);
    if (components.size() != m.matrix.cols())
        throw ShapeError("expected " + std::to_string(m.matrix.cols()) + " components, got " +
                         std::to_string(components.size()));
    return mat_vec(m.matrix, components);
}

ConstraintSystem symmetry_constraint_system(const Spin2Coeffs& c, bool full, SymmetryConstruction how) {
    MultispinorMap m = multispinor_map(c, full);
    if (how == SymmetryConstruction::transposition) return rank_nullspace(symmetry_rows(m.matrix), m.labels);

    const DiracSet d = build_dirac_set();
    SymmetricBasis basis = classify_matrix_basis(d);
    ExactMatrix rows(basis.antisymmetric.size() * 16, m.matrix.cols());
    std::size_t r = 0;
    for (const auto& A : basis.antisymmetric)
        for (int a = 0; a < 4; ++a)
            for (int dd = 0; dd < 4; ++dd, ++r)
                for (int b = 0; b < 4; ++b)
                    for (int cc = 0; cc < 4; ++cc) {
                        const ExactScalar& w = A(us(b), us(cc));
                        if (w.is_zero()) continue;
                        for (std::size_t j = 0; j < m.matrix.cols(); ++j) {
                            const ExactScalar& v = m.matrix(slot(a, b, cc, dd), j);
                            if (!v.is_zero()) rows(r, j) += w * v;
                        }
                    }
    return rank_nullspace(rows, m.labels);
}

std::vector<Relation> standard_constraints() {
    using S = StdIx;
    std::vector<Relation> out;
    auto push = [&](const std::string& label, const Row& r) {
        if (!is_zero_row(r)) out.push_back({label, r, false});
    };
    const ExactScalar one(1), half(Rational(1, 2));
    {
        Row r(S::N);
        for (int mu = 0; mu < 4; ++mu) S::G(r, mu, mu, one);
        push("G_trace", r);
    }
    for (auto [k, mu] : kPairs) {
        Row r(S::N);
        S::G(r, k, mu, one);
        S::G(r, mu, k, -one);
        push("G_antisym", r);
    }
    for (int k = 0; k < 4; ++k)
        for (int mu = 0; mu < 4; ++mu) {
            Row r(S::N);
            S::G(r, k, mu, one);
            if (k == mu)
                for (int n = 0; n < 4; ++n) S::G(r, n, n, -half);
            push("G_half_trace", r);
        }
    for (int k = 0; k < 4; ++k) {
        Row r(S::N);
        for (int mu = 0; mu < 4; ++mu) S::F(r, k, mu, mu, one);
        push("F_trace", r);
    }
    for (int n = 0; n < 4; ++n) {
        Row r(S::N);
        for (int k = 0; k < 4; ++k)
            for (int t = 0; t < 4; ++t)
                for (int mu = 0; mu < 4; ++mu) S::F(r, k, t, mu, ExactScalar(eps4(k, t, mu, n)));
        push("F_eps", r);
    }
    for (int k = 0; k < 4; ++k) {
        Row r(S::N);
        for (int mu = 0; mu < 4; ++mu) S::T(r, mu, mu, k, one);
        push("T_trace", r);
    }
    for (int n = 0; n < 4; ++n) {
        Row r(S::N);
        for (int k = 0; k < 4; ++k)
            for (int t = 0; t < 4; ++t)
                for (int mu = 0; mu < 4; ++mu) S::T(r, k, t, mu, ExactScalar(eps4(k, t, mu, n)));
        push("T_eps", r);
    }
    for (auto [k, t] : kPairs)
        for (int mu = 0; mu < 4; ++mu) {
            Row r(S::N);
            S::F(r, k, t, mu, one);
            S::T(r, mu, k, t, -one);
            push("F_eq_T", r);
        }
    for (int l = 0; l < 4; ++l) {
        Row r(S::N);
        for (int k = 0; k < 4; ++k)
            for (int t = 0; t < 4; ++t)
                for (int mu = 0; mu < 4; ++mu) {
                    ExactScalar e(eps4(k, t, mu, l));
                    S::F(r, k, t, mu, e);
                    S::T(r, k, t, mu, e);
                }
        push("FT_eps", r);
    }
    for (int k = 0; k < 4; ++k)
        for (int mu = 0; mu < 4; ++mu) {
            Row r(S::N);
            for (int n = 0; n < 4; ++n) S::R(r, k, n, mu, n, one);
            push("R_trace_single", r);
        }
    {
        Row r(S::N);
        for (int mu = 0; mu < 4; ++mu)
            for (int n = 0; n < 4; ++n) S::R(r, mu, n, mu, n, one);
        push("R_trace_full", r);
    }
    for (int k = 0; k < 4; ++k)
        for (int t = 0; t < 4; ++t) {
            Row r(S::N);
            for (int mu = 0; mu < 4; ++mu)
                for (int n = 0; n < 4; ++n)
                    for (int a = 0; a < 4; ++a) {
                        S::R(r, mu, t, n, a, ExactScalar(eps4(mu, n, a, k)));
                        S::R(r, n, a, mu, k, ExactScalar(-eps4(mu, n, a, t)));
                    }
            push("R_eps_mixed", r);
        }
    {
        Row r(S::N);
        for (int k = 0; k < 4; ++k)
            for (int t = 0; t < 4; ++t)
                for (int mu = 0; mu < 4; ++mu)
                    for (int n = 0; n < 4; ++n) S::R(r, k, t, mu, n, ExactScalar(eps4(k, t, mu, n)));
        push("R_eps", r);
    }
    return out;
}

SymmetryReport symmetry_analysis(const Spin2Coeffs& c, bool full) {
    SymmetryReport rep;
    rep.system = symmetry_constraint_system(c, full, SymmetryConstruction::transposition);
    ConstraintSystem other = symmetry_constraint_system(c, full, SymmetryConstruction::contraction);
    rep.constructions_agree = row_space_equal(rep.system, other);
    MultispinorMap m = multispinor_map(c, full);
    std::size_t rank_m = rank_of(m.matrix);
    rep.image_nullity = rep.system.nullity() - (m.matrix.cols() - rank_m);

    if (!full) {
        rep.constraints = standard_constraints();
    } else {
        // the alpha1 beta1 G constraints, embedded in the full layout
        auto emb = standard_embedding();
        for (auto& r : standard_constraints()) {
            if (r.label != "G_trace" && r.label != "G_antisym") continue;
            Row full_row(256);
            for (std::size_t i = 0; i < emb.size(); ++i) full_row[emb[i]] = r.row[i];
            rep.constraints.push_back({r.label, full_row, false});
        }
    }
    for (auto& r : rep.constraints) r.holds = rep.system.contains(r.row);
    return rep;
}

RecoveryReport recover_standard_case() {
    RecoveryReport rep;
    ConstraintSystem std_sys = symmetry_constraint_system(Spin2Coeffs::standard(), false, SymmetryConstruction::transposition);
    ConstraintSystem spec = symmetry_constraint_system(Spin2Coeffs::standard(), true, SymmetryConstruction::transposition);
    rep.standard_nullity = std_sys.nullity();
    rep.specialized_nullity = spec.nullity();

    // standard rows embedded into the 256 layout
    auto emb = standard_embedding();
    ExactMatrix lifted(std_sys.rref.size(), 256);
    for (std::size_t r = 0; r < std_sys.rref.size(); ++r)
        for (std::size_t i = 0; i < emb.size(); ++i) lifted(r, emb[i]) = std_sys.rref[r][i];
    rep.row_spaces_equal = row_space_equal(rank_nullspace(lifted), spec);

    rep.constraints_hold = true;
    for (const auto& r : standard_constraints()) {
        Row full_row(256);
        for (std::size_t i = 0; i < emb.size(); ++i) full_row[emb[i]] = r.row[i];
        if (std_sys.contains(r.row) != spec.contains(full_row)) rep.constraints_hold = false;
    }

    Spin2Coeffs pert = Spin2Coeffs::standard();
    pert.beta[8] = 1;
    ConstraintSystem p = symmetry_constraint_system(pert, true, SymmetryConstruction::transposition);
    rep.perturbed_nullity = p.nullity();
    rep.perturbation_changes = !row_space_equal(p, spec);
    return rep;
}

MomentumSystem dynamics_system(const FourMomentum& p, const Rational& m) {
    if (sgn(m) == 0) throw DegenerateInput("dynamics needs m != 0");
    const DiracSet d = build_dirac_set();
    MultispinorMap map = multispinor_map(Spin2Coeffs::standard(), false, true);
    const ExactMatrix& M = map.matrix;
    const std::size_t N = M.cols();
    ExactMatrix D = dirac_operator(d, p, ExactScalar(-m));

    ExactMatrix rows(512 + 96, N);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int dd = 0; dd < 4; ++dd)
                    for (int x = 0; x < 4; ++x) {
                        const ExactScalar& da = D(us(a), us(x));
                        const ExactScalar& dc = D(us(c), us(x));
                        for (std::size_t j = 0; j < N; ++j) {
                            if (!da.is_zero()) rows(slot(a, b, c, dd), j) += da * M(slot(x, b, c, dd), j);
                            if (!dc.is_zero()) rows(256 + slot(a, b, c, dd), j) += dc * M(slot(a, b, x, dd), j);
                        }
                    }
    ExactMatrix sym = symmetry_rows(M);
    for (std::size_t r = 0; r < 96; ++r)
        for (std::size_t j = 0; j < N; ++j) rows(512 + r, j) = sym(r, j);

    MomentumSystem ms;
    ms.momentum = p;
    ms.system = rank_nullspace(rows, map.labels);

    using S = StdIx;
    const auto pv = p.vec();
    const ExactScalar M2(Rational(m / 2)), twoM(Rational(2 * m));
    auto push = [&](const std::string& l, const Row& r) { ms.derived.push_back({l, r, false}); };
    for (int k = 0; k < 4; ++k)
        for (auto [mu, nu] : kPairs) {
            Row r(S::N);
            S::T(r, k, mu, nu, twoM);
            S::G(r, k, nu, -(I() * pv[us(mu)]));
            S::G(r, k, mu, I() * pv[us(nu)]);
            push("T_from_G", r);
        }
    for (int k = 0; k < 4; ++k)
        for (int mu = 0; mu < 4; ++mu) {
            Row r(S::N);
            for (int nu = 0; nu < 4; ++nu) S::T(r, k, nu, mu, I() * pv[us(nu)]);
            S::G(r, k, mu, -M2);
            push("divT", r);
        }
    for (auto [k, t] : kPairs)
        for (auto [mu, nu] : kPairs) {
            Row r(S::N);
            S::R(r, k, t, mu, nu, twoM);
            S::F(r, k, t, nu, -(I() * pv[us(mu)]));
            S::F(r, k, t, mu, I() * pv[us(nu)]);
            push("R_from_F", r);
        }
    for (auto [k, t] : kPairs)
        for (int mu = 0; mu < 4; ++mu) {
            Row r(S::N);
            for (int nu = 0; nu < 4; ++nu) S::R(r, k, t, nu, mu, I() * pv[us(nu)]);
            S::F(r, k, t, mu, -M2);
            push("divR", r);
        }
    for (int k = 0; k < 4; ++k) {
        Row r(S::N);
        for (int mu = 0; mu < 4; ++mu) S::G(r, k, mu, pv[us(mu)]);
        push("divG", r);
    }
    for (auto [k, t] : kPairs) {
        Row r(S::N);
        for (int mu = 0; mu < 4; ++mu) S::F(r, k, t, mu, pv[us(mu)]);
        push("divF", r);
    }
    for (int k = 0; k < 4; ++k)
        for (int mu = 0; mu < 4; ++mu) {
            Row r(S::N);
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    for (int nu = 0; nu < 4; ++nu) S::T(r, k, b, nu, ExactScalar(eps4(a, b, nu, mu)) * pv[us(a)]);
            if (!is_zero_row(r)) push("epsdT", r);
        }
    for (auto [k, t] : kPairs)
        for (int mu = 0; mu < 4; ++mu) {
            Row r(S::N);
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    for (int nu = 0; nu < 4; ++nu) S::R(r, k, t, b, nu, ExactScalar(eps4(a, b, nu, mu)) * pv[us(a)]);
            if (!is_zero_row(r)) push("epsdR", r);
        }
    for (auto& r : ms.derived) r.holds = ms.system.contains(r.row);
    return ms;
}

std::vector<std::size_t> block_structure(const ExactMatrix& m) {
    std::vector<std::size_t> parent(m.cols());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<bool> touched(m.cols(), false);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::size_t first = m.cols();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(r, j).is_zero()) continue;
            touched[j] = true;
            if (first == m.cols())
                first = j;
            else
                parent[find(j)] = find(first);
        }
    }
    std::map<std::size_t, std::size_t> sizes;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (touched[j]) ++sizes[find(j)];
    std::vector<std::size_t> out;
    for (auto& [root, n] : sizes) out.push_back(n);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

SecondOrderReport g_second_order_check(const FourMomentum& p, const Rational& m, const std::array<ExactScalar, 16>& G) {
    if (sgn(m) == 0) throw DegenerateInput("second-order check needs m != 0");
    const auto pv = p.vec();
    const ExactScalar p2(p.p2()), im2(Rational(1) / (m * m));
    auto g = [&](int k, int mu) -> const ExactScalar& { return G[us(4 * k + mu)]; };
    SecondOrderReport rep;
    rep.residual_zero = true;
    ExactScalar trG, trRes;
    for (int k = 0; k < 4; ++k) {
        trG += g(k, k);
        for (int mu = 0; mu < 4; ++mu) {
            ExactScalar s;
            for (int nu = 0; nu < 4; ++nu) s += pv[us(nu)] * pv[us(mu)] * g(k, nu);
            ExactScalar r = im2 * (s - p2 * g(k, mu)) - g(k, mu);
            rep.residual[us(4 * k + mu)] = r;
            if (!r.is_zero()) rep.residual_zero = false;
        }
        trRes += rep.residual[us(5 * k)];
    }
    for (int k = 0; k < 4; ++k) {
        ExactScalar s;
        for (int mu = 0; mu < 4; ++mu) s += pv[us(mu)] * g(mu, k);
        rep.F[us(k)] = I() * s;
        rep.pF += pv[us(k)] * rep.F[us(k)];
    }
    rep.trace_identity = trRes == -(I() * im2) * rep.pF - (p2 * im2 + 1) * trG;
    return rep;
}

}  // namespace bwkit
