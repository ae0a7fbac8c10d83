#include "bwkit/vector_rep.hpp"

#include <algorithm>

namespace bwkit {

namespace {

int kd(int a, int b) { return a == b ? 1 : 0; }

ExactMatrix from_ints(const int (&t)[4][4], const ExactScalar& scale = 1) {
    ExactMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = scale * ExactScalar(t[i][j]);
    return m;
}

}  // namespace

VectorRepSet build_vector_rep() {
    VectorRepSet v;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            ExactMatrix g(4, 4);
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = 0; nu < 4; ++nu)
                    g(static_cast<std::size_t>(mu), static_cast<std::size_t>(nu)) =
                        kd(mu, nu) * kd(a, b) - kd(mu, a) * kd(nu, b) - kd(mu, b) * kd(nu, a);
            v.gamma[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = g;
            v.gamma5[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = gamma5_closed_form(a, b);
        }
    v.parity = v.gamma[3][3];
    return v;
}

ExactMatrix gamma5_closed_form(int a, int b) {
    ExactMatrix g(4, 4);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            g(static_cast<std::size_t>(mu), static_cast<std::size_t>(nu)) =
                ExactScalar::i() * ExactScalar(kd(a, mu) * kd(b, nu) - kd(a, nu) * kd(b, mu));
    return g;
}

Family build_gamma5(const VectorRepSet& v) {
    Family f;
    const ExactScalar c(Rational(0), Rational(1, 6));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            ExactMatrix s(4, 4);
            for (std::size_t k = 0; k < 4; ++k) s += commutator(v.gamma[a][k], v.gamma[b][k]);
            f[a][b] = c * s;
        }
    return f;
}

Family printed_gamma_tables() {
    static const int g44[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
    static const int g14[4][4] = {{0, 0, 0, -1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {-1, 0, 0, 0}};
    static const int g24[4][4] = {{0, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 0, 0}, {0, -1, 0, 0}};
    static const int g34[4][4] = {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}};
    static const int g11[4][4] = {{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    static const int g22[4][4] = {{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    static const int g33[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}};
    static const int g12[4][4] = {{0, -1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    static const int g13[4][4] = {{0, 0, -1, 0}, {0, 0, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 0}};
    static const int g23[4][4] = {{0, 0, 0, 0}, {0, 0, -1, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}};
    Family f;
    auto put = [&](int a, int b, const int (&t)[4][4]) {
        f[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = from_ints(t);
        f[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = from_ints(t);
    };
    put(3, 3, g44);
    put(0, 3, g14);
    put(1, 3, g24);
    put(2, 3, g34);
    put(0, 0, g11);
    put(1, 1, g22);
    put(2, 2, g33);
    put(0, 1, g12);
    put(0, 2, g13);
    put(1, 2, g23);
    return f;
}

Family printed_gamma5_tables() {
    static const int g41[4][4] = {{0, 0, 0, -1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}};
    static const int g42[4][4] = {{0, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 0, 0}, {0, 1, 0, 0}};
    static const int g43[4][4] = {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
    static const int g12[4][4] = {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    static const int g31[4][4] = {{0, 0, -1, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}};
    static const int g23[4][4] = {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}};
    Family f;
    for (auto& row : f)
        for (auto& m : row) m = ExactMatrix(4, 4);
    auto put = [&](int a, int b, const int (&t)[4][4]) {
        ExactMatrix m = from_ints(t, ExactScalar::i());
        f[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = m;
        f[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = -m;
    };
    put(3, 0, g41);
    put(3, 1, g42);
    put(3, 2, g43);
    put(0, 1, g12);
    put(2, 0, g31);
    put(1, 2, g23);
    return f;
}

ExactMatrix wave_operator(const FourMomentum& p, const WaveOperatorParams& w) {
    static const VectorRepSet v = build_vector_rep();
    auto pv = p.vec();
    ExactMatrix op(4, 4);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            ExactScalar c = pv[a] * pv[b];
            if (!c.is_zero()) op += c * v.gamma[a][b];
        }
    op += ExactScalar(w.A * p.p2() + w.B * w.m * w.m) * ExactMatrix::identity(4);
    return op;
}

PolyMatrix rest_frame_wave_poly(const Rational& A, const Rational& B) {
    static const VectorRepSet v = build_vector_rep();
    // p_a p_b gamma_ab -> p4 p4 gamma_44 = -x gamma_44 ; p^2 = -x
    PolyMatrix m(4, std::vector<ExactPoly>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            ExactScalar c1 = -v.gamma[3][3](i, j);
            ExactScalar c0;
            if (i == j) {
                c1 -= ExactScalar(A);
                c0 = B;
            }
            m[i][j] = ExactPoly({c0, c1});
        }
    return m;
}

std::optional<Rational> Spectrum::mass2(int spin) const {
    for (const auto& b : branches)
        if (b.spin == spin && b.status == "finite") return b.mass2_ratio;
    return std::nullopt;
}

namespace {

PolyMatrix restrict_poly(const PolyMatrix& m, const std::vector<std::size_t>& keep) {
    PolyMatrix r(keep.size(), std::vector<ExactPoly>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) r[i][j] = m[keep[i]][keep[j]];
    return r;
}

// spin of a kernel vector of the rest-frame operator: spatial -> 1, along e4 -> 0
void count_kernel(const ExactMatrix& k, std::size_t& spin1, std::size_t& spin0) {
    ConstraintSystem s = rank_nullspace(k);
    ExactMatrix withe4 = vstack(k, ExactMatrix::row({0, 0, 0, 1}));
    spin1 = rank_nullspace(withe4).nullity();
    spin0 = s.nullity() - spin1;
}

}  // namespace

Spectrum dispersion_spectrum(const WaveOperatorParams& w) {
    Spectrum out;
    PolyMatrix full = rest_frame_wave_poly(w.A, w.B);
    // coordinates on which the operator vanishes identically: indefinite sectors
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < 4; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < 4; ++j) zero = zero && full[i][j].is_zero() && full[j][i].is_zero();
        if (zero) {
            int spin = i == 3 ? 0 : 1;
            auto it = std::find_if(out.branches.begin(), out.branches.end(),
                                   [&](const SpectrumBranch& b) { return b.spin == spin && b.status == "indefinite"; });
            if (it == out.branches.end()) out.branches.push_back({spin, std::nullopt, 1, "indefinite"});
            else ++it->multiplicity;
        } else {
            keep.push_back(i);
        }
    }
    PolyMatrix m = restrict_poly(full, keep);
    out.det = det_poly(m);
    if (out.det.is_zero()) throw std::logic_error("dispersion determinant vanishes on the restricted operator");
    auto lift = [&](const ExactMatrix& r) {
        ExactMatrix f(4, 4);
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = 0; j < keep.size(); ++j) f(keep[i], keep[j]) = r(i, j);
        // dropped coordinates are not part of the finite analysis: pin them with 1
        for (std::size_t i = 0; i < 4; ++i)
            if (std::find(keep.begin(), keep.end(), i) == keep.end()) f(i, i) = 1;
        return f;
    };
    if (out.det.degree() > 0) {
        RootReport roots = rational_root_masses(out.det);
        out.unresolved = roots.approx;
        for (const auto& r : roots.roots) {
            std::size_t s1 = 0, s0 = 0;
            count_kernel(lift(eval_poly_matrix(m, r.root)), s1, s0);
            if (s1 + s0 != r.multiplicity)
                throw std::logic_error("root multiplicity disagrees with kernel dimension");
            if (s1) out.branches.push_back({1, r.root, s1, "finite"});
            if (s0) out.branches.push_back({0, r.root, s0, "finite"});
        }
    }
    // missing degree: roots at infinity, classified by the kernel of the x-coefficient
    if (static_cast<std::size_t>(out.det.degree()) < keep.size()) {
        PolyMatrix lead = m;
        ExactMatrix l(keep.size(), keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = 0; j < keep.size(); ++j) l(i, j) = lead[i][j].coeff(1);
        std::size_t s1 = 0, s0 = 0;
        count_kernel(lift(l), s1, s0);
        if (s1) out.branches.push_back({1, std::nullopt, s1, "absent"});
        if (s0) out.branches.push_back({0, std::nullopt, s0, "absent"});
    }
    std::stable_sort(out.branches.begin(), out.branches.end(),
                     [](const SpectrumBranch& a, const SpectrumBranch& b) { return a.spin > b.spin; });
    return out;
}

SplitOperators spin_split_operators(const Rational& B) {
    SplitOperators s;
    s.spin0_eq = {B + 1, B, 1};
    s.spin1_eq = {B - 1, B, 1};
    if (B + 2 != 0) s.spin1_parasite = Rational(B / (B + 2));
    if (B - 2 != 0) s.spin0_parasite = Rational(B / (B - 2));
    Spectrum a = dispersion_spectrum(s.spin0_eq);
    Spectrum b = dispersion_spectrum(s.spin1_eq);
    bool ok = true;
    if (B != 0) {
        ok = ok && a.mass2(0) == std::optional<Rational>(1) && b.mass2(1) == std::optional<Rational>(1);
    }
    ok = ok && a.mass2(1) == s.spin1_parasite && b.mass2(0) == s.spin0_parasite;
    s.cross_checked = ok;
    return s;
}

Rational parasite_inverse_spin0(const Rational& t) {
    // B/(B-2) = t  ->  B = 2t/(t-1)
    if (t == 1) throw std::domain_error("no finite B gives parasite ratio 1");
    Rational b = 2 * t / (t - 1);
    b.canonicalize();
    return b;
}

QuadraticLagrangian vector_lagrangian(const WaveOperatorParams& w) {
    static const VectorRepSet v = build_vector_rep();
    QuadraticLagrangian L;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t mu = 0; mu < 4; ++mu)
            for (std::size_t b = 0; b < 4; ++b)
                for (std::size_t nu = 0; nu < 4; ++nu) {
                    ExactScalar k = v.gamma[a][b](mu, nu);
                    if (a == b && mu == nu) k += ExactScalar(w.A);
                    L.K[a][mu][b][nu] = k;
                }
    L.M = ExactScalar(w.B * w.m * w.m) * ExactMatrix::identity(4);
    return L;
}

ExactMatrix euler_lagrange_operator(const QuadraticLagrangian& L, const FourMomentum& p) {
    // dL/dB* - d_a dL/d(d_a B*) with d -> ip on B:  -(ip_a)(ip_b) K + M
    auto pv = p.vec();
    ExactMatrix op = L.M;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            ExactScalar c = pv[a] * pv[b];
            if (c.is_zero()) continue;
            for (std::size_t mu = 0; mu < 4; ++mu)
                for (std::size_t nu = 0; nu < 4; ++nu) op(mu, nu) += c * L.K[a][mu][b][nu];
        }
    return op;
}

LagrangianReport lagrangian_consistency(const WaveOperatorParams& w, const std::vector<FourMomentum>& samples) {
    LagrangianReport r;
    QuadraticLagrangian L = vector_lagrangian(w);
    r.samples = samples.size();
    r.el_matches = true;
    for (const auto& p : samples) r.el_matches = r.el_matches && euler_lagrange_operator(L, p) == wave_operator(p, w);

    // T1 = (d_a B*_mu)(d_a B_mu), T2 = (d.B*)(d.B), T3 = (d_a B*_mu)(d_mu B_a)
    r.expanded_identity = true;
    for (int a = 0; a < 4; ++a)
        for (int mu = 0; mu < 4; ++mu)
            for (int b = 0; b < 4; ++b)
                for (int nu = 0; nu < 4; ++nu) {
                    Rational t1 = kd(a, b) * kd(mu, nu), t2 = kd(a, mu) * kd(b, nu), t3 = kd(a, nu) * kd(mu, b);
                    ExactScalar want((w.A + 1) * t1 - t2 - t3);
                    r.expanded_identity = r.expanded_identity &&
                        L.K[static_cast<std::size_t>(a)][static_cast<std::size_t>(mu)][static_cast<std::size_t>(b)][static_cast<std::size_t>(nu)] == want;
                }

    // bilinear symbols: B* ~ exp(-i p'x), B ~ exp(i p x); a total derivative multiplies by i(p - p')
    const std::array<ExactScalar, 4> pp{Rational(2), Rational(-1), Rational(3), ExactScalar(Rational(1, 2), Rational(5))};
    const std::array<ExactScalar, 4> q{Rational(1), Rational(4), Rational(-2), ExactScalar(Rational(-1, 3), Rational(7))};
    ExactMatrix S2(4, 4), S3(4, 4), D(4, 4);
    const ExactScalar I = ExactScalar::i();
    for (std::size_t rr = 0; rr < 4; ++rr)
        for (std::size_t c = 0; c < 4; ++c) {
            S2(rr, c) = pp[rr] * q[c];
            S3(rr, c) = q[rr] * pp[c];
            for (std::size_t mu = 0; mu < 4; ++mu) {
                // Gamma_mu = B*_nu d_nu B_mu - B*_mu d_nu B_nu
                ExactScalar g = I * q[rr] * ExactScalar(kd(static_cast<int>(c), static_cast<int>(mu))) -
                                I * ExactScalar(kd(static_cast<int>(rr), static_cast<int>(mu))) * q[c];
                D(rr, c) += I * (q[mu] - pp[mu]) * g;
            }
        }
    r.total_derivative_identity = (D == S3 - S2);
    // L + c dGamma: -(1+c) S2 + (c-1) S3 = 0  <=>  c (S3 - S2) = S2 + S3
    ExactMatrix coef(16, 1), aug(16, 2);
    auto lhs = (S3 - S2).vec(), rhs = (S2 + S3).vec();
    for (std::size_t k = 0; k < 16; ++k) {
        coef(k, 0) = lhs[k];
        aug(k, 0) = lhs[k];
        aug(k, 1) = rhs[k];
    }
    r.rank_coefficient = rank_of(coef);
    r.rank_augmented = rank_of(aug);
    r.total_derivative_removes_both = r.rank_augmented == r.rank_coefficient;
    return r;
}

}  // namespace bwkit
