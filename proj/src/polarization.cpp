#include "bwkit/polarization.hpp"

#include <cmath>

#include "bwkit/indices.hpp"
#include "bwkit/vector_rep.hpp"

namespace bwkit {

namespace {

const std::array<std::string, 4> kLabels{"+1", "-1", "0", "0t"};
const std::array<int, 4> kEta{1, 1, 1, -1};

ExactScalar I() { return ExactScalar::i(); }

Rational require_abs_p(const FourMomentum& p) {
    auto r = exact_sqrt(p.spatial2());
    if (!r) throw DegenerateInput("|p| is irrational; use the float path");
    if (sgn(*r) == 0) throw DegenerateInput("p = 0: helicity direction undefined");
    return *r;
}

void require_mass(const FourMomentum& p) {
    if (!p.is_on_shell() || sgn(p.mass()) <= 0) throw DegenerateInput("m = 0: no massless limit here");
}

RadicalVector rv(std::array<ExactScalar, 4> c, Rational r = 1) { return {std::move(c), std::move(r)}; }

}  // namespace

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

std::array<std::complex<double>, 4> RadicalVector::to_complex() const {
    double s = std::sqrt(radicand.get_d());
    std::array<std::complex<double>, 4> out;
    for (std::size_t k = 0; k < 4; ++k) out[k] = s * c[k].to_complex();
    return out;
}

bool RadicalVector::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

bool operator==(const RadicalVector& a, const RadicalVector& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    auto q = exact_sqrt(b.radicand / a.radicand);
    if (!q) return false;
    for (std::size_t k = 0; k < 4; ++k)
        if (a.c[k] != ExactScalar(*q) * b.c[k]) return false;
    return true;
}

std::optional<RadicalScalar> proportionality(const RadicalVector& a, const RadicalVector& b) {
    std::size_t j = 0;
    while (j < 4 && b.c[j].is_zero()) ++j;
    if (j == 4) return std::nullopt;
    ExactScalar z = a.c[j] / b.c[j];
    for (std::size_t k = 0; k < 4; ++k)
        if (a.c[k] != z * b.c[k]) return std::nullopt;
    RadicalScalar k{z, a.radicand / b.radicand};
    if (auto s = exact_sqrt(k.radicand)) {
        k.z *= *s;
        k.radicand = 1;
    }
    return k;
}

std::array<PolarizationVector, 4> rest_frame_basis() {
    const Rational h(1, 2);
    std::array<PolarizationVector, 4> b;
    b[0].v = rv({-1, -I(), 0, 0}, h);
    b[1].v = rv({1, -I(), 0, 0}, h);
    b[2].v = rv({0, 0, 1, 0});
    b[3].v = rv({0, 0, 0, I()});
    for (std::size_t k = 0; k < 4; ++k) {
        b[k].label = kLabels[k];
        b[k].momentum = FourMomentum::rest(1);
    }
    return b;
}

ExactMatrix boost_matrix(const FourMomentum& p) {
    require_mass(p);
    const Rational& m = p.mass();
    ExactMatrix L(4, 4);
    Rational k = m * (p.E() + m);
    for (int i = 0; i < 3; ++i) {
        auto ui = static_cast<std::size_t>(i);
        for (int j = 0; j < 3; ++j)
            L(ui, static_cast<std::size_t>(j)) = Rational((i == j ? 1 : 0) + p.p(i) * p.p(j) / k);
        L(ui, 3) = ExactScalar(0, p.p(i) / m);
        L(3, ui) = ExactScalar(0, -p.p(i) / m);
    }
    L(3, 3) = Rational(p.E() / m);
    return L;
}

RadicalVector apply(const ExactMatrix& m, const RadicalVector& v) {
    RadicalVector out;
    out.radicand = v.radicand;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out.c[i] += m(i, j) * v.c[j];
    return out;
}

std::array<PolarizationVector, 4> standard_basis(const FourMomentum& p, const Rational& N) {
    ExactMatrix L = boost_matrix(p);
    auto b = rest_frame_basis();
    for (auto& e : b) {
        e.v = apply(L * ExactScalar(N), e.v);
        e.momentum = p;
        e.N = N;
        e.basis = Basis::standard;
    }
    return b;
}

ExactMatrix helicity_operator(const FourMomentum& p) {
    Rational a = require_abs_p(p);
    // (J_k)_{ij} = -i eps_{kij}
    ExactMatrix h(4, 4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational s = 0;
            for (int k = 0; k < 3; ++k) s += eps3(k, i, j) * p.p(k);
            h(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = ExactScalar(0, -s / a);
        }
    return h;
}

std::array<PolarizationVector, 4> helicity_basis(const FourMomentum& p, const HelicityPhases& ph) {
    require_mass(p);
    const Rational a = require_abs_p(p);
    const Rational& m = p.mass();
    const Rational &px = p.p(0), &py = p.p(1), &pz = p.p(2);
    const Rational h(1, 2);
    std::array<PolarizationVector, 4> b;
    auto pt = exact_sqrt(px * px + py * py);
    if (!pt) throw DegenerateInput("transverse momentum is irrational; use the float path");
    if (sgn(*pt) != 0) {
        const Rational& t = *pt;
        b[0].v = rv({ExactScalar(-px * pz / t, py * a / t), ExactScalar(-py * pz / t, -px * a / t), t, 0}, h);
        b[1].v = rv({ExactScalar(px * pz / t, py * a / t), ExactScalar(py * pz / t, -px * a / t), -t, 0}, h);
    } else {
        // the printed forms along azimuth 0 (py = 0, px -> 0+)
        b[0].v = rv({-pz, ExactScalar(0, -a), 0, 0}, h);
        b[1].v = rv({pz, ExactScalar(0, -a), 0, 0}, h);
    }
    for (auto& x : b[0].v.c) x = x * ph.plus / a;
    for (auto& x : b[1].v.c) x = x * ph.minus / a;
    b[2].v = rv({p.E() * px / (a * m), p.E() * py / (a * m), p.E() * pz / (a * m), ExactScalar(0, a / m)});
    b[3].v = rv({px / m, py / m, pz / m, ExactScalar(0, p.E() / m)});
    for (std::size_t k = 0; k < 4; ++k) {
        b[k].label = kLabels[k];
        b[k].momentum = p;
        b[k].basis = Basis::helicity;
    }
    return b;
}

RadicalVector parity_image(const PolarizationVector& at_minus_p) {
    return apply(build_vector_rep().parity, at_minus_p.v);
}

RadicalVector covariant_conj(const RadicalVector& v) {
    RadicalVector o = v;
    for (auto& x : o.c) x = x.conj();
    o.c[3] = -o.c[3];
    return o;
}

ExactMatrix completeness(const std::array<PolarizationVector, 4>& b) {
    ExactMatrix s(4, 4);
    for (std::size_t k = 0; k < 4; ++k) {
        RadicalVector bar = covariant_conj(b[k].v);
        ExactScalar w = ExactScalar(kEta[k]) * b[k].v.radicand;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) s(i, j) += w * b[k].v.c[i] * bar.c[j];
    }
    return s;
}

ParityReport parity_check(const FourMomentum& p, Basis basis, const HelicityPhases& ph) {
    auto make = [&](const FourMomentum& q) {
        return basis == Basis::standard ? standard_basis(q) : helicity_basis(q, ph);
    };
    auto at_p = make(p), at_mp = make(p.reversed());
    ParityReport r;
    for (std::size_t k = 0; k < 4; ++k) {
        RadicalVector img = parity_image(at_mp[k]);
        RadicalVector neg = at_p[k].v;
        for (auto& x : neg.c) x = -x;
        if (img == at_p[k].v)
            r.eigenvalues[k] = 1;
        else if (img == neg)
            r.eigenvalues[k] = -1;
        r.is_eigen[k] = r.eigenvalues[k] != 0;
    }
    if (basis == Basis::helicity) {
        r.cross_plus = proportionality(parity_image(at_mp[0]), at_p[1].v);
        r.cross_minus = proportionality(parity_image(at_mp[1]), at_p[0].v);
    }
    return r;
}

std::array<std::optional<int>, 4> helicity_eigenvalues(const std::array<PolarizationVector, 4>& b) {
    ExactMatrix h = helicity_operator(b[0].momentum);
    std::array<std::optional<int>, 4> out;
    for (std::size_t k = 0; k < 4; ++k) {
        RadicalVector hv = apply(h, b[k].v);
        if (hv.is_zero()) {
            out[k] = 0;
            continue;
        }
        auto c = proportionality(hv, b[k].v);
        if (c && c->radicand == 1 && c->z.is_real() && (c->z == 1 || c->z == -1))
            out[k] = c->z == 1 ? 1 : -1;
    }
    return out;
}

FieldStrengthPair eb_from_potential(const PolarizationVector& v) {
    auto pv = v.momentum.vec();
    ExactScalar F[4][4];
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) F[a][b] = I() * (pv[a] * v.v.c[b] - pv[b] * v.v.c[a]);
    FieldStrengthPair f;
    f.radicand = v.v.radicand;
    f.label = v.label;
    for (std::size_t i = 0; i < 3; ++i) {
        f.E[i] = -I() * F[3][i];
        ExactScalar s;
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) {
                int e = eps3(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
                if (e != 0) s += ExactScalar(e) * F[j][k];
            }
        f.B[i] = ExactScalar(Rational(-1, 2)) * s;
    }
    return f;
}

FieldStrengthPair eb_printed(const FourMomentum& p, const std::string& label) {
    require_mass(p);
    const Rational a = require_abs_p(p);
    const Rational& E = p.E();
    const std::array<ExactScalar, 3> pv{p.p(0), p.p(1), p.p(2)};
    const std::array<ExactScalar, 3> pt{p.p(1), -p.p(0), ExactScalar(0, -a)};
    const ExactScalar pr(p.p(0), p.p(1)), pl(p.p(0), -p.p(1));
    const ExactScalar pz = p.p(2);
    FieldStrengthPair f;
    f.label = label;
    if (label == "0") {
        for (std::size_t i = 0; i < 3; ++i) f.E[i] = ExactScalar(0, p.mass() / a) * pv[i];
        return f;
    }
    f.radicand = Rational(1, 2);  // the 1/sqrt(2)
    if (label == "+1") {
        if (pl.is_zero()) throw DegenerateInput("printed E/B(+1) singular at pt = 0");
        for (std::size_t i = 0; i < 3; ++i) {
            f.E[i] = -(I() * E * pz / (ExactScalar(a) * pl)) * pv[i] - (ExactScalar(E) / pl) * pt[i];
            f.B[i] = (pz / pl) * pv[i] - (ExactScalar(0, a) / pl) * pt[i];
        }
    } else if (label == "-1") {
        if (pr.is_zero()) throw DegenerateInput("printed E/B(-1) singular at pt = 0");
        for (std::size_t i = 0; i < 3; ++i) {
            f.E[i] = (I() * E * pz / (ExactScalar(a) * pr)) * pv[i] - (ExactScalar(E) / pr) * pt[i].conj();
            f.B[i] = (pz / pr) * pv[i] + (ExactScalar(0, a) / pr) * pt[i].conj();
        }
    } else {
        throw DegenerateInput("no printed E/B for label " + label);
    }
    return f;
}

bool same_fields(const FieldStrengthPair& a, const FieldStrengthPair& b) {
    RadicalVector ae{{a.E[0], a.E[1], a.E[2], a.B[0]}, a.radicand}, be{{b.E[0], b.E[1], b.E[2], b.B[0]}, b.radicand};
    RadicalVector ab{{a.B[1], a.B[2], 0, 0}, a.radicand}, bb{{b.B[1], b.B[2], 0, 0}, b.radicand};
    return ae == be && ab == bb;
}

ExactMatrix notoph_tensor(const FourMomentum& p, const Rational& N) {
    require_mass(p);
    const Rational& m = p.mass();
    const Rational &p1 = p.p(0), &p2 = p.p(1), &p3 = p.p(2);
    Rational d = p.E() + m;
    Rational t = m + (p1 * p1 + p2 * p2) / d;  // m + p_r p_l / (p0 + m)
    ExactMatrix A{{0, -p2, p1, 0},
                  {p2, 0, t, p2 * p3 / d},
                  {-p1, -t, 0, -p1 * p3 / d},
                  {0, -p2 * p3 / d, p1 * p3 / d, 0}};
    return A * ExactScalar(0, N * N / m);
}

ExactMatrix notoph_from_wedge(const FourMomentum& p, const Rational& N) {
    ExactMatrix L = boost_matrix(p);
    auto mink = [&](std::size_t col) {
        std::array<ExactScalar, 4> v{I() * L(3, col), L(0, col), L(1, col), L(2, col)};
        return v;
    };
    auto e1 = mink(0), e2 = mink(1);
    ExactMatrix A(4, 4);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) A(a, b) = ExactScalar(0, N * N) * (e1[a] * e2[b] - e1[b] * e2[a]);
    return A;
}

BasisChange standard_to_helicity(const FourMomentum& p, const HelicityPhases& ph) {
    auto S = standard_basis(p);
    auto H = helicity_basis(p.reversed(), ph);
    ExactMatrix Sc(4, 4), Hc(4, 4);
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t i = 0; i < 4; ++i) {
            Sc(i, k) = S[k].v.c[i];
            Hc(i, k) = H[k].v.c[i];
        }
    // C = Ds^-1 X Dh with X = Sc^-1 Hc, D = diag(sqrt(radicands));
    // C^dagger C = Dh X^dagger Ds^-2 X Dh, all rational once squared
    ExactMatrix X = inverse(Sc) * Hc;
    ExactMatrix Dsm2(4, 4);
    for (std::size_t k = 0; k < 4; ++k) Dsm2(k, k) = Rational(1) / S[k].v.radicand;
    ExactMatrix G = X.adjoint() * Dsm2 * X;
    BasisChange out;
    out.unitary = true;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            if (i == j) {
                if (G(i, i) * ExactScalar(H[i].v.radicand) != 1) out.unitary = false;
            } else if (!G(i, j).is_zero()) {
                out.unitary = false;
            }
            double s = std::sqrt(Rational(H[j].v.radicand / S[i].v.radicand).get_d());
            out.C[i][j] = s * X(i, j).to_complex();
        }
    return out;
}

// ---------------------------------------------------------------- float path

double FloatMomentum::E() const { return std::sqrt(m * m + p1 * p1 + p2 * p2 + p3 * p3); }

std::array<CVec4, 4> helicity_basis_float(const FloatMomentum& p, double alpha, double beta) {
    using C = std::complex<double>;
    const C i(0, 1);
    double a = std::sqrt(p.p1 * p.p1 + p.p2 * p.p2 + p.p3 * p.p3);
    double t = std::hypot(p.p1, p.p2);
    if (a == 0 || p.m <= 0) throw DegenerateInput("helicity basis needs |p| > 0 and m > 0");
    const double r = 1 / std::sqrt(2.0);
    C ea = std::polar(1.0, alpha), eb = std::polar(1.0, beta);
    std::array<CVec4, 4> b;
    if (t > 0) {
        b[0] = {(-p.p1 * p.p3 + i * p.p2 * a) / t, (-p.p2 * p.p3 - i * p.p1 * a) / t, t, 0};
        b[1] = {(p.p1 * p.p3 + i * p.p2 * a) / t, (p.p2 * p.p3 - i * p.p1 * a) / t, -t, 0};
    } else {
        b[0] = {-p.p3, -i * a, 0, 0};
        b[1] = {p.p3, -i * a, 0, 0};
    }
    for (auto& x : b[0]) x *= r * ea / a;
    for (auto& x : b[1]) x *= r * eb / a;
    double E = p.E();
    b[2] = {E * p.p1 / (a * p.m), E * p.p2 / (a * p.m), E * p.p3 / (a * p.m), i * a / p.m};
    b[3] = {p.p1 / p.m, p.p2 / p.m, p.p3 / p.m, i * E / p.m};
    return b;
}

std::array<CVec4, 4> standard_basis_float(const FloatMomentum& p) {
    using C = std::complex<double>;
    const C i(0, 1);
    if (p.m <= 0) throw DegenerateInput("m = 0: boost undefined");
    double E = p.E();
    double pv[3] = {p.p1, p.p2, p.p3};
    C L[4][4] = {};
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) L[r][c] = (r == c ? 1.0 : 0.0) + pv[r] * pv[c] / (p.m * (E + p.m));
        L[r][3] = i * pv[r] / p.m;
        L[3][r] = -i * pv[r] / p.m;
    }
    L[3][3] = E / p.m;
    const double s = 1 / std::sqrt(2.0);
    const CVec4 rest[4] = {{-s, -i * s, 0, 0}, {s, -i * s, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, i}};
    std::array<CVec4, 4> b{};
    for (int k = 0; k < 4; ++k)
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) b[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] += L[r][c] * rest[k][c];
    return b;
}

double completeness_defect_float(const std::array<CVec4, 4>& b) {
    double worst = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            std::complex<double> s = 0;
            for (std::size_t k = 0; k < 4; ++k) {
                std::complex<double> bar = std::conj(b[k][j]) * (j == 3 ? -1.0 : 1.0);
                s += static_cast<double>(kEta[k]) * b[k][i] * bar;
            }
            worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

double helicity_defect_float(const FloatMomentum& p, const std::array<CVec4, 4>& b) {
    double a = std::sqrt(p.p1 * p.p1 + p.p2 * p.p2 + p.p3 * p.p3);
    double pv[3] = {p.p1, p.p2, p.p3};
    const double lam[4] = {1, -1, 0, 0};
    double worst = 0;
    for (std::size_t k = 0; k < 4; ++k)
        for (int i = 0; i < 3; ++i) {
            std::complex<double> s = 0;
            for (int j = 0; j < 3; ++j)
                for (int q = 0; q < 3; ++q)
                    s += std::complex<double>(0, -eps3(q, i, j) * pv[q] / a) * b[k][static_cast<std::size_t>(j)];
            worst = std::max(worst, std::abs(s - lam[k] * b[k][static_cast<std::size_t>(i)]));
        }
    return worst;
}

}  // namespace bwkit
