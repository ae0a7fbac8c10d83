#include "bwkit/quanta.hpp"

#include "bwkit/indices.hpp"

namespace bwkit {

namespace {

std::size_t us(int v) { return static_cast<std::size_t>(v); }
ExactScalar I() { return ExactScalar::i(); }

void require_unit(const Direction& n) {
    if (n[0] * n[0] + n[1] * n[1] + n[2] * n[2] != 1) throw NormalizationError("direction is not a unit vector");
}

RadicalScalar simplify(RadicalScalar s) {
    if (s.z.is_zero()) return {ExactScalar(0), Rational(1)};
    if (auto q = exact_sqrt(s.radicand)) return {s.z * ExactScalar(*q), Rational(1)};
    return s;
}

// label order of the polarization module: (+1, -1, 0, 0t); printed order (0t, +1, -1, 0)
constexpr std::array<std::size_t, 4> kPrintedOrder{3, 0, 1, 2};

}  // namespace

OperatorRelation spin_half_relation(const Direction& n, const Rational& m) {
    require_unit(n);
    ExactMatrix sn{{ExactScalar(n[2]), ExactScalar(n[0], -n[1])}, {ExactScalar(n[0], n[1]), ExactScalar(-n[2])}};
    OperatorRelation r;
    r.representation = "spin-half";
    r.matrix = ExactScalar(Rational(0), Rational(-m)) * sn;
    r.generator_square = sn * sn;
    r.involution = r.generator_square == ExactMatrix::identity(2);
    r.self_consistent = (I() * sn) * (-I() * sn) == ExactMatrix::identity(2);
    return r;
}

OperatorRelation bivector_relation(const Direction& n) {
    require_unit(n);
    ExactMatrix sn(3, 3);
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (int e = eps3(k, i, j)) sn(us(i), us(j)) += ExactScalar(Rational(0), Rational(-e) * n[us(k)]);
    OperatorRelation r;
    r.representation = "bivector";
    r.generator_square = sn * sn;
    r.matrix = ExactMatrix::identity(3) - ExactScalar(2) * r.generator_square;
    r.involution = r.matrix * r.matrix == ExactMatrix::identity(3);
    r.self_consistent = r.involution;
    return r;
}

std::array<std::array<RadicalScalar, 3>, 3> bivector_relation_spherical(const Direction& n) {
    ExactMatrix M = bivector_relation(n).matrix;
    // e_{+1} = -(x + i y)/sqrt2, e_0 = z, e_{-1} = (x - i y)/sqrt2
    const std::array<RadicalVector, 3> e{
        RadicalVector{{ExactScalar(-1), -I(), ExactScalar(0), ExactScalar(0)}, Rational(1, 2)},
        RadicalVector{{ExactScalar(0), ExactScalar(0), ExactScalar(1), ExactScalar(0)}, Rational(1)},
        RadicalVector{{ExactScalar(1), -I(), ExactScalar(0), ExactScalar(0)}, Rational(1, 2)}};
    std::array<std::array<RadicalScalar, 3>, 3> out;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            ExactScalar z;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) z += e[a].c[i].conj() * M(i, j) * e[b].c[j];
            out[a][b] = simplify({z, e[a].radicand * e[b].radicand});
        }
    return out;
}

bool radical_equal(const RadicalScalar& a, const RadicalScalar& b) {
    if (a.z.is_zero() || b.z.is_zero()) return a.z.is_zero() && b.z.is_zero();
    auto q = exact_sqrt(a.radicand / b.radicand);
    return q && a.z * ExactScalar(*q) == b.z;
}

RadicalMatrix4 printed_bdagger_matrix(const FourMomentum& k, bool amended) {
    const Rational E = k.E(), m = k.mass(), k2 = k.spatial2(), k3 = k.p(2);
    const ExactScalar kr(k.p(0), k.p(1)), kl(k.p(0), -k.p(1));
    const Rational pre = E * E / (m * m);
    auto r1 = [&](const ExactScalar& z) { return RadicalScalar{ExactScalar(pre) * z, Rational(1)}; };
    auto r2 = [&](const ExactScalar& z) { return RadicalScalar{ExactScalar(pre) * z, Rational(2)}; };
    const ExactScalar iE(Rational(1) / E), ik2(Rational(1) / k2), iE2(Rational(1) / (E * E));
    const ExactScalar cross = ExactScalar(-m * m * k3 * k3 / (E * E * k2)) + kr * kl * iE2;
    RadicalMatrix4 P;
    P[0] = {r1(ExactScalar(1 + k2 / (E * E))), r2(kr * iE), r2(-kl * iE), r1(ExactScalar(-2 * k3 / E))};
    P[1] = {r2(-kr * iE), r1(-kr * kr * ik2), r1(cross), r2(ExactScalar(k3) * kr * ik2)};
    P[2] = {r2(kl * iE), r1(cross), r1(-kl * kl * ik2), r2(-ExactScalar(k3) * kl * ik2)};
    // displayed: 2 k3 / k^2 in the last entry; amended: 2 k3^2 / k^2
    const Rational last = m * m / (E * E) - 2 * (amended ? k3 * k3 : k3) / k2;
    P[3] = {r1(ExactScalar(2 * k3 / E)), r2(ExactScalar(k3) * kr * ik2), r2(-ExactScalar(k3) * kl * ik2),
            r1(ExactScalar(last))};
    for (auto& row : P)
        for (auto& x : row) x = simplify(x);
    return P;
}

RadicalMatrix4 printed_a_matrix(const FourMomentum& k) {
    const Rational k2 = k.spatial2(), k3 = k.p(2);
    const ExactScalar kr(k.p(0), k.p(1)), kl(k.p(0), -k.p(1));
    const ExactScalar ik2(Rational(1) / k2), K3(k3);
    auto r1 = [](const ExactScalar& z) { return RadicalScalar{z, Rational(1)}; };
    auto r2 = [](const ExactScalar& z) { return RadicalScalar{z, Rational(2)}; };
    const RadicalScalar zero = r1(0);
    RadicalMatrix4 P;
    P[0] = {r1(-1), zero, zero, zero};
    P[1] = {zero, r1(K3 * K3 * ik2), r1(kl * kl * ik2), r2(K3 * kl * ik2)};
    P[2] = {zero, r1(kr * kr * ik2), r1(K3 * K3 * ik2), r2(-K3 * kr * ik2)};
    P[3] = {zero, r2(K3 * kr * ik2), r2(-K3 * kl * ik2), r1(ExactScalar(1 - 2 * k3 * k3 / k2))};
    for (auto& row : P)
        for (auto& x : row) x = simplify(x);
    return P;
}

namespace {

MatrixComparison compare(const std::string& pname, const RadicalMatrix4& printed, const std::string& cname,
                         const RadicalMatrix4& computed) {
    MatrixComparison c{pname, cname, {}, true, true, {}};
    for (std::size_t s = 0; s < 4; ++s) {
        RowComparison& rc = c.rows[s];
        for (std::size_t l = 0; l < 4; ++l)
            if (radical_equal(printed[s][l], computed[s][l])) ++rc.entries_equal;
        if (rc.entries_equal != 4) c.identical = false;
        // candidate scale from the first nonzero computed entry
        std::size_t j = 0;
        while (j < 4 && computed[s][j].z.is_zero()) ++j;
        if (j < 4) {
            RadicalScalar k = simplify({printed[s][j].z / computed[s][j].z, printed[s][j].radicand / computed[s][j].radicand});
            bool ok = !k.z.is_zero();
            for (std::size_t l = 0; l < 4 && ok; ++l) {
                RadicalScalar scaled = simplify({k.z * computed[s][l].z, k.radicand * computed[s][l].radicand});
                ok = radical_equal(scaled, printed[s][l]);
            }
            if (ok) rc.scale = k;
        }
        if (!rc.scale) c.proportional_rows = false;
        if (rc.scale && rc.scale->radicand == 1 && rc.scale->z.is_real() &&
            (rc.scale->z.re == 1 || rc.scale->z.re == -1))
            c.sign_table[s] = rc.scale->z.re == 1 ? 1 : -1;
    }
    return c;
}

}  // namespace

VectorRelationReport vector_rep_relations(const FourMomentum& k) {
    if (!k.is_on_shell() || sgn(k.mass()) <= 0) throw DegenerateInput("massless or off-shell k: e(0) undefined");
    if (sgn(k.E()) <= 0) throw DegenerateInput("E = 0: the positive/negative frequency split is ill-defined");
    if (sgn(k.spatial2()) == 0) throw DegenerateInput("k = 0: the printed matrices divide by |k|^2");
    const ExactMatrix g44 = build_vector_rep().parity;
    // e(k, s) is the standard vector transverse to k; the boost attaches it to -k
    auto at_k = standard_basis(k.reversed()), at_mk = standard_basis(k);
    VectorRelationReport rep;
    for (std::size_t s = 0; s < 4; ++s)
        for (std::size_t l = 0; l < 4; ++l) {
            const RadicalVector& u = at_k[kPrintedOrder[s]].v;
            RadicalVector w = apply(g44, at_mk[kPrintedOrder[l]].v);
            ExactScalar plain, conj;
            for (std::size_t i = 0; i < 4; ++i) {
                plain += u.c[i] * w.c[i];
                conj += u.c[i].conj() * w.c[i];
            }
            rep.plain[s][l] = simplify({plain, u.radicand * w.radicand});
            rep.conjugated[s][l] = simplify({conj, u.radicand * w.radicand});
        }
    rep.printed_bdagger = printed_bdagger_matrix(k);
    rep.printed_bdagger_amended = printed_bdagger_matrix(k, true);
    rep.printed_a = printed_a_matrix(k);
    rep.comparisons.push_back(compare("bdagger", rep.printed_bdagger, "plain", rep.plain));
    rep.comparisons.push_back(compare("bdagger", rep.printed_bdagger, "conjugated", rep.conjugated));
    rep.comparisons.push_back(compare("bdagger-amended", rep.printed_bdagger_amended, "plain", rep.plain));
    rep.comparisons.push_back(compare("bdagger-amended", rep.printed_bdagger_amended, "conjugated", rep.conjugated));
    rep.comparisons.push_back(compare("a", rep.printed_a, "plain", rep.plain));
    rep.comparisons.push_back(compare("a", rep.printed_a, "conjugated", rep.conjugated));
    return rep;
}

ExactMatrix propagator(const FourMomentum& k, const Rational& m, const Rational& mu) {
    if (sgn(mu) == 0) throw DegenerateInput("mu = 0");
    const Rational k2 = k.p2();
    const Rational d1 = k2 + mu * mu, d2 = k2 + m * m;
    if (sgn(d1) == 0) throw PoleError("pole: k^2 + mu^2 = 0 at k^2 = " + rat_str(k2));
    if (sgn(d2) == 0) throw PoleError("pole: k^2 + m^2 = 0 at k^2 = " + rat_str(k2));
    const auto kv = k.vec();
    const ExactScalar a(Rational(1) / d1), b(Rational(1) / (mu * mu * d1) - Rational(1) / (mu * mu * d2));
    ExactMatrix P(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) P(i, j) = (i == j ? a : ExactScalar(0)) + b * kv[i] * kv[j];
    return P;
}

PropagatorDecay propagator_kk_coefficient(const Rational& m, const Rational& mu) {
    if (sgn(mu) == 0) throw DegenerateInput("mu = 0");
    // (1/mu^2) [1/(s + mu^2) - 1/(s + m^2)] = ((m^2 - mu^2)/mu^2) / ((s + mu^2)(s + m^2))
    PropagatorDecay d;
    d.numerator = ExactPoly(ExactScalar(Rational((m * m - mu * mu) / (mu * mu))));
    d.denominator = (ExactPoly::x() + ExactPoly(ExactScalar(Rational(mu * mu)))) *
                    (ExactPoly::x() + ExactPoly(ExactScalar(Rational(m * m))));
    d.combined_decay = d.numerator.is_zero() ? -1 : d.denominator.degree() - d.numerator.degree();
    return d;
}

PlaneWaveInvariants dynamical_invariants(const FourMomentum& p, const RadicalVector& eps,
                                         const WaveOperatorParams& w) {
    const auto k = p.vec();
    const RadicalVector bc = covariant_conj(eps);
    const ExactScalar r(eps.radicand);  // sqrt(r)^2 from each bilinear
    const ExactScalar A1(Rational(w.A + 1)), Bm2(Rational(w.B * w.m * w.m));
    // dB_a -> i k_mu b_a, dB*_a -> -i k_mu b~_a; the exponentials cancel in bilinears
    auto dB = [&](std::size_t mu, std::size_t a) { return I() * k[mu] * eps.c[a]; };
    auto dBc = [&](std::size_t mu, std::size_t a) { return -I() * k[mu] * bc.c[a]; };
    ExactScalar divB, divBc;
    for (std::size_t a = 0; a < 4; ++a) {
        divB += dB(a, a);
        divBc += dBc(a, a);
    }
    PlaneWaveInvariants out;
    ExactScalar L1, L2, L3, L4;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t mu = 0; mu < 4; ++mu) {
            L1 += dBc(a, mu) * dB(a, mu);
            L2 += dBc(a, mu) * dB(mu, a);
        }
    L3 = divBc * divB;
    for (std::size_t mu = 0; mu < 4; ++mu) L4 += bc.c[mu] * eps.c[mu];
    const ExactScalar L_scalar = -L2 - L3;
    out.lagrangian = r * (A1 * L1 + L_scalar + Bm2 * L4);

    for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t nu = 0; nu < 4; ++nu) {
            ExactScalar t1, t2;
            for (std::size_t a = 0; a < 4; ++a) {
                t1 += dBc(mu, a) * dB(nu, a) + dBc(nu, a) * dB(mu, a);
                t2 += dBc(a, mu) * dB(nu, a) + dBc(nu, a) * dB(a, mu);
            }
            ExactScalar t3 = divBc * dB(nu, mu) + dBc(nu, mu) * divB;
            ExactScalar delta = mu == nu ? ExactScalar(1) : ExactScalar(0);
            out.T_scalar(mu, nu) = r * (t2 + t3 + delta * L_scalar);
            out.T(mu, nu) = r * (-A1 * t1) + out.T_scalar(mu, nu) + delta * r * (A1 * L1 + Bm2 * L4);
        }

    for (std::size_t l = 0; l < 4; ++l) {
        ExactScalar j1, j2;
        for (std::size_t a = 0; a < 4; ++a) {
            j1 += dBc(l, a) * eps.c[a] - bc.c[a] * dB(l, a);
            j2 += bc.c[a] * dB(a, l) - dBc(a, l) * eps.c[a];
        }
        ExactScalar j3 = bc.c[l] * divB - divBc * eps.c[l];
        out.J_scalar[l] = -I() * r * (j2 + j3);
        out.J[l] = -I() * r * (A1 * j1) + out.J_scalar[l];
    }

    // dL/d(d_l B_k) and dL/d(d_l B*_k) at l = 4
    const std::size_t l4 = 3;
    std::array<ExactScalar, 4> pi, pic;
    for (std::size_t kk = 0; kk < 4; ++kk) {
        pi[kk] = A1 * dBc(l4, kk) - dBc(kk, l4) - (kk == l4 ? divBc : ExactScalar(0));
        pic[kk] = A1 * dB(l4, kk) - dB(kk, l4) - (kk == l4 ? divB : ExactScalar(0));
    }
    const VectorRepSet v = build_vector_rep();
    for (int q = 0; q < 6; ++q) {
        const ExactMatrix& g5 = v.gamma5[us(kPairs[us(q)][0])][us(kPairs[us(q)][1])];
        ExactScalar s;
        for (std::size_t kk = 0; kk < 4; ++kk)
            for (std::size_t t = 0; t < 4; ++t) s += pi[kk] * g5(kk, t) * eps.c[t] + bc.c[t] * g5(kk, t) * pic[kk];
        out.S[us(q)] = -I() * r * s;
    }

    out.scalar_portion_zero = out.T_scalar.is_zero();
    for (const auto& x : out.J_scalar)
        if (!x.is_zero()) out.scalar_portion_zero = false;
    return out;
}

bool weak_lorentz_admits(const std::array<ExactScalar, 4>& amplitudes) { return amplitudes[3] == amplitudes[2]; }

RadicalVector mode_superposition(const FourMomentum& p, const std::array<ExactScalar, 4>& amplitudes, bool filter) {
    if (filter && !weak_lorentz_admits(amplitudes))
        throw DegenerateInput("amplitudes violate the weak Lorentz condition (a_0t - a_0)|phi> = 0");
    auto b = standard_basis(p.reversed());  // transverse to p
    RadicalVector out{{}, Rational(1)};
    for (std::size_t s = 0; s < 4; ++s)
        for (std::size_t i = 0; i < 4; ++i) out.c[i] += amplitudes[s] * b[s].v.c[i];
    return out;
}

}  // namespace bwkit
