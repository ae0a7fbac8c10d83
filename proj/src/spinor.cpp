#include "bwkit/spinor.hpp"

#include "bwkit/indices.hpp"

namespace bwkit {

namespace {

ExactMatrix block2(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c, const ExactMatrix& d) {
    ExactMatrix m(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            m(i, j) = a(i, j);
            m(i, j + 2) = b(i, j);
            m(i + 2, j) = c(i, j);
            m(i + 2, j + 2) = d(i, j);
        }
    return m;
}

std::array<ExactMatrix, 3> pauli() {
    const ExactScalar I = ExactScalar::i();
    return {ExactMatrix{{0, 1}, {1, 0}}, ExactMatrix{{0, -I}, {I, 0}}, ExactMatrix{{1, 0}, {0, -1}}};
}

bool is_symmetric(const ExactMatrix& m) { return m.transpose() == m; }
bool is_antisymmetric(const ExactMatrix& m) { return m.transpose() == -m; }

}  // namespace

ExactScalar unit_phase(const Rational& phase) {
    Rational twice = phase * 2;
    if (twice.get_den() != 1) throw std::invalid_argument("phase must be a multiple of pi/2 for exact R");
    mpz_class k = twice.get_num() % 4;
    if (k < 0) k += 4;
    switch (k.get_si()) {
        case 0: return 1;
        case 1: return ExactScalar::i();
        case 2: return -1;
        default: return -ExactScalar::i();
    }
}

ExactMatrix DiracSet::sig(int mu, int nu) const {
    if (mu == nu) return ExactMatrix(4, 4);
    const ExactMatrix& s = sigma[static_cast<std::size_t>(pair_index(mu, nu))];
    return mu < nu ? s : -s;
}

DiracSet build_dirac_set(const Rational& phase) {
    DiracSet d;
    const ExactScalar I = ExactScalar::i();
    const ExactMatrix Z(2, 2), I2 = ExactMatrix::identity(2);
    auto s = pauli();
    for (std::size_t k = 0; k < 3; ++k) d.gamma[k] = block2(Z, -I * s[k], I * s[k], Z);
    d.gamma[3] = block2(Z, I2, I2, Z);
    d.gamma5 = d.gamma[0] * d.gamma[1] * d.gamma[2] * d.gamma[3];
    for (int k = 0; k < 6; ++k) {
        auto [a, b] = kPairs[static_cast<std::size_t>(k)];
        d.sigma[static_cast<std::size_t>(k)] =
            ExactScalar(Rational(0), Rational(1, 2)) * commutator(d.gamma[static_cast<std::size_t>(a)], d.gamma[static_cast<std::size_t>(b)]);
    }
    ExactMatrix theta{{0, -1}, {1, 0}};
    d.phase = phase;
    ExactScalar e = unit_phase(phase);
    d.R = e * block2(theta, Z, Z, -theta);
    // R^2 = -e^2 I
    d.Rinv = (ExactScalar(-1) / (e * e)) * d.R;
    return d;
}

std::vector<RPropertyCheck> r_properties(const DiracSet& d) {
    std::vector<RPropertyCheck> out;
    const ExactMatrix I4 = ExactMatrix::identity(4);
    out.push_back({"R^-1 R = 1", d.Rinv * d.R == I4});
    out.push_back({"R^T = -R", is_antisymmetric(d.R)});
    out.push_back({"R^dagger = R", d.R.adjoint() == d.R});
    out.push_back({"R = R^-1", d.R == d.Rinv});
    out.push_back({"R^-1 g5 R = g5^T", d.Rinv * d.gamma5 * d.R == d.gamma5.transpose()});
    bool g = true, s = true;
    for (const auto& gm : d.gamma) g = g && (d.Rinv * gm * d.R == -gm.transpose());
    for (const auto& sm : d.sigma) s = s && (d.Rinv * sm * d.R == -sm.transpose());
    out.push_back({"R^-1 g_mu R = -g_mu^T", g});
    out.push_back({"R^-1 sigma_{mu nu} R = -sigma_{mu nu}^T", s});
    bool diag = true;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j && !d.gamma5(i, j).is_zero()) diag = false;
    out.push_back({"g5 diagonal", diag});
    return out;
}

SymmetricBasis classify_matrix_basis(const DiracSet& d) {
    SymmetricBasis b;
    for (int mu = 0; mu < 4; ++mu) {
        b.symmetric.push_back(d.gamma[static_cast<std::size_t>(mu)] * d.R);
        b.labels.push_back("g" + std::to_string(mu + 1) + "R");
    }
    for (int k = 0; k < 6; ++k) {
        b.symmetric.push_back(d.sigma[static_cast<std::size_t>(k)] * d.R);
        b.labels.push_back("s" + pair_label(k) + "R");
    }
    b.antisymmetric.push_back(d.Rinv);
    b.labels.push_back("R^-1");
    b.antisymmetric.push_back(d.Rinv * d.gamma5);
    b.labels.push_back("R^-1 g5");
    for (int l = 0; l < 4; ++l) {
        b.antisymmetric.push_back(d.Rinv * d.gamma5 * d.gamma[static_cast<std::size_t>(l)]);
        b.labels.push_back("R^-1 g5 g" + std::to_string(l + 1));
    }
    for (const auto& m : b.symmetric)
        if (!is_symmetric(m)) throw std::logic_error("representation error: expected symmetric matrix");
    for (const auto& m : b.antisymmetric)
        if (!is_antisymmetric(m)) throw std::logic_error("representation error: expected antisymmetric matrix");
    std::vector<std::vector<ExactScalar>> rows;
    for (const auto& m : b.symmetric) rows.push_back(m.vec());
    b.symmetric_rank = rank_of(stack_rows(rows, 16));
    rows.clear();
    for (const auto& m : b.antisymmetric) rows.push_back(m.vec());
    b.antisymmetric_rank = rank_of(stack_rows(rows, 16));
    if (b.symmetric_rank != 10 || b.antisymmetric_rank != 6)
        throw std::logic_error("representation error: expansion basis is rank deficient");
    // gamma5 sigma_{mu nu} = c sigma_{kappa tau}: exhaustive search
    for (int k = 0; k < 6; ++k) {
        ExactMatrix g5s = d.gamma5 * d.sigma[static_cast<std::size_t>(k)];
        for (int q = 0; q < 6; ++q) {
            const ExactMatrix& s = d.sigma[static_cast<std::size_t>(q)];
            // find c from the first nonzero entry, then confirm
            ExactScalar c;
            bool found = false;
            for (std::size_t i = 0; i < 4 && !found; ++i)
                for (std::size_t j = 0; j < 4 && !found; ++j)
                    if (!s(i, j).is_zero()) {
                        c = g5s(i, j) / s(i, j);
                        found = true;
                    }
            if (found && !c.is_zero() && c * s == g5s) {
                b.duality.push_back({k, q, c});
                break;
            }
        }
    }
    return b;
}

DiracSpectrum generalized_dirac_spectrum(const Rational& m1, const Rational& m2) {
    // i g.p + m1 + m2 g5 in the rest frame, p4 = iE: i g4 (iE) = -E g4
    DiracSet d = build_dirac_set();
    PolyMatrix op(4, std::vector<ExactPoly>(4));
    ExactMatrix c0 = ExactScalar(m1) * ExactMatrix::identity(4) + ExactScalar(m2) * d.gamma5;
    ExactMatrix c1 = -d.gamma[3];
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) op[i][j] = ExactPoly({c0(i, j), c1(i, j)});
    DiracSpectrum s;
    s.det = det_poly(op);
    // det is even in E: read it in x = E^2
    std::vector<ExactScalar> even;
    for (std::size_t k = 0; k < s.det.coeffs().size(); ++k) {
        if (k % 2 == 1 && !s.det.coeffs()[k].is_zero())
            throw std::logic_error("rest-frame determinant is not even in E");
        if (k % 2 == 0) even.push_back(s.det.coeffs()[k]);
    }
    RootReport r = rational_root_masses(ExactPoly(even));
    if (r.roots.size() != 1 || !r.fully_resolved())
        throw std::logic_error("unexpected generalized Dirac determinant");
    s.mass2 = r.roots[0].root;
    s.multiplicity = r.roots[0].multiplicity;
    s.tachyonic = s.mass2 < 0;
    return s;
}

Rational barut_mass_ratio(const Rational& alpha) {
    if (alpha == 0) throw std::domain_error("alpha = 0");
    Rational r = 1 + Rational(3) / (2 * alpha);
    r.canonicalize();
    return r;
}

}  // namespace bwkit
