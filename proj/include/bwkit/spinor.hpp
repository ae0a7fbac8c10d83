#pragma once

// (1/2,0)+(0,1/2): chiral Euclidean gamma matrices, sigma_{mu nu}, the
// reflection matrix R and the symmetric / antisymmetric expansion bases.

#include <array>
#include <string>
#include <vector>

#include "bwkit/exact.hpp"

namespace bwkit {

struct DiracSet {
    std::array<ExactMatrix, 4> gamma;  // gamma_1..gamma_4, {g_mu, g_nu} = 2 delta
    ExactMatrix gamma5;                // g1 g2 g3 g4, diagonal
    std::array<ExactMatrix, 6> sigma;  // (i/2)[g_mu, g_nu], lexicographic pairs
    ExactMatrix R;
    ExactMatrix Rinv;
    Rational phase;                    // R carries exp(i*phase*pi)

    ExactMatrix sig(int mu, int nu) const;  // any order, zero on the diagonal
};

// phase in units of pi; only multiples of 1/2 have an exact exp(i phi) in Q(i).
// Default 1/2: the only phases for which R = R^-1 = R^dagger.
DiracSet build_dirac_set(const Rational& phase = Rational(1, 2));
ExactScalar unit_phase(const Rational& phase);

struct RPropertyCheck {
    std::string name;
    bool holds;
};
std::vector<RPropertyCheck> r_properties(const DiracSet& d);

struct DualityEntry {
    int pair;          // (mu nu)
    int partner;       // (kappa tau)
    ExactScalar coef;  // gamma5 sigma_{mu nu} = coef * sigma_{kappa tau}
};

struct SymmetricBasis {
    std::vector<ExactMatrix> symmetric;      // gamma_mu R (4), sigma_{mu nu} R (6)
    std::vector<ExactMatrix> antisymmetric;  // R^-1, R^-1 g5, R^-1 g5 g_lambda (4)
    std::vector<std::string> labels;         // symmetric labels then antisymmetric
    std::size_t symmetric_rank = 0;
    std::size_t antisymmetric_rank = 0;
    std::vector<DualityEntry> duality;
};

SymmetricBasis classify_matrix_basis(const DiracSet& d);

struct DiracSpectrum {
    Rational mass2;  // m1^2 - m2^2
    std::size_t multiplicity = 0;
    bool tachyonic = false;
    ExactPoly det;   // det of the rest-frame operator as a polynomial in E
};
DiracSpectrum generalized_dirac_spectrum(const Rational& m1, const Rational& m2);

Rational barut_mass_ratio(const Rational& alpha);

}  // namespace bwkit
