#pragma once

// Standard and helicity polarization vectors of the (1/2,1/2) field, the boost,
// parity / helicity checks, E and B from the potential, the notoph tensor.

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "bwkit/exact.hpp"
#include "bwkit/momentum.hpp"

namespace bwkit {

// sqrt(radicand) * c, radicand > 0 rational: carries the 1/sqrt(2) factors exactly
struct RadicalVector {
    std::array<ExactScalar, 4> c{};
    Rational radicand = 1;

    std::array<std::complex<double>, 4> to_complex() const;
    bool is_zero() const;
    // exact equality of sqrt(r1) c1 and sqrt(r2) c2
    friend bool operator==(const RadicalVector& a, const RadicalVector& b);
};

// proportionality a = k b with k = sqrt(q) * z; returns nullopt if not proportional
struct RadicalScalar {
    ExactScalar z;
    Rational radicand = 1;
};
std::optional<RadicalScalar> proportionality(const RadicalVector& a, const RadicalVector& b);

enum class Basis { standard, helicity };

struct PolarizationVector {
    RadicalVector v;
    std::string label;  // "+1", "-1", "0", "0t"
    Basis basis = Basis::standard;
    FourMomentum momentum;
    Rational N = 1;
};

std::optional<Rational> exact_sqrt(const Rational& q);

std::array<PolarizationVector, 4> rest_frame_basis();
ExactMatrix boost_matrix(const FourMomentum& p);
std::array<PolarizationVector, 4> standard_basis(const FourMomentum& p, const Rational& N = 1);
ExactMatrix helicity_operator(const FourMomentum& p);  // needs rational |p|

struct HelicityPhases {
    ExactScalar plus = 1, minus = 1;  // exp(i alpha), exp(i beta); unit modulus
};
// pt = 0: limit of the printed vectors along the azimuth 0 (px > 0, py = 0)
std::array<PolarizationVector, 4> helicity_basis(const FourMomentum& p, const HelicityPhases& ph = {});

RadicalVector apply(const ExactMatrix& m, const RadicalVector& v);
// gamma_44 u(-p): the parity image used in the eigen-relations
RadicalVector parity_image(const PolarizationVector& at_minus_p);
// (v1*, v2*, v3*, -v4*): the conjugate matching x4 = it
RadicalVector covariant_conj(const RadicalVector& v);

// sum_s eta_s e_mu e~_nu with eta = (+,+,+,-) in label order (+1,-1,0,0t)
ExactMatrix completeness(const std::array<PolarizationVector, 4>& b);

struct ParityReport {
    std::array<int, 4> eigenvalues{};   // 0 where the relation fails
    std::array<bool, 4> is_eigen{};
    // helicity only: P e_{+1}(-p) = c e_{-1}(p), P e_{-1}(-p) = c' e_{+1}(p)
    std::optional<RadicalScalar> cross_plus, cross_minus;
};
ParityReport parity_check(const FourMomentum& p, Basis basis, const HelicityPhases& ph = {});

// helicity eigenvalues of the four vectors (exact), nullopt where not an eigenvector
std::array<std::optional<int>, 4> helicity_eigenvalues(const std::array<PolarizationVector, 4>& b);

struct FieldStrengthPair {
    std::array<ExactScalar, 3> E{}, B{};
    Rational radicand = 1;
    std::string label;
};
// F = i(p e - e p), E_i = -i F_{4i}, B_i = -(1/2) eps_ijk F_jk
FieldStrengthPair eb_from_potential(const PolarizationVector& v);
// printed closed forms for lambda = +1, -1, 0 (p~ = (py, -px, -ip))
FieldStrengthPair eb_printed(const FourMomentum& p, const std::string& label);
bool same_fields(const FieldStrengthPair& a, const FieldStrengthPair& b);

// time-first (0,1,2,3) antisymmetric matrix, the printed display
ExactMatrix notoph_tensor(const FourMomentum& p, const Rational& N = 1);
// i N^2 (e1 ^ e2) from the boosted transverse vectors, v^0 = i v_4
ExactMatrix notoph_from_wedge(const FourMomentum& p, const Rational& N = 1);

// Change of basis C with helicity(-p) = standard(p) C.  The boost convention
// carries the standard vectors toward -p, so this is the pairing that is unitary.
struct BasisChange {
    std::array<std::array<std::complex<double>, 4>, 4> C{};
    bool unitary = false;  // decided exactly
};
BasisChange standard_to_helicity(const FourMomentum& p, const HelicityPhases& ph = {});

// ---- float path for generic momenta
using CVec4 = std::array<std::complex<double>, 4>;
struct FloatMomentum {
    double p1, p2, p3, m;
    double E() const;
};
std::array<CVec4, 4> helicity_basis_float(const FloatMomentum& p, double alpha = 0, double beta = 0);
std::array<CVec4, 4> standard_basis_float(const FloatMomentum& p);
double completeness_defect_float(const std::array<CVec4, 4>& b);  // max |sum - delta|
double helicity_defect_float(const FloatMomentum& p, const std::array<CVec4, 4>& b);

}  // namespace bwkit
