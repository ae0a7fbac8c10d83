#pragma once

// (1/2,1/2): [gamma_{ab}]_{mu nu}, gamma_{5,ab}, the (A,B,m) wave operator,
// its Lagrangian, and the mass spectrum read off det_poly.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bwkit/exact.hpp"
#include "bwkit/momentum.hpp"

namespace bwkit {

using Family = std::array<std::array<ExactMatrix, 4>, 4>;

struct VectorRepSet {
    Family gamma;   // symmetric in (a b)
    Family gamma5;  // antisymmetric in (a b)
    ExactMatrix parity;  // gamma_44
};

VectorRepSet build_vector_rep();       // from the delta formula
Family printed_gamma_tables();         // hard-coded display, (a b) and (b a) both filled
Family printed_gamma5_tables();
Family build_gamma5(const VectorRepSet& v);  // (i/6) sum_k [g_{ak}, g_{bk}]
ExactMatrix gamma5_closed_form(int a, int b);

struct WaveOperatorParams {
    Rational A, B, m = 1;
};

// gamma_{ab} p_a p_b + A p^2 + B m^2  (d -> ip applied to the derivative equation,
// overall sign flipped)
ExactMatrix wave_operator(const FourMomentum& p, const WaveOperatorParams& w);

// rest frame, m = 1, variable x = E^2/m^2 (p4 p4 = -x)
PolyMatrix rest_frame_wave_poly(const Rational& A, const Rational& B);

struct SpectrumBranch {
    int spin = 0;
    std::optional<Rational> mass2_ratio;  // mass^2 / m^2
    std::size_t multiplicity = 0;
    std::string status;  // "finite", "absent" (root at infinity), "indefinite" (every mass)
};

struct Spectrum {
    ExactPoly det;  // in x = mass^2/m^2, on the non-degenerate sectors
    std::vector<SpectrumBranch> branches;
    std::vector<std::complex<double>> unresolved;  // non-exact leftovers, if any
    std::optional<Rational> mass2(int spin) const;
};

Spectrum dispersion_spectrum(const WaveOperatorParams& w);

struct SplitOperators {
    WaveOperatorParams spin0_eq, spin1_eq;
    std::optional<Rational> spin1_parasite;  // on the spin-0 equation: B/(B+2)
    std::optional<Rational> spin0_parasite;  // on the spin-1 equation: B/(B-2)
    bool cross_checked = false;
};
SplitOperators spin_split_operators(const Rational& B);
Rational parasite_inverse_spin0(const Rational& target);  // solves B/(B-2) = target

// L = (dB*_mu)_a K[a][mu][b][nu] (dB_nu)_b + B*_mu M[mu][nu] B_nu
struct QuadraticLagrangian {
    std::array<std::array<std::array<std::array<ExactScalar, 4>, 4>, 4>, 4> K{};
    ExactMatrix M = ExactMatrix(4, 4);
};
QuadraticLagrangian vector_lagrangian(const WaveOperatorParams& w);
// Euler-Lagrange operator for B*_mu, plane waves: sum K p_a p_b + M
ExactMatrix euler_lagrange_operator(const QuadraticLagrangian& L, const FourMomentum& p);

struct LagrangianReport {
    bool el_matches = false;          // at every sample momentum
    std::size_t samples = 0;
    bool expanded_identity = false;   // K = (A+1) T1 - T2 - T3 entrywise
    bool total_derivative_identity = false;  // symbol of dGamma = S3 - S2
    bool total_derivative_removes_both = true;  // expected false
    std::size_t rank_coefficient = 0, rank_augmented = 0;
};
LagrangianReport lagrangian_consistency(const WaveOperatorParams& w,
                                        const std::vector<FourMomentum>& samples);

}  // namespace bwkit
