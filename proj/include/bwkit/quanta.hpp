#pragma once

// Field-operator relations (spin 1/2, bivector, four-vector), the vector-field
// propagator, and plane-wave densities T_{mu nu}, J_lambda and the spin part.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bwkit/exact.hpp"
#include "bwkit/momentum.hpp"
#include "bwkit/polarization.hpp"
#include "bwkit/vector_rep.hpp"

namespace bwkit {

struct NormalizationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

using Direction = std::array<Rational, 3>;

struct OperatorRelation {
    std::string representation;  // "spin-half", "bivector"
    ExactMatrix matrix;
    ExactMatrix generator_square;  // (sigma.n)^2 or (S.n)^2
    bool involution = false;       // generator^2 = 1 resp. matrix^2 = 1
    bool self_consistent = false;  // spin-half: i(s.n) (-i)(s.n) = 1
};

// Lambda = -i m (sigma.n); NormalizationError unless |n| = 1
OperatorRelation spin_half_relation(const Direction& n, const Rational& m);
// 1 - 2 (S.n)^2 with (S_k)_{ij} = -i eps_{kij} (Cartesian components)
OperatorRelation bivector_relation(const Direction& n);
// the same matrix in the S_z eigenbasis (+1, 0, -1); entries sqrt(radicand) z
std::array<std::array<RadicalScalar, 3>, 3> bivector_relation_spherical(const Direction& n);

// Rows and columns ordered (0t, +1, -1, 0) as in the printed displays.  e(k, s) is the
// standard vector transverse to k, i.e. standard_basis(-k).
using RadicalMatrix4 = std::array<std::array<RadicalScalar, 4>, 4>;

struct RowComparison {
    std::optional<RadicalScalar> scale;  // printed row = scale * computed row
    std::size_t entries_equal = 0;       // with scale 1
};
struct MatrixComparison {
    std::string printed, contraction;    // "bdagger"/"a", "plain"/"conjugated"
    std::array<RowComparison, 4> rows{};
    bool identical = false;
    bool proportional_rows = false;
    std::array<int, 4> sign_table{};     // +-1 where the row scale is +-1, else 0
};
struct VectorRelationReport {
    RadicalMatrix4 plain{}, conjugated{};        // sum e_nu(k,s) [g44]_{nu mu} e_mu(-k,l), with e* in the second
    RadicalMatrix4 printed_bdagger{}, printed_bdagger_amended{}, printed_a{};
    std::vector<MatrixComparison> comparisons;   // printed x contraction
};
// needs on-shell k with m != 0 and E > 0
VectorRelationReport vector_rep_relations(const FourMomentum& k);
// amended: 2 k3^2/k^2 instead of the displayed 2 k3/k^2 in the last entry
RadicalMatrix4 printed_bdagger_matrix(const FourMomentum& k, bool amended = false);
RadicalMatrix4 printed_a_matrix(const FourMomentum& k);
bool radical_equal(const RadicalScalar& a, const RadicalScalar& b);

// (delta + k k / mu^2)/(k^2 + mu^2) - (k k / mu^2)/(k^2 + m^2), Euclidean k^2
ExactMatrix propagator(const FourMomentum& k, const Rational& m, const Rational& mu);
// coefficient of k_mu k_nu as a rational function of s = k^2
struct PropagatorDecay {
    ExactPoly numerator, denominator;
    int combined_decay = 0;  // deg den - deg num
    int single_decay = 1;    // each term alone
};
PropagatorDecay propagator_kk_coefficient(const Rational& m, const Rational& mu);

struct PlaneWaveInvariants {
    ExactMatrix T = ExactMatrix(4, 4), T_scalar = ExactMatrix(4, 4);
    std::array<ExactScalar, 4> J{}, J_scalar{};
    std::array<ExactScalar, 6> S{};  // spin density S_{mu a,4}, lexicographic pairs
    ExactScalar lagrangian;
    bool scalar_portion_zero = false;
};
// B_mu = eps_mu exp(ikx); B* via the covariant conjugate
PlaneWaveInvariants dynamical_invariants(const FourMomentum& p, const RadicalVector& eps,
                                         const WaveOperatorParams& w);

// weak Lorentz condition (a_0t - a_0)|phi> = 0 on amplitudes in label order (+1, -1, 0, 0t)
bool weak_lorentz_admits(const std::array<ExactScalar, 4>& amplitudes);
// sum_s c_s e(p, s) over standard_basis(-p) (transverse to p), the sqrt(1/2) of e(+-1) stripped so the result has radicand 1;
// filter = true rejects amplitudes violating the weak condition
RadicalVector mode_superposition(const FourMomentum& p, const std::array<ExactScalar, 4>& amplitudes,
                                 bool filter = false);

}  // namespace bwkit
