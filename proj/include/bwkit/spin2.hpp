#pragma once

// Rank-4 multispinor Psi_{{ab}{cd}} from tensor blocks, total symmetry as exact
// linear constraints, and the momentum-space first-order system.

#include <array>
#include <string>
#include <vector>

#include "bwkit/bw_spin1.hpp"
#include "bwkit/exact.hpp"
#include "bwkit/momentum.hpp"

namespace bwkit {

struct Spin2Coeffs {
    std::array<Rational, 3> alpha{1, 1, 1};
    std::array<Rational, 9> beta{1, 1, 1, 1, 1, 1, 1, 1, 1};
    static Spin2Coeffs standard();  // alpha3 = beta3 = beta6 = beta9 = 0, rest 1
    static Spin2Coeffs generic() { return {}; }
};

// Block order of the full 256-slot component vector:
//   G(16) F(24) Ft(24) T(24) R(36) Rt(36) Tt(24) Dt(36) D(36)
// G: 4k+mu, F/Ft: 4*pair(k t)+mu, T/Tt: 6k+pair(mu nu), R/Rt/D/Dt: 6*pair(k t)+pair(mu nu)
struct Spin2Block {
    std::string name;
    std::size_t offset, size;
};
const std::vector<Spin2Block>& spin2_blocks();
std::vector<std::string> spin2_labels(bool full);
// standard 100 slots (G F T R) -> positions in the 256 layout
std::vector<std::size_t> standard_embedding();

struct MultispinorMap {
    ExactMatrix matrix;  // 256 spinor slots (a b c d row-major) x component slots
    std::vector<std::string> labels;
    std::vector<std::string> active_blocks;
};

// full = false: the 100 standard slots; potential_phase: multiply each gamma R by i
MultispinorMap multispinor_map(const Spin2Coeffs& c, bool full, bool potential_phase = false);
std::vector<ExactScalar> assemble_multispinor(const Spin2Coeffs& c, const std::vector<ExactScalar>& components,
                                              bool full = true);

enum class SymmetryConstruction { transposition, contraction };

struct SymmetryReport {
    ConstraintSystem system;
    std::size_t image_nullity = 0;  // totally symmetric spinors reached
    std::vector<Relation> constraints;
    bool constructions_agree = false;
};
ConstraintSystem symmetry_constraint_system(const Spin2Coeffs& c, bool full, SymmetryConstruction how);
SymmetryReport symmetry_analysis(const Spin2Coeffs& c, bool full);

// the displayed algebraic constraints of the standard case, as linear forms over the 100 slots
std::vector<Relation> standard_constraints();

struct RecoveryReport {
    bool row_spaces_equal = false;
    bool constraints_hold = false;
    std::size_t standard_nullity = 0, specialized_nullity = 0, perturbed_nullity = 0;
    bool perturbation_changes = false;  // beta9 -> 1 with alpha3 still 0
};
RecoveryReport recover_standard_case();

// D = i gamma.p - m on the first index of each symmetric pair, together with the
// symmetry rows; standard slots, gamma R carries a factor i.
MomentumSystem dynamics_system(const FourMomentum& p, const Rational& m);
// sizes of the connected blocks of the unknowns (rows couple the unknowns they touch)
std::vector<std::size_t> block_structure(const ExactMatrix& m);

struct SecondOrderReport {
    std::array<ExactScalar, 16> residual{};
    std::array<ExactScalar, 4> F{};  // F_k = i p_mu G_{mu k}
    ExactScalar pF;
    bool residual_zero = false;
    bool trace_identity = false;  // tr(res) = -(i/m^2) p.F - (p^2/m^2 + 1) trG
};
SecondOrderReport g_second_order_check(const FourMomentum& p, const Rational& m, const std::array<ExactScalar, 16>& G);

}  // namespace bwkit
