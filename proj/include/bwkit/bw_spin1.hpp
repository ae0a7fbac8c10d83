#pragma once

// Spin-1 Bargmann-Wigner: the symmetric rank-2 multispinor in momentum space,
// its reduction to Proca / Duffin-Kemmer form, the (a,b,c,d) generalization,
// the WTH <-> AST mapping, sign-operator variants and the chi-Maxwell residuals.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bwkit/exact.hpp"
#include "bwkit/momentum.hpp"
#include "bwkit/spinor.hpp"

namespace bwkit {

struct Relation {
    std::string label;
    std::vector<ExactScalar> row;  // linear form over the system's unknowns
    bool holds = false;            // in the row space
};

struct MomentumSystem {
    FourMomentum momentum;
    ConstraintSystem system;
    std::vector<Relation> derived;
    bool all_hold() const;
};

// Psi = sum_u M_u x_u; rows of D1 Psi = 0 and Psi D2^T = 0 (16 + 16)
ExactMatrix bw_rows(const std::vector<ExactMatrix>& basis, const ExactMatrix& D1, const ExactMatrix& D2);
// i gamma.p + c0 + c5 gamma5
ExactMatrix dirac_operator(const DiracSet& d, const FourMomentum& p, const ExactScalar& c0,
                           const ExactScalar& c5 = 0);

// Unknowns (A_1..A_4, F_12..F_34); Psi = i (gamma_mu R) A_mu + (sigma_{mu nu} R) F_{mu nu},
// D = i gamma.p + s m.  Derived: the DPK pair dF = (m/2) A, 2m F = dA - dA.
MomentumSystem bw_system_spin1(const FourMomentum& p, const Rational& m, int mass_sign = -1);
std::vector<std::string> spin1_labels();
// A = 2m A': substitution matrix on (A, F) taking the DPK pair to the textbook pair
ExactMatrix potential_rescaling(const Rational& m);

struct Spin1Coeffs {
    Rational ca = 1, cf = 0, cA = 0, cF = Rational(1, 2);
};
// Unknowns (A_mu, F_mu, A_{mu nu}, F_{mu nu}) = 4 + 4 + 6 + 6.
// Derived: pr1 (6), pr2 (4), sub1, sub2 (4); textbook pair when cf = cA = 0.
MomentumSystem proca_reduction_check(const FourMomentum& p, const Rational& m, const Spin1Coeffs& c,
                                     int mass_sign = -1);

enum class PhiReading {
    separate,  // eps dF = 0 and (c + d x) phi = 0 as two equations
    dropped    // only eps dF = 0; the phi factor read as belonging to the Duffin-Kemmer block
};

struct AbcdParams {
    Rational a, b, c, d;
};

// Unknowns (A_mu, F_{mu nu}, At_mu, phi, phit); the d'Alembertian is the scalar x.
struct AbcdSystem {
    MomentumSystem sys;
    std::size_t proca_rows = 0;   // rows [0, proca_rows) are the Proca-like block
    ExactMatrix coupling;         // entries between the vector and the spin-0 sectors
    bool decoupled = false;
    bool ast_certificate = false; // d(2) - d(2) + (1/2)(a+bx)(1) + (1/2)(c+dx)(C) = AST row
};
AbcdSystem generalized_abcd_system(const FourMomentum& p, const Rational& x, const AbcdParams& k,
                                   PhiReading reading = PhiReading::separate);
std::vector<std::string> abcd_labels();

struct WthBranch {
    int parity = 0;  // -1: first AST equation, +1: second
    Rational A, Bm2; // B m^2
};
struct WthMapping {
    WthBranch first, second;
};
WthMapping wth_mapping(const AbcdParams& k);  // DegenerateInput unless b = +-d

struct AstRoot {
    std::string sector;  // "electric" (F_{4i}) or "magnetic" (F_{ij})
    std::optional<Rational> mass2;  // nullopt: root at infinity
    std::size_t multiplicity = 0;
    bool tachyonic = false;
};
struct AstBranch {
    int parity = 0;
    ExactPoly det;
    std::vector<AstRoot> roots;
    bool degenerate = false;  // A = +-1 on this equation
};
struct AstDispersion {
    AstBranch minus, plus;  // P = -1, P = +1 equations
};
// m = 1 units: B is B m^2
AstDispersion ast_dispersion(const Rational& A, const Rational& B);
// the same analysis from the (a,b,c,d) second-order equation directly
AstBranch abcd_ast_roots(const AbcdParams& k);

// [d_a d_mu F_{mu b} - d_b d_mu F_{mu a}] + q F_{ab} with pp[a][mu] = p_a p_mu (d -> ip)
PolyMatrix ast_operator(const std::array<std::array<ExactPoly, 4>, 4>& pp, const ExactPoly& q);

struct SignSystem {
    std::array<int, 4> eps{};
    Rational A1, A2, B1, B2;
    std::size_t group = 0;
};
struct SignEnumeration {
    std::vector<SignSystem> systems;  // 16, in lexicographic (+ first) order
    std::size_t distinct = 0;
    bool flip_compensated = false;    // eps -> -eps undone by F -> -F
};
SignEnumeration sign_operator_enumeration();

// plane wave exp(i(k.x - w t)); Re chi and Im chi carried as their own amplitudes
struct ChiWave {
    std::array<ExactScalar, 3> E{}, B{};
    ExactScalar chi_re, chi_im;
};
struct ChiResidual {
    std::array<ExactScalar, 3> r1{}, r2{};
    ExactScalar r3, r4;
    bool zero() const;
};
ChiResidual chi_maxwell_residual(const ChiWave& w, const std::array<Rational, 3>& k, const Rational& omega);

struct ChiFdCheck {
    double max_deviation = 0;
    bool pass = false;
};
// central differences on an n^3 periodic grid; k = 2 pi modes / L
ChiFdCheck chi_maxwell_fd_check(const ChiWave& w, const std::array<int, 3>& modes, double omega, int n = 8,
                                double tol = 1e-10);

}  // namespace bwkit
