#pragma once

// Exact arithmetic over the Gaussian rationals Q(i): scalars, dense matrices,
// univariate polynomials, and the rank/nullspace/row-space machinery that
// every downstream analysis is expressed in.

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bwkit {

using Rational = mpq_class;

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "p/q" in lowest terms, q > 0 (q is always written, also when it is 1).
std::string rat_str(const Rational& q);
// Accepts "p", "p/q", "-p/q" and finite decimals ("0.25"); exact, no float round-trip.
Rational parse_rational(const std::string& s);

class ExactScalar {
public:
    Rational re, im;

    ExactScalar() = default;
    ExactScalar(long v) : re(v), im(0) {}  // NOLINT: implicit by design
    ExactScalar(int v) : re(v), im(0) {}   // NOLINT
    ExactScalar(const Rational& r) : re(r), im(0) {}  // NOLINT
    template <class T, class U>
    ExactScalar(const __gmp_expr<T, U>& e) : re(e), im(0) {}  // NOLINT: gmp expression templates
    ExactScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static ExactScalar i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    bool is_imag() const { return sgn(re) == 0; }
    ExactScalar conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
    std::string str() const;

    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o);
    ExactScalar operator-() const { return {-re, -im}; }

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }
};

ExactScalar ipow(const ExactScalar& z, unsigned n);

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<ExactScalar> entries);
    ExactMatrix(std::initializer_list<std::initializer_list<ExactScalar>> rows);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix column(const std::vector<ExactScalar>& v);
    static ExactMatrix row(const std::vector<ExactScalar>& v);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    ExactScalar& at(std::size_t i, std::size_t j);
    const ExactScalar& at(std::size_t i, std::size_t j) const;
    ExactScalar& operator()(std::size_t i, std::size_t j) { return at(i, j); }
    const ExactScalar& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    ExactMatrix transpose() const;
    ExactMatrix conj() const;
    ExactMatrix adjoint() const { return transpose().conj(); }
    ExactScalar trace() const;
    bool is_zero() const;
    // row-major flattening
    std::vector<ExactScalar> vec() const { return a_; }
    std::vector<ExactScalar> row_vec(std::size_t i) const;
    std::vector<ExactScalar> col_vec(std::size_t j) const;

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    ExactMatrix& operator*=(const ExactScalar& s);
    ExactMatrix operator-() const;

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const ExactScalar& s) { return a *= s; }
    friend ExactMatrix operator*(const ExactScalar& s, ExactMatrix a) { return a *= s; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<ExactScalar> a_;
};

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix stack_rows(const std::vector<std::vector<ExactScalar>>& rows, std::size_t cols);
ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b);
std::vector<ExactScalar> mat_vec(const ExactMatrix& m, const std::vector<ExactScalar>& v);

// Row-reduced form of a matrix: what rank, nullspace and membership queries need.
struct ConstraintSystem {
    ExactMatrix matrix;
    std::size_t rank = 0;
    std::vector<ExactMatrix> nullspace;  // column vectors
    std::vector<std::string> unknown_labels;
    std::vector<std::size_t> pivots;     // pivot column per rref row
    std::vector<std::vector<ExactScalar>> rref;

    std::size_t unknowns() const { return matrix.cols(); }
    std::size_t nullity() const { return nullspace.size(); }
    // v is a linear form over the unknowns
    bool contains(const std::vector<ExactScalar>& v) const;
    std::vector<ExactScalar> reduce(std::vector<ExactScalar> v) const;
};

ConstraintSystem rank_nullspace(const ExactMatrix& m, std::vector<std::string> labels = {});
std::size_t rank_of(const ExactMatrix& m);
bool row_space_contains(const ConstraintSystem& sys, const ExactMatrix& rows);
bool row_space_equal(const ConstraintSystem& a, const ConstraintSystem& b);
// nullspace basis as the columns of one matrix (unknowns x nullity)
ExactMatrix nullspace_matrix(const ConstraintSystem& s);

class ExactPoly {
public:
    ExactPoly() = default;
    explicit ExactPoly(std::vector<ExactScalar> ascending);
    ExactPoly(const ExactScalar& c);  // NOLINT: constant polynomial
    ExactPoly(int c) : ExactPoly(ExactScalar(c)) {}  // NOLINT
    static ExactPoly x() { return ExactPoly({ExactScalar(0), ExactScalar(1)}); }

    const std::vector<ExactScalar>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    ExactScalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : ExactScalar(0); }
    ExactScalar lead() const;
    ExactScalar eval(const ExactScalar& at) const;
    std::string str(const std::string& var = "x") const;

    ExactPoly& operator+=(const ExactPoly& o);
    ExactPoly& operator-=(const ExactPoly& o);
    ExactPoly& operator*=(const ExactPoly& o);
    ExactPoly operator-() const;
    friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
    friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
    friend ExactPoly operator*(ExactPoly a, const ExactPoly& b) { return a *= b; }
    friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<ExactScalar> c_;
};

// quotient and remainder; throws DegenerateInput on division by zero
std::pair<ExactPoly, ExactPoly> poly_divmod(const ExactPoly& a, const ExactPoly& b);
ExactPoly poly_exact_div(const ExactPoly& a, const ExactPoly& b);

using PolyMatrix = std::vector<std::vector<ExactPoly>>;
ExactPoly det_poly(const PolyMatrix& m);
ExactMatrix eval_poly_matrix(const PolyMatrix& m, const ExactScalar& at);
ExactScalar det(const ExactMatrix& m);
ExactMatrix inverse(const ExactMatrix& m);  // DegenerateInput if singular

struct RationalRoot {
    Rational root;
    std::size_t multiplicity;
};
struct RootReport {
    std::vector<RationalRoot> roots;        // ascending
    ExactPoly unresolved;                   // leftover factor (constant if fully resolved)
    std::vector<std::complex<double>> approx;  // roots of the leftover factor, non-exact
    bool fully_resolved() const { return unresolved.degree() <= 0; }
};
RootReport rational_root_masses(const ExactPoly& p);

}  // namespace bwkit
