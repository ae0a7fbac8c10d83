#include "bwkit/exact.hpp"

#include <algorithm>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace bwkit {

std::string rat_str(const Rational& in) {
    Rational q = in;
    q.canonicalize();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& raw) {
    std::string s = raw;
    s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos || s.find_first_of("eE") != std::string::npos)
            throw std::invalid_argument("bad rational '" + raw + "'");
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac = s.size() - dot - 1;
        mpz_class den = 1;
        for (std::size_t k = 0; k < frac; ++k) den *= 10;
        mpz_class num;
        if (digits == "" || digits == "-" || digits == "+" || num.set_str(digits, 10) != 0)
            throw std::invalid_argument("bad rational '" + raw + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (s[0] == '+') s = s.substr(1);
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("bad rational '" + raw + "'");
    q.canonicalize();
    return q;
}

std::string ExactScalar::str() const {
    if (is_real()) return rat_str(re);
    if (is_imag()) return rat_str(im) + "i";
    return rat_str(re) + (sgn(im) < 0 ? "" : "+") + rat_str(im) + "i";
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    re += o.re;
    im += o.im;
    return *this;
}
ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}
ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    if (o.is_real()) {
        re *= o.re;
        im *= o.re;
        return *this;
    }
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}
ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
    if (o.is_zero()) throw std::domain_error("division by exact zero");
    if (o.is_real()) {
        re /= o.re;
        im /= o.re;
        return *this;
    }
    Rational n = o.norm2();
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
}

ExactScalar ipow(const ExactScalar& z, unsigned n) {
    ExactScalar r(1), b = z;
    while (n) {
        if (n & 1u) r *= b;
        b *= b;
        n >>= 1u;
    }
    return r;
}

// ---------------------------------------------------------------- matrices

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : r_(rows), c_(cols), a_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<ExactScalar> entries)
    : r_(rows), c_(cols), a_(std::move(entries)) {
    if (a_.size() != r_ * c_) throw ShapeError("entry count does not match shape");
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<ExactScalar>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
        if (row.size() != c_) throw ShapeError("ragged initializer");
        a_.insert(a_.end(), row.begin(), row.end());
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
    return m;
}
ExactMatrix ExactMatrix::column(const std::vector<ExactScalar>& v) { return {v.size(), 1, v}; }
ExactMatrix ExactMatrix::row(const std::vector<ExactScalar>& v) { return {1, v.size(), v}; }

ExactScalar& ExactMatrix::at(std::size_t i, std::size_t j) {
    if (i >= r_ || j >= c_) throw ShapeError("matrix index out of range");
    return a_[i * c_ + j];
}
const ExactScalar& ExactMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= r_ || j >= c_) throw ShapeError("matrix index out of range");
    return a_[i * c_ + j];
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t.a_[j * r_ + i] = a_[i * c_ + j];
    return t;
}
ExactMatrix ExactMatrix::conj() const {
    ExactMatrix t = *this;
    for (auto& z : t.a_) z.im = -z.im;
    return t;
}
ExactScalar ExactMatrix::trace() const {
    if (r_ != c_) throw ShapeError("trace of non-square matrix");
    ExactScalar t;
    for (std::size_t i = 0; i < r_; ++i) t += a_[i * c_ + i];
    return t;
}
bool ExactMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const ExactScalar& z) { return z.is_zero(); });
}
std::vector<ExactScalar> ExactMatrix::row_vec(std::size_t i) const {
    if (i >= r_) throw ShapeError("row out of range");
    return {a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_)};
}
std::vector<ExactScalar> ExactMatrix::col_vec(std::size_t j) const {
    if (j >= c_) throw ShapeError("column out of range");
    std::vector<ExactScalar> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = a_[i * c_ + j];
    return v;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw ShapeError("shape mismatch in +");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}
ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw ShapeError("shape mismatch in -");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}
ExactMatrix& ExactMatrix::operator*=(const ExactScalar& s) {
    for (auto& z : a_) z *= s;
    return *this;
}
ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix t = *this;
    for (auto& z : t.a_) z = -z;
    return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.c_ != b.r_) throw ShapeError("shape mismatch in product");
    ExactMatrix p(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            const ExactScalar& x = a.a_[i * a.c_ + k];
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_; ++j) {
                const ExactScalar& y = b.a_[k * b.c_ + j];
                if (!y.is_zero()) p.a_[i * b.c_ + j] += x * y;
            }
        }
    return p;
}

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) { return a * b; }
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }
ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b + b * a; }

ExactMatrix stack_rows(const std::vector<std::vector<ExactScalar>>& rows, std::size_t cols) {
    std::vector<ExactScalar> all;
    all.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw ShapeError("row length mismatch");
        all.insert(all.end(), r.begin(), r.end());
    }
    return {rows.size(), cols, std::move(all)};
}

ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.cols()) throw ShapeError("vstack column mismatch");
    auto v = a.vec();
    auto w = b.vec();
    v.insert(v.end(), w.begin(), w.end());
    return {a.rows() + b.rows(), a.cols(), std::move(v)};
}

std::vector<ExactScalar> mat_vec(const ExactMatrix& m, const std::vector<ExactScalar>& v) {
    if (m.cols() != v.size()) throw ShapeError("mat_vec shape mismatch");
    return (m * ExactMatrix::column(v)).vec();
}

// ---------------------------------------------------------------- elimination
//
// Gauss-Jordan over Q(i): first nonzero pivot in column order with stable row
// order, pivot row normalized to 1 and cleared above and below in one pass.  The
// reduced form is unique, so the nullspace basis is deterministic.  Only the
// nonzero support of the pivot row is visited (the systems here are sparse).

namespace {

using Row = std::vector<ExactScalar>;

std::vector<Row> echelon(std::vector<Row> rows, std::size_t ncols, std::vector<std::size_t>& pivots) {
    std::size_t nrows = rows.size();
    std::size_t r = 0;
    pivots.clear();
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && rows[p][c].is_zero()) ++p;
        if (p == nrows) continue;
        if (p != r)
            std::rotate(rows.begin() + static_cast<long>(r), rows.begin() + static_cast<long>(p),
                        rows.begin() + static_cast<long>(p) + 1);
        Row& pr = rows[r];
        const ExactScalar inv = ExactScalar(1) / pr[c];
        support.clear();
        for (std::size_t j = c; j < ncols; ++j)
            if (!pr[j].is_zero()) {
                pr[j] *= inv;
                support.push_back(j);
            }
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const ExactScalar f = rows[i][c];
            for (auto j : support) rows[i][j] -= f * pr[j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return rows;
}

}  // namespace

std::vector<ExactScalar> ConstraintSystem::reduce(std::vector<ExactScalar> v) const {
    if (v.size() != matrix.cols()) throw ShapeError("linear form has wrong length");
    for (std::size_t k = 0; k < rref.size(); ++k) {
        std::size_t c = pivots[k];
        if (v[c].is_zero()) continue;
        ExactScalar f = v[c];
        for (std::size_t j = c; j < v.size(); ++j)
            if (!rref[k][j].is_zero()) v[j] -= f * rref[k][j];
    }
    return v;
}

bool ConstraintSystem::contains(const std::vector<ExactScalar>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const ExactScalar& z) { return z.is_zero(); });
}

ConstraintSystem rank_nullspace(const ExactMatrix& m, std::vector<std::string> labels) {
    ConstraintSystem s;
    s.matrix = m;
    if (!labels.empty() && labels.size() != m.cols()) throw ShapeError("label count mismatch");
    s.unknown_labels = std::move(labels);
    std::vector<Row> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Row r = m.row_vec(i);
        if (std::any_of(r.begin(), r.end(), [](const ExactScalar& z) { return !z.is_zero(); }))
            rows.push_back(std::move(r));
    }
    s.rref = echelon(std::move(rows), m.cols(), s.pivots);
    s.rank = s.rref.size();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : s.pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<ExactScalar> v(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < s.rank; ++k) v[s.pivots[k]] = -s.rref[k][f];
        s.nullspace.push_back(ExactMatrix::column(v));
    }
    return s;
}

std::size_t rank_of(const ExactMatrix& m) { return rank_nullspace(m).rank; }

bool row_space_contains(const ConstraintSystem& sys, const ExactMatrix& rows) {
    for (std::size_t i = 0; i < rows.rows(); ++i)
        if (!sys.contains(rows.row_vec(i))) return false;
    return true;
}

bool row_space_equal(const ConstraintSystem& a, const ConstraintSystem& b) {
    if (a.unknowns() != b.unknowns() || a.rank != b.rank) return false;
    for (const auto& r : b.rref)
        if (!a.contains(r)) return false;
    return true;
}

ExactMatrix nullspace_matrix(const ConstraintSystem& s) {
    ExactMatrix n(s.unknowns(), s.nullity());
    for (std::size_t k = 0; k < s.nullity(); ++k)
        for (std::size_t i = 0; i < s.unknowns(); ++i) n(i, k) = s.nullspace[k](i, 0);
    return n;
}

ExactScalar det(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("determinant of non-square matrix");
    std::size_t n = m.rows();
    ExactMatrix a = m;
    ExactScalar d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            d = -d;
        }
        d *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            ExactScalar f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return d;
}

ExactMatrix inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("inverse of non-square matrix");
    std::size_t n = m.rows();
    ExactMatrix a = m, inv = ExactMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) throw DegenerateInput("singular matrix");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        ExactScalar piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            ExactScalar f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

// ---------------------------------------------------------------- polynomials

ExactPoly::ExactPoly(std::vector<ExactScalar> ascending) : c_(std::move(ascending)) { trim(); }
ExactPoly::ExactPoly(const ExactScalar& c) : c_{c} { trim(); }

void ExactPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ExactScalar ExactPoly::lead() const { return c_.empty() ? ExactScalar(0) : c_.back(); }

ExactScalar ExactPoly::eval(const ExactScalar& at) const {
    ExactScalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

std::string ExactPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[k].str() << ")";
        if (k == 1) os << "*" << var;
        if (k > 1) os << "*" << var << "^" << k;
    }
    return os.str();
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}
ExactPoly& ExactPoly::operator-=(const ExactPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}
ExactPoly& ExactPoly::operator*=(const ExactPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<ExactScalar> p(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) p[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(p);
    trim();
    return *this;
}
ExactPoly ExactPoly::operator-() const {
    ExactPoly t = *this;
    for (auto& z : t.c_) z = -z;
    return t;
}

std::pair<ExactPoly, ExactPoly> poly_divmod(const ExactPoly& a, const ExactPoly& b) {
    if (b.is_zero()) throw DegenerateInput("polynomial division by zero");
    std::vector<ExactScalar> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {ExactPoly(), a};
    std::vector<ExactScalar> q(static_cast<std::size_t>(a.degree() - db + 1));
    ExactScalar lb = b.lead();
    for (int k = a.degree() - db; k >= 0; --k) {
        ExactScalar f = rem[static_cast<std::size_t>(k + db)] / lb;
        q[static_cast<std::size_t>(k)] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {ExactPoly(q), ExactPoly(rem)};
}

ExactPoly poly_exact_div(const ExactPoly& a, const ExactPoly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

ExactPoly det_poly(const PolyMatrix& m0) {
    std::size_t n = m0.size();
    for (const auto& r : m0)
        if (r.size() != n) throw ShapeError("det_poly needs a square matrix");
    if (n == 0) return ExactPoly(1);
    PolyMatrix m = m0;
    ExactPoly prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return ExactPoly();
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = poly_exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

ExactMatrix eval_poly_matrix(const PolyMatrix& m, const ExactScalar& at) {
    std::size_t r = m.size(), c = r ? m[0].size() : 0;
    ExactMatrix e(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) e(i, j) = m.at(i).at(j).eval(at);
    return e;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> d;
    if (n == 0) return d;
    if (n > mpz_class(1000000000000L))
        throw DegenerateInput("coefficient too large for rational-root search");
    for (mpz_class k = 1; k * k <= n; ++k) {
        if (n % k == 0) {
            d.push_back(k);
            if (k * k != n) d.push_back(n / k);
        }
    }
    return d;
}

}  // namespace

RootReport rational_root_masses(const ExactPoly& p0) {
    if (p0.is_zero()) throw DegenerateInput("rational roots of the zero polynomial");
    RootReport rep;
    // make coefficients real rationals if they share a common complex phase
    ExactPoly p = p0;
    {
        ExactScalar l = p.lead();
        std::vector<ExactScalar> c;
        for (const auto& z : p.coeffs()) c.push_back(z / l);
        p = ExactPoly(c);
    }
    bool real = std::all_of(p.coeffs().begin(), p.coeffs().end(),
                            [](const ExactScalar& z) { return z.is_real(); });
    auto add_root = [&](const Rational& r) {
        for (auto& x : rep.roots)
            if (x.root == r) {
                ++x.multiplicity;
                return;
            }
        rep.roots.push_back({r, 1});
    };
    while (p.degree() > 0 && p.coeff(0).is_zero()) {
        add_root(0);
        p = poly_exact_div(p, ExactPoly::x());
    }
    if (real) {
        bool progress = true;
        while (progress && p.degree() > 0) {
            progress = false;
            mpz_class lcm = 1;
            for (const auto& z : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), z.re.get_den_mpz_t());
            mpz_class a0 = Rational(p.coeff(0).re * lcm).get_num();
            mpz_class an = Rational(p.lead().re * lcm).get_num();
            std::vector<Rational> cands;
            for (const auto& u : divisors(a0))
                for (const auto& v : divisors(an)) {
                    Rational q(u, v);
                    q.canonicalize();
                    cands.push_back(q);
                    cands.push_back(-q);
                }
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
            for (const auto& q : cands) {
                if (p.eval(q).is_zero()) {
                    add_root(q);
                    p = poly_exact_div(p, ExactPoly({ExactScalar(-q), ExactScalar(1)}));
                    progress = true;
                    break;
                }
            }
        }
    }
    std::sort(rep.roots.begin(), rep.roots.end(),
              [](const RationalRoot& a, const RationalRoot& b) { return a.root < b.root; });
    rep.unresolved = p;
    if (p.degree() > 0) {
        int d = p.degree();
        Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
        for (int k = 1; k < d; ++k) comp(k, k - 1) = 1.0;
        std::complex<double> l = p.lead().to_complex();
        for (int k = 0; k < d; ++k) comp(k, d - 1) = -p.coeff(static_cast<std::size_t>(k)).to_complex() / l;
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp);
        for (int k = 0; k < d; ++k) rep.approx.push_back(es.eigenvalues()(k));
        std::sort(rep.approx.begin(), rep.approx.end(), [](auto a, auto b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
    }
    return rep;
}

}  // namespace bwkit
