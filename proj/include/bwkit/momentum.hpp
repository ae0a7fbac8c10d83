#pragma once

#include <array>
#include <stdexcept>

#include "bwkit/exact.hpp"

namespace bwkit {

struct OffShell : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Euclidean momentum (p1, p2, p3, p4 = iE).
class FourMomentum {
public:
    FourMomentum() = default;
    // enforces E^2 - |p|^2 = m^2 exactly
    static FourMomentum on_shell(Rational p1, Rational p2, Rational p3, Rational E, Rational m);
    static FourMomentum off_shell(Rational p1, Rational p2, Rational p3, Rational E);
    static FourMomentum rest(Rational m) { return on_shell(0, 0, 0, m, m); }

    const Rational& p(int i) const { return p_.at(static_cast<std::size_t>(i)); }
    const Rational& E() const { return E_; }
    const Rational& mass() const { return m_; }
    bool is_on_shell() const { return on_shell_; }

    // component mu (0-based), slot 3 is iE
    ExactScalar comp(int mu) const;
    std::array<ExactScalar, 4> vec() const;
    Rational p2() const;         // Euclidean p.p = |p|^2 - E^2
    Rational spatial2() const;   // |p|^2
    FourMomentum reversed() const;  // p -> -p, E unchanged

private:
    std::array<Rational, 3> p_{};
    Rational E_, m_;
    bool on_shell_ = false;
};

}  // namespace bwkit
