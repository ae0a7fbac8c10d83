#include "bwkit/momentum.hpp"

namespace bwkit {

FourMomentum FourMomentum::on_shell(Rational p1, Rational p2, Rational p3, Rational E, Rational m) {
    FourMomentum k = off_shell(std::move(p1), std::move(p2), std::move(p3), std::move(E));
    if (m < 0) throw OffShell("negative mass");
    if (k.E_ * k.E_ - k.spatial2() != m * m)
        throw OffShell("E^2 - |p|^2 != m^2 for (" + rat_str(k.p_[0]) + "," + rat_str(k.p_[1]) + "," +
                       rat_str(k.p_[2]) + "; E=" + rat_str(k.E_) + ", m=" + rat_str(m) + ")");
    k.m_ = std::move(m);
    k.on_shell_ = true;
    return k;
}

FourMomentum FourMomentum::off_shell(Rational p1, Rational p2, Rational p3, Rational E) {
    FourMomentum k;
    k.p_ = {std::move(p1), std::move(p2), std::move(p3)};
    k.E_ = std::move(E);
    return k;
}

ExactScalar FourMomentum::comp(int mu) const {
    if (mu == 3) return {Rational(0), E_};
    return p(mu);
}

std::array<ExactScalar, 4> FourMomentum::vec() const { return {comp(0), comp(1), comp(2), comp(3)}; }

Rational FourMomentum::spatial2() const { return p_[0] * p_[0] + p_[1] * p_[1] + p_[2] * p_[2]; }
Rational FourMomentum::p2() const { return spatial2() - E_ * E_; }

FourMomentum FourMomentum::reversed() const {
    FourMomentum k = *this;
    for (auto& x : k.p_) x = -x;
    return k;
}

}  // namespace bwkit
