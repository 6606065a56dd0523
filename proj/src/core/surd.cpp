#include "bianchi/surd.hpp"
#include "bianchi/errors.hpp"

#include <cmath>
#include <ostream>

namespace bianchi {

SurdValue::SurdValue(Rational p, Rational q, Int m) : p_(std::move(p)), q_(std::move(q)), m_(m) {
    if (m_ <= 0) throw InvalidArgument("surd radicand must be positive");
}

int SurdValue::sign() const {
    const int sp = sgn(p_);
    const int sq = sgn(q_);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    const int c = cmp(Rational(p_ * p_), Rational(q_ * q_ * m_));
    if (c > 0) return sp;
    if (c < 0) return sq;
    return 0;
}

double SurdValue::to_double() const {
    return p_.get_d() + q_.get_d() * std::sqrt(static_cast<double>(m_));
}

namespace {

Int common_radicand(const SurdValue& x, const SurdValue& y) {
    if (sgn(x.q()) == 0) return y.m();
    if (sgn(y.q()) == 0) return x.m();
    if (x.m() != y.m()) throw InvalidArgument("surd arithmetic across different radicands");
    return x.m();
}

} // namespace

SurdValue operator+(const SurdValue& x, const SurdValue& y) {
    return {x.p_ + y.p_, x.q_ + y.q_, common_radicand(x, y)};
}

SurdValue operator-(const SurdValue& x, const SurdValue& y) {
    return {x.p_ - y.p_, x.q_ - y.q_, common_radicand(x, y)};
}

SurdValue operator*(const SurdValue& x, const SurdValue& y) {
    const Int m = common_radicand(x, y);
    return {x.p_ * y.p_ + x.q_ * y.q_ * m, x.p_ * y.q_ + x.q_ * y.p_, m};
}

SurdValue operator*(const SurdValue& x, const Rational& r) { return {x.p_ * r, x.q_ * r, x.m_}; }

bool operator==(const SurdValue& x, const SurdValue& y) {
    if (sgn(x.q_) == 0 && sgn(y.q_) == 0) return x.p_ == y.p_;
    return x.p_ == y.p_ && x.q_ == y.q_ && x.m_ == y.m_;
}

bool sqrt_le_sqrt_plus(const Rational& lhs_sq, const Rational& r_sq, const SurdValue& c) {
    if (c.sign() <= 0) throw InvalidArgument("sqrt_le_sqrt_plus needs a positive offset");
    // sqrt(h) <= sqrt(r) + c  <=>  h - r - c^2 <= 2c sqrt(r), both sides of the
    // latter nonnegative once the left is positive.
    const SurdValue lhs = SurdValue::rational(lhs_sq - r_sq, c.m()) - c * c;
    if (lhs.sign() <= 0) return true;
    return (c * c * Rational(4 * r_sq) - lhs * lhs).sign() >= 0;
}

std::ostream& operator<<(std::ostream& os, const SurdValue& x) {
    return os << x.p().get_str() << " + " << x.q().get_str() << "*sqrt(" << x.m() << ")";
}

} // namespace bianchi
