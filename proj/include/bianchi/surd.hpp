#pragma once

#include "bianchi/rational.hpp"

#include <iosfwd>

namespace bianchi {

/// The real number p + q*sqrt(m), m a positive integer.
///
/// All arithmetic stays inside Q(sqrt m); mixing two values with different
/// radicands is a programming error and throws InvalidArgument (except when
/// one side has q = 0). Sign is decided with rational comparisons only.
class SurdValue {
public:
    SurdValue() = default;
    SurdValue(Rational p, Rational q, Int m);
    static SurdValue rational(Rational p, Int m) { return {std::move(p), 0, m}; }

    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }
    Int m() const { return m_; }

    int sign() const;
    double to_double() const;

    SurdValue operator-() const { return {-p_, -q_, m_}; }
    friend SurdValue operator+(const SurdValue& x, const SurdValue& y);
    friend SurdValue operator-(const SurdValue& x, const SurdValue& y);
    friend SurdValue operator*(const SurdValue& x, const SurdValue& y);
    friend SurdValue operator*(const SurdValue& x, const Rational& r);
    friend SurdValue operator*(const Rational& r, const SurdValue& x) { return x * r; }

    friend bool operator==(const SurdValue& x, const SurdValue& y);

private:
    Rational p_{0};
    Rational q_{0};
    Int m_{1};
};

inline bool surd_le(const SurdValue& x, const SurdValue& y) { return (y - x).sign() >= 0; }
inline bool surd_lt(const SurdValue& x, const SurdValue& y) { return (y - x).sign() > 0; }

// Exact test of sqrt(lhs_sq) <= sqrt(r_sq) + c for rationals lhs_sq, r_sq >= 0
// and c > 0 in Q(sqrt m).
bool sqrt_le_sqrt_plus(const Rational& lhs_sq, const Rational& r_sq, const SurdValue& c);

std::ostream& operator<<(std::ostream& os, const SurdValue& x);

} // namespace bianchi
