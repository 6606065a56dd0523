#pragma once

#include "bianchi/rational.hpp"
#include "bianchi/surd.hpp"

#include <algorithm>
#include <cmath>
#include <compare>
#include <optional>
#include <utility>
#include <vector>

namespace bianchi {

/// a + b*omega, with omega = (-1 + sqrt(-d))/2 when d = 3 mod 4 and
/// omega = sqrt(-d) otherwise.
struct AlgInt {
    Int a = 0;
    Int b = 0;

    constexpr bool is_zero() const { return a == 0 && b == 0; }
    friend constexpr auto operator<=>(const AlgInt&, const AlgInt&) = default;
};

AlgInt operator+(AlgInt x, AlgInt y);
AlgInt operator-(AlgInt x, AlgInt y);
AlgInt operator-(AlgInt x);

// Lexicographically positive: a > 0, or a = 0 and b > 0.
constexpr bool is_lex_positive(AlgInt x) { return x.a > 0 || (x.a == 0 && x.b > 0); }

/// A + B*sqrt(-d) with rational coordinates, an element of Q(sqrt(-d)).
struct FieldElem {
    Rational A{0};
    Rational B{0};

    bool is_zero() const { return sgn(A) == 0 && sgn(B) == 0; }
    friend bool operator==(const FieldElem& x, const FieldElem& y) { return x.A == y.A && x.B == y.B; }
};

FieldElem operator+(const FieldElem& x, const FieldElem& y);
FieldElem operator-(const FieldElem& x, const FieldElem& y);
FieldElem operator-(const FieldElem& x);
FieldElem operator*(const FieldElem& x, const Rational& r);
inline FieldElem conj(const FieldElem& x) { return {x.A, -x.B}; }

struct BezoutPair {
    AlgInt x;
    AlgInt y;
};

struct Principality {
    bool principal = false;
    std::optional<AlgInt> generator;
};

/// Arithmetic in O_d and K_d for one squarefree d > 0.
///
/// Immutable after construction; safe to share across threads.
class RingContext {
public:
    explicit RingContext(Int d);

    Int d() const { return d_; }
    bool omega_half() const { return omega_half_; }
    const Rational& eps_sq() const { return eps_sq_; }
    // C_d = 1 + eps_d as an exact surd, and its square.
    const SurdValue& c_d() const { return c_d_; }
    const SurdValue& c_d_sq() const { return c_d_sq_; }
    int unit_count() const { return static_cast<int>(units_.size()); }
    const std::vector<AlgInt>& units() const { return units_; }

    AlgInt mul(AlgInt x, AlgInt y) const;
    AlgInt conj(AlgInt x) const;
    Int norm(AlgInt x) const;
    bool is_unit(AlgInt x) const { return norm(x) == 1; }
    // Lexicographic maximum over the unit associates of x.
    AlgInt unit_normalize(AlgInt x) const;

    FieldElem to_field(AlgInt x) const;
    std::optional<AlgInt> to_integer(const FieldElem& z) const;
    FieldElem mul(const FieldElem& x, const FieldElem& y) const;
    Rational abs_sq(const FieldElem& z) const;
    FieldElem inverse(const FieldElem& z) const;
    std::optional<AlgInt> divide(AlgInt num, AlgInt den) const;

    // Real and imaginary parts as doubles; used only to bound searches.
    std::pair<double, double> approx(const FieldElem& z) const;
    std::pair<double, double> approx(AlgInt x) const;

    /// Index in O_d of the Z-module spanned by alpha, alpha*omega, beta, beta*omega.
    Int ideal_norm(AlgInt alpha, AlgInt beta) const;
    bool is_coprime(AlgInt alpha, AlgInt beta) const { return ideal_norm(alpha, beta) == 1; }
    // Some solution of alpha*x + beta*y = 1, or nullopt if the ideal is proper.
    std::optional<BezoutPair> try_bezout(AlgInt alpha, AlgInt beta) const;
    BezoutPair any_bezout(AlgInt alpha, AlgInt beta) const;
    /// alpha*x + beta*y = 1 with N(x) <= C_d^2 N(beta) and N(y) <= C_d^2 N(alpha).
    BezoutPair bezout_bounded(AlgInt alpha, AlgInt beta) const;
    Principality is_principal(AlgInt alpha, AlgInt beta) const;

    AlgInt round_to_lattice(const FieldElem& z) const;
    const Rational& covering_radius_sq() const { return eps_sq_; }

    // Calls visit(x) for every lattice point x with |x - center|^2 <= radius_sq
    // (approximately: the caller must filter exactly). The candidate set is a
    // superset of the true disk.
    template <class Visit>
    void for_each_near(double cx, double cy, double radius_sq, Visit&& visit) const;
    // Exact: every x with N(x) <= bound, in (b, a) order.
    std::vector<AlgInt> points_of_norm_at_most(Int bound) const;

private:
    Int d_;
    bool omega_half_;
    Int omega_norm_;  // N(omega)
    Rational eps_sq_;
    SurdValue c_d_;
    SurdValue c_d_sq_;
    std::vector<AlgInt> units_;
};

bool is_squarefree(Int d);

template <class Visit>
void RingContext::for_each_near(double cx, double cy, double radius_sq, Visit&& visit) const {
    const double r = std::sqrt(std::max(radius_sq, 0.0)) * (1.0 + 1e-9) + 1e-9;
    // Imaginary part of a + b*omega is b*ystep.
    const double ystep = omega_half_ ? std::sqrt(static_cast<double>(d_)) / 2 : std::sqrt(static_cast<double>(d_));
    const auto b_lo = static_cast<Int>(std::floor((cy - r) / ystep)) - 1;
    const auto b_hi = static_cast<Int>(std::ceil((cy + r) / ystep)) + 1;
    for (Int b = b_lo; b <= b_hi; ++b) {
        const double dy = static_cast<double>(b) * ystep - cy;
        const double w = std::sqrt(std::max(r * r - dy * dy, 0.0)) + 1e-9;
        const double shift = omega_half_ ? -0.5 * static_cast<double>(b) : 0.0;
        const auto a_lo = static_cast<Int>(std::floor(cx - w - shift)) - 1;
        const auto a_hi = static_cast<Int>(std::ceil(cx + w - shift)) + 1;
        for (Int a = a_lo; a <= a_hi; ++a) visit(AlgInt{a, b});
    }
}

} // namespace bianchi
