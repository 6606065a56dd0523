#pragma once

#include "bianchi/ring.hpp"

#include <array>

namespace bianchi {

/// A point of upper half-space with K_d-rational z and rational s = t^2 > 0.
struct Point {
    FieldElem z;
    Rational s{1};

    friend bool operator==(const Point& x, const Point& y) { return x.z == y.z && x.s == y.s; }
};

Point make_point(FieldElem z, Rational s);

/// Determinant-one matrix [[alpha, beta], [gamma, delta]] over O_d, stored as
/// the canonical representative of its class modulo +-I: the first nonzero
/// entry in reading order is lexicographically positive.
class GroupElem {
public:
    // Identity.
    GroupElem() = default;
    // Validates the determinant and canonicalizes.
    GroupElem(const RingContext& ctx, AlgInt alpha, AlgInt beta, AlgInt gamma, AlgInt delta);

    static GroupElem identity() { return {}; }
    // z -> -1/z
    static GroupElem inversion() { return from_canonical({AlgInt{0, 0}, AlgInt{-1, 0}, AlgInt{1, 0}, AlgInt{0, 0}}); }

    AlgInt alpha() const { return e_[0]; }
    AlgInt beta() const { return e_[1]; }
    AlgInt gamma() const { return e_[2]; }
    AlgInt delta() const { return e_[3]; }
    const std::array<AlgInt, 4>& entries() const { return e_; }

    friend auto operator<=>(const GroupElem&, const GroupElem&) = default;

    static bool is_canonical(const std::array<AlgInt, 4>& e);
    // Trusts the caller: e must have determinant one and be canonical.
    static GroupElem from_canonical(const std::array<AlgInt, 4>& e) {
        GroupElem g;
        g.e_ = e;
        return g;
    }

private:
    std::array<AlgInt, 4> e_{AlgInt{1, 0}, AlgInt{0, 0}, AlgInt{0, 0}, AlgInt{1, 0}};
};

/// (x : y) in P^1(K_d) with x, y in O_d not both zero. Equality is projective.
struct ProjPoint {
    AlgInt x;
    AlgInt y;
};

bool proj_equal(const RingContext& ctx, const ProjPoint& p, const ProjPoint& q);

Point apply(const RingContext& ctx, const GroupElem& m, const Point& p);
ProjPoint apply_boundary(const RingContext& ctx, const GroupElem& m, const ProjPoint& q);

Int height_sq(const RingContext& ctx, const GroupElem& m);
Rational d_sq(const RingContext& ctx, const Point& p);
Rational proj_height_sq(const RingContext& ctx, const ProjPoint& q);

GroupElem compose(const RingContext& ctx, const GroupElem& a, const GroupElem& b);
GroupElem inverse(const RingContext& ctx, const GroupElem& m);
GroupElem transpose(const RingContext& ctx, const GroupElem& m);

} // namespace bianchi
