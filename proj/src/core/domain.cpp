#include "bianchi/domain.hpp"

#include <tuple>

namespace bianchi {

namespace {

// Calls visit(gamma, delta, value) for every pair (coprime or not) with
// value = |gamma z + delta|^2 + N(gamma) s <= 1.
template <class Visit>
void for_each_low_pair(const RingContext& ctx, const Point& p, Visit&& visit) {
    const Rational inv_s = 1 / p.s;
    const Int gamma_bound = floor_to_int(inv_s);
    for (AlgInt gamma : ctx.points_of_norm_at_most(gamma_bound)) {
        const Rational lift = ctx.norm(gamma) * p.s;
        const Rational room = 1 - lift;
        const FieldElem gz = ctx.mul(ctx.to_field(gamma), p.z);
        const auto [cx, cy] = ctx.approx(gz);
        // delta near -gamma z
        ctx.for_each_near(-cx, -cy, room.get_d(), [&](AlgInt delta) {
            if (gamma.is_zero() && delta.is_zero()) return;
            Rational value = ctx.abs_sq(gz + ctx.to_field(delta)) + lift;
            if (value <= 1) visit(gamma, delta, std::move(value));
        });
    }
}

// delta = 1 first among otherwise equal keys, so (0, 1) is the witness when m_star = 1.
auto tie_key(const RingContext& ctx, AlgInt g, AlgInt d) {
    return std::make_tuple(ctx.norm(g), g.a, g.b, d != AlgInt{1, 0}, d.a, d.b);
}

} // namespace

std::vector<std::pair<AlgInt, AlgInt>> enumerate_candidates(const RingContext& ctx, const Point& p) {
    std::vector<std::pair<AlgInt, AlgInt>> out;
    for_each_low_pair(ctx, p, [&](AlgInt g, AlgInt d, const Rational&) {
        if (ctx.is_coprime(g, d)) out.emplace_back(g, d);
    });
    return out;
}

MuWitness mu_witness(const RingContext& ctx, const Point& p) {
    MuWitness best{};
    bool have = false;
    for_each_low_pair(ctx, p, [&](AlgInt g, AlgInt d, Rational value) {
        if (have) {
            const int c = cmp(value, best.m_star);
            if (c > 0) return;
            if (c == 0 && tie_key(ctx, g, d) >= tie_key(ctx, best.gamma0, best.delta0)) return;
        }
        // Coprimality is only checked for pairs that would improve the minimum.
        if (!ctx.is_coprime(g, d)) return;
        best = {g, d, std::move(value)};
        have = true;
    });
    return best;
}

bool in_P(const RingContext& ctx, const FieldElem& z) {
    const Rational& x = z.A;
    const Rational& b = z.B;  // y = b sqrt(d)
    switch (ctx.d()) {
    case 1:
        return abs(x) <= Rational(1, 2) && sgn(b) >= 0 && b <= Rational(1, 2);
    case 3: {
        // x/sqrt3 <= y  <=>  x <= 3b
        const Rational three_b = 3 * b;
        const bool upper = sgn(x) >= 0 && x <= three_b && three_b <= 1 - x;
        const bool lower = sgn(x) >= 0 && x <= Rational(1, 2) && -x <= three_b && three_b <= x;
        return upper || lower;
    }
    default:
        break;
    }
    const Rational y_max = ctx.omega_half() ? Rational(1, 2) : Rational(1);
    return sgn(x) >= 0 && x <= 1 && sgn(b) >= 0 && b <= y_max;
}

bool in_B(const RingContext& ctx, const Point& p) { return mu_witness(ctx, p).m_star >= 1; }

bool in_F(const RingContext& ctx, const Point& p) { return in_P(ctx, p.z) && in_B(ctx, p); }

} // namespace bianchi
