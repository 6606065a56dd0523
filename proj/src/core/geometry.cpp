#include "bianchi/geometry.hpp"
#include "bianchi/errors.hpp"

#include <algorithm>

namespace bianchi {

Point make_point(FieldElem z, Rational s) {
    if (sgn(s) <= 0) throw InvalidArgument("point needs s = t^2 > 0");
    return {std::move(z), std::move(s)};
}

bool GroupElem::is_canonical(const std::array<AlgInt, 4>& e) {
    for (const AlgInt& x : e)
        if (!x.is_zero()) return is_lex_positive(x);
    return false;
}

GroupElem::GroupElem(const RingContext& ctx, AlgInt alpha, AlgInt beta, AlgInt gamma, AlgInt delta) {
    if (ctx.mul(alpha, delta) - ctx.mul(beta, gamma) != AlgInt{1, 0})
        throw InvalidArgument("matrix does not have determinant 1");
    e_ = {alpha, beta, gamma, delta};
    if (!is_canonical(e_))
        for (AlgInt& x : e_) x = -x;
}

bool proj_equal(const RingContext& ctx, const ProjPoint& p, const ProjPoint& q) {
    return ctx.mul(p.x, q.y) == ctx.mul(q.x, p.y);
}

Point apply(const RingContext& ctx, const GroupElem& m, const Point& p) {
    const FieldElem a = ctx.to_field(m.alpha());
    const FieldElem b = ctx.to_field(m.beta());
    const FieldElem c = ctx.to_field(m.gamma());
    const FieldElem d = ctx.to_field(m.delta());
    const FieldElem cz_d = ctx.mul(c, p.z) + d;
    const FieldElem az_b = ctx.mul(a, p.z) + b;
    // |cz + d|^2 + |c|^2 t^2
    const Rational q = ctx.abs_sq(cz_d) + ctx.abs_sq(c) * p.s;
    const FieldElem num = ctx.mul(az_b, conj(cz_d)) + ctx.mul(a, conj(c)) * p.s;
    const Rational inv_q = 1 / q;
    return {num * inv_q, p.s * inv_q * inv_q};
}

ProjPoint apply_boundary(const RingContext& ctx, const GroupElem& m, const ProjPoint& q) {
    return {ctx.mul(m.alpha(), q.x) + ctx.mul(m.beta(), q.y), ctx.mul(m.gamma(), q.x) + ctx.mul(m.delta(), q.y)};
}

Int height_sq(const RingContext& ctx, const GroupElem& m) {
    Int h = 0;
    for (const AlgInt& x : m.entries()) h = std::max(h, ctx.norm(x));
    return h;
}

Rational d_sq(const RingContext& ctx, const Point& p) {
    Rational out(1);
    const Rational z2 = ctx.abs_sq(p.z);
    if (z2 > out) out = z2;
    const Rational inv_s = 1 / p.s;
    if (inv_s > out) out = inv_s;
    return out;
}

Rational proj_height_sq(const RingContext& ctx, const ProjPoint& q) {
    Rational h(std::max(ctx.norm(q.x), ctx.norm(q.y)), ctx.ideal_norm(q.x, q.y));
    h.canonicalize();
    return h;
}

GroupElem compose(const RingContext& ctx, const GroupElem& a, const GroupElem& b) {
    return {ctx,
            ctx.mul(a.alpha(), b.alpha()) + ctx.mul(a.beta(), b.gamma()),
            ctx.mul(a.alpha(), b.beta()) + ctx.mul(a.beta(), b.delta()),
            ctx.mul(a.gamma(), b.alpha()) + ctx.mul(a.delta(), b.gamma()),
            ctx.mul(a.gamma(), b.beta()) + ctx.mul(a.delta(), b.delta())};
}

GroupElem inverse(const RingContext& ctx, const GroupElem& m) {
    return {ctx, m.delta(), -m.beta(), -m.gamma(), m.alpha()};
}

GroupElem transpose(const RingContext& ctx, const GroupElem& m) {
    return {ctx, m.alpha(), m.gamma(), m.beta(), m.delta()};
}

} // namespace bianchi
