#include "bianchi/hermitian.hpp"
#include "bianchi/detail/checked.hpp"
#include "bianchi/errors.hpp"

#include <algorithm>

namespace bianchi {

Int discriminant(const RingContext& ctx, const HermitianForm& f) {
    return checked::sub(checked::mul(f.a, f.dd), ctx.norm(f.b));
}

bool is_positive_definite(const RingContext& ctx, const HermitianForm& f) {
    return f.a > 0 && discriminant(ctx, f) > 0;
}

namespace {

void require_definite(const RingContext& ctx, const HermitianForm& f) {
    if (!is_positive_definite(ctx, f)) throw NotPositiveDefinite("form is not positive definite");
}

Int real_part(AlgInt x) {
    if (x.b != 0) throw std::logic_error("diagonal entry of a Hermitian form is not real");
    return x.a;
}

} // namespace

Point xi(const RingContext& ctx, const HermitianForm& f) {
    require_definite(ctx, f);
    const Rational inv_a(1, f.a);
    Rational s(discriminant(ctx, f), checked::mul(f.a, f.a));
    s.canonicalize();
    return {-ctx.to_field(f.b) * inv_a, s};
}

FieldForm xi_inverse(const RingContext& ctx, const Point& p) {
    return {Rational(1), -p.z, ctx.abs_sq(p.z) + p.s};
}

HermitianForm act(const RingContext& ctx, const GroupElem& g, const HermitianForm& f) {
    require_definite(ctx, f);
    // g^-1 = [[p, q], [r, u]]
    const AlgInt p = g.delta(), q = -g.beta(), r = -g.gamma(), u = g.alpha();
    const AlgInt a{f.a, 0}, dd{f.dd, 0}, b = f.b, bc = ctx.conj(f.b);
    // A g^-1
    const AlgInt m00 = ctx.mul(a, p) + ctx.mul(b, r);
    const AlgInt m01 = ctx.mul(a, q) + ctx.mul(b, u);
    const AlgInt m10 = ctx.mul(bc, p) + ctx.mul(dd, r);
    const AlgInt m11 = ctx.mul(bc, q) + ctx.mul(dd, u);
    // (g^-1)^* = [[conj p, conj r], [conj q, conj u]]
    const AlgInt pc = ctx.conj(p), rc = ctx.conj(r), qc = ctx.conj(q), uc = ctx.conj(u);
    HermitianForm out;
    out.a = real_part(ctx.mul(pc, m00) + ctx.mul(rc, m10));
    out.b = ctx.mul(pc, m01) + ctx.mul(rc, m11);
    out.dd = real_part(ctx.mul(qc, m01) + ctx.mul(uc, m11));
    return out;
}

Int form_height_sq(const RingContext& ctx, const HermitianForm& f) {
    require_definite(ctx, f);
    return std::max({checked::mul(f.a, f.a), ctx.norm(f.b), checked::mul(f.dd, f.dd)});
}

bool is_reduced(const RingContext& ctx, const HermitianForm& f) { return in_F(ctx, xi(ctx, f)); }

bool xi_distance_bound_holds(const RingContext& ctx, const HermitianForm& f) {
    return d_sq(ctx, xi(ctx, f)) <= make_rational(form_height_sq(ctx, f), discriminant(ctx, f));
}

FormReduction reduce_form(const RingContext& ctx, const HermitianForm& f) {
    FormReduction out;
    out.form = f;
    out.certificate = reduce(ctx, xi(ctx, f));
    out.g = out.certificate.gamma;
    out.reduced = act(ctx, out.g, f);
    out.discriminant_preserved = discriminant(ctx, out.reduced) == discriminant(ctx, f) && is_positive_definite(ctx, out.reduced);
    out.reduced_ok = is_reduced(ctx, out.reduced);
    const Int h = out.certificate.height_sq;
    out.point_bound_ok = certificate_bound_holds(ctx, h, out.certificate.d_sq);
    out.form_bound_ok = certificate_bound_holds(ctx, h, make_rational(form_height_sq(ctx, f), discriminant(ctx, f)));
    return out;
}

} // namespace bianchi
