#include "bianchi/reduce.hpp"
#include "bianchi/errors.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace bianchi {

std::string_view to_string(Branch b) {
    switch (b) {
    case Branch::already_in_F: return "already_in_F";
    case Branch::unit_column: return "unit_column";
    case Branch::general: return "general";
    }
    return "general";
}

Branch parse_branch(std::string_view s) {
    if (s == "already_in_F") return Branch::already_in_F;
    if (s == "unit_column") return Branch::unit_column;
    if (s == "general") return Branch::general;
    throw ParseError("unknown branch tag '" + std::string(s) + "'");
}

namespace {

SurdValue as_surd(const RingContext& ctx, const Rational& r) { return SurdValue::rational(r, ctx.c_d().m()); }

// Height-one elements with bottom row a unit multiple of (gamma0, 0).
GroupElem unit_column_tau(const RingContext& ctx, const Point& p, AlgInt gamma0) {
    std::vector<AlgInt> tops{AlgInt{0, 0}};
    tops.insert(tops.end(), ctx.units().begin(), ctx.units().end());
    std::vector<GroupElem> candidates;
    for (AlgInt u : ctx.units()) {
        const AlgInt c = ctx.mul(gamma0, u);
        const AlgInt b = -*ctx.divide(AlgInt{1, 0}, c);
        for (AlgInt a : tops) candidates.emplace_back(ctx, a, b, c, AlgInt{0, 0});
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const GroupElem& g : candidates)
        if (in_B(ctx, apply(ctx, g, p))) return g;
    throw CheckFailure("no height-one element moves the point into B_d");
}

} // namespace

BReduction reduce_to_B(const RingContext& ctx, const Point& p) {
    BReduction out;
    out.witness = mu_witness(ctx, p);
    const MuWitness& w = out.witness;
    if (w.m_star >= 1) {
        out.image = p;
        out.branch = Branch::unit_column;
        return out;
    }
    if (w.delta0.is_zero()) {
        out.tau = unit_column_tau(ctx, p, w.gamma0);
        out.branch = Branch::unit_column;
    } else {
        // gamma0 x + delta0 y = 1 gives alpha0 = y, beta0 = -x.
        const BezoutPair xy = ctx.bezout_bounded(w.gamma0, w.delta0);
        const AlgInt alpha0 = xy.y;
        const AlgInt beta0 = -xy.x;
        out.tau = GroupElem(ctx, alpha0, beta0, w.gamma0, w.delta0);
        out.branch = Branch::general;

        const SurdValue& c2 = ctx.c_d_sq();
        const Int n_gamma = ctx.norm(w.gamma0);
        out.bezout_bounds_ok = surd_le(as_surd(ctx, ctx.norm(alpha0)), c2 * Rational(n_gamma)) &&
                               surd_le(as_surd(ctx, ctx.norm(beta0)), c2 * Rational(ctx.norm(w.delta0)));
        const Rational dsq = d_sq(ctx, p);
        const Int h = height_sq(ctx, out.tau);
        out.height_chain_ok = n_gamma <= h && surd_le(as_surd(ctx, h), c2 * Rational(4 * n_gamma * dsq));
    }
    out.image = apply(ctx, out.tau, p);
    if (out.image.s != p.s / (w.m_star * w.m_star)) throw CheckFailure("height coordinate after reduce_to_B is not s/m*^2");
    if (out.branch == Branch::general) {
        const Rational bound = 9 * d_sq(ctx, p) / ctx.norm(w.gamma0);
        out.image_norm_ok = surd_le(as_surd(ctx, ctx.abs_sq(out.image.z)), ctx.c_d_sq() * bound);
    }
    return out;
}

Translation translate_to_P(const RingContext& ctx, const FieldElem& z) {
    Translation out;
    out.image = z;
    if (in_P(ctx, z)) return out;

    std::vector<AlgInt> rotations;  // representatives u of distinct u^2
    std::vector<AlgInt> squares;
    for (AlgInt u : ctx.units()) {
        const AlgInt sq = ctx.mul(u, u);
        if (std::find(squares.begin(), squares.end(), sq) != squares.end()) continue;
        squares.push_back(sq);
        rotations.push_back(u);
    }

    std::optional<std::pair<Int, GroupElem>> best;
    FieldElem best_image;
    for (std::size_t k = 0; k < rotations.size(); ++k) {
        const AlgInt u = rotations[k];
        const FieldElem w = ctx.mul(ctx.to_field(squares[k]), z);
        // Move w into the lattice cell at the origin, then search nearby.
        const Rational bw = ctx.omega_half() ? Rational(w.B * 2) : w.B;
        const Rational aw = ctx.omega_half() ? Rational(w.A + w.B) : w.A;
        const AlgInt base{-floor_to_int(aw), -floor_to_int(bw)};
        for (Int i = -2; i <= 2; ++i) {
            for (Int j = -2; j <= 2; ++j) {
                const AlgInt shift = base + AlgInt{i, j};
                FieldElem moved = w + ctx.to_field(shift);
                if (!in_P(ctx, moved)) continue;
                // z -> u^2 z + u mu with u mu = shift
                const AlgInt mu = ctx.mul(ctx.conj(u), shift);
                GroupElem sigma(ctx, u, mu, AlgInt{0, 0}, ctx.conj(u));
                const Int h = height_sq(ctx, sigma);
                if (!best || h < best->first || (h == best->first && sigma < best->second)) {
                    best.emplace(h, sigma);
                    best_image = std::move(moved);
                }
            }
        }
    }
    if (!best) throw CheckFailure("no stabilizer element moves z into P_d");
    out.sigma = best->second;
    out.image = best_image;
    out.height_ok = sqrt_le_sqrt_plus(Rational(best->first), ctx.abs_sq(z), ctx.c_d());
    return out;
}

bool certificate_bound_holds(const RingContext& ctx, Int h, const Rational& dsq) {
    const SurdValue c4 = ctx.c_d_sq() * ctx.c_d_sq();
    return surd_le(as_surd(ctx, Rational(h)), c4 * Rational(256 * dsq * dsq));
}

ReductionCertificate reduce(const RingContext& ctx, const Point& p) {
    ReductionCertificate cert;
    cert.point = p;
    cert.d_sq = d_sq(ctx, p);
    if (in_F(ctx, p)) {
        cert.image = p;
        cert.branch = Branch::already_in_F;
        cert.bound_ok = certificate_bound_holds(ctx, 1, cert.d_sq);
        return cert;
    }
    const BReduction step = reduce_to_B(ctx, p);
    const Translation tr = translate_to_P(ctx, step.image.z);
    cert.gamma = compose(ctx, tr.sigma, step.tau);
    cert.image = apply(ctx, cert.gamma, p);
    if (!(cert.image == Point{tr.image, step.image.s})) throw CheckFailure("composed action disagrees with the two steps");
    if (!in_F(ctx, cert.image)) throw CheckFailure("reduced point is not in F_d");
    cert.branch = step.branch;
    cert.height_sq = height_sq(ctx, cert.gamma);

    cert.checks.bezout_bounds = step.bezout_bounds_ok;
    cert.checks.height_chain = step.height_chain_ok;
    cert.checks.image_norm = step.image_norm_ok;
    cert.checks.translation_height = tr.height_ok;
    const Int hs = height_sq(ctx, tr.sigma);
    const Int ht = height_sq(ctx, step.tau);
    cert.checks.submultiplicative = Rational(cert.height_sq) <= Rational(4) * hs * ht;
    cert.bound_ok = certificate_bound_holds(ctx, cert.height_sq, cert.d_sq);
    return cert;
}

SharpnessWitness sharpness_witness(const RingContext& ctx, Int n) {
    if (n < 2) throw InvalidArgument("sharpness witness needs n >= 2");
    const Int n2 = n * n;
    SharpnessWitness out{GroupElem(ctx, AlgInt{n, 0}, AlgInt{1 - n2, 0}, AlgInt{-1, 0}, AlgInt{n, 0}),
                         Point{FieldElem{make_rational(2 * n2 - 1, 2 * n), 0}, make_rational(1, 4 * n2)}};
    if (!(apply(ctx, out.sigma, out.point) == Point{FieldElem{}, Rational(n2)}))
        throw CheckFailure("sigma_n does not send the witness to (0, n)");
    if (height_sq(ctx, out.sigma) != (n2 - 1) * (n2 - 1)) throw CheckFailure("unexpected height of sigma_n");
    if (d_sq(ctx, out.point) != 4 * n2) throw CheckFailure("unexpected D^2 of the witness point");
    return out;
}

Int intricacy_upper(const RingContext& ctx, const Point& p) { return reduce(ctx, p).height_sq; }

} // namespace bianchi
