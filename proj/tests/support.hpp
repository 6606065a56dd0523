#pragma once

// Random generators and brute-force oracles shared by the unit tests and the
// acceptance runner. The oracles deliberately avoid RingContext arithmetic:
// they work with explicit coordinates x + y sqrt(-d).

#include "bianchi/count.hpp"
#include "bianchi/hermitian.hpp"
#include "bianchi/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace testing_support {

using namespace bianchi;
using Rng = std::mt19937_64;

inline Int uniform(Rng& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, Int num_max, Int den_max) {
    return make_rational(uniform(rng, -num_max, num_max), uniform(rng, 1, den_max));
}

// |z| <= 10 and s in [1/100, 100].
inline Point random_point(const RingContext& ctx, Rng& rng) {
    const Rational bound(100);
    for (;;) {
        const Int den = uniform(rng, 1, 60);
        FieldElem z{make_rational(uniform(rng, -10 * den, 10 * den), den),
                    make_rational(uniform(rng, -10 * den, 10 * den), den * uniform(rng, 1, 4))};
        if (ctx.abs_sq(z) > bound) continue;
        return make_point(std::move(z), make_rational(uniform(rng, 1, 100), uniform(rng, 1, 100)));
    }
}

inline AlgInt random_alg(Rng& rng, Int r) { return {uniform(rng, -r, r), uniform(rng, -r, r)}; }

// A product of random translations, unit rotations and inversions.
inline GroupElem random_group(const RingContext& ctx, Rng& rng, int steps) {
    GroupElem g;
    for (int i = 0; i < steps; ++i) {
        GroupElem step;
        switch (uniform(rng, 0, 2)) {
        case 0: step = GroupElem(ctx, {1, 0}, random_alg(rng, 2), {0, 0}, {1, 0}); break;
        case 1: {
            const AlgInt u = ctx.units()[static_cast<std::size_t>(uniform(rng, 0, ctx.unit_count() - 1))];
            step = GroupElem(ctx, u, {0, 0}, {0, 0}, ctx.conj(u));
            break;
        }
        default: step = GroupElem::inversion(); break;
        }
        g = compose(ctx, step, g);
    }
    return g;
}

inline std::pair<AlgInt, AlgInt> random_coprime_pair(const RingContext& ctx, Rng& rng, Int r) {
    for (;;) {
        const AlgInt a = random_alg(rng, r);
        const AlgInt b = random_alg(rng, r);
        if (a.is_zero() || b.is_zero()) continue;
        if (ctx.is_coprime(a, b)) return {a, b};
    }
}

inline HermitianForm random_definite_form(const RingContext& ctx, Rng& rng) {
    for (;;) {
        HermitianForm f{uniform(rng, 1, 40), random_alg(rng, 6), uniform(rng, 1, 40)};
        if (is_positive_definite(ctx, f)) return f;
    }
}

// ---------------------------------------------------------------------------
// Explicit coordinates: x + y sqrt(-d).

struct KElem {
    Rational x, y;
};

struct Coords {
    Int d;

    KElem of(AlgInt v) const {
        if (d % 4 == 3) return {Rational(v.a) - Rational(v.b) / 2, Rational(v.b) / 2};
        return {Rational(v.a), Rational(v.b)};
    }
    KElem add(const KElem& p, const KElem& q) const { return {p.x + q.x, p.y + q.y}; }
    KElem sub(const KElem& p, const KElem& q) const { return {p.x - q.x, p.y - q.y}; }
    KElem mul(const KElem& p, const KElem& q) const { return {p.x * q.x - d * p.y * q.y, p.x * q.y + p.y * q.x}; }
    KElem conj(const KElem& p) const { return {p.x, -p.y}; }
    Rational abs_sq(const KElem& p) const { return p.x * p.x + d * p.y * p.y; }
    bool eq(const KElem& p, const KElem& q) const { return p.x == q.x && p.y == q.y; }
    bool is_zero(const KElem& p) const { return sgn(p.x) == 0 && sgn(p.y) == 0; }
};

// ---------------------------------------------------------------------------
// Quaternion oracle. P = z + t j with t = sqrt(s) kept symbolic: scalars live in
// K_d + K_d t with t^2 = s, and t is real so it commutes with everything.

struct TScalar {
    KElem r0, r1;  // r0 + r1 t
};

struct Quat {
    TScalar a, b;  // a + b j
};

class QuaternionOracle {
public:
    QuaternionOracle(Int d, Rational s) : k_{d}, s_(std::move(s)) {}

    TScalar add(const TScalar& p, const TScalar& q) const { return {k_.add(p.r0, q.r0), k_.add(p.r1, q.r1)}; }
    TScalar neg(const TScalar& p) const { return {k_.sub({}, p.r0), k_.sub({}, p.r1)}; }
    TScalar mul(const TScalar& p, const TScalar& q) const {
        const KElem t2 = k_.mul(p.r1, q.r1);
        return {k_.add(k_.mul(p.r0, q.r0), {t2.x * s_, t2.y * s_}), k_.add(k_.mul(p.r0, q.r1), k_.mul(p.r1, q.r0))};
    }
    TScalar conj(const TScalar& p) const { return {k_.conj(p.r0), k_.conj(p.r1)}; }

    // (a + bj)(c + ej) = (ac - b conj(e)) + (ae + b conj(c)) j
    Quat mul(const Quat& p, const Quat& q) const {
        return {add(mul(p.a, q.a), neg(mul(p.b, conj(q.b)))), add(mul(p.a, q.b), mul(p.b, conj(q.a)))};
    }
    Quat add(const Quat& p, const Quat& q) const { return {add(p.a, q.a), add(p.b, q.b)}; }

    Quat inverse(const Quat& q) const {
        // |q|^2 = |a|^2 + |b|^2, a real element r0 + r1 t of Q(t).
        const TScalar n = add(mul(q.a, conj(q.a)), mul(q.b, conj(q.b)));
        const Rational r0 = n.r0.x, r1 = n.r1.x;
        const Rational den = r0 * r0 - r1 * r1 * s_;
        const TScalar inv{{r0 / den, 0}, {-r1 / den, 0}};
        const Quat bar{conj(q.a), neg(q.b)};
        return {mul(bar.a, inv), mul(bar.b, inv)};
    }

    Quat scalar(const KElem& c) const { return {{c, {}}, {}}; }

    // (aP + b)(cP + d)^-1; nullopt if the result is not of the form z' + t' j
    // with z' in K_d and t' a rational multiple of t.
    std::optional<Point> apply(const GroupElem& g, const FieldElem& z) const {
        const Quat p{{{z.A, z.B}, {}}, {{}, {{1}, 0}}};
        const Quat num = add(mul(scalar(k_.of(g.alpha())), p), scalar(k_.of(g.beta())));
        const Quat den = add(mul(scalar(k_.of(g.gamma())), p), scalar(k_.of(g.delta())));
        const Quat r = mul(num, inverse(den));
        if (!k_.is_zero(r.a.r1) || !k_.is_zero(r.b.r0) || sgn(r.b.r1.y) != 0) return std::nullopt;
        const Rational c = r.b.r1.x;
        return Point{FieldElem{r.a.r0.x, r.a.r0.y}, c * c * s_};
    }

private:
    Coords k_;
    Rational s_;
};

// ---------------------------------------------------------------------------
// Counting oracles.

inline Int oracle_norm(Int d, AlgInt v) {
    const Coords k{d};
    const Rational n = k.abs_sq(k.of(v));
    return n.get_num().get_si();
}

// All v with N(v) <= bound, scanning a generous box.
inline std::vector<AlgInt> oracle_ball(Int d, Int bound) {
    std::vector<AlgInt> out;
    const Int r = 2 * static_cast<Int>(std::sqrt(static_cast<double>(bound))) + 2;
    for (Int a = -r; a <= r; ++a)
        for (Int b = -r; b <= r; ++b)
            if (oracle_norm(d, {a, b}) <= bound) out.push_back({a, b});
    return out;
}

struct WOracle {
    std::uint64_t w = 0;        // modulo +-I
    std::uint64_t w_tilde = 0;  // height attained on the first column
};

// #W_d(T) by brute force over every 4-tuple of entries.
inline WOracle oracle_count_W(Int d, Int t_sq) {
    const Coords k{d};
    const auto ball = oracle_ball(d, t_sq);
    std::vector<KElem> v;
    std::vector<Int> n;
    for (AlgInt x : ball) {
        v.push_back(k.of(x));
        n.push_back(oracle_norm(d, x));
    }
    const KElem one{1, 0};
    WOracle sl;
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t e = 0; e < v.size(); ++e) {
            const KElem ae = k.mul(v[a], v[e]);
            for (std::size_t b = 0; b < v.size(); ++b)
                for (std::size_t c = 0; c < v.size(); ++c)
                    if (k.eq(k.sub(ae, k.mul(v[b], v[c])), one)) {
                        ++sl.w;
                        if (std::max(n[a], n[c]) >= std::max(n[b], n[e])) ++sl.w_tilde;
                    }
        }
    return {sl.w / 2, sl.w_tilde / 2};
}

// #X_d(T) for Euclidean d (1, 2, 3, 7, 11): pairs with no common non-unit
// divisor, up to units, with max norm <= T^2.
inline std::uint64_t oracle_count_X(Int d, Int t_sq) {
    const auto ball = oracle_ball(d, t_sq);
    const Coords k{d};
    auto divides = [&](AlgInt g, AlgInt x) {
        const KElem gx = k.of(g), xx = k.of(x);
        const KElem q = k.mul(xx, k.conj(gx));
        const Rational n = k.abs_sq(gx);
        const KElem quo{q.x / n, q.y / n};
        // integral iff it is the image of some AlgInt
        Rational b = quo.y, a = quo.x;
        if (d % 4 == 3) {
            b = 2 * quo.y;
            a = quo.x + quo.y;
        }
        return a.get_den() == 1 && b.get_den() == 1;
    };
    std::vector<AlgInt> nonunits;
    for (AlgInt g : ball)
        if (oracle_norm(d, g) > 1) nonunits.push_back(g);
    std::uint64_t pairs = 0;
    std::uint64_t units = 0;
    for (AlgInt u : ball)
        if (oracle_norm(d, u) == 1) ++units;
    for (AlgInt x : ball)
        for (AlgInt y : ball) {
            if (x.is_zero() && y.is_zero()) continue;
            bool coprime = true;
            for (AlgInt g : nonunits)
                if (divides(g, x) && divides(g, y)) {
                    coprime = false;
                    break;
                }
            if (coprime) ++pairs;
        }
    return pairs / units;
}

// Integer coordinates (X + Y sqrt(-d)) / 2 for the intricacy scan.
struct Half {
    Int x, y;
};

inline Half to_half(Int d, AlgInt v) { return d % 4 == 3 ? Half{2 * v.a - v.b, v.b} : Half{2 * v.a, 2 * v.b}; }

inline std::optional<AlgInt> from_half(Int d, Half h) {
    if (d % 4 == 3) {
        if ((h.x + h.y) % 2 != 0) return std::nullopt;
        return AlgInt{(h.x + h.y) / 2, h.y};
    }
    if (h.x % 2 != 0 || h.y % 2 != 0) return std::nullopt;
    return AlgInt{h.x / 2, h.y / 2};
}

// Smallest height among canonical gamma with height_sq <= max_h_sq sending p
// into F_d, found by scanning (alpha, gamma, delta) and solving for beta.
inline std::optional<Int> oracle_intricacy(const RingContext& ctx, const Point& p, Int max_h_sq) {
    const Int d = ctx.d();
    const auto ball = oracle_ball(d, max_h_sq);
    std::vector<Half> half;
    std::vector<Int> norms;
    for (AlgInt v : ball) {
        half.push_back(to_half(d, v));
        norms.push_back(oracle_norm(d, v));
    }
    std::map<Int, std::vector<GroupElem>> by_height;
    auto keep = [&](AlgInt a, AlgInt b, AlgInt c, AlgInt e, Int h) {
        const std::array<AlgInt, 4> m{a, b, c, e};
        if (GroupElem::is_canonical(m)) by_height[h].push_back(GroupElem(ctx, a, b, c, e));
    };
    for (std::size_t ia = 0; ia < ball.size(); ++ia)
        for (std::size_t ic = 0; ic < ball.size(); ++ic) {
            const Half a = half[ia], c = half[ic];
            if (ball[ic].is_zero()) {
                // upper triangular: alpha a unit, delta its inverse (= conjugate)
                if (norms[ia] != 1) continue;
                const AlgInt e = *from_half(d, Half{a.x, -a.y});
                for (std::size_t ib = 0; ib < ball.size(); ++ib) keep(ball[ia], ball[ib], ball[ic], e, std::max<Int>(1, norms[ib]));
                continue;
            }
            for (std::size_t ie = 0; ie < ball.size(); ++ie) {
                const Half e = half[ie];
                // 2 (alpha delta - 1) in half coordinates, times conj(gamma)
                const Int nx = (a.x * e.x - d * a.y * e.y) / 2 - 2;
                const Int ny = (a.x * e.y + a.y * e.x) / 2;
                const Int qx = (nx * c.x + d * ny * c.y) / 2;
                const Int qy = (ny * c.x - nx * c.y) / 2;
                const Int nc = norms[ic];
                if (qx % nc != 0 || qy % nc != 0) continue;
                const auto beta = from_half(d, Half{qx / nc, qy / nc});
                if (!beta) continue;
                const Int nb = oracle_norm(d, *beta);
                if (nb > max_h_sq) continue;
                keep(ball[ia], *beta, ball[ic], ball[ie], std::max({norms[ia], nb, nc, norms[ie]}));
            }
        }
    for (auto& [h, gs] : by_height)
        for (const GroupElem& g : gs) {
            const Point img = apply(ctx, g, p);
            if (!in_P(ctx, img.z)) continue;
            // The pair (1, -nearest lattice point) alone already rules out most images.
            const FieldElem off = img.z - ctx.to_field(ctx.round_to_lattice(img.z));
            if (ctx.abs_sq(off) + img.s < 1) continue;
            if (in_B(ctx, img)) return h;
        }
    return std::nullopt;
}

// Largest squared distance to the lattice over a grid of the basic cell.
inline double oracle_covering_grid(Int d, int steps) {
    const bool half = d % 4 == 3;
    const double sd = std::sqrt(static_cast<double>(d));
    double worst = 0;
    for (int i = 0; i <= steps; ++i)
        for (int j = 0; j <= steps; ++j) {
            const double u = static_cast<double>(i) / steps, v = static_cast<double>(j) / steps;
            // point u * 1 + v * omega
            const double px = u + (half ? -0.5 * v : 0.0);
            const double py = v * (half ? sd / 2 : sd);
            double best = 1e300;
            for (int a = -2; a <= 3; ++a)
                for (int b = -2; b <= 3; ++b) {
                    const double lx = a + (half ? -0.5 * b : 0.0);
                    const double ly = b * (half ? sd / 2 : sd);
                    best = std::min(best, (px - lx) * (px - lx) + (py - ly) * (py - ly));
                }
            worst = std::max(worst, best);
        }
    return worst;
}

} // namespace testing_support
