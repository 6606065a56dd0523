#include "bianchi/ring.hpp"
#include "bianchi/detail/checked.hpp"
#include "bianchi/errors.hpp"

#include <array>
#include <cstdlib>
#include <string>

namespace bianchi {

using checked::add;
using checked::mul;
using checked::sub;

AlgInt operator+(AlgInt x, AlgInt y) { return {add(x.a, y.a), add(x.b, y.b)}; }
AlgInt operator-(AlgInt x, AlgInt y) { return {sub(x.a, y.a), sub(x.b, y.b)}; }
AlgInt operator-(AlgInt x) { return {sub(0, x.a), sub(0, x.b)}; }

FieldElem operator+(const FieldElem& x, const FieldElem& y) { return {x.A + y.A, x.B + y.B}; }
FieldElem operator-(const FieldElem& x, const FieldElem& y) { return {x.A - y.A, x.B - y.B}; }
FieldElem operator-(const FieldElem& x) { return {-x.A, -x.B}; }
FieldElem operator*(const FieldElem& x, const Rational& r) { return {x.A * r, x.B * r}; }

bool is_squarefree(Int d) {
    if (d <= 0) return false;
    for (Int p = 2; p <= d / p; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

RingContext::RingContext(Int d) : d_(d) {
    if (!is_squarefree(d))
        throw InvalidDiscriminant("d must be a squarefree positive integer, got " + std::to_string(d));
    omega_half_ = d % 4 == 3;
    omega_norm_ = omega_half_ ? (1 + d) / 4 : d;
    if (omega_half_) {
        eps_sq_ = make_rational((1 + d) * (1 + d), 16 * d);
        // eps = (1+d) / (4 sqrt d) = (1+d)/(4d) * sqrt d
        c_d_ = SurdValue(1, make_rational(1 + d, 4 * d), d);
    } else {
        eps_sq_ = make_rational(1 + d, 4);
        c_d_ = SurdValue(1, Rational(1, 2), 1 + d);
    }
    eps_sq_.canonicalize();
    c_d_sq_ = c_d_ * c_d_;
    for (AlgInt x : points_of_norm_at_most(1))
        if (norm(x) == 1) units_.push_back(x);
}

AlgInt RingContext::mul(AlgInt x, AlgInt y) const {
    const Int ac = checked::mul(x.a, y.a);
    const Int be = checked::mul(x.b, y.b);
    const Int cross = add(checked::mul(x.a, y.b), checked::mul(x.b, y.a));
    if (omega_half_) {
        // omega^2 = -omega - (1+d)/4
        return {sub(ac, checked::mul(omega_norm_, be)), sub(cross, be)};
    }
    return {sub(ac, checked::mul(d_, be)), cross};
}

AlgInt RingContext::conj(AlgInt x) const {
    if (omega_half_) return {sub(x.a, x.b), sub(0, x.b)};
    return {x.a, sub(0, x.b)};
}

Int RingContext::norm(AlgInt x) const {
    const Int aa = checked::mul(x.a, x.a);
    const Int bb = checked::mul(x.b, x.b);
    if (omega_half_) return add(sub(aa, checked::mul(x.a, x.b)), checked::mul(omega_norm_, bb));
    return add(aa, checked::mul(d_, bb));
}

AlgInt RingContext::unit_normalize(AlgInt x) const {
    AlgInt best = x;
    for (AlgInt u : units_) best = std::max(best, mul(u, x));
    return best;
}

FieldElem RingContext::to_field(AlgInt x) const {
    if (omega_half_) {
        const Rational half_b = make_rational(x.b, 2);
        return {Rational(x.a) - half_b, half_b};
    }
    return {Rational(x.a), Rational(x.b)};
}

std::optional<AlgInt> RingContext::to_integer(const FieldElem& z) const {
    if (omega_half_) {
        const Rational b = z.B * 2;
        const Rational a = z.A + z.B;
        if (b.get_den() != 1 || a.get_den() != 1) return std::nullopt;
        return AlgInt{to_int(a.get_num()), to_int(b.get_num())};
    }
    if (z.A.get_den() != 1 || z.B.get_den() != 1) return std::nullopt;
    return AlgInt{to_int(z.A.get_num()), to_int(z.B.get_num())};
}

FieldElem RingContext::mul(const FieldElem& x, const FieldElem& y) const {
    return {x.A * y.A - d_ * x.B * y.B, x.A * y.B + x.B * y.A};
}

Rational RingContext::abs_sq(const FieldElem& z) const { return z.A * z.A + d_ * z.B * z.B; }

FieldElem RingContext::inverse(const FieldElem& z) const {
    const Rational n = abs_sq(z);
    if (sgn(n) == 0) throw InvalidArgument("inverse of zero in K_d");
    return {z.A / n, -z.B / n};
}

std::optional<AlgInt> RingContext::divide(AlgInt num, AlgInt den) const {
    const Int n = norm(den);
    if (n == 0) throw InvalidArgument("division by zero in O_d");
    const AlgInt p = mul(num, conj(den));
    if (p.a % n != 0 || p.b % n != 0) return std::nullopt;
    return AlgInt{p.a / n, p.b / n};
}

std::pair<double, double> RingContext::approx(const FieldElem& z) const {
    return {z.A.get_d(), z.B.get_d() * std::sqrt(static_cast<double>(d_))};
}

std::pair<double, double> RingContext::approx(AlgInt x) const {
    const double sd = std::sqrt(static_cast<double>(d_));
    if (omega_half_) return {static_cast<double>(x.a) - 0.5 * static_cast<double>(x.b), 0.5 * static_cast<double>(x.b) * sd};
    return {static_cast<double>(x.a), static_cast<double>(x.b) * sd};
}

std::vector<AlgInt> RingContext::points_of_norm_at_most(Int bound) const {
    std::vector<AlgInt> out;
    if (bound < 0) return out;
    for_each_near(0.0, 0.0, static_cast<double>(bound), [&](AlgInt x) {
        if (norm(x) <= bound) out.push_back(x);
    });
    return out;
}

namespace {

struct ExtGcd {
    Int g, s, t;
};

// s*a + t*b = g >= 0
ExtGcd ext_gcd(Int a, Int b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const Int q = old_r / r;
        old_r = sub(old_r, checked::mul(q, r));
        std::swap(old_r, r);
        old_s = sub(old_s, checked::mul(q, s));
        std::swap(old_s, s);
        old_t = sub(old_t, checked::mul(q, t));
        std::swap(old_t, t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

// A vector of the Z-module together with its coordinates in the generators
// alpha, alpha*omega, beta, beta*omega.
struct Gen {
    std::array<Int, 2> v;
    std::array<Int, 4> c;
};

Gen lin(Int s, const Gen& p, Int t, const Gen& k) {
    Gen out{};
    for (int i = 0; i < 2; ++i) out.v[i] = add(checked::mul(s, p.v[i]), checked::mul(t, k.v[i]));
    for (int i = 0; i < 4; ++i) out.c[i] = add(checked::mul(s, p.c[i]), checked::mul(t, k.c[i]));
    return out;
}

// Unimodular step leaving the gcd of coordinate `axis` in p and zero in k.
void eliminate(Gen& p, Gen& k, int axis) {
    const Int pv = p.v[axis], kv = k.v[axis];
    const ExtGcd e = ext_gcd(pv, kv);
    Gen np = lin(e.s, p, e.t, k);
    Gen nk = lin(kv / e.g, p, -(pv / e.g), k);
    p = np;
    k = nk;
}

struct Echelon {
    Int index;
    Gen horizontal;  // (g1, 0)
    Gen upper;       // (w, g2)
};

Echelon echelon(const RingContext& ctx, AlgInt alpha, AlgInt beta) {
    if (alpha.is_zero() && beta.is_zero()) throw InvalidArgument("ideal of (0, 0) is not defined");
    const AlgInt omega{0, 1};
    const std::array<AlgInt, 4> g{alpha, ctx.mul(alpha, omega), beta, ctx.mul(beta, omega)};
    std::array<Gen, 4> gens{};
    for (int i = 0; i < 4; ++i) {
        gens[i].v = {g[i].a, g[i].b};
        gens[i].c = {0, 0, 0, 0};
        gens[i].c[i] = 1;
    }
    int p = -1;
    for (int i = 0; i < 4; ++i) {
        if (gens[i].v[1] == 0) continue;
        if (p < 0) p = i;
        else eliminate(gens[p], gens[i], 1);
    }
    int q = -1;
    for (int i = 0; i < 4; ++i) {
        if (i == p || gens[i].v[0] == 0) continue;
        if (q < 0) q = i;
        else eliminate(gens[q], gens[i], 0);
    }
    if (p < 0 || q < 0) throw std::logic_error("ideal lattice is not of full rank");
    const Int index = std::llabs(checked::mul(gens[q].v[0], gens[p].v[1]));
    return {index, gens[q], gens[p]};
}

} // namespace

Int RingContext::ideal_norm(AlgInt alpha, AlgInt beta) const { return echelon(*this, alpha, beta).index; }

std::optional<BezoutPair> RingContext::try_bezout(AlgInt alpha, AlgInt beta) const {
    const Echelon e = echelon(*this, alpha, beta);
    if (e.index != 1) return std::nullopt;
    // horizontal = (+-1, 0), so (1, 0) = sign * horizontal.
    const Int sign = e.horizontal.v[0];
    const auto& c = e.horizontal.c;
    BezoutPair out{{checked::mul(sign, c[0]), checked::mul(sign, c[1])}, {checked::mul(sign, c[2]), checked::mul(sign, c[3])}};
    if (mul(alpha, out.x) + mul(beta, out.y) != AlgInt{1, 0}) throw std::logic_error("bezout reconstruction failed");
    return out;
}

BezoutPair RingContext::any_bezout(AlgInt alpha, AlgInt beta) const {
    auto r = try_bezout(alpha, beta);
    if (!r) throw NotCoprime("elements do not generate the unit ideal");
    return *r;
}

BezoutPair RingContext::bezout_bounded(AlgInt alpha, AlgInt beta) const {
    if (alpha.is_zero() || beta.is_zero()) throw InvalidArgument("bezout_bounded needs nonzero arguments");
    const BezoutPair base = any_bezout(alpha, beta);
    const AlgInt lambda = round_to_lattice(mul(to_field(base.x), inverse(to_field(beta))));
    BezoutPair out{base.x - mul(lambda, beta), base.y + mul(lambda, alpha)};
    if (mul(alpha, out.x) + mul(beta, out.y) != AlgInt{1, 0}) throw CheckFailure("bezout identity lost after adjustment");
    const auto within = [&](AlgInt v, AlgInt ref) {
        return surd_le(SurdValue::rational(norm(v), c_d_sq_.m()), c_d_sq_ * Rational(norm(ref)));
    };
    if (!within(out.x, beta) || !within(out.y, alpha)) throw CheckFailure("bezout_bounded norm bound violated");
    return out;
}

Principality RingContext::is_principal(AlgInt alpha, AlgInt beta) const {
    if (beta.is_zero()) {
        if (alpha.is_zero()) throw InvalidArgument("ideal of (0, 0) is not defined");
        return {true, alpha};
    }
    if (alpha.is_zero()) return {true, beta};
    const Int n = ideal_norm(alpha, beta);
    for (AlgInt g : points_of_norm_at_most(n)) {
        if (norm(g) != n) continue;
        const auto qa = divide(alpha, g);
        const auto qb = divide(beta, g);
        if (qa && qb && is_coprime(*qa, *qb)) return {true, unit_normalize(g)};
    }
    return {false, std::nullopt};
}

AlgInt RingContext::round_to_lattice(const FieldElem& z) const {
    // Coordinates of z in the basis {1, omega}.
    const Rational bw = omega_half_ ? Rational(z.B * 2) : z.B;
    const Rational aw = omega_half_ ? Rational(z.A + z.B) : z.A;
    const Int fa = floor_to_int(aw);
    const Int fb = floor_to_int(bw);
    AlgInt best{};
    Rational best_dist(-1);
    // The nearest point is a vertex of the cell containing z; the wider window
    // is cheap and covers both lattice shapes.
    for (Int a = fa - 1; a <= fa + 2; ++a) {
        for (Int b = fb - 1; b <= fb + 2; ++b) {
            const AlgInt cand{a, b};
            const Rational dist = abs_sq(z - to_field(cand));
            if (sgn(best_dist) < 0 || dist < best_dist) {
                best = cand;
                best_dist = dist;
            }
        }
    }
    return best;
}

} // namespace bianchi
