#include "bianchi/count.hpp"
#include "bianchi/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>

namespace bianchi {

namespace {

void require_bound(Int t_sq) {
    if (t_sq < 1) throw InvalidArgument("height bound T^2 must be at least 1");
}

struct Lattice {
    std::vector<AlgInt> points;  // N(x) <= t_sq
    std::vector<Int> norms;
    std::vector<std::size_t> first_columns;  // indices with x = 0 or x lex positive
};

Lattice lattice_upto(const RingContext& ctx, Int t_sq) {
    Lattice l;
    l.points = ctx.points_of_norm_at_most(t_sq);
    l.norms.reserve(l.points.size());
    for (std::size_t i = 0; i < l.points.size(); ++i) {
        l.norms.push_back(ctx.norm(l.points[i]));
        if (l.points[i].is_zero() || is_lex_positive(l.points[i])) l.first_columns.push_back(i);
    }
    return l;
}

// Drives the enumeration of coprime columns (alpha, gamma) with alpha taken
// from first_columns[k] for k = offset, offset + stride, ...
//
// on_column(alpha, gamma, h_col) sees every coprime column;
// on_matrix(entries, h_col, h) sees every canonical element of W_d(T).
template <class OnColumn, class OnMatrix>
void walk(const RingContext& ctx, const Lattice& lat, Int t_sq, std::size_t offset, std::size_t stride,
          OnColumn&& on_column, OnMatrix&& on_matrix) {
    for (std::size_t k = offset; k < lat.first_columns.size(); k += stride) {
        const std::size_t ia = lat.first_columns[k];
        const AlgInt alpha = lat.points[ia];
        const Int n_alpha = lat.norms[ia];
        for (std::size_t ig = 0; ig < lat.points.size(); ++ig) {
            const AlgInt gamma = lat.points[ig];
            if (alpha.is_zero() && gamma.is_zero()) continue;
            const auto bez = ctx.try_bezout(alpha, gamma);
            if (!bez) continue;
            const Int h_col = std::max(n_alpha, lat.norms[ig]);
            on_column(alpha, gamma, h_col);

            // alpha x + gamma y = 1: base completion beta0 = -y, delta0 = x,
            // and every completion is (beta0 + lambda alpha, delta0 + lambda gamma).
            const AlgInt beta0 = -bez->y;
            const AlgInt delta0 = bez->x;
            const AlgInt pivot = alpha.is_zero() ? gamma : alpha;
            const AlgInt offset0 = alpha.is_zero() ? delta0 : beta0;
            const auto [px, py] = ctx.approx(pivot);
            const auto [ox, oy] = ctx.approx(offset0);
            const double pn = px * px + py * py;
            // center = -offset0 / pivot
            const double cx = -(ox * px + oy * py) / pn;
            const double cy = -(oy * px - ox * py) / pn;
            const double radius_sq = static_cast<double>(t_sq) / static_cast<double>(ctx.norm(pivot));
            ctx.for_each_near(cx, cy, radius_sq, [&](AlgInt lambda) {
                const AlgInt beta = beta0 + ctx.mul(lambda, alpha);
                const Int n_beta = ctx.norm(beta);
                if (n_beta > t_sq) return;
                const AlgInt delta = delta0 + ctx.mul(lambda, gamma);
                const Int n_delta = ctx.norm(delta);
                if (n_delta > t_sq) return;
                const std::array<AlgInt, 4> e{alpha, beta, gamma, delta};
                if (alpha.is_zero() && !GroupElem::is_canonical(e)) return;
                on_matrix(e, h_col, std::max({h_col, n_beta, n_delta}));
            });
        }
    }
}

Count prefix_sum(const std::vector<Count>& v, Int upto) {
    Count total = 0;
    for (Int h = 0; h <= upto && h < static_cast<Int>(v.size()); ++h) total += v[static_cast<std::size_t>(h)];
    return total;
}

} // namespace

HeightHistogram height_histogram(const RingContext& ctx, Int max_t_sq, unsigned workers) {
    require_bound(max_t_sq);
    workers = std::max(1u, workers);
    const Lattice lat = lattice_upto(ctx, max_t_sq);
    const auto size = static_cast<std::size_t>(max_t_sq) + 1;

    std::vector<HeightHistogram> partial(workers);
    auto run = [&](unsigned wi) {
        HeightHistogram& h = partial[wi];
        h.w.assign(size, 0);
        h.w_tilde.assign(size, 0);
        h.x.assign(size, 0);
        walk(
            ctx, lat, max_t_sq, wi, workers,
            [&](AlgInt alpha, AlgInt gamma, Int h_col) {
                const AlgInt lead = alpha.is_zero() ? gamma : alpha;
                if (ctx.unit_normalize(lead) == lead) ++h.x[static_cast<std::size_t>(h_col)];
            },
            [&](const std::array<AlgInt, 4>&, Int h_col, Int hgt) {
                ++h.w[static_cast<std::size_t>(hgt)];
                if (h_col == hgt) ++h.w_tilde[static_cast<std::size_t>(hgt)];
            });
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned wi = 0; wi < workers; ++wi) threads.emplace_back(run, wi);
        for (auto& t : threads) t.join();
    }

    HeightHistogram out;
    out.max_t_sq = max_t_sq;
    out.w.assign(size, 0);
    out.w_tilde.assign(size, 0);
    out.x.assign(size, 0);
    for (const auto& p : partial) {
        for (std::size_t i = 0; i < size; ++i) {
            out.w[i] += p.w[i];
            out.w_tilde[i] += p.w_tilde[i];
            out.x[i] += p.x[i];
        }
    }
    return out;
}

void enumerate_W(const RingContext& ctx, Int t_sq, const std::function<void(const GroupElem&)>& visit) {
    require_bound(t_sq);
    const Lattice lat = lattice_upto(ctx, t_sq);
    walk(
        ctx, lat, t_sq, 0, 1, [](AlgInt, AlgInt, Int) {},
        [&](const std::array<AlgInt, 4>& e, Int, Int) { visit(GroupElem::from_canonical(e)); });
}

Count count_W(const RingContext& ctx, Int t_sq, unsigned workers) {
    return prefix_sum(height_histogram(ctx, t_sq, workers).w, t_sq);
}

Count count_N_tilde(const RingContext& ctx, Int t_sq, unsigned workers) {
    return prefix_sum(height_histogram(ctx, t_sq, workers).w_tilde, t_sq);
}

Count count_X(const RingContext& ctx, Int t_sq, unsigned workers) {
    return prefix_sum(height_histogram(ctx, t_sq, workers).x, t_sq);
}

Count count_X_scaled(const RingContext& ctx, const HeightHistogram& hist, Int t_sq) {
    const SurdValue bound = SurdValue::rational(Rational(t_sq), ctx.c_d_sq().m());
    Count total = 0;
    for (std::size_t h = 0; h < hist.x.size(); ++h) {
        if (hist.x[h] == 0) continue;
        if (!surd_le(ctx.c_d_sq() * Rational(static_cast<Int>(h)), bound)) break;
        total += hist.x[h];
    }
    return total;
}

GroupElem psi(const RingContext& ctx, const ProjPoint& q) {
    const Principality pr = ctx.is_principal(q.x, q.y);
    if (!pr.principal) throw InvalidArgument("projective point is not in the class of (1:0)");
    const AlgInt alpha = *ctx.divide(q.x, *pr.generator);
    const AlgInt gamma = *ctx.divide(q.y, *pr.generator);
    GroupElem out;
    if (gamma.is_zero()) {
        out = GroupElem::identity();
    } else if (alpha.is_zero()) {
        out = GroupElem::inversion();
    } else {
        // alpha x + gamma y = 1, so delta = x and beta = -y.
        const BezoutPair xy = ctx.bezout_bounded(alpha, gamma);
        out = GroupElem(ctx, alpha, -xy.y, gamma, xy.x);
    }
    const SurdValue lhs = SurdValue::rational(Rational(height_sq(ctx, out)), ctx.c_d_sq().m());
    if (!surd_le(lhs, ctx.c_d_sq() * proj_height_sq(ctx, q))) throw CheckFailure("psi height bound violated");
    return out;
}

SandwichReport sandwich_from(const RingContext& ctx, const HeightHistogram& hist, Int t_sq) {
    require_bound(t_sq);
    if (t_sq > hist.max_t_sq) throw InvalidArgument("histogram does not reach the requested bound");
    SandwichReport r;
    r.t_sq = t_sq;
    r.n = prefix_sum(hist.w, t_sq);
    r.n_tilde = prefix_sum(hist.w_tilde, t_sq);
    r.x = prefix_sum(hist.x, t_sq);
    r.x_lower = count_X_scaled(ctx, hist, t_sq);
    r.lower_ok = r.x_lower <= r.n;
    r.upper_ok = r.n <= 4 * r.n_tilde;
    r.ratio_tilde_x = r.x == 0 ? 0.0 : static_cast<double>(r.n_tilde) / static_cast<double>(r.x);
    return r;
}

SandwichReport sandwich_check(const RingContext& ctx, Int t_sq, unsigned workers) {
    return sandwich_from(ctx, height_histogram(ctx, t_sq, workers), t_sq);
}

CountTable count_table(const RingContext& ctx, std::vector<Int> grid, unsigned workers,
                       std::vector<SandwichReport>* sandwich) {
    if (grid.empty()) throw InvalidArgument("empty height grid");
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    for (Int t : grid) require_bound(t);
    const HeightHistogram hist = height_histogram(ctx, grid.back(), workers);
    CountTable table;
    table.d = ctx.d();
    for (Int t : grid) {
        const SandwichReport r = sandwich_from(ctx, hist, t);
        table.rows.push_back({t, r.n, r.n_tilde, r.x});
        if (sandwich) sandwich->push_back(r);
    }
    return table;
}

namespace {

double ols_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

} // namespace

GrowthFit fit_growth(const CountTable& table) {
    if (table.rows.size() < 4) throw InvalidArgument("growth fit needs at least 4 rows");
    std::vector<double> log_t, log_n, log_x;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const CountRow& r = table.rows[i];
        if (i > 0 && r.t_sq <= table.rows[i - 1].t_sq) throw InvalidArgument("growth fit needs strictly increasing T");
        if (r.n == 0 || r.x == 0) throw InvalidArgument("growth fit needs positive counts");
        log_t.push_back(0.5 * std::log(static_cast<double>(r.t_sq)));
        log_n.push_back(std::log(static_cast<double>(r.n)));
        log_x.push_back(std::log(static_cast<double>(r.x)));
    }
    return {ols_slope(log_t, log_n), ols_slope(log_t, log_x), table.rows.size()};
}

} // namespace bianchi
