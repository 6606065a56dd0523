#pragma once

#include "bianchi/geometry.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace bianchi {

using Count = std::uint64_t;

/// Counts bucketed by exact squared height, for every height up to max_t_sq.
///
/// w[h]: elements of Gamma_d (mod +-I) of squared height h.
/// w_tilde[h]: those whose height is attained on the first column.
/// x[h]: principal points of P^1(K_d) of squared height h.
struct HeightHistogram {
    Int max_t_sq = 0;
    std::vector<Count> w;
    std::vector<Count> w_tilde;
    std::vector<Count> x;
};

HeightHistogram height_histogram(const RingContext& ctx, Int max_t_sq, unsigned workers = 1);

// Visits every canonical element of W_d(T), T^2 = t_sq.
void enumerate_W(const RingContext& ctx, Int t_sq, const std::function<void(const GroupElem&)>& visit);

Count count_W(const RingContext& ctx, Int t_sq, unsigned workers = 1);
Count count_N_tilde(const RingContext& ctx, Int t_sq, unsigned workers = 1);
Count count_X(const RingContext& ctx, Int t_sq, unsigned workers = 1);

// #X_d(T / C_d), decided exactly as h C_d^2 <= T^2.
Count count_X_scaled(const RingContext& ctx, const HeightHistogram& hist, Int t_sq);

/// Right inverse of (alpha : gamma) <- [[alpha, beta], [gamma, delta]] on
/// principal points, with H(psi(P))^2 <= C_d^2 H(P)^2.
GroupElem psi(const RingContext& ctx, const ProjPoint& q);

struct SandwichReport {
    Int t_sq = 1;
    Count x_lower = 0;  // #X_d(T / C_d)
    Count n = 0;
    Count n_tilde = 0;
    Count x = 0;
    bool lower_ok = false;  // #X_d(T / C_d) <= N_d(T)
    bool upper_ok = false;  // N_d(T) <= 4 Ntilde_d(T)
    double ratio_tilde_x = 0;

    bool ok() const { return lower_ok && upper_ok; }
};

SandwichReport sandwich_check(const RingContext& ctx, Int t_sq, unsigned workers = 1);
SandwichReport sandwich_from(const RingContext& ctx, const HeightHistogram& hist, Int t_sq);

struct CountRow {
    Int t_sq;
    Count n;
    Count n_tilde;
    Count x;
};

struct CountTable {
    Int d = 1;
    std::vector<CountRow> rows;
};

struct GrowthFit {
    double slope_n = 0;
    double slope_x = 0;
    std::size_t rows = 0;
};

// Rows for each grid value (sorted, deduplicated) with sandwich reports.
CountTable count_table(const RingContext& ctx, std::vector<Int> grid, unsigned workers,
                       std::vector<SandwichReport>* sandwich = nullptr);

// Least-squares slope of log N (and log X) against log T, T = sqrt(t_sq).
GrowthFit fit_growth(const CountTable& table);

} // namespace bianchi
