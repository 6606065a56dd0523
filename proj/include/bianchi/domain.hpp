#pragma once

#include "bianchi/geometry.hpp"

#include <utility>
#include <vector>

namespace bianchi {

/// The coprime pair (gamma0, delta0) minimizing |gamma z + delta|^2 + |gamma|^2 s,
/// and that minimum m_star (at most 1, attained by (0, 1)).
struct MuWitness {
    AlgInt gamma0;
    AlgInt delta0;
    Rational m_star{1};
};

// Every coprime (gamma, delta) with N(gamma) <= 1/s and |gamma z + delta|^2 <= 1.
std::vector<std::pair<AlgInt, AlgInt>> enumerate_candidates(const RingContext& ctx, const Point& p);

// Exact minimizer; ties go to the least (N(gamma), gamma.a, gamma.b, delta != 1, delta.a, delta.b).
MuWitness mu_witness(const RingContext& ctx, const Point& p);

bool in_P(const RingContext& ctx, const FieldElem& z);
bool in_B(const RingContext& ctx, const Point& p);
bool in_F(const RingContext& ctx, const Point& p);

} // namespace bianchi
