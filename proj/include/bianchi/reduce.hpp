#pragma once

#include "bianchi/domain.hpp"

#include <string_view>

namespace bianchi {

enum class Branch { already_in_F, unit_column, general };

std::string_view to_string(Branch b);
Branch parse_branch(std::string_view s);

/// Outcome of the first reduction step: tau sends the point into B_d.
struct BReduction {
    GroupElem tau;
    Point image;
    MuWitness witness;
    Branch branch = Branch::already_in_F;
    // Exact intermediate inequalities of the general branch; true elsewhere.
    bool bezout_bounds_ok = true;  // N(alpha0) <= C^2 N(gamma0), N(beta0) <= C^2 N(delta0)
    bool height_chain_ok = true;   // N(gamma0) <= H(tau)^2 <= 4 C^2 N(gamma0) D^2
    bool image_norm_ok = true;     // |z'|^2 <= 9 C^2 D^2 / N(gamma0)
};

/// An element of the stabilizer of infinity moving z into P_d.
struct Translation {
    GroupElem sigma;
    FieldElem image;
    // height(sigma) <= |z| + C_d, checked exactly.
    bool height_ok = true;
};

struct CertificateChecks {
    bool bezout_bounds = true;
    bool height_chain = true;
    bool image_norm = true;
    bool translation_height = true;
    bool submultiplicative = true;  // H(sigma tau)^2 <= 4 H(sigma)^2 H(tau)^2
};

struct ReductionCertificate {
    Point point;
    GroupElem gamma;
    Point image;
    Rational d_sq;
    Int height_sq = 1;
    bool bound_ok = false;
    Branch branch = Branch::already_in_F;
    CertificateChecks checks;
};

BReduction reduce_to_B(const RingContext& ctx, const Point& p);
Translation translate_to_P(const RingContext& ctx, const FieldElem& z);
ReductionCertificate reduce(const RingContext& ctx, const Point& p);

// Exact test of height_sq <= (16 C_d^2)^2 d_sq^2.
bool certificate_bound_holds(const RingContext& ctx, Int height_sq, const Rational& d_sq);

struct SharpnessWitness {
    GroupElem sigma;
    Point point;
};

// sigma_n = [[n, 1 - n^2], [-1, n]] and ((2n^2 - 1)/(2n), s = 1/(4n^2)), n >= 2.
SharpnessWitness sharpness_witness(const RingContext& ctx, Int n);

// H(gamma)^2 for the reduction certificate: an upper bound on the squared intricacy.
Int intricacy_upper(const RingContext& ctx, const Point& p);

} // namespace bianchi
