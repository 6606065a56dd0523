#pragma once

#include "bianchi/reduce.hpp"

namespace bianchi {

/// f(X, Z) with Hermitian matrix [[a, b], [conj(b), dd]] over O_d.
struct HermitianForm {
    Int a = 1;
    AlgInt b;
    Int dd = 1;

    friend bool operator==(const HermitianForm&, const HermitianForm&) = default;
};

/// A form with coefficients in K_d (the normalized representative of xi^-1).
struct FieldForm {
    Rational a{1};
    FieldElem b;
    Rational dd{1};
};

Int discriminant(const RingContext& ctx, const HermitianForm& f);
bool is_positive_definite(const RingContext& ctx, const HermitianForm& f);

// (-b/a, s = disc/a^2). Throws NotPositiveDefinite.
Point xi(const RingContext& ctx, const HermitianForm& f);
FieldForm xi_inverse(const RingContext& ctx, const Point& p);

// Matrix (g^-1)^* A g^-1, so that xi(act(g, f)) = g xi(f).
HermitianForm act(const RingContext& ctx, const GroupElem& g, const HermitianForm& f);

// max(a^2, N(b), dd^2)
Int form_height_sq(const RingContext& ctx, const HermitianForm& f);
bool is_reduced(const RingContext& ctx, const HermitianForm& f);
// D(xi f)^2 <= H(f)^2 / disc
bool xi_distance_bound_holds(const RingContext& ctx, const HermitianForm& f);

struct FormReduction {
    HermitianForm form;
    GroupElem g;
    HermitianForm reduced;
    ReductionCertificate certificate;
    bool reduced_ok = false;
    bool point_bound_ok = false;  // H(g)^2 <= (16 C^2)^2 D(xi f)^4
    bool form_bound_ok = false;   // H(g)^2 <= (16 C^2)^2 (H(f)^2 / disc)^2
    bool discriminant_preserved = false;

    bool all_ok() const { return reduced_ok && point_bound_ok && form_bound_ok && discriminant_preserved; }
};

FormReduction reduce_form(const RingContext& ctx, const HermitianForm& f);

} // namespace bianchi
