#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace bianchi {

using Int = std::int64_t;
using Rational = mpq_class;

// Accepts "p/q", "p", with an optional leading sign. Decimals are rejected.
// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical GMP rendering: "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& r);

// num/den in lowest terms (mpq_class's two-argument constructor does not
// canonicalize).
inline Rational make_rational(Int num, Int den) {
    Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

Int floor_to_int(const Rational& r);
bool fits_int(const mpz_class& z);
Int to_int(const mpz_class& z);

} // namespace bianchi
