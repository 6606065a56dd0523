#include "bianchi/rational.hpp"
#include "bianchi/errors.hpp"

#include <cctype>

namespace bianchi {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "' (expected p/q)");
    mpz_class n(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(negative ? mpz_class(-n) : n, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

bool fits_int(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

Int to_int(const mpz_class& z) {
    if (!fits_int(z)) throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
    return static_cast<Int>(z.get_si());
}

Int floor_to_int(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return to_int(q);
}

} // namespace bianchi
