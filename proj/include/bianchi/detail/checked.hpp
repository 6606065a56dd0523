#pragma once

#include "bianchi/rational.hpp"

#include <stdexcept>

namespace bianchi::checked {

[[noreturn]] inline void overflow() { throw std::overflow_error("integer overflow in O_d arithmetic"); }

inline Int add(Int x, Int y) {
    Int r;
    if (__builtin_add_overflow(x, y, &r)) overflow();
    return r;
}

inline Int sub(Int x, Int y) {
    Int r;
    if (__builtin_sub_overflow(x, y, &r)) overflow();
    return r;
}

inline Int mul(Int x, Int y) {
    Int r;
    if (__builtin_mul_overflow(x, y, &r)) overflow();
    return r;
}

} // namespace bianchi::checked
