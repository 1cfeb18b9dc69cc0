#pragma once

#include <cstdint>

#include "pignose/errors.hpp"

namespace pignose {

// Exact integer coefficient type. All arithmetic on coefficients goes through
// the checked_* helpers; overflow throws instead of wrapping.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflow");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction overflow");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflow");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int checked_pow(Int base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

// Binomial coefficient with the standard convention that out-of-range
// arguments give 0 (needed by the telescoping closed-form sums).
inline Int binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r = checked_mul(r, n - i);
        r /= i + 1;  // exact at every step
    }
    return r;
}

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
    return r;
}

}  // namespace pignose
