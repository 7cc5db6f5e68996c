#pragma once

#include <cstdint>

#include "gentime/errors.hpp"

namespace gentime {

/// 64-bit integer arithmetic with hard failure on overflow.
/// Every quantity in scope fits comfortably, so an overflow here means a bug,
/// not a capacity problem; hence integrity_error rather than saturation.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw integrity_error("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw integrity_error("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw integrity_error("integer overflow in multiplication");
    return r;
}

/// Exact division; remainder != 0 is a hard failure.
inline std::int64_t checked_div_exact(std::int64_t a, std::int64_t b) {
    if (b == 0 || a % b != 0)
        throw integrity_error("inexact integer division");
    return a / b;
}

/// Binomial coefficient C(n, k) for n >= 0, checked.
/// Values used here stay tiny (n <= ~40); checked_mul guards regardless.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = checked_div_exact(checked_mul(r, n - k + i), i);
    return r;
}

} // namespace gentime
