#pragma once

/**
 * @file arith.hpp
 * @brief Exact integer primitives: checked arithmetic, gcd, divisors, primality.
 *
 * Every quantity in the engine is an exact 64-bit integer. Operations that
 * would leave the representable range throw std::overflow_error instead of
 * wrapping.
 */

#include <cstdint>
#include <vector>

namespace quadbox {

using Int = std::int64_t;

// Intermediate width for products of two Ints.
__extension__ using Wide = __int128;

namespace checked {

Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
Int neg(Int a);
Int abs(Int a);

/// Exact division; throws std::domain_error if b does not divide a.
Int div_exact(Int a, Int b);

/// Narrows a 128-bit intermediate back to Int or throws.
Int narrow(Wide v);

}  // namespace checked

/// Nonnegative greatest common divisor; gcd(0, 0) = 0.
Int gcd(Int a, Int b);

/// Positive divisors of |n| in ascending order. Throws std::domain_error for n = 0.
std::vector<Int> divisors(Int n);

/// Signed divisors of n: each positive divisor d followed by -d.
std::vector<Int> signed_divisors(Int n);

bool is_prime(Int n);

/// Floor of the square root of n >= 0, computed on integers only.
Int isqrt(Int n);

/// True iff n = k^2 for some integer k (negative n is never a square).
bool is_perfect_square(Int n);

inline int sign(Int v) { return (v > 0) - (v < 0); }

}  // namespace quadbox
