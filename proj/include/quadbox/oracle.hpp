#pragma once

/**
 * @file oracle.hpp
 * @brief Naive brute-force deciders used to validate the factoring methods.
 *
 * Nothing here touches pq_search or factor_methods; only the arithmetic
 * primitives and the polynomial value types are shared.
 */

#include <optional>
#include <vector>

#include "quadbox/poly.hpp"

namespace quadbox::oracle {

/// Every integer factor pair (p1 x + p2)(q1 x + q2) of f, as enumerated, not deduplicated.
std::vector<Factorization> all_integer_factorizations(const QuadraticPoly& f);

/**
 * Canonical integer factorization, or nullopt when none exists.
 *
 * When several factorizations differ only in where the content sits, the
 * one whose primitive factor vanishes at the root r maximizing a*r is
 * chosen (content goes to the other factor).
 */
std::optional<Factorization> brute_force_factor(const QuadraticPoly& f);

/// Rational root theorem: test +-(divisor of c)/(divisor of a) by exact evaluation.
std::optional<RootPair> brute_force_rational_roots(const QuadraticPoly& f);

}  // namespace quadbox::oracle
