#pragma once

/**
 * @file pq_search.hpp
 * @brief The (p, q) reducibility certificate: pq = ac and p + q = b.
 *
 * A quadratic with integer coefficients splits into two integer linear
 * factors exactly when such a pair exists. Since p and q are the roots of
 * t^2 - b t + ac, the pair is unique up to order whenever it exists.
 */

#include <optional>
#include <vector>

#include "quadbox/arith.hpp"
#include "quadbox/poly.hpp"

namespace quadbox {

/// A pair with p <= q.
class PQWitness {
public:
    PQWitness(Int p, Int q) : p_(p < q ? p : q), q_(p < q ? q : p) {}

    Int p() const { return p_; }
    Int q() const { return q_; }

    friend bool operator==(const PQWitness&, const PQWitness&) = default;

private:
    Int p_;
    Int q_;
};

/**
 * Finds p <= q with p * q == product and p + q == sum.
 *
 * For product != 0 the signed divisors of |product| are scanned in
 * ascending order, positive before negative. For product == 0 the pair is
 * (0, sum).
 */
std::optional<PQWitness> find_pair(Int product, Int sum);

std::optional<PQWitness> find_pq(const QuadraticPoly& f);

/// Exhaustive scan that does not stop at the first hit; length 0 or 1.
std::vector<PQWitness> all_pq(const QuadraticPoly& f);

bool discriminant_is_square(const QuadraticPoly& f);

}  // namespace quadbox
