#pragma once

/**
 * @file poly.hpp
 * @brief Value types for quadratics, their linear factors and roots.
 */

#include <compare>
#include <optional>

#include "quadbox/arith.hpp"
#include "quadbox/rational.hpp"

namespace quadbox {

/// a x^2 + b x + c with integer coefficients and a != 0.
class QuadraticPoly {
public:
    QuadraticPoly(Int a, Int b, Int c);

    Int a() const { return a_; }
    Int b() const { return b_; }
    Int c() const { return c_; }

    friend bool operator==(const QuadraticPoly&, const QuadraticPoly&) = default;

private:
    Int a_;
    Int b_;
    Int c_;
};

/// lead x + const_term, lead != 0.
class LinearPoly {
public:
    LinearPoly(Int lead, Int const_term);

    Int lead() const { return lead_; }
    Int const_term() const { return const_; }

    LinearPoly negated() const { return {checked::neg(lead_), checked::neg(const_)}; }

    /// The root -const/lead.
    Rat root() const { return Rat(checked::neg(const_), lead_); }

    friend bool operator==(const LinearPoly&, const LinearPoly&) = default;
    friend auto operator<=>(const LinearPoly&, const LinearPoly&) = default;

private:
    Int lead_;
    Int const_;
};

/// (first)(second) = (p1 x + p2)(q1 x + q2).
struct Factorization {
    LinearPoly first;
    LinearPoly second;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// The two roots, r1 <= r2 (a double root is repeated).
class RootPair {
public:
    RootPair(Rat r1, Rat r2);

    const Rat& r1() const { return r1_; }
    const Rat& r2() const { return r2_; }

    friend bool operator==(const RootPair&, const RootPair&) = default;

private:
    Rat r1_;
    Rat r2_;
};

/**
 * a1/a2 x^2 + b1/b2 x + c1/c2 with each fraction in lowest terms,
 * positive denominators and a1 != 0.
 */
class RationalQuadratic {
public:
    RationalQuadratic(Int a1, Int a2, Int b1, Int b2, Int c1, Int c2);
    RationalQuadratic(const Rat& a, const Rat& b, const Rat& c);

    Int a1() const { return a1_; }
    Int a2() const { return a2_; }
    Int b1() const { return b1_; }
    Int b2() const { return b2_; }
    Int c1() const { return c1_; }
    Int c2() const { return c2_; }

    Rat a() const { return {a1_, a2_}; }
    Rat b() const { return {b1_, b2_}; }
    Rat c() const { return {c1_, c2_}; }

    friend bool operator==(const RationalQuadratic&, const RationalQuadratic&) = default;

private:
    Int a1_, a2_, b1_, b2_, c1_, c2_;
};

Rat evaluate(const QuadraticPoly& f, const Rat& x);
Rat evaluate(const RationalQuadratic& g, const Rat& x);

/// b^2 - 4ac.
Int discriminant(const QuadraticPoly& f);

/// c x^2 + b x + a; throws std::domain_error when c = 0.
QuadraticPoly reciprocal(const QuadraticPoly& f);

QuadraticPoly expand(const Factorization& fac);

/**
 * Normal form of a factor pair under the two product-preserving moves
 * (swapping the factors, negating both). Of the two variants whose first
 * factor has a positive lead, the lexicographically smaller
 * (first, second) on (lead, const) is chosen.
 */
Factorization canonicalize(const Factorization& fac);

}  // namespace quadbox
