#pragma once

/**
 * @file factor_methods.hpp
 * @brief Every factoring and irreducibility route for integer quadratics.
 *
 * All constructive routes start from the (p, q) certificate and land on
 * the same canonical Factorization, so they can be checked against each
 * other. The content of the polynomial always ends up in the factor that
 * vanishes at -q/a; the factor vanishing at -p/a is primitive.
 */

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "quadbox/poly.hpp"
#include "quadbox/pq_search.hpp"

namespace quadbox {

enum class Method { theorem, grouping, monic, scaling, diff_squares, perfect_square };

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

struct TraceStep {
    std::string label;
    std::string state;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct MethodTrace {
    Method method;
    std::vector<TraceStep> steps;
};

struct FactorResult {
    Factorization factorization;  // canonical
    MethodTrace trace;
};

class EisensteinWitness {
public:
    explicit EisensteinWitness(Int r) : r_(r) {}
    Int r() const { return r_; }
    friend bool operator==(const EisensteinWitness&, const EisensteinWitness&) = default;

private:
    Int r_;
};

/// Builds (p1 x + p2)(q1 x + q2) from the certificate as in the reducibility proof.
std::optional<FactorResult> factor_via_theorem(const QuadraticPoly& f);

/// {-p/a, -q/a}.
std::optional<RootPair> roots_via_theorem(const QuadraticPoly& f);

/// Split bx into px + qx, pull gcd(p, a) x out of the first group, then distribute.
std::optional<FactorResult> factor_by_grouping(const QuadraticPoly& f);

/// (x + p)(x + q). Throws std::invalid_argument unless a = 1.
std::optional<Factorization> factor_monic(const QuadraticPoly& f);

/// Substitutes y = a x into a(ax^2 + bx + c) and divides a back across the factors.
/// Throws std::invalid_argument for a = 1.
std::optional<FactorResult> factor_by_scaling(const QuadraticPoly& f);

/**
 * (A x - C)(A x + C) for f = A^2 x^2 - C^2.
 *
 * Only matches when gcd(A, C) = 1: that is when gcd(p, a) = A in the
 * general construction, so the shortcut and the general route coincide.
 * Anything else is left to the general methods.
 */
std::optional<Factorization> try_difference_of_squares(const QuadraticPoly& f);

/// (A x +- B)^2 for f = A^2 x^2 +- 2AB x + B^2, again only when gcd(A, B) = 1.
std::optional<Factorization> try_perfect_square(const QuadraticPoly& f);

/// Smallest prime r with r | b, r | c, r !| a and r^2 !| c.
std::optional<EisensteinWitness> eisenstein_irreducible(const QuadraticPoly& f);

/// Whether f factors; agrees with whether reciprocal(f) factors. Throws for c = 0.
bool reciprocal_factorable_equiv(const QuadraticPoly& f);

/// (a1 b2 c2, a2 b1 c2, a2 b2 c1): same roots, integer coefficients.
QuadraticPoly clear_denominators(const RationalQuadratic& g);

/// Pair with pq = a1 a2 b2^2 c1 c2 and p + q = b1 a2 c2.
std::optional<PQWitness> rational_has_rational_roots(const RationalQuadratic& g);

/// Roots of g read off the rational certificate.
std::optional<RootPair> rational_roots(const RationalQuadratic& g);

struct IrreducibleReport {
    Int discriminant;
    std::optional<EisensteinWitness> eisenstein;
};

struct AutoResult {
    std::variant<Factorization, IrreducibleReport> outcome;
    MethodTrace trace;

    bool factored() const { return std::holds_alternative<Factorization>(outcome); }
};

/// Fast paths first (perfect square, difference of squares), then the general construction.
AutoResult factor_auto(const QuadraticPoly& f);

/**
 * Runs one named route and reports irreducibility in the same shape as
 * factor_auto. Precondition failures (monic with a != 1, scaling with
 * a = 1) throw std::invalid_argument.
 */
AutoResult factor_with_method(const QuadraticPoly& f, Method method);

/// Compact trace rendering of a linear factor, e.g. "3x+4", "-x", "2x-1".
std::string compact_linear(const LinearPoly& l);

/// Compact rendering of a factorization, e.g. "(x+2)(3x+4)".
std::string compact_factorization(const Factorization& fac);

}  // namespace quadbox
