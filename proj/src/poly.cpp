#include "quadbox/poly.hpp"

#include <stdexcept>
#include <utility>

namespace quadbox {

QuadraticPoly::QuadraticPoly(Int a, Int b, Int c) : a_(a), b_(b), c_(c) {
    if (a == 0) throw std::invalid_argument("leading coefficient must be nonzero");
}

LinearPoly::LinearPoly(Int lead, Int const_term) : lead_(lead), const_(const_term) {
    if (lead == 0) throw std::invalid_argument("linear factor needs a nonzero lead");
}

RootPair::RootPair(Rat r1, Rat r2) : r1_(std::move(r1)), r2_(std::move(r2)) {
    if (r2_ < r1_) std::swap(r1_, r2_);
}

RationalQuadratic::RationalQuadratic(Int a1, Int a2, Int b1, Int b2, Int c1, Int c2)
    : a1_(a1), a2_(a2), b1_(b1), b2_(b2), c1_(c1), c2_(c2) {
    if (a1 == 0) throw std::invalid_argument("leading coefficient must be nonzero");
    if (a2 <= 0 || b2 <= 0 || c2 <= 0) throw std::invalid_argument("denominators must be positive");
    if (gcd(a1, a2) != 1 || gcd(b1, b2) != 1 || gcd(c1, c2) != 1)
        throw std::invalid_argument("fractions must be in lowest terms");
}

RationalQuadratic::RationalQuadratic(const Rat& a, const Rat& b, const Rat& c)
    : RationalQuadratic(a.num(), a.den(), b.num(), b.den(), c.num(), c.den()) {}

Rat evaluate(const QuadraticPoly& f, const Rat& x) {
    return (Rat(f.a()) * x + Rat(f.b())) * x + Rat(f.c());
}

Rat evaluate(const RationalQuadratic& g, const Rat& x) { return (g.a() * x + g.b()) * x + g.c(); }

Int discriminant(const QuadraticPoly& f) {
    using namespace checked;
    return sub(mul(f.b(), f.b()), mul(4, mul(f.a(), f.c())));
}

QuadraticPoly reciprocal(const QuadraticPoly& f) {
    if (f.c() == 0) throw std::domain_error("reciprocal is not quadratic");
    return {f.c(), f.b(), f.a()};
}

QuadraticPoly expand(const Factorization& fac) {
    using namespace checked;
    const Int p1 = fac.first.lead(), p2 = fac.first.const_term();
    const Int q1 = fac.second.lead(), q2 = fac.second.const_term();
    return {mul(p1, q1), add(mul(p1, q2), mul(p2, q1)), mul(p2, q2)};
}

Factorization canonicalize(const Factorization& fac) {
    const LinearPoly f = fac.first.lead() > 0 ? fac.first : fac.first.negated();
    const LinearPoly g = fac.first.lead() > 0 ? fac.second : fac.second.negated();
    // The other orbit member with a positive first lead starts from g.
    const LinearPoly g_pos = g.lead() > 0 ? g : g.negated();
    const LinearPoly f_partner = g.lead() > 0 ? f : f.negated();
    Factorization keep{f, g};
    Factorization swapped{g_pos, f_partner};
    if (std::pair(swapped.first, swapped.second) < std::pair(keep.first, keep.second)) return swapped;
    return keep;
}

}  // namespace quadbox
