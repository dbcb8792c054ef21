#include "quadbox/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadbox::oracle {

namespace {

bool is_primitive(const LinearPoly& l) { return gcd(l.lead(), l.const_term()) == 1; }

// a * root(l), compared exactly.
Rat scaled_root(Int a, const LinearPoly& l) { return Rat(a) * l.root(); }

// Candidate roots from the rational root theorem for a x^2 + b x + c, c != 0.
std::vector<Rat> candidate_roots(Int lead, Int constant) {
    std::vector<Rat> out;
    for (Int num : divisors(constant)) {
        for (Int den : divisors(lead)) {
            out.emplace_back(num, den);
            out.emplace_back(-num, den);
        }
    }
    return out;
}

}  // namespace

std::vector<Factorization> all_integer_factorizations(const QuadraticPoly& f) {
    const Int a = f.a(), b = f.b(), c = f.c();
    std::vector<Factorization> out;
    for (Int d : divisors(a)) {
        for (Int p1 : {d, -d}) {
            const Int q1 = a / p1;
            if (c != 0) {
                for (Int e : divisors(c)) {
                    for (Int p2 : {e, -e}) {
                        const Int q2 = c / p2;
                        if (checked::add(checked::mul(p1, q2), checked::mul(p2, q1)) == b)
                            out.push_back({{p1, p2}, {q1, q2}});
                    }
                }
                continue;
            }
            // c == 0: one of p2, q2 is zero.
            std::vector<Int> p2_choices{0};
            if (b != 0) {
                for (Int e : divisors(b)) {
                    p2_choices.push_back(e);
                    p2_choices.push_back(-e);
                }
            }
            for (Int p2 : p2_choices) {
                if (p2 == 0) {
                    if (b % p1 == 0) out.push_back({{p1, 0}, {q1, b / p1}});
                } else if (checked::mul(p2, q1) == b) {
                    out.push_back({{p1, p2}, {q1, 0}});
                }
            }
        }
    }
    return out;
}

std::optional<Factorization> brute_force_factor(const QuadraticPoly& f) {
    std::optional<Factorization> best;
    for (const Factorization& fac : all_integer_factorizations(f)) {
        if (expand(fac) != f) continue;
        // The primitive factor must sit at the root with the larger a*r.
        const bool second_ok = is_primitive(fac.second) &&
                               scaled_root(f.a(), fac.second) >= scaled_root(f.a(), fac.first);
        const bool first_ok = is_primitive(fac.first) &&
                              scaled_root(f.a(), fac.first) >= scaled_root(f.a(), fac.second);
        if (!second_ok && !first_ok) continue;
        const Factorization canon = canonicalize(fac);
        if (best && !(*best == canon))
            throw std::logic_error("content placement rule selected two distinct factorizations");
        best = canon;
    }
    return best;
}

std::optional<RootPair> brute_force_rational_roots(const QuadraticPoly& f) {
    std::vector<Rat> roots;
    auto record = [&roots](const Rat& r) {
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    };
    if (f.c() != 0) {
        for (const Rat& r : candidate_roots(f.a(), f.c())) {
            if (evaluate(f, r) == Rat(0)) record(r);
        }
    } else {
        // x (a x + b): zero, plus the root of a x + b.
        record(Rat(0));
        if (f.b() != 0) {
            for (const Rat& r : candidate_roots(f.a(), f.b())) {
                if (Rat(f.a()) * r + Rat(f.b()) == Rat(0)) record(r);
            }
        }
    }
    if (roots.empty()) return std::nullopt;
    if (roots.size() == 1) return RootPair(roots[0], roots[0]);
    return RootPair(roots[0], roots[1]);
}

}  // namespace quadbox::oracle
