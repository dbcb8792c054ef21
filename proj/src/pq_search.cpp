#include "quadbox/pq_search.hpp"

#include <algorithm>

namespace quadbox {

std::optional<PQWitness> find_pair(Int product, Int sum) {
    if (product == 0) return PQWitness(0, sum);
    for (Int d : signed_divisors(product)) {
        if (checked::add(d, product / d) == sum) return PQWitness(d, product / d);
    }
    return std::nullopt;
}

std::optional<PQWitness> find_pq(const QuadraticPoly& f) {
    return find_pair(checked::mul(f.a(), f.c()), f.b());
}

std::vector<PQWitness> all_pq(const QuadraticPoly& f) {
    const Int ac = checked::mul(f.a(), f.c());
    std::vector<PQWitness> out;
    if (ac == 0) {
        out.emplace_back(0, f.b());
        return out;
    }
    for (Int d : signed_divisors(ac)) {
        if (checked::add(d, ac / d) != f.b()) continue;
        PQWitness w(d, ac / d);
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
    return out;
}

bool discriminant_is_square(const QuadraticPoly& f) { return is_perfect_square(discriminant(f)); }

}  // namespace quadbox
