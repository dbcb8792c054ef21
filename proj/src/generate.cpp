#include "quadbox/generate.hpp"

#include <limits>
#include <random>
#include <stdexcept>

#include "quadbox/pq_search.hpp"

namespace quadbox {

namespace {

class Draw {
public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, n) by rejection, independent of the standard library's distributions.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    Int in_range(Int lo, Int hi) { return lo + static_cast<Int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    Int nonzero(Int max_abs) {
        const Int v = in_range(1, max_abs);
        return below(2) == 0 ? v : -v;
    }

    bool coin() { return below(2) == 1; }

private:
    std::mt19937_64 engine_;
};

QuadraticPoly factorable(Draw& draw, Int max_abs) {
    const Int p = draw.nonzero(max_abs);
    const Int q = draw.nonzero(max_abs);
    const QuadraticPoly f = exercise_from_pair(p, q);
    return draw.coin() ? reciprocal(f) : f;
}

QuadraticPoly irreducible(Draw& draw, Int max_abs) {
    while (true) {
        const Int a = draw.nonzero(max_abs);
        const Int b = draw.in_range(-max_abs, max_abs);
        const Int c = draw.in_range(-max_abs, max_abs);
        QuadraticPoly f(a, b, c);
        if (!discriminant_is_square(f)) return f;
    }
}

}  // namespace

std::string_view exercise_kind_name(ExerciseKind k) {
    switch (k) {
        case ExerciseKind::factorable: return "factorable";
        case ExerciseKind::irreducible: return "irreducible";
        case ExerciseKind::mixed: return "mixed";
    }
    return "unknown";
}

std::optional<ExerciseKind> exercise_kind_from_name(std::string_view name) {
    for (ExerciseKind k : {ExerciseKind::factorable, ExerciseKind::irreducible, ExerciseKind::mixed}) {
        if (exercise_kind_name(k) == name) return k;
    }
    return std::nullopt;
}

QuadraticPoly exercise_from_pair(Int p, Int q) { return {p, checked::add(p, q), q}; }

std::vector<QuadraticPoly> generate_exercises(std::size_t count, Int max_abs, std::uint64_t seed, ExerciseKind want) {
    if (count == 0) throw std::invalid_argument("count must be positive");
    if (max_abs < 1) throw std::invalid_argument("max must be at least 1");
    if (max_abs > 1'000'000) throw std::invalid_argument("max must be at most 1000000");
    Draw draw(seed);
    std::vector<QuadraticPoly> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        bool want_factorable = want == ExerciseKind::factorable;
        if (want == ExerciseKind::mixed) want_factorable = draw.coin();
        out.push_back(want_factorable ? factorable(draw, max_abs) : irreducible(draw, max_abs));
    }
    return out;
}

}  // namespace quadbox
