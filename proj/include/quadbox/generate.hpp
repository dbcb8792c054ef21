#pragma once

#include <cstdint>
#include <string_view>
#include <optional>
#include <vector>

#include "quadbox/poly.hpp"

namespace quadbox {

enum class ExerciseKind { factorable, irreducible, mixed };

std::string_view exercise_kind_name(ExerciseKind k);
std::optional<ExerciseKind> exercise_kind_from_name(std::string_view name);

/// p x^2 + (p + q) x + q, which factors as (p x + q)(x + 1).
QuadraticPoly exercise_from_pair(Int p, Int q);

/**
 * Seeded exercise batch. Factorable items come from nonzero p, q with
 * |p|, |q| <= max_abs, emitted as exercise_from_pair(p, q) or its
 * reciprocal with equal odds. Irreducible items are rejection-sampled
 * triples with |a|, |b|, |c| <= max_abs, a != 0 and a non-square
 * discriminant. The stream depends only on the seed (mt19937_64 with an
 * explicit bounded draw), so batches are reproducible across platforms.
 *
 * Throws std::invalid_argument for count == 0 or max_abs < 1.
 */
std::vector<QuadraticPoly> generate_exercises(std::size_t count, Int max_abs, std::uint64_t seed, ExerciseKind want);

}  // namespace quadbox
