#pragma once

/**
 * @file json_io.hpp
 * @brief JSON shapes shared by the CLI and the session service.
 *
 * Field names are part of the external contract; keys are emitted in
 * insertion order so output is byte-stable.
 */

#include <optional>

#include "json.hpp"
#include "quadbox/factor_methods.hpp"
#include "quadbox/puzzle.hpp"
#include "quadbox/tile_layout.hpp"

namespace quadbox::json {

using Json = nlohmann::ordered_json;

Json poly(const QuadraticPoly& f);
Json witness(const std::optional<PQWitness>& w);
Json factors(const Factorization& fac);
/// ["num/den", "num/den"]; the denominator is always written.
Json roots(const std::optional<RootPair>& r);
Json certificate(const IrreducibleReport& report);
Json layout(const Layout& l);
Json inventory(const PuzzleState& s);
Json placed(const PuzzleState& s);

/// The "factorization" document: input, pq, factors, roots, method, optional trace, certificate.
Json factorization_report(const QuadraticPoly& f, const std::optional<Factorization>& fac,
                          std::optional<IrreducibleReport> irreducible, const MethodTrace& trace, bool with_trace);

std::string fraction(const Rat& r);

}  // namespace quadbox::json
