#pragma once

/**
 * @file puzzle.hpp
 * @brief Card-by-card puzzle play on the polynomial box.
 *
 * Cards sit on a discrete grid. A card may only touch a neighbor along a
 * side of the same length kind (x against x, 1 against 1). Transitions are
 * pure: every move returns a new PuzzleState.
 *
 * The tray holds |a| x^2 cards with the sign of a, |c| unit cards with the
 * sign of c and |b| x cards with the sign of b. When ac < 0 the two x
 * blocks have opposite signs, so the tray also carries isqrt(|ac|) zero
 * pairs (one +x and one -x card each), which bounds the smaller block.
 */

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "quadbox/poly.hpp"
#include "quadbox/tile_layout.hpp"

namespace quadbox {

/// Orientation of an x card: tall is x high and 1 wide, wide is the reverse.
enum class Orientation { tall, wide };

struct Position {
    int row;
    int col;

    friend auto operator<=>(const Position&, const Position&) = default;
};

struct PlacedCard {
    Card card;
    Length height;
    Length width;

    friend bool operator==(const PlacedCard&, const PlacedCard&) = default;
};

/// Thrown for moves that are malformed rather than illegal: empty tray slot, occupied cell, bad position.
class PuzzleError : public std::runtime_error {
public:
    enum class Kind { inventory_exhausted, occupied, invalid_position, invalid_card };

    PuzzleError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

std::string_view puzzle_error_code(PuzzleError::Kind kind);

class PuzzleState;

enum class Side { left, right, top, bottom };
std::string_view side_name(Side s);

/// The first shared edge whose lengths disagree.
struct PlacementRejection {
    Side side;
    Position neighbor;
    PlacedCard neighbor_card;
    Length card_length;
    Length neighbor_length;

    std::string message() const;
};

using PlacementResult = std::variant<PuzzleState, PlacementRejection>;

class PuzzleState {
public:
    using InventoryKey = std::pair<CardKind, int>;

    static PuzzleState start(const QuadraticPoly& target);

    const QuadraticPoly& target() const { return target_; }
    const std::map<InventoryKey, Int>& inventory() const { return inventory_; }
    const std::map<Position, PlacedCard>& placed() const { return placed_; }

    Int remaining(CardKind kind, int sign) const;
    std::optional<PlacedCard> at(Position pos) const;

    /// Initial tray for target.
    static std::map<InventoryKey, Int> initial_inventory(const QuadraticPoly& target);

private:
    explicit PuzzleState(const QuadraticPoly& target);

    friend PlacementResult validate_placement(const PuzzleState&, Card, Position, std::optional<Orientation>);

    QuadraticPoly target_;
    std::map<InventoryKey, Int> inventory_;
    std::map<Position, PlacedCard> placed_;
};

/**
 * Places card at pos if every edge shared with an already placed card
 * matches in length. An x card without an explicit orientation takes the
 * one its neighbors allow; if both fit, cards elsewhere in the same row or
 * column decide, and tall is the fallback.
 *
 * Throws PuzzleError when the card is not in the tray, the cell is taken,
 * or the position is negative.
 */
PlacementResult validate_placement(const PuzzleState& state, Card card, Position pos,
                                   std::optional<Orientation> orientation = std::nullopt);

struct NotComplete {
    Int missing;  // cards still owed to reach the target counts
    std::string reason;
};

using CompletionResult = std::variant<Factorization, NotComplete>;

/**
 * Reads the factorization off a finished rectangle: the bounding box is
 * fully covered, every row has one height and every column one width,
 * card signs split into row and column signs, and the tray's x^2 and unit
 * cards are used up with the signed x total equal to b.
 */
CompletionResult check_completion(const PuzzleState& state);

/// Cards needed beyond what is placed (unplaced x^2 and unit cards plus the x shortfall).
Int missing_cards(const PuzzleState& state);

}  // namespace quadbox
