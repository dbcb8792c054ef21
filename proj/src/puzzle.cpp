#include "quadbox/puzzle.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace quadbox {

namespace {

constexpr int kMaxCoordinate = 4096;

struct Neighbor {
    Side side;
    Position pos;
};

std::array<Neighbor, 4> neighbors_of(Position p) {
    return {{{Side::left, {p.row, p.col - 1}},
             {Side::right, {p.row, p.col + 1}},
             {Side::top, {p.row - 1, p.col}},
             {Side::bottom, {p.row + 1, p.col}}}};
}

// Left and right edges run vertically and have the card's height; top and
// bottom edges have its width.
Length edge_length(Side side, Length height, Length width) {
    return (side == Side::left || side == Side::right) ? height : width;
}

Side opposite(Side s) {
    switch (s) {
        case Side::left: return Side::right;
        case Side::right: return Side::left;
        case Side::top: return Side::bottom;
        case Side::bottom: return Side::top;
    }
    return s;
}

std::pair<Length, Length> shape(CardKind kind, Orientation o) {
    switch (kind) {
        case CardKind::x_square: return {Length::x, Length::x};
        case CardKind::unit: return {Length::unit, Length::unit};
        case CardKind::x: break;
    }
    return o == Orientation::tall ? std::pair{Length::x, Length::unit} : std::pair{Length::unit, Length::x};
}

std::vector<PlacementRejection> violations(const std::map<Position, PlacedCard>& placed, Position pos, Length height,
                                           Length width) {
    std::vector<PlacementRejection> out;
    for (const Neighbor& n : neighbors_of(pos)) {
        auto it = placed.find(n.pos);
        if (it == placed.end()) continue;
        const Length mine = edge_length(n.side, height, width);
        const Length theirs = edge_length(opposite(n.side), it->second.height, it->second.width);
        if (mine != theirs) out.push_back({n.side, n.pos, it->second, mine, theirs});
    }
    return out;
}

// Whether cards already in the row (column) of pos agree with the given height (width).
int line_agreement(const std::map<Position, PlacedCard>& placed, Position pos, Length height, Length width) {
    int score = 0;
    for (const auto& [p, card] : placed) {
        if (p.row == pos.row && card.height == height) ++score;
        if (p.row == pos.row && card.height != height) --score;
        if (p.col == pos.col && card.width == width) ++score;
        if (p.col == pos.col && card.width != width) --score;
    }
    return score;
}

std::string card_label(CardKind kind) {
    switch (kind) {
        case CardKind::x_square: return "x^2";
        case CardKind::x: return "x";
        case CardKind::unit: return "1";
    }
    return "?";
}

}  // namespace

std::string_view puzzle_error_code(PuzzleError::Kind kind) {
    switch (kind) {
        case PuzzleError::Kind::inventory_exhausted: return "inventory_exhausted";
        case PuzzleError::Kind::occupied: return "occupied";
        case PuzzleError::Kind::invalid_position: return "invalid_position";
        case PuzzleError::Kind::invalid_card: return "invalid_card";
    }
    return "unknown";
}

std::string_view side_name(Side s) {
    switch (s) {
        case Side::left: return "left";
        case Side::right: return "right";
        case Side::top: return "top";
        case Side::bottom: return "bottom";
    }
    return "unknown";
}

std::string PlacementRejection::message() const {
    return std::string(side_name(side)) + " edge has length " + std::string(length_name(card_length)) +
           " but the " + card_label(neighbor_card.card.kind) + " card at (" + std::to_string(neighbor.row) + "," +
           std::to_string(neighbor.col) + ") has length " + std::string(length_name(neighbor_length)) + " there";
}

PuzzleState::PuzzleState(const QuadraticPoly& target) : target_(target), inventory_(initial_inventory(target)) {}

PuzzleState PuzzleState::start(const QuadraticPoly& target) { return PuzzleState(target); }

std::map<PuzzleState::InventoryKey, Int> PuzzleState::initial_inventory(const QuadraticPoly& target) {
    std::map<InventoryKey, Int> inv;
    for (CardKind k : {CardKind::x_square, CardKind::x, CardKind::unit}) {
        inv[{k, 1}] = 0;
        inv[{k, -1}] = 0;
    }
    const Int a = target.a(), b = target.b(), c = target.c();
    inv[{CardKind::x_square, sign(a)}] = checked::abs(a);
    if (c != 0) inv[{CardKind::unit, sign(c)}] = checked::abs(c);
    const Int ac = checked::mul(a, c);
    const Int zero_pairs = ac < 0 ? isqrt(checked::abs(ac)) : 0;
    inv[{CardKind::x, 1}] = zero_pairs;
    inv[{CardKind::x, -1}] = zero_pairs;
    if (b != 0) inv[{CardKind::x, sign(b)}] += checked::abs(b);
    return inv;
}

Int PuzzleState::remaining(CardKind kind, int sign) const {
    auto it = inventory_.find({kind, sign});
    return it == inventory_.end() ? 0 : it->second;
}

std::optional<PlacedCard> PuzzleState::at(Position pos) const {
    auto it = placed_.find(pos);
    if (it == placed_.end()) return std::nullopt;
    return it->second;
}

PlacementResult validate_placement(const PuzzleState& state, Card card, Position pos,
                                   std::optional<Orientation> orientation) {
    if (card.sign != 1 && card.sign != -1) throw PuzzleError(PuzzleError::Kind::invalid_card, "card sign must be +1 or -1");
    if (pos.row < 0 || pos.col < 0 || pos.row > kMaxCoordinate || pos.col > kMaxCoordinate)
        throw PuzzleError(PuzzleError::Kind::invalid_position, "position out of range");
    if (state.remaining(card.kind, card.sign) <= 0)
        throw PuzzleError(PuzzleError::Kind::inventory_exhausted,
                          "no " + std::string(card.sign < 0 ? "-" : "+") + card_label(card.kind) + " cards left");
    if (state.placed_.count(pos) != 0) throw PuzzleError(PuzzleError::Kind::occupied, "position is occupied");

    std::vector<Orientation> options;
    if (card.kind != CardKind::x || orientation) {
        options.push_back(orientation.value_or(Orientation::tall));
    } else {
        options = {Orientation::tall, Orientation::wide};
    }

    std::optional<Orientation> chosen;
    std::optional<PlacementRejection> best_rejection;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    int best_agreement = std::numeric_limits<int>::min();
    for (Orientation o : options) {
        const auto [h, w] = shape(card.kind, o);
        const auto bad = violations(state.placed_, pos, h, w);
        if (bad.empty()) {
            const int agreement = line_agreement(state.placed_, pos, h, w);
            if (!chosen || agreement > best_agreement) {
                chosen = o;
                best_agreement = agreement;
            }
        } else if (bad.size() < fewest) {
            fewest = bad.size();
            best_rejection = bad.front();
        }
    }
    if (!chosen) return *best_rejection;

    const auto [h, w] = shape(card.kind, *chosen);
    PuzzleState next = state;
    next.placed_.emplace(pos, PlacedCard{card, h, w});
    next.inventory_[{card.kind, card.sign}] -= 1;
    return next;
}

Int missing_cards(const PuzzleState& state) {
    const QuadraticPoly& f = state.target();
    Int net_x = 0;
    for (const auto& [pos, placed] : state.placed()) {
        if (placed.card.kind == CardKind::x) net_x += placed.card.sign;
    }
    return state.remaining(CardKind::x_square, sign(f.a())) +
           (f.c() != 0 ? state.remaining(CardKind::unit, sign(f.c())) : 0) + checked::abs(f.b() - net_x);
}

CompletionResult check_completion(const PuzzleState& state) {
    const Int missing = missing_cards(state);
    if (missing > 0) return NotComplete{missing, std::to_string(missing) + " cards missing"};
    const auto& placed = state.placed();
    if (placed.empty()) return NotComplete{0, "no cards placed"};

    int rmin = std::numeric_limits<int>::max(), rmax = std::numeric_limits<int>::min();
    int cmin = rmin, cmax = rmax;
    for (const auto& [p, card] : placed) {
        rmin = std::min(rmin, p.row);
        rmax = std::max(rmax, p.row);
        cmin = std::min(cmin, p.col);
        cmax = std::max(cmax, p.col);
    }
    const int nrows = rmax - rmin + 1;
    const int ncols = cmax - cmin + 1;
    if (static_cast<std::size_t>(nrows) * static_cast<std::size_t>(ncols) != placed.size())
        return NotComplete{0, "cards do not fill a rectangle"};

    std::vector<Segment> rows(static_cast<std::size_t>(nrows));
    std::vector<Segment> cols(static_cast<std::size_t>(ncols));
    const PlacedCard& corner = placed.at({rmin, cmin});
    // Row signs relative to the corner column; column signs relative to the first row.
    for (int j = 0; j < ncols; ++j) {
        const PlacedCard& top = placed.at({rmin, cmin + j});
        cols[static_cast<std::size_t>(j)] = {top.width, top.card.sign};
    }
    for (int i = 0; i < nrows; ++i) {
        const PlacedCard& left = placed.at({rmin + i, cmin});
        rows[static_cast<std::size_t>(i)] = {left.height, left.card.sign * corner.card.sign};
    }
    for (int i = 0; i < nrows; ++i) {
        for (int j = 0; j < ncols; ++j) {
            const PlacedCard& pc = placed.at({rmin + i, cmin + j});
            const Segment& r = rows[static_cast<std::size_t>(i)];
            const Segment& c = cols[static_cast<std::size_t>(j)];
            if (pc.height != r.length) return NotComplete{0, "row " + std::to_string(rmin + i) + " mixes heights"};
            if (pc.width != c.length) return NotComplete{0, "column " + std::to_string(cmin + j) + " mixes widths"};
            if (pc.card.sign != r.sign * c.sign)
                return NotComplete{0, "card signs do not split into row and column signs"};
        }
    }

    Int p1 = 0, p2 = 0, q1 = 0, q2 = 0;
    for (const Segment& s : rows) (s.length == Length::x ? p1 : p2) += s.sign;
    for (const Segment& s : cols) (s.length == Length::x ? q1 : q2) += s.sign;
    if (p1 == 0 || q1 == 0) return NotComplete{0, "a side has no net x length"};
    const Factorization fac{{p1, p2}, {q1, q2}};
    if (expand(fac) != state.target()) return NotComplete{0, "rectangle does not match the target"};
    return canonicalize(fac);
}

}  // namespace quadbox
