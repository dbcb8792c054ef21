#pragma once

/**
 * @file tile_layout.hpp
 * @brief The polynomial box as geometry.
 *
 * A layout is a rectangle whose rows and columns are side segments of
 * length x or 1, each carrying a sign. The card in cell (i, j) is fixed by
 * the two lengths (x*x -> x^2 card, x*1 -> x card, 1*1 -> unit card) and
 * its sign is the product of the row and column signs, so the signed card
 * counts reproduce a, b and c exactly.
 */

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadbox/poly.hpp"

namespace quadbox {

enum class CardKind { x_square, x, unit };
enum class Length { x, unit };

std::string_view kind_name(CardKind k);  // "x2", "x", "1"
std::string_view length_name(Length l);  // "x", "1"

CardKind kind_for(Length height, Length width);

struct Segment {
    Length length;
    int sign;  // +1 or -1

    friend bool operator==(const Segment&, const Segment&) = default;
};

struct Card {
    CardKind kind;
    int sign;

    friend bool operator==(const Card&, const Card&) = default;
};

struct SignedCounts {
    Int x_square = 0;
    Int x = 0;
    Int unit = 0;

    friend bool operator==(const SignedCounts&, const SignedCounts&) = default;
};

/// Rows hold the first factor, columns the second; both sorted x-first.
class Layout {
public:
    Layout(std::vector<Segment> rows, std::vector<Segment> cols);

    const std::vector<Segment>& rows() const { return rows_; }
    const std::vector<Segment>& cols() const { return cols_; }

    Card cell(std::size_t row, std::size_t col) const;

    SignedCounts signed_counts() const;

    /// Cell counts of the two x blocks: (x rows by unit cols, unit rows by x cols).
    std::pair<Int, Int> x_block_sizes() const;

    /// The two factors read off the sides (sum of signed segments per length).
    Factorization sides() const;

    friend bool operator==(const Layout&, const Layout&) = default;

private:
    std::vector<Segment> rows_;
    std::vector<Segment> cols_;
};

Layout layout_from_factorization(const Factorization& fac);

/// One layout per distinct canonical factorization of f; empty iff f does not factor.
std::vector<Layout> enumerate_layouts(const QuadraticPoly& f);

/**
 * Monospace diagram. Every cell is five characters: a sign column (' ' or
 * '-') followed by "[XX]", "[x ]" or "[1 ]"; negative x^2 cards use the
 * lower-case "[xx]". Row and column segments label the margins, and a
 * '|' column and a '-' rule separate the x blocks from the unit blocks.
 */
std::string render_ascii(const Layout& layout);

}  // namespace quadbox
