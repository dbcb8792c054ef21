#include "quadbox/tile_layout.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadbox {

namespace {

void append_segments(std::vector<Segment>& out, Int count, Length len) {
    const int s = sign(count);
    for (Int i = 0; i < checked::abs(count); ++i) out.push_back({len, s});
}

std::vector<Segment> segments_for(const LinearPoly& l) {
    std::vector<Segment> out;
    append_segments(out, l.lead(), Length::x);
    append_segments(out, l.const_term(), Length::unit);
    return out;
}

std::size_t x_count(const std::vector<Segment>& segs) {
    return static_cast<std::size_t>(
        std::count_if(segs.begin(), segs.end(), [](const Segment& s) { return s.length == Length::x; }));
}

std::string segment_label(const Segment& s) {
    return std::string(s.sign < 0 ? "-" : "+") + std::string(length_name(s.length));
}

std::string cell_text(const Card& card) {
    std::string body;
    switch (card.kind) {
        case CardKind::x_square: body = card.sign < 0 ? "[xx]" : "[XX]"; break;
        case CardKind::x: body = "[x ]"; break;
        case CardKind::unit: body = "[1 ]"; break;
    }
    return (card.sign < 0 ? "-" : " ") + body;
}

}  // namespace

std::string_view kind_name(CardKind k) {
    switch (k) {
        case CardKind::x_square: return "x2";
        case CardKind::x: return "x";
        case CardKind::unit: return "1";
    }
    throw std::logic_error("unknown card kind");
}

std::string_view length_name(Length l) { return l == Length::x ? "x" : "1"; }

CardKind kind_for(Length height, Length width) {
    if (height == Length::x && width == Length::x) return CardKind::x_square;
    if (height == Length::unit && width == Length::unit) return CardKind::unit;
    return CardKind::x;
}

Layout::Layout(std::vector<Segment> rows, std::vector<Segment> cols) : rows_(std::move(rows)), cols_(std::move(cols)) {
    auto x_first = [](const std::vector<Segment>& segs) {
        return std::is_partitioned(segs.begin(), segs.end(), [](const Segment& s) { return s.length == Length::x; });
    };
    if (!x_first(rows_) || !x_first(cols_)) throw std::invalid_argument("layout segments must be sorted x-first");
    for (const auto* segs : {&rows_, &cols_}) {
        for (const Segment& s : *segs) {
            if (s.sign != 1 && s.sign != -1) throw std::invalid_argument("segment sign must be +1 or -1");
        }
    }
}

Card Layout::cell(std::size_t row, std::size_t col) const {
    const Segment& r = rows_.at(row);
    const Segment& c = cols_.at(col);
    return {kind_for(r.length, c.length), r.sign * c.sign};
}

SignedCounts Layout::signed_counts() const {
    SignedCounts out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            const Card card = cell(i, j);
            switch (card.kind) {
                case CardKind::x_square: out.x_square += card.sign; break;
                case CardKind::x: out.x += card.sign; break;
                case CardKind::unit: out.unit += card.sign; break;
            }
        }
    }
    return out;
}

std::pair<Int, Int> Layout::x_block_sizes() const {
    const auto rx = static_cast<Int>(x_count(rows_));
    const auto cx = static_cast<Int>(x_count(cols_));
    const auto ru = static_cast<Int>(rows_.size()) - rx;
    const auto cu = static_cast<Int>(cols_.size()) - cx;
    return {rx * cu, ru * cx};
}

Factorization Layout::sides() const {
    auto read = [](const std::vector<Segment>& segs) {
        Int lead = 0, constant = 0;
        for (const Segment& s : segs) (s.length == Length::x ? lead : constant) += s.sign;
        return LinearPoly(lead, constant);
    };
    return {read(rows_), read(cols_)};
}

Layout layout_from_factorization(const Factorization& fac) {
    return {segments_for(fac.first), segments_for(fac.second)};
}

std::vector<Layout> enumerate_layouts(const QuadraticPoly& f) {
    const Int a = f.a(), b = f.b(), c = f.c();
    std::vector<Factorization> found;
    auto consider = [&](Int p1, Int p2, Int q1, Int q2) {
        if (checked::add(checked::mul(p1, q2), checked::mul(p2, q1)) != b) return;
        const Factorization canon = canonicalize({{p1, p2}, {q1, q2}});
        if (std::find(found.begin(), found.end(), canon) == found.end()) found.push_back(canon);
    };
    // x^2 block p1 by q1, unit block p2 by q2.
    for (Int p1 : signed_divisors(a)) {
        const Int q1 = a / p1;
        if (c != 0) {
            for (Int p2 : signed_divisors(c)) consider(p1, p2, q1, c / p2);
        } else {
            // Empty unit block: one factor has no unit segments.
            if (b % p1 == 0) consider(p1, 0, q1, b / p1);
            if (b % q1 == 0) consider(p1, b / q1, q1, 0);
        }
    }
    std::sort(found.begin(), found.end(), [](const Factorization& x, const Factorization& y) {
        return std::pair(x.first, x.second) < std::pair(y.first, y.second);
    });
    std::vector<Layout> out;
    out.reserve(found.size());
    for (const Factorization& fac : found) out.push_back(layout_from_factorization(fac));
    return out;
}

std::string render_ascii(const Layout& layout) {
    const auto& rows = layout.rows();
    const auto& cols = layout.cols();
    const std::size_t cx = x_count(cols);
    const std::size_t rx = x_count(rows);
    const bool col_split = cx > 0 && cx < cols.size();
    const bool row_split = rx > 0 && rx < rows.size();

    std::string out = "   ";
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (col_split && j == cx) out += " |";
        out += "   " + segment_label(cols[j]);
    }
    out += '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (row_split && i == rx) {
            std::string rule = "---";
            for (std::size_t j = 0; j < cols.size(); ++j) {
                if (col_split && j == cx) rule += "-+";
                rule += "-----";
            }
            out += rule + '\n';
        }
        out += segment_label(rows[i]) + " ";
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (col_split && j == cx) out += " |";
            out += cell_text(layout.cell(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace quadbox
