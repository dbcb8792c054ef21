#include "quadbox/text.hpp"

#include <array>
#include <optional>

namespace quadbox {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ParsedPoly run() {
        std::array<Rat, 3> coef{};  // indexed by degree
        std::array<bool, 3> seen{};
        skip_space();
        if (at_end()) fail("empty polynomial");
        int sign = 1;
        if (auto s = take_sign()) sign = *s;
        while (true) {
            skip_space();
            const auto [value, degree] = term();
            coef[degree] += sign > 0 ? value : -value;
            seen[degree] = true;
            skip_space();
            if (at_end()) break;
            const auto s = take_sign();
            if (!s) fail("expected '+' or '-'");
            sign = *s;
        }
        if (!seen[2]) throw ParseError(ParseError::Kind::degree, text_.size(), "polynomial must have degree 2");
        if (coef[2] == Rat(0))
            throw ParseError(ParseError::Kind::zero_leading, text_.size(),
                             "leading coefficient is zero after combining terms");
        if (coef[0].is_integer() && coef[1].is_integer() && coef[2].is_integer())
            return QuadraticPoly(coef[2].num(), coef[1].num(), coef[0].num());
        return RationalQuadratic(coef[2], coef[1], coef[0]);
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(ParseError::Kind::syntax, pos_,
                         "syntax error at position " + std::to_string(pos_) + ": " + what);
    }

    bool at_end() const { return pos_ >= text_.size(); }

    bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

    void skip_space() {
        while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
    }

    std::optional<int> take_sign() {
        if (at_end()) return std::nullopt;
        if (text_[pos_] == '+') {
            ++pos_;
            return 1;
        }
        if (text_[pos_] == '-') {
            ++pos_;
            return -1;
        }
        if (starts_with("−")) {
            pos_ += std::string_view("−").size();
            return -1;
        }
        return std::nullopt;
    }

    bool digit_here() const { return !at_end() && text_[pos_] >= '0' && text_[pos_] <= '9'; }

    Int integer() {
        if (!digit_here()) fail("expected a number");
        Int value = 0;
        const std::size_t start = pos_;
        while (digit_here()) {
            const Int d = text_[pos_] - '0';
            Int next;
            if (__builtin_mul_overflow(value, Int{10}, &next) || __builtin_add_overflow(next, d, &next)) {
                pos_ = start;
                fail("integer literal too large");
            }
            value = next;
            ++pos_;
        }
        return value;
    }

    std::pair<Rat, int> term() {
        std::optional<Rat> coefficient;
        if (digit_here()) {
            const Int num = integer();
            skip_space();
            Int den = 1;
            if (!at_end() && text_[pos_] == '/') {
                ++pos_;
                skip_space();
                const std::size_t den_pos = pos_;
                den = integer();
                if (den == 0) {
                    pos_ = den_pos;
                    fail("denominator must be positive");
                }
                skip_space();
            }
            coefficient = Rat(num, den);
            if (!at_end() && text_[pos_] == '*') {
                ++pos_;
                skip_space();
                if (at_end() || text_[pos_] != 'x') fail("expected 'x' after '*'");
            }
        }
        if (!at_end() && text_[pos_] == 'x') {
            ++pos_;
            return {coefficient.value_or(Rat(1)), exponent()};
        }
        if (!coefficient) fail("expected a term");
        return {*coefficient, 0};
    }

    int exponent() {
        skip_space();
        if (starts_with("²")) {
            pos_ += std::string_view("²").size();
            return 2;
        }
        if (starts_with("¹")) {
            pos_ += std::string_view("¹").size();
            return 1;
        }
        if (at_end() || text_[pos_] != '^') return 1;
        ++pos_;
        skip_space();
        if (!digit_here()) fail("expected exponent 1 or 2");
        const std::size_t exp_pos = pos_;
        const Int e = integer();
        if (e == 1 || e == 2) return static_cast<int>(e);
        throw ParseError(ParseError::Kind::degree, exp_pos,
                         "unsupported exponent " + std::to_string(e) + " at position " + std::to_string(exp_pos) +
                             ": degree must be 2");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void append_term(std::string& out, const Rat& coef, std::string_view var) {
    if (coef == Rat(0)) return;
    const bool negative = coef < Rat(0);
    if (out.empty()) {
        if (negative) out += '-';
    } else {
        out += negative ? " - " : " + ";
    }
    const Rat mag = negative ? -coef : coef;
    if (var.empty() || mag != Rat(1)) out += mag.str();
    out += var;
}

std::string print_terms(const Rat& a, const Rat& b, const Rat& c) {
    std::string out;
    append_term(out, a, "x^2");
    append_term(out, b, "x");
    append_term(out, c, "");
    return out.empty() ? "0" : out;
}

}  // namespace

ParsedPoly parse(std::string_view text) { return Parser(text).run(); }

std::string print(const QuadraticPoly& f) { return print_terms(f.a(), f.b(), f.c()); }

std::string print(const RationalQuadratic& g) { return print_terms(g.a(), g.b(), g.c()); }

std::string print(const ParsedPoly& p) {
    return std::visit([](const auto& v) { return print(v); }, p);
}

std::string print(const LinearPoly& l) {
    std::string out;
    append_term(out, l.lead(), "x");
    append_term(out, l.const_term(), "");
    return out;
}

std::string print(const Factorization& fac) { return "(" + print(fac.first) + ")(" + print(fac.second) + ")"; }

std::string print(const RootPair& roots) { return "x = " + roots.r1().str() + ", x = " + roots.r2().str(); }

}  // namespace quadbox
