#pragma once

/**
 * @file text.hpp
 * @brief Polynomial text: parsing and canonical printing.
 *
 * Grammar (whitespace insignificant):
 *
 *   poly := ['+'|'-'] term (('+'|'-') term)*
 *   term := coef ['*'] var | coef | var
 *   coef := integer ['/' positive-integer]
 *   var  := 'x' ['^' ('1'|'2')]
 *
 * Input also accepts the superscripts U+00B9 and U+00B2 and the minus sign
 * U+2212. Like terms are combined; the result must be of degree exactly 2.
 * Printed forms are ASCII only.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "quadbox/poly.hpp"

namespace quadbox {

class ParseError : public std::runtime_error {
public:
    enum class Kind { syntax, degree, zero_leading };

    ParseError(Kind kind, std::size_t position, const std::string& what)
        : std::runtime_error(what), kind_(kind), position_(position) {}

    Kind kind() const { return kind_; }
    /// Byte offset into the input where the problem was detected.
    std::size_t position() const { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

using ParsedPoly = std::variant<QuadraticPoly, RationalQuadratic>;

/// Integer triple when every combined coefficient is an integer, rational record otherwise.
ParsedPoly parse(std::string_view text);

std::string print(const QuadraticPoly& f);
std::string print(const RationalQuadratic& g);
std::string print(const ParsedPoly& p);
std::string print(const LinearPoly& l);
std::string print(const Factorization& fac);
std::string print(const RootPair& roots);

}  // namespace quadbox
