#pragma once

#include <compare>
#include <string>

#include "quadbox/arith.hpp"

namespace quadbox {

/**
 * Exact rational number kept in lowest terms with a positive denominator.
 *
 * Intermediate products are formed in 128 bits and narrowed after
 * reduction, so a result that fits in Int is never rejected spuriously.
 */
class Rat {
public:
    Rat() = default;
    Rat(Int value) : num_(value) {}  // NOLINT: implicit lift from Int is intended
    Rat(Int num, Int den);

    Int num() const { return num_; }
    Int den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const;

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    friend bool operator==(const Rat& a, const Rat& b) = default;
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

    /// "num/den", or just "num" when den == 1.
    std::string str() const;

private:
    static Rat from_wide(Wide num, Wide den);

    Int num_ = 0;
    Int den_ = 1;
};

}  // namespace quadbox
