#include "quadbox/rational.hpp"

#include <stdexcept>

namespace quadbox {

namespace {

Wide gcd_wide(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rat::Rat(Int num, Int den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    *this = from_wide(num, den);
}

Rat Rat::from_wide(Wide num, Wide den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const Wide g = gcd_wide(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Rat r;
    r.num_ = checked::narrow(num);
    r.den_ = checked::narrow(den);
    return r;
}

Rat operator+(const Rat& a, const Rat& b) {
    return Rat::from_wide(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
                          static_cast<Wide>(a.den_) * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
    return Rat::from_wide(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return Rat::from_wide(static_cast<Wide>(a.num_) * b.den_, static_cast<Wide>(a.den_) * b.num_);
}

Rat Rat::operator-() const {
    Rat r;
    r.num_ = checked::neg(num_);
    r.den_ = den_;
    return r;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
    const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rat::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace quadbox
