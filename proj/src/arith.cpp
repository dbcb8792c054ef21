#include "quadbox/arith.hpp"

#include <limits>
#include <stdexcept>

namespace quadbox {

namespace checked {

namespace {
[[noreturn]] void overflow(const char* op) {
    throw std::overflow_error(std::string("integer overflow in ") + op);
}
}  // namespace

Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) overflow("add");
    return r;
}

Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
    return r;
}

Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
    return r;
}

Int neg(Int a) {
    if (a == std::numeric_limits<Int>::min()) overflow("neg");
    return -a;
}

Int abs(Int a) { return a < 0 ? neg(a) : a; }

Int div_exact(Int a, Int b) {
    if (b == 0) throw std::domain_error("division by zero");
    if (b == -1) return neg(a);
    if (a % b != 0) throw std::domain_error("inexact division");
    return a / b;
}

Int narrow(Wide v) {
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) overflow("narrow");
    return static_cast<Int>(v);
}

}  // namespace checked

Int gcd(Int a, Int b) {
    // Work on unsigned magnitudes so gcd(INT64_MIN, 0) is detected, not UB.
    auto ua = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
    auto ub = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
    while (ub != 0) {
        auto t = ua % ub;
        ua = ub;
        ub = t;
    }
    if (ua > static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))
        throw std::overflow_error("integer overflow in gcd");
    return static_cast<Int>(ua);
}

std::vector<Int> divisors(Int n) {
    if (n == 0) throw std::domain_error("divisors of zero are unbounded");
    const Int m = checked::abs(n);
    std::vector<Int> low;
    std::vector<Int> high;
    for (Int d = 1; d <= m / d; ++d) {
        if (m % d == 0) {
            low.push_back(d);
            if (d != m / d) high.push_back(m / d);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

std::vector<Int> signed_divisors(Int n) {
    std::vector<Int> out;
    for (Int d : divisors(n)) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

bool is_prime(Int n) {
    const Int m = checked::abs(n);
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (Int d = 3; d <= m / d; d += 2) {
        if (m % d == 0) return false;
    }
    return true;
}

Int isqrt(Int n) {
    if (n < 0) throw std::domain_error("isqrt of negative number");
    if (n < 2) return n;
    // Newton iteration from above converges monotonically to floor(sqrt(n)).
    Int x = n;
    Int y = x / 2 + x % 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

bool is_perfect_square(Int n) {
    if (n < 0) return false;
    const Int r = isqrt(n);
    return r * r == n;
}

}  // namespace quadbox
