#ifndef GRAPHPOLY_CHECKED_INT_HPP
#define GRAPHPOLY_CHECKED_INT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "graphpoly/errors.hpp"

namespace graphpoly {

/// Signed 128-bit integer with overflow-checked arithmetic. Every operation
/// that would leave the representable range throws ArithmeticError instead of
/// wrapping. 128 bits cover all quantities this library produces at the
/// supported graph sizes (subset counts up to 2^n, biclique totals up to 3^n).
class CheckedInt {
public:
    constexpr CheckedInt() = default;
    constexpr CheckedInt(long long value) : v_(value) {}
    constexpr CheckedInt(int value) : v_(value) {}

    static constexpr CheckedInt from_raw(__int128 value) {
        CheckedInt x;
        x.v_ = value;
        return x;
    }

    /// 2^k for 0 <= k <= 126.
    static CheckedInt pow2(int k) {
        if (k < 0 || k > 126) throw ArithmeticError("pow2 exponent out of range");
        return from_raw(static_cast<__int128>(1) << k);
    }

    /// Parses an optionally signed decimal string; the whole view must be consumed.
    static CheckedInt parse(std::string_view text);

    std::string str() const;

    constexpr __int128 raw() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }
    constexpr bool is_odd() const { return (v_ & 1) != 0; }
    constexpr bool is_negative() const { return v_ < 0; }

    /// Exact halving; an odd value signals a counting bug upstream.
    CheckedInt half() const {
        if (is_odd()) throw ArithmeticError("half() of an odd value");
        return from_raw(v_ / 2);
    }

    /// Conversion for callers that need a machine integer; checked.
    long long to_int64() const {
        if (v_ > INT64_MAX || v_ < INT64_MIN) throw ArithmeticError("value exceeds 64 bits");
        return static_cast<long long>(v_);
    }

    CheckedInt operator-() const {
        __int128 r;
        if (__builtin_sub_overflow(static_cast<__int128>(0), v_, &r))
            throw ArithmeticError("integer negation overflow");
        return from_raw(r);
    }

    CheckedInt& operator+=(CheckedInt other) {
        if (__builtin_add_overflow(v_, other.v_, &v_))
            throw ArithmeticError("integer addition overflow");
        return *this;
    }
    CheckedInt& operator-=(CheckedInt other) {
        if (__builtin_sub_overflow(v_, other.v_, &v_))
            throw ArithmeticError("integer subtraction overflow");
        return *this;
    }
    CheckedInt& operator*=(CheckedInt other) {
        if (__builtin_mul_overflow(v_, other.v_, &v_))
            throw ArithmeticError("integer multiplication overflow");
        return *this;
    }

    friend CheckedInt operator+(CheckedInt a, CheckedInt b) { return a += b; }
    friend CheckedInt operator-(CheckedInt a, CheckedInt b) { return a -= b; }
    friend CheckedInt operator*(CheckedInt a, CheckedInt b) { return a *= b; }

    friend constexpr bool operator==(CheckedInt a, CheckedInt b) { return a.v_ == b.v_; }
    friend constexpr std::strong_ordering operator<=>(CheckedInt a, CheckedInt b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    __int128 v_ = 0;
};

}  // namespace graphpoly

#endif
