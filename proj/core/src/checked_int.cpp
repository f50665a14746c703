#include "graphpoly/checked_int.hpp"

#include <algorithm>

namespace graphpoly {

std::string CheckedInt::str() const {
    if (v_ == 0) return "0";
    // Negate digit by digit into unsigned space so INT128_MIN survives.
    unsigned __int128 mag =
        v_ < 0 ? static_cast<unsigned __int128>(-(v_ + 1)) + 1 : static_cast<unsigned __int128>(v_);
    std::string digits;
    while (mag > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (v_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

CheckedInt CheckedInt::parse(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw ParseError("expected an integer", i);
    CheckedInt result;
    const CheckedInt ten(10);
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw ParseError("invalid digit in integer", i);
        result *= ten;
        CheckedInt digit(c - '0');
        if (negative)
            result -= digit;
        else
            result += digit;
    }
    return result;
}

}  // namespace graphpoly
