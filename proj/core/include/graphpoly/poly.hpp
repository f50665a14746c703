#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphpoly/checked_int.hpp"

namespace graphpoly {

// Dense integer polynomial.  Invariant: coeffs_ has no trailing zeros, so the
// zero polynomial is the empty vector and degree() == coeffs_.size() - 1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<CheckedInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly constant(CheckedInt c);
    // c * x^k
    static IntPoly monomial(int k, CheckedInt c = CheckedInt(1));
    // (1 + x)^k expanded via the Pascal recurrence.
    static IntPoly one_plus_x_power(int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    CheckedInt coeff(int k) const;
    const std::vector<CheckedInt>& coeffs() const { return coeffs_; }

    // In-place coefficient accumulation; callers build polynomials term by term.
    void add_term(int k, CheckedInt c);

    CheckedInt eval(CheckedInt x) const;

    IntPoly& operator+=(const IntPoly& other);
    IntPoly& operator-=(const IntPoly& other);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    // Text form, e.g. "6*x^2 + 4*x^3 + x^4", "-x + x^2", "1 - 2*x", "0".
    std::string str() const;
    static IntPoly parse(std::string_view text);

    // JSON form: array of decimal coefficient strings, low degree first; zero is [].
    std::string json() const;
    static IntPoly from_json(std::string_view text);

private:
    void trim();

    std::vector<CheckedInt> coeffs_;
};

}  // namespace graphpoly
