#include "graphpoly/poly.hpp"

#include <json.hpp>

#include "graphpoly/errors.hpp"

namespace graphpoly {

namespace {

// Degrees beyond this are rejected by the parsers; keeps hostile input from
// forcing a giant coefficient vector.
constexpr int kMaxParsedDegree = 4096;

}  // namespace

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

IntPoly IntPoly::constant(CheckedInt c) {
    IntPoly p;
    p.add_term(0, c);
    return p;
}

IntPoly IntPoly::monomial(int k, CheckedInt c) {
    if (k < 0) throw InputError("monomial degree must be nonnegative");
    IntPoly p;
    p.add_term(k, c);
    return p;
}

IntPoly IntPoly::one_plus_x_power(int k) {
    if (k < 0) throw InputError("exponent must be nonnegative");
    std::vector<CheckedInt> row(static_cast<std::size_t>(k) + 1, CheckedInt(0));
    row[0] = CheckedInt(1);
    for (int i = 1; i <= k; ++i) {
        for (int j = i; j > 0; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    }
    return IntPoly(std::move(row));
}

CheckedInt IntPoly::coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return CheckedInt(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

void IntPoly::add_term(int k, CheckedInt c) {
    if (k < 0) throw InputError("term degree must be nonnegative");
    if (c.is_zero()) return;
    if (static_cast<std::size_t>(k) >= coeffs_.size())
        coeffs_.resize(static_cast<std::size_t>(k) + 1, CheckedInt(0));
    coeffs_[static_cast<std::size_t>(k)] += c;
    trim();
}

CheckedInt IntPoly::eval(CheckedInt x) const {
    CheckedInt acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), CheckedInt(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), CheckedInt(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

std::string IntPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const CheckedInt& c = coeffs_[k];
        if (c.is_zero()) continue;
        bool negative = c.is_negative();
        CheckedInt mag = negative ? -c : c;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        bool unit = mag == CheckedInt(1);
        if (k == 0) {
            out += mag.str();
        } else {
            if (!unit) {
                out += mag.str();
                out += "*";
            }
            out += "x";
            if (k > 1) {
                out += "^";
                out += std::to_string(k);
            }
        }
    }
    return out;
}

namespace {

struct PolyScanner {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void skip_ws() {
        while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }

    // Unsigned decimal integer; the caller applies the sign.
    CheckedInt number() {
        std::size_t start = pos;
        while (!done() && peek() >= '0' && peek() <= '9') ++pos;
        if (pos == start) fail("expected a number");
        return CheckedInt::parse(text.substr(start, pos - start));
    }

    int exponent() {
        std::size_t start = pos;
        long long value = 0;
        while (!done() && peek() >= '0' && peek() <= '9') {
            value = value * 10 + (peek() - '0');
            if (value > kMaxParsedDegree) throw ParseError("exponent too large", start);
            ++pos;
        }
        if (pos == start) fail("expected an exponent");
        return static_cast<int>(value);
    }
};

}  // namespace

IntPoly IntPoly::parse(std::string_view text) {
    PolyScanner s{text};
    IntPoly result;
    s.skip_ws();
    if (s.done()) s.fail("empty polynomial");
    bool negative = false;
    if (s.peek() == '-' || s.peek() == '+') {
        negative = s.peek() == '-';
        ++s.pos;
        s.skip_ws();
    }
    for (;;) {
        if (s.done()) s.fail("expected a term");
        CheckedInt coeff(1);
        bool have_coeff = false;
        if (s.peek() >= '0' && s.peek() <= '9') {
            coeff = s.number();
            have_coeff = true;
        }
        int deg = 0;
        if (have_coeff) {
            std::size_t mark = s.pos;
            s.skip_ws();
            if (!s.done() && s.peek() == '*') {
                ++s.pos;
                s.skip_ws();
                if (s.done() || s.peek() != 'x') s.fail("expected 'x' after '*'");
            }
            if (!s.done() && s.peek() == 'x') {
                ++s.pos;
                deg = 1;
            } else {
                s.pos = mark;  // plain constant term
            }
        } else if (s.peek() == 'x') {
            ++s.pos;
            deg = 1;
        } else {
            s.fail("expected a term");
        }
        if (deg == 1 && !s.done() && s.peek() == '^') {
            ++s.pos;
            deg = s.exponent();
        }
        result.add_term(deg, negative ? -coeff : coeff);

        s.skip_ws();
        if (s.done()) break;
        if (s.peek() == '+' || s.peek() == '-') {
            negative = s.peek() == '-';
            ++s.pos;
            s.skip_ws();
        } else {
            s.fail("expected '+' or '-' between terms");
        }
    }
    return result;
}

std::string IntPoly::json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckedInt& c : coeffs_) arr.push_back(c.str());
    return arr.dump();
}

IntPoly IntPoly::from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON polynomial: ") + e.what(), 0);
    }
    if (!doc.is_array()) throw ParseError("JSON polynomial must be an array", 0);
    if (doc.size() > static_cast<std::size_t>(kMaxParsedDegree) + 1)
        throw ParseError("JSON polynomial has too many coefficients", 0);
    std::vector<CheckedInt> coeffs;
    coeffs.reserve(doc.size());
    for (const auto& item : doc) {
        if (!item.is_string()) throw ParseError("JSON polynomial coefficients must be strings", 0);
        coeffs.push_back(CheckedInt::parse(item.get<std::string>()));
    }
    return IntPoly(std::move(coeffs));
}

}  // namespace graphpoly
