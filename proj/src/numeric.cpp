#include "schubert/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace schubert {

Int isqrt(const Int& n) {
    if (n < 0) {
        throw std::invalid_argument("isqrt: negative argument");
    }
    if (n == 0) {
        return 0;
    }
    // Start above the root, then Newton steps decrease monotonically to floor(sqrt(n)).
    Int x = Int(1) << (boost::multiprecision::msb(n) / 2 + 1);
    for (;;) {
        Int y = (x + n / x) >> 1;
        if (y >= x) {
            return x;
        }
        x = y;
    }
}

Rational parse_rational(std::string_view s) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("malformed rational: \"" + std::string(s) + "\"");
    };
    std::size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    auto read_digits = [&](Int& out) {
        std::size_t start = pos;
        out = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            out = out * 10 + (s[pos] - '0');
            ++pos;
        }
        return pos > start;
    };
    Int num;
    if (!read_digits(num)) {
        return fail();
    }
    Int den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        if (!read_digits(den) || den == 0) {
            return fail();
        }
    }
    if (pos != s.size()) {
        return fail();
    }
    if (neg) {
        num = -num;
    }
    return Rational(num, den);
}

std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/" + denominator(r).str();
    }
    return s;
}

std::string decimal_string(const Rational& r, int digits) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) {
        scale *= 10;
    }
    Int p = numerator(r);
    Int q = denominator(r);
    bool neg = p < 0;
    if (neg) {
        p = -p;
    }
    Int scaled = p * scale;
    Int units = scaled / q;
    if (2 * (scaled % q) >= q) {
        ++units; // round half away from zero
    }
    Int whole = units / scale;
    std::string frac = (units % scale).str();
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
    std::string out = neg ? "-" : "";
    out += whole.str();
    if (digits > 0) {
        out += "." + frac;
    }
    return out;
}

} // namespace schubert
