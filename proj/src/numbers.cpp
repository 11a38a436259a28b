#include "hcz/numbers.hpp"

#include <cctype>
#include <cstdio>

namespace hcz {

BigComplex pow_ui(BigComplex z, unsigned long e) {
    BigComplex acc(BigFloat(1));
    while (e > 0) {
        if (e & 1) acc *= z;
        z *= z;
        e >>= 1;
    }
    return acc;
}

GaussianRational pow_ui(GaussianRational z, unsigned long e) {
    GaussianRational acc(1);
    while (e > 0) {
        if (e & 1) acc *= z;
        z *= z;
        e >>= 1;
    }
    return acc;
}

BigFloat bigfloat_pi() {
    static const BigFloat pi = atan2(BigFloat(0), BigFloat(-1));
    return pi;
}

namespace {

bool is_plain_integer(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!is_plain_integer(num) || !is_plain_integer(den))
            throw std::invalid_argument("bad rational literal: " + s);
        Rational r{BigInt(num), BigInt(den)};
        return r;
    }
    if (is_plain_integer(s)) return Rational(BigInt(s));

    // Decimal, possibly with exponent: sign, digits, optional '.', digits, optional e[+-]digits.
    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = (s[i] == '-'), ++i;
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
        if (s[i] == '.') {
            if (seen_dot) throw std::invalid_argument("bad decimal literal: " + s);
            seen_dot = true;
        } else {
            digits += s[i];
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        }
    }
    long exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::string e = s.substr(i + 1);
        if (e.empty()) throw std::invalid_argument("bad exponent: " + s);
        size_t j = (e[0] == '+' || e[0] == '-') ? 1 : 0;
        if (j == e.size()) throw std::invalid_argument("bad exponent: " + s);
        for (size_t k = j; k < e.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(e[k])))
                throw std::invalid_argument("bad exponent: " + s);
        exp10 = std::stol(e);
        i = s.size();
    }
    if (!seen_digit || i != s.size())
        throw std::invalid_argument("bad numeric literal: " + s);

    BigInt mant(digits.empty() ? "0" : digits);
    if (neg) mant = -mant;
    long net = exp10 - frac_digits;
    Rational r(mant);
    BigInt p10 = pow(BigInt(10), static_cast<unsigned>(net < 0 ? -net : net));
    if (net >= 0)
        r *= Rational(p10);
    else
        r /= Rational(p10);
    return r;
}

std::string format_bigfloat(const BigFloat& x, int digits) {
    return x.str(digits);
}

std::string format_double17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_complex30(const BigComplex& z) {
    return format_bigfloat(z.re) + " " + format_bigfloat(z.im);
}

std::string format_complex30(const GaussianRational& z) {
    return format_complex30(BigComplex(z));
}

std::string format_complex30(const std::complex<double>& z) {
    return format_complex30(BigComplex(z));
}

}  // namespace hcz
