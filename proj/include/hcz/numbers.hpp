#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <stdexcept>
#include <string>

namespace hcz {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// 100 decimal digits ~ 332-bit significand; covers every extended-precision
// requirement in the library (region powers need >= 256 bits, ratio
// evaluation needs >= 128).
using BigFloat = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<100>,
    boost::multiprecision::et_off>;

// Exact complex number with rational real and imaginary parts.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianRational(long r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    // |z|^2, exact.
    Rational norm2() const { return re * re + im * im; }

    GaussianRational conj() const { return {re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.norm2();
        if (n == 0) throw std::domain_error("GaussianRational: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// Complex number over BigFloat. Only the operations the library needs.
struct BigComplex {
    BigFloat re{0};
    BigFloat im{0};

    BigComplex() = default;
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(const BigFloat& r) : re(r) {}
    explicit BigComplex(double r) : re(r) {}
    explicit BigComplex(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}
    explicit BigComplex(const GaussianRational& q) : re(BigFloat(q.re)), im(BigFloat(q.im)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    BigFloat norm2() const { return re * re + im * im; }
    BigFloat abs() const { return sqrt(norm2()); }
    BigComplex conj() const { return {re, -im}; }

    std::complex<double> to_double() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat n = b.norm2();
        if (n == 0) throw std::domain_error("BigComplex: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    BigComplex& operator+=(const BigComplex& b) { return *this = *this + b; }
    BigComplex& operator-=(const BigComplex& b) { return *this = *this - b; }
    BigComplex& operator*=(const BigComplex& b) { return *this = *this * b; }
    BigComplex& operator/=(const BigComplex& b) { return *this = *this / b; }
};

// z^e by binary powering, e >= 0.
BigComplex pow_ui(BigComplex z, unsigned long e);
GaussianRational pow_ui(GaussianRational z, unsigned long e);

BigFloat bigfloat_pi();

// Parses "p/q", integer, or plain decimal ("-0.25", "1e-3") into an exact rational.
Rational parse_rational(const std::string& s);

// Decimal string with the given number of significant digits; deterministic.
std::string format_bigfloat(const BigFloat& x, int digits = 30);
std::string format_double17(double x);

// "re im" with 30 significant digits.
std::string format_complex30(const BigComplex& z);
std::string format_complex30(const GaussianRational& z);
std::string format_complex30(const std::complex<double>& z);

}  // namespace hcz
