#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace germsum {

/// Base error type for the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class dimension_error : public error {
public:
    using error::error;
};

class domain_error : public error {
public:
    using error::error;
};

using Rational = mpq_class;

/// Parse a rational from a decimal-free "p/q" or "p" string.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" form, denominator always printed ("3" -> "3/1").
std::string format_rational(const Rational& q);

/// log|q| computed from the GMP limbs, safe for values far beyond
/// double range.
double log_abs(const Rational& q);

/// Complex number with exact rational real and imaginary parts.
/// Always stored in lowest terms; equality is exact.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() : re(0), im(0) {}
    GaussRational(long r) : re(r), im(0) {}                      // NOLINT(google-explicit-constructor)
    GaussRational(Rational r) : re(std::move(r)), im(0) {}       // NOLINT(google-explicit-constructor)
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRational conj() const { return {re, -im}; }

    /// |z|^2, exact.
    Rational norm_sq() const { return re * re + im * im; }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        if (b.is_zero()) throw domain_error("GaussRational: division by zero");
        const Rational n = b.norm_sq();
        const GaussRational c = a * b.conj();
        return {c.re / n, c.im / n};
    }
    GaussRational& operator+=(const GaussRational& o) { re += o.re; im += o.im; return *this; }
    GaussRational& operator-=(const GaussRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussRational& operator*=(const GaussRational& o) { *this = *this * o; return *this; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

/// log|z| for a Gaussian rational, -inf for zero.
double log_abs(const GaussRational& z);

double abs_double(const GaussRational& z);

/// n! as an exact rational.
Rational factorial(unsigned long n);

std::string format_gauss(const GaussRational& z);

}  // namespace germsum
