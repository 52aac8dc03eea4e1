#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "germsum/exponent.hpp"
#include "germsum/rational.hpp"

namespace germsum {

/// Sparse formal power series in `dim` variables, truncated at total
/// degree `cap`, with exact Gaussian-rational coefficients.
///
/// Invariants: every stored exponent has |beta| <= cap and every stored
/// coefficient is nonzero. A value certifies the series modulo total
/// degree > cap; arithmetic propagates cap = min of the operand caps.
/// Values are immutable once built (all operations return new series),
/// so they may be shared and used from any thread.
class MultiSeries {
public:
    using TermMap = std::map<Exponent, GaussRational>;

    MultiSeries(int dim, int cap);

    static MultiSeries zero(int dim, int cap) { return MultiSeries(dim, cap); }
    static MultiSeries constant(int dim, int cap, const GaussRational& c);
    static MultiSeries monomial(int dim, int cap, const Exponent& exp,
                                const GaussRational& c = GaussRational(1));

    int dim() const { return dim_; }
    int cap() const { return cap_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    GaussRational coeff(const Exponent& exp) const;
    GaussRational constant_term() const { return coeff(Exponent(dim_)); }

    /// Largest total degree among stored terms (0 for the zero series).
    int max_total_degree() const;
    /// Smallest total degree among stored terms; nullopt for zero.
    std::optional<int> valuation() const;

    /// Re-certify to a lower cap, dropping terms above it.
    MultiSeries truncated(int new_cap) const;
    /// Raise the cap. Only sound when the caller knows the dropped tail
    /// is zero (exact polynomials).
    MultiSeries with_cap(int new_cap) const;

    MultiSeries operator-() const;
    friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b);
    friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b);
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
    friend MultiSeries operator*(const GaussRational& c, const MultiSeries& a);
    friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiSeries& a, const MultiSeries& b) { return !(a == b); }

    /// Formal partial derivative along axis j (0-based); cap drops by one.
    MultiSeries derive(int j) const;

    /// Composition with one replacement series per axis. Replacements must
    /// have zero constant term unless `certify_units` is set by a caller
    /// who has checked truncation consistency on their own.
    MultiSeries substitute(const std::vector<MultiSeries>& rules,
                           bool certify_units = false) const;

    /// Inverse of a unit u (nonzero constant term): u * result == 1 mod cap.
    MultiSeries invert_unit() const;

    /// Exact division by x^gamma; every stored exponent must dominate gamma.
    MultiSeries divide_by_monomial(const Exponent& gamma) const;

    /// Multiplication by x^gamma; exact, cap rises by |gamma|.
    MultiSeries mul_monomial(const Exponent& gamma, const GaussRational& c = GaussRational(1)) const;

    /// Integer power, truncated.
    MultiSeries pow(int n) const;

    /// Evaluate at a complex point (sums the stored terms).
    std::complex<double> eval(const std::vector<std::complex<double>>& x) const;

    /// Sum of |coefficient| * r^|beta| over stored terms: an exact upper
    /// bound for the sup on the closed polydisk of radius r.
    double majorant(double r) const;

    void insert_term(const Exponent& exp, const GaussRational& c);
    void add_term(const Exponent& exp, const GaussRational& c);

    std::string to_string() const;

private:
    int dim_;
    int cap_;
    TermMap terms_;

    void check_same_shape(const MultiSeries& other) const;
};

/// Analytic germ: a series with P(0) = 0, not identically zero up to cap.
/// `exact_polynomial` marks values whose stored terms are the whole germ.
struct Germ {
    MultiSeries series;
    bool exact_polynomial = false;

    Germ(MultiSeries s, bool exact);
    int dim() const { return series.dim(); }
    int cap() const { return series.cap(); }
};

/// Truncation of E(P) = sum_{n>=0} (-1)^n n! P^{n+1} to P's cap.
MultiSeries euler_compose(const Germ& p);

/// Truncation of the one-variable Euler series in x_j.
MultiSeries euler_series(int dim, int cap, int axis);

}  // namespace germsum
