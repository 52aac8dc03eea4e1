#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "germsum/mseries.hpp"

namespace germsum {

/// Positive linear form ell(beta) = sum ell_j beta_j, injective on the
/// exponent box {beta : |beta| <= cap}. Injectivity is verified at
/// construction against the cap the form will serve; behavior on
/// exponents beyond that box is undefined and callers stay inside it.
class LinearForm {
public:
    LinearForm(std::vector<Rational> weights, int dim, int cap);

    /// Weights 1, B, B^2, ... with B = cap + 1: injective on any box with
    /// per-axis exponents <= cap. Deterministic default for germ division.
    static LinearForm positional(int dim, int cap);

    int dim() const { return static_cast<int>(weights_.size()); }
    int cap() const { return cap_; }
    const std::vector<Rational>& weights() const { return weights_; }

    Rational value(const Exponent& beta) const;
    bool less(const Exponent& a, const Exponent& b) const { return value(a) < value(b); }

private:
    std::vector<Rational> weights_;
    int cap_;
};

/// The ell-least stored exponent of a nonzero series.
Exponent nu_ell(const MultiSeries& p, const LinearForm& ell);
inline Exponent nu_ell(const Germ& p, const LinearForm& ell) { return nu_ell(p.series, ell); }

/// One decomposition f = sum_n f_n * base^n at truncated order.
///
/// For a monomial base alpha the split is an exact partition of stored
/// terms and `tail` holds the terms whose component index reached n_max.
/// For a germ base the components are iterated Weierstrass remainders and
/// `tail` is the final quotient, so that
///   sum_n components[n] * base^n + tail * base^n_max == source
/// holds exactly modulo total degree > certified_cap.
struct Decomposition {
    std::variant<Exponent, Germ> base;
    std::optional<LinearForm> ell;
    std::vector<MultiSeries> components;
    MultiSeries tail;
    int certified_cap;

    bool monomial_base() const { return std::holds_alternative<Exponent>(base); }
    const Exponent& alpha() const { return std::get<Exponent>(base); }
    const Germ& germ() const { return std::get<Germ>(base); }

    /// Base germ as a series (monomial bases included).
    MultiSeries base_series() const;

    /// sum components[n] * base^n (+ tail) truncated at certified_cap.
    MultiSeries reconstruct() const;
};

/// Monomial decomposition: each stored term f_gamma goes to component
/// n = min over {j : alpha_j > 0} of floor(gamma_j / alpha_j), with
/// residual exponent gamma - n*alpha. Axes with alpha_j = 0 impose no
/// constraint. Exact partition: certified_cap = f.cap().
Decomposition t_alpha(const MultiSeries& f, const Exponent& alpha, int n_max);

enum class ReductionOrder { LeastFirst, GreatestFirst };

/// Generalized Weierstrass division g = q*P + r with the support of r
/// avoiding nu_ell(P) + N^d. Exact on stored terms: the identity holds
/// modulo total degree > min(g.cap, P.cap). The reduction strategy does
/// not change the result; GreatestFirst exists to let tests check that.
struct DivisionResult {
    MultiSeries quotient;
    MultiSeries remainder;
    Exponent nu;
};
DivisionResult weierstrass_divide(const MultiSeries& g, const Germ& p, const LinearForm& ell,
                                  ReductionOrder order = ReductionOrder::LeastFirst);

/// Iterated division: components are remainder, remainder-of-quotient, ...
/// certified_cap = f.cap - |nu_ell(P)| * n_max.
Decomposition t_p_ell(const MultiSeries& f, const Germ& p, const LinearForm& ell, int n_max);

/// Regroup a decomposition in powers of base^m:
///   g_n = sum_{j<m} components[n*m+j] * base^j.
Decomposition power_regroup(const Decomposition& dec, int m);

}  // namespace germsum
