#pragma once

#include <optional>
#include <string>

#include "germsum/decompose.hpp"
#include "germsum/mseries.hpp"

namespace germsum {

/// Index window [lo, hi], inclusive on both ends.
struct Window {
    int lo = 0;
    int hi = 0;
    bool contains(int n) const { return lo <= n && n <= hi; }
    int length() const { return hi - lo + 1; }
};

/// Fitted growth triple: coefficients of the least-squares model
///   log(data) ~ logC + logA * size + s * factorial_term.
/// The residual is the RMS misfit; all claims derived from a fit are
/// witnesses with a goodness measure, never proofs.
struct GevreyFit {
    double s = 0.0;
    double logA = 0.0;
    double logC = 0.0;
    double residual = 0.0;
    Window window;
    int points = 0;
};

enum class GrowthKind { Convergent, DivergentGevrey, Inconclusive };

struct GrowthVerdict {
    GrowthKind kind = GrowthKind::Inconclusive;
    double s = 0.0;  // meaningful for DivergentGevrey
    std::optional<double> radius_estimate;
    std::string diagnostics;
};

/// Desk-scale calibration constants for the verdicts. These are artifact
/// choices, not reference values; see Config for the user-facing knobs.
struct VerdictThresholds {
    double s_tol = 0.1;
    double residual_tol = 0.5;
};

/// Fit of log|f_beta| against 1, |beta| and min_j (log beta_j!)/alpha_j
/// over the stored terms with |beta| inside the window. The slope on the
/// factorial term is the estimated Gevrey order with respect to x^alpha.
/// Requires all entries of alpha positive.
GevreyFit fit_monomial_gevrey(const MultiSeries& f, const Exponent& alpha, Window window);

/// Fit of log M_n against 1, n and log n!, where M_n is the coefficient
/// majorant of component n on the polydisk of radius r.
GevreyFit fit_component_gevrey(const Decomposition& dec, double r, Window window);

/// Shell-maxima growth classification with a Cauchy-Hadamard style radius
/// proxy. Needs at least 10 nonempty total-degree shells to say anything.
GrowthVerdict radius_estimate(const MultiSeries& f, VerdictThresholds th = {});

/// Diagonal feasibility test for writing a 2-variable series as a sum of
/// two one-axis 1-Gevrey series: examines r_k = |F_kk| / k! across the
/// window. Unbounded growth of r_k^{1/k} certifies that no such splitting
/// exists.
struct SplitReport {
    bool feasible = true;
    int points = 0;
    double q_first = 0.0;  // log(r_k)/k at the window start
    double q_last = 0.0;   // and at the window end
    double fit_residual = 0.0;
    double increase_fraction = 0.0;
    std::string diagnostics;
};
SplitReport split_infeasibility(const MultiSeries& f, Window window);

/// n-th term of (nk)!^{1/k} / (k^n n!) * n^{1/2 - 1/(2k)}, which tends to
/// (2 pi k)^{1/(2k)} / sqrt(2 pi): the exchange rate between n!^k and (nk)!
/// used by the power-regroup estimates.
double factorial_interchange_term(int n, int k);
double factorial_interchange_limit(int k);

}  // namespace germsum
