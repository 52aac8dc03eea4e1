#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "germsum/decompose.hpp"
#include "germsum/gevrey.hpp"
#include "germsum/mseries.hpp"

namespace germsum {

/// One-variable truncated series with exact coefficients a_0..a_N.
struct OneVarSeries {
    std::vector<GaussRational> coeffs;

    /// sum_{n>=0} (-1)^n n! t^{n+1}, truncated at degree cap.
    static OneVarSeries euler(int cap);
    /// sum_{n>=0} n! t^n.
    static OneVarSeries factorial_geometric(int cap);
    /// sum_{n>=0} t^n.
    static OneVarSeries geometric(int cap);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::complex<double> eval(std::complex<double> t) const;
};

/// Coefficientwise k-Borel transform a_n / Gamma(1 + n/k). Float-valued,
/// with the exact rational kept alongside whenever n/k is an integer.
struct BorelSeries {
    std::vector<std::complex<double>> coeffs;
    std::vector<std::optional<GaussRational>> exact;
};
BorelSeries formal_borel(const OneVarSeries& f, const Rational& k);

/// Evaluable analytic continuation of a Borel transform along rays.
/// Closed forms are exact; Pade handles are diagnostic-quality and carry
/// the approximant's pole locations (pole directions are a diagnostic,
/// never a verdict).
struct ContinuationHandle {
    enum class Kind { ClosedForm, Pade };
    Kind kind;
    std::string name;
    std::function<std::complex<double>(std::complex<double>)> eval;
    std::vector<std::complex<double>> poles;

    /// Registry: "log1p" (Borel image of the Euler series at k=1),
    /// "geometric" (1/(1-xi)), "exp" (e^xi).
    static ContinuationHandle closed_form(const std::string& name);
    /// Diagonal-style [l/m] approximant built on Borel coefficients.
    static ContinuationHandle pade(const BorelSeries& g, int l, int m);
};

struct SummationSample {
    std::complex<double> x;
    std::complex<double> value;
    double est_error;
};

struct SummationReport {
    Rational k;
    double theta;
    std::vector<SummationSample> samples;
};

/// Directional Laplace sum f(x) = int_{arg xi = theta} e^{-(xi/x)^k}
/// g(xi) d(xi/x)^k, by adaptive Gauss-Kronrod panels along the ray with a
/// tail cutoff once a panel stops contributing. Every x must lie in the
/// sector of opening < pi/k bisected by theta.
SummationReport laplace_sum(const ContinuationHandle& g, const Rational& k, double theta,
                            const std::vector<std::complex<double>>& xs,
                            double quad_tol = 1e-10);

/// Partial sum up to the smallest term; est_error is the first omitted
/// term (or a geometric tail bound when the terms never turn).
struct TruncationResult {
    std::complex<double> value;
    double est_error;
    int terms_used;
};
TruncationResult optimal_truncation(const OneVarSeries& f, std::complex<double> t);

/// Numeric certificate for the Gevrey remainder inequality: fits
///   log sup_x |f(x) - S_N(x)| / (N!^s |P(x)|^N)  ~  logC + N logB
/// over the window. A small residual certifies the inequality shape on
/// the sampled set; a blow-up reports NOT_CERTIFIED.
struct RemainderReport {
    double logC = 0.0;
    double logB = 0.0;
    double residual = 0.0;
    bool certified = false;
    std::vector<double> sup_log;  // log sup_x R_N(x) per N in the window
};
RemainderReport remainder_check(const std::vector<std::complex<double>>& f_values,
                                const Decomposition& dec,
                                const std::vector<std::vector<std::complex<double>>>& sample_points,
                                double s, Window window, double residual_tol = 0.5);

/// M * ||G^{-1}||_1 for the Vandermonde matrix G = (t_i^j) built on M
/// points of the arc |t| = rho, arg in (a, b): a bound constant turning a
/// sup bound on a degree-(M-1) polynomial into coefficient bounds.
double vandermonde_bound(double a, double b, double rho, int m);

/// max_t |t^2 y' + y - t| for the Euler Laplace sum on the given real
/// points (derivative by central differences with step h).
struct OdeResidualReport {
    double max_residual = 0.0;
    std::vector<std::pair<double, double>> samples;  // (t, residual)
};
OdeResidualReport euler_ode_residual(const std::vector<double>& ts, double h = 1e-4,
                                     double quad_tol = 1e-10);

}  // namespace germsum
