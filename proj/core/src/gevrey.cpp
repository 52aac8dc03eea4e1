#include "germsum/gevrey.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include <Eigen/Dense>

namespace germsum {

namespace {

struct FitData {
    std::vector<std::array<double, 3>> rows;
    std::vector<double> y;
};

/// Ordinary least squares for y ~ c0 + c1 * row[1] + c2 * row[2];
/// returns (c0, c1, c2, rms_residual).
std::array<double, 4> solve_ls(const FitData& data) {
    const int n = static_cast<int>(data.rows.size());
    Eigen::MatrixXd a(n, 3);
    Eigen::VectorXd b(n);
    for (int i = 0; i < n; ++i) {
        a(i, 0) = data.rows[static_cast<size_t>(i)][0];
        a(i, 1) = data.rows[static_cast<size_t>(i)][1];
        a(i, 2) = data.rows[static_cast<size_t>(i)][2];
        b(i) = data.y[static_cast<size_t>(i)];
    }
    Eigen::VectorXd w = a.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
    const double rms = std::sqrt((a * w - b).squaredNorm() / n);
    return {w(0), w(1), w(2), rms};
}

double log_factorial(double x) { return std::lgamma(x + 1.0); }

}  // namespace

GevreyFit fit_monomial_gevrey(const MultiSeries& f, const Exponent& alpha, Window window) {
    if (alpha.dim() != f.dim()) throw dimension_error("alpha dimension mismatch");
    for (int j = 0; j < alpha.dim(); ++j)
        if (alpha[j] <= 0)
            throw domain_error("monomial Gevrey fit needs all entries of alpha positive");

    // The coefficient bound is a sup bound, so only the per-shell envelope
    // binds the constants; fitting the whole term cloud would track its
    // bulk instead. Keep the largest coefficient of each shell (map order
    // breaks ties deterministically).
    std::map<int, std::pair<double, double>> envelope;  // shell -> (log|c|, m(beta))
    for (const auto& [beta, c] : f.terms()) {
        const int deg = beta.total_degree();
        if (!window.contains(deg)) continue;
        double m = std::numeric_limits<double>::infinity();
        for (int j = 0; j < alpha.dim(); ++j)
            m = std::min(m, log_factorial(beta[j]) / alpha[j]);
        const double y = log_abs(c);
        auto [it, fresh] = envelope.emplace(deg, std::make_pair(y, m));
        if (!fresh && y > it->second.first) it->second = {y, m};
    }
    FitData data;
    for (const auto& [deg, ym] : envelope) {
        data.rows.push_back({1.0, static_cast<double>(deg), ym.second});
        data.y.push_back(ym.first);
    }
    if (data.rows.size() < 3)
        throw domain_error("underdetermined Gevrey fit: only " +
                           std::to_string(data.rows.size()) + " nonempty shells in the window");

    const auto [c0, c1, c2, rms] = solve_ls(data);
    return {c2, c1, c0, rms, window, static_cast<int>(data.rows.size())};
}

GevreyFit fit_component_gevrey(const Decomposition& dec, double r, Window window) {
    if (r <= 0) throw domain_error("polydisk radius must be positive");
    FitData data;
    const int count = static_cast<int>(dec.components.size());
    for (int n = std::max(0, window.lo); n <= std::min(window.hi, count - 1); ++n) {
        const double m = dec.components[static_cast<size_t>(n)].majorant(r);
        if (m <= 0.0) continue;
        data.rows.push_back({1.0, static_cast<double>(n), log_factorial(n)});
        data.y.push_back(std::log(m));
    }
    if (data.rows.size() < 3)
        throw domain_error("underdetermined component fit: only " +
                           std::to_string(data.rows.size()) + " nonzero components in the window");

    const auto [c0, c1, c2, rms] = solve_ls(data);
    return {c2, c1, c0, rms, window, static_cast<int>(data.rows.size())};
}

GrowthVerdict radius_estimate(const MultiSeries& f, VerdictThresholds th) {
    GrowthVerdict v;
    if (f.is_zero()) {
        v.kind = GrowthKind::Convergent;
        v.radius_estimate = std::numeric_limits<double>::infinity();
        v.diagnostics = "zero series";
        return v;
    }

    // log of the largest |coefficient| per nonempty total-degree shell.
    std::vector<std::pair<int, double>> shells;
    {
        std::vector<double> mx(static_cast<size_t>(f.cap()) + 1,
                               -std::numeric_limits<double>::infinity());
        for (const auto& [beta, c] : f.terms()) {
            auto& slot = mx[static_cast<size_t>(beta.total_degree())];
            slot = std::max(slot, log_abs(c));
        }
        for (int n = 0; n <= f.cap(); ++n)
            if (std::isfinite(mx[static_cast<size_t>(n)]))
                shells.emplace_back(n, mx[static_cast<size_t>(n)]);
    }
    if (shells.size() < 10) {
        v.kind = GrowthKind::Inconclusive;
        v.diagnostics = "only " + std::to_string(shells.size()) +
                        " nonempty shells; need at least 10";
        return v;
    }

    // Top half of the nonempty shells: limsup proxy and envelope fit.
    const size_t start = shells.size() / 2;
    double limsup_log = -std::numeric_limits<double>::infinity();
    FitData data;
    for (size_t i = start; i < shells.size(); ++i) {
        const auto [n, logmx] = shells[i];
        if (n == 0) continue;
        limsup_log = std::max(limsup_log, logmx / n);
        data.rows.push_back({1.0, static_cast<double>(n), log_factorial(n)});
        data.y.push_back(logmx);
    }
    const auto [c0, c1, s, rms] = solve_ls(data);
    (void)c0;

    std::ostringstream diag;
    diag << "factorial slope " << s << ", geometric slope " << c1 << ", fit rms " << rms;
    v.diagnostics = diag.str();
    if (std::fabs(s) < th.s_tol && rms < th.residual_tol) {
        v.kind = GrowthKind::Convergent;
        v.radius_estimate = std::exp(-limsup_log);
    } else if (s >= th.s_tol && rms < 10 * th.residual_tol) {
        v.kind = GrowthKind::DivergentGevrey;
        v.s = s;
    } else {
        v.kind = GrowthKind::Inconclusive;
    }
    return v;
}

SplitReport split_infeasibility(const MultiSeries& f, Window window) {
    if (f.dim() != 2) throw dimension_error("split test is for two-variable series");
    if (window.length() < 5)
        throw domain_error("split test window too small: need at least 5 diagonal indices");

    SplitReport rep;
    std::vector<std::pair<int, double>> pts;  // (k, log r_k)
    for (int k = std::max(1, window.lo); k <= window.hi; ++k) {
        if (2 * k > f.cap()) break;
        const GaussRational c = f.coeff(Exponent{k, k});
        if (c.is_zero()) continue;
        pts.emplace_back(k, log_abs(c) - log_factorial(k));
    }
    rep.points = static_cast<int>(pts.size());
    if (pts.size() < 5) {
        rep.feasible = true;
        rep.diagnostics = "diagonal carries fewer than 5 nonzero coefficients in the window";
        return rep;
    }

    // Geometric envelope fit of log r_k and the k-th-root sequence.
    Eigen::MatrixXd a(static_cast<int>(pts.size()), 2);
    Eigen::VectorXd b(static_cast<int>(pts.size()));
    for (size_t i = 0; i < pts.size(); ++i) {
        a(static_cast<int>(i), 0) = 1.0;
        a(static_cast<int>(i), 1) = pts[i].first;
        b(static_cast<int>(i)) = pts[i].second;
    }
    Eigen::VectorXd w = a.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
    Eigen::VectorXd resid = b - a * w;
    rep.fit_residual = std::sqrt(resid.squaredNorm() / static_cast<double>(pts.size()));
    const double e_last = resid(static_cast<int>(pts.size()) - 1);

    std::vector<double> q;
    q.reserve(pts.size());
    for (const auto& [k, logr] : pts) q.push_back(logr / k);
    rep.q_first = q.front();
    rep.q_last = q.back();
    int increases = 0;
    for (size_t i = 1; i < q.size(); ++i)
        if (q[i] > q[i - 1]) ++increases;
    rep.increase_fraction = static_cast<double>(increases) / static_cast<double>(q.size() - 1);

    const bool unbounded_root = (rep.q_last - rep.q_first > 0.5) && rep.increase_fraction >= 0.7;
    const bool superlinear = e_last > 0.25;
    rep.feasible = !(unbounded_root && superlinear);

    std::ostringstream diag;
    diag << "q spans [" << rep.q_first << ", " << rep.q_last << "], increase fraction "
         << rep.increase_fraction << ", envelope residual at window end " << e_last;
    rep.diagnostics = diag.str();
    return rep;
}

double factorial_interchange_term(int n, int k) {
    if (n < 1 || k < 1) throw domain_error("factorial interchange needs n, k >= 1");
    const double logv = std::lgamma(static_cast<double>(n) * k + 1.0) / k -
                        n * std::log(static_cast<double>(k)) -
                        std::lgamma(static_cast<double>(n) + 1.0) +
                        (0.5 - 0.5 / k) * std::log(static_cast<double>(n));
    return std::exp(logv);
}

double factorial_interchange_limit(int k) {
    const double two_pi = 2.0 * M_PI;
    return std::pow(two_pi * k, 1.0 / (2.0 * k)) / std::sqrt(two_pi);
}

}  // namespace germsum
