#include "germsum/borel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace germsum {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// Direction and log-magnitude of a Gaussian rational, stable for values
/// far outside double range.
std::complex<double> unit_direction(const GaussRational& z, double& log_mag) {
    if (z.is_zero()) {
        log_mag = -std::numeric_limits<double>::infinity();
        return {0.0, 0.0};
    }
    const double lr = log_abs(z.re), li = log_abs(z.im);
    const double top = std::max(lr, li);
    const double dr = z.re == 0 ? 0.0 : (z.re < 0 ? -1.0 : 1.0) * std::exp(lr - top);
    const double di = z.im == 0 ? 0.0 : (z.im < 0 ? -1.0 : 1.0) * std::exp(li - top);
    const double norm = std::hypot(dr, di);
    log_mag = top + std::log(norm);
    return {dr / norm, di / norm};
}

std::complex<double> to_complex_scaled(const GaussRational& z, double extra_log) {
    double log_mag = 0.0;
    const std::complex<double> dir = unit_direction(z, log_mag);
    if (dir == std::complex<double>(0.0, 0.0)) return dir;
    return dir * std::exp(log_mag + extra_log);
}

}  // namespace

OneVarSeries OneVarSeries::euler(int cap) {
    OneVarSeries s;
    s.coeffs.assign(static_cast<size_t>(cap) + 1, GaussRational(0));
    Rational nfact(1);
    for (int n = 0; n + 1 <= cap; ++n) {
        if (n > 0) nfact *= n;
        s.coeffs[static_cast<size_t>(n) + 1] = GaussRational(n % 2 == 0 ? nfact : -nfact);
    }
    return s;
}

OneVarSeries OneVarSeries::factorial_geometric(int cap) {
    OneVarSeries s;
    s.coeffs.reserve(static_cast<size_t>(cap) + 1);
    Rational nfact(1);
    for (int n = 0; n <= cap; ++n) {
        if (n > 0) nfact *= n;
        s.coeffs.push_back(GaussRational(nfact));
    }
    return s;
}

OneVarSeries OneVarSeries::geometric(int cap) {
    OneVarSeries s;
    s.coeffs.assign(static_cast<size_t>(cap) + 1, GaussRational(1));
    return s;
}

std::complex<double> OneVarSeries::eval(std::complex<double> t) const {
    std::complex<double> acc = 0.0;
    for (size_t n = coeffs.size(); n-- > 0;) acc = acc * t + coeffs[n].to_complex();
    return acc;
}

BorelSeries formal_borel(const OneVarSeries& f, const Rational& k) {
    if (k <= 0) throw domain_error("Borel level k must be positive");
    BorelSeries g;
    g.coeffs.reserve(f.coeffs.size());
    g.exact.reserve(f.coeffs.size());
    for (size_t n = 0; n < f.coeffs.size(); ++n) {
        const Rational ratio = Rational(static_cast<long>(n)) / k;  // n/k
        if (ratio.get_den() == 1) {
            const unsigned long m = ratio.get_num().get_ui();
            GaussRational exact{f.coeffs[n].re / factorial(m), f.coeffs[n].im / factorial(m)};
            g.exact.push_back(exact);
            g.coeffs.push_back(exact.to_complex());
        } else {
            g.exact.push_back(std::nullopt);
            const double lg = std::lgamma(1.0 + ratio.get_d());
            g.coeffs.push_back(to_complex_scaled(f.coeffs[n], -lg));
        }
    }
    return g;
}

ContinuationHandle ContinuationHandle::closed_form(const std::string& name) {
    ContinuationHandle h;
    h.kind = Kind::ClosedForm;
    h.name = name;
    if (name == "log1p") {
        h.eval = [](std::complex<double> xi) { return std::log(1.0 + xi); };
        h.poles = {std::complex<double>(-1.0, 0.0)};
    } else if (name == "geometric") {
        h.eval = [](std::complex<double> xi) { return 1.0 / (1.0 - xi); };
        h.poles = {std::complex<double>(1.0, 0.0)};
    } else if (name == "exp") {
        h.eval = [](std::complex<double> xi) { return std::exp(xi); };
    } else {
        throw domain_error("unknown closed form '" + name + "'");
    }
    return h;
}

ContinuationHandle ContinuationHandle::pade(const BorelSeries& g, int l, int m) {
    if (l < 0 || m < 1) throw domain_error("Pade orders must satisfy l >= 0, m >= 1");
    if (static_cast<int>(g.coeffs.size()) < l + m + 1)
        throw domain_error("Pade approximant needs " + std::to_string(l + m + 1) +
                           " coefficients");
    using Mat = Eigen::MatrixXcd;
    using Vec = Eigen::VectorXcd;
    auto c = [&](int idx) -> std::complex<double> {
        return idx < 0 ? std::complex<double>(0.0) : g.coeffs[static_cast<size_t>(idx)];
    };

    // Denominator 1 + b_1 xi + ... + b_m xi^m from the Toeplitz system
    // sum_j b_j c_{l+i-j} = -c_{l+i}, i = 1..m.
    Mat a(m, m);
    Vec rhs(m);
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) a(i - 1, j - 1) = c(l + i - j);
        rhs(i - 1) = -c(l + i);
    }
    Vec b = a.colPivHouseholderQr().solve(rhs);

    std::vector<std::complex<double>> den(static_cast<size_t>(m) + 1);
    den[0] = 1.0;
    for (int j = 1; j <= m; ++j) den[static_cast<size_t>(j)] = b(j - 1);

    std::vector<std::complex<double>> num(static_cast<size_t>(l) + 1);
    for (int i = 0; i <= l; ++i) {
        std::complex<double> s = c(i);
        for (int j = 1; j <= std::min(i, m); ++j) s += den[static_cast<size_t>(j)] * c(i - j);
        num[static_cast<size_t>(i)] = s;
    }

    ContinuationHandle h;
    h.kind = Kind::Pade;
    h.name = "pade[" + std::to_string(l) + "/" + std::to_string(m) + "]";
    h.eval = [num, den](std::complex<double> xi) {
        auto horner = [&](const std::vector<std::complex<double>>& p) {
            std::complex<double> acc = 0.0;
            for (size_t i = p.size(); i-- > 0;) acc = acc * xi + p[i];
            return acc;
        };
        return horner(num) / horner(den);
    };

    // Poles: eigenvalues of the companion matrix of the denominator.
    int deg = m;
    while (deg > 0 && std::abs(den[static_cast<size_t>(deg)]) < 1e-14) --deg;
    if (deg > 0) {
        Mat comp = Mat::Zero(deg, deg);
        for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
        for (int i = 0; i < deg; ++i)
            comp(i, deg - 1) = -den[static_cast<size_t>(i)] / den[static_cast<size_t>(deg)];
        Eigen::ComplexEigenSolver<Mat> es(comp);
        for (int i = 0; i < deg; ++i) h.poles.push_back(es.eigenvalues()(i));
    }
    return h;
}

namespace {

struct RayIntegral {
    std::complex<double> value{0.0, 0.0};
    double est_error = 0.0;
};

/// Integrates the Laplace integrand along arg xi = theta for one x, on
/// doubling panels [0,R], [R,2R], ... until a panel stops contributing.
RayIntegral integrate_ray(const ContinuationHandle& g, double kd, std::complex<double> wk,
                          double theta, double quad_tol) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    const std::complex<double> ray = std::polar(1.0, theta);

    auto integrand = [&](double rho) -> std::complex<double> {
        const double rk = std::pow(rho, kd);
        const std::complex<double> kernel = std::exp(-rk * wk);
        const std::complex<double> gval = g.eval(rho * ray);
        if (!std::isfinite(gval.real()) || !std::isfinite(gval.imag()))
            throw domain_error("continuation handle returned a non-finite value on the ray");
        return kd * wk * std::pow(rho, kd - 1.0) * kernel * gval;
    };

    // Panel scale from the kernel decay: exp(-c rho^k) with c = Re(wk).
    const double c = wk.real();
    const double r0 = std::max(1.0, std::pow(1.0 / c, 1.0 / kd));

    RayIntegral out;
    double lo = 0.0, hi = r0;
    for (int panel = 0; panel < 64; ++panel) {
        double err_re = 0.0, err_im = 0.0;
        const double re = GK::integrate([&](double t) { return integrand(t).real(); }, lo, hi,
                                        12, quad_tol * 0.1, &err_re);
        const double im = GK::integrate([&](double t) { return integrand(t).imag(); }, lo, hi,
                                        12, quad_tol * 0.1, &err_im);
        const std::complex<double> contrib(re, im);
        out.value += contrib;
        out.est_error += err_re + err_im;
        const double scale = std::abs(out.value);
        if (std::abs(contrib) < 1e-16 * std::max(scale, 1e-300) &&
            std::abs(integrand(hi)) < 1e-16 * std::max(scale, 1e-300)) {
            out.est_error += std::abs(contrib);
            return out;
        }
        lo = hi;
        hi *= 2.0;
    }
    throw domain_error("Laplace quadrature did not converge within the panel budget");
}

}  // namespace

SummationReport laplace_sum(const ContinuationHandle& g, const Rational& k, double theta,
                            const std::vector<std::complex<double>>& xs, double quad_tol) {
    if (k <= 0) throw domain_error("Laplace level k must be positive");
    const double kd = k.get_d();

    SummationReport rep;
    rep.k = k;
    rep.theta = theta;
    for (const std::complex<double>& x : xs) {
        if (x == std::complex<double>(0.0, 0.0))
            throw domain_error("Laplace sum is undefined at x = 0; use the series value");
        // Bisecting-direction condition: |arg x - theta| < pi/(2k).
        double delta = std::arg(x) - theta;
        while (delta > kPi) delta -= 2.0 * kPi;
        while (delta < -kPi) delta += 2.0 * kPi;
        if (std::fabs(delta) >= kPi / (2.0 * kd))
            throw domain_error("sample point leaves the sector of opening pi/k around theta");

        // (e^{i theta} / x)^k, principal branch; Re > 0 inside the sector.
        const std::complex<double> w = std::polar(1.0, theta) / x;
        const std::complex<double> wk = std::exp(kd * std::log(w));
        RayIntegral ri = integrate_ray(g, kd, wk, theta, quad_tol);
        rep.samples.push_back({x, ri.value, ri.est_error});
    }
    return rep;
}

TruncationResult optimal_truncation(const OneVarSeries& f, std::complex<double> t) {
    if (f.coeffs.empty()) throw domain_error("empty series");
    if (t == std::complex<double>(0.0, 0.0))
        return {f.coeffs.front().to_complex(), 0.0, 1};

    const int count = static_cast<int>(f.coeffs.size());
    std::vector<double> mag(static_cast<size_t>(count));
    const double logt = std::log(std::abs(t));
    for (int n = 0; n < count; ++n) {
        const double la = log_abs(f.coeffs[static_cast<size_t>(n)]);
        mag[static_cast<size_t>(n)] = std::isfinite(la) ? std::exp(la + n * logt) : 0.0;
    }

    int prev = -1;  // previous nonzero term
    int stop = count;
    for (int n = 0; n < count; ++n) {
        if (mag[static_cast<size_t>(n)] == 0.0) continue;
        if (prev >= 0 && mag[static_cast<size_t>(n)] > mag[static_cast<size_t>(prev)]) {
            if (prev == 0 || std::all_of(mag.begin(), mag.begin() + prev,
                                         [](double m) { return m == 0.0; }))
                throw domain_error("terms increase immediately: |t| too large for truncation");
            stop = n;
            break;
        }
        prev = n;
    }

    const double argt = std::arg(t);
    std::complex<double> sum = 0.0;
    for (int n = 0; n < stop; ++n) {
        double lm = 0.0;
        const std::complex<double> dir = unit_direction(f.coeffs[static_cast<size_t>(n)], lm);
        if (dir == std::complex<double>(0.0, 0.0)) continue;
        sum += dir * std::exp(lm + n * logt) * std::polar(1.0, n * argt);
    }

    if (stop < count) return {sum, mag[static_cast<size_t>(stop)], stop};

    // Terms never turned: geometric tail bound from the last two nonzero terms.
    double tail = 0.0;
    int last = -1, before = -1;
    for (int n = count - 1; n >= 0; --n)
        if (mag[static_cast<size_t>(n)] > 0.0) {
            if (last < 0) last = n;
            else { before = n; break; }
        }
    if (last >= 0) {
        tail = mag[static_cast<size_t>(last)];
        if (before >= 0) {
            const double ratio = mag[static_cast<size_t>(last)] / mag[static_cast<size_t>(before)];
            if (ratio < 1.0) tail *= ratio / (1.0 - ratio);
        }
    }
    return {sum, tail, count};
}

RemainderReport remainder_check(const std::vector<std::complex<double>>& f_values,
                                const Decomposition& dec,
                                const std::vector<std::vector<std::complex<double>>>& sample_points,
                                double s, Window window, double residual_tol) {
    if (sample_points.empty() || f_values.size() != sample_points.size())
        throw domain_error("remainder check needs matching nonempty samples and values");
    if (window.lo < 0 || window.length() < 3)
        throw domain_error("remainder window must hold at least 3 orders");
    if (window.hi > static_cast<int>(dec.components.size()))
        throw domain_error("window exceeds the decomposition's component count");

    const MultiSeries base = dec.base_series();
    const size_t npts = sample_points.size();

    std::vector<std::complex<double>> pvals(npts), partial(npts, {0.0, 0.0});
    for (size_t i = 0; i < npts; ++i) pvals[i] = base.eval(sample_points[i]);

    RemainderReport rep;
    std::vector<std::array<double, 2>> rows;
    std::vector<double> ys;
    int order = 0;
    for (int n = window.lo; n <= window.hi; ++n) {
        // Advance partial sums to S_n.
        for (; order < n; ++order)
            for (size_t i = 0; i < npts; ++i)
                partial[i] += dec.components[static_cast<size_t>(order)].eval(sample_points[i]) *
                              std::pow(pvals[i], order);
        double sup = -std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < npts; ++i) {
            const double rem = std::abs(f_values[i] - partial[i]);
            // Remainders at the rounding floor of f are not measurements;
            // keeping them would divide noise by |P(x)|^n.
            const double floor = 1e-13 * std::max({std::abs(f_values[i]), std::abs(partial[i]), 1e-30});
            if (rem <= floor) continue;
            const double denom = s * std::lgamma(n + 1.0) + n * std::log(std::abs(pvals[i]));
            sup = std::max(sup, std::log(rem) - denom);
        }
        if (!std::isfinite(sup)) continue;
        rep.sup_log.push_back(sup);
        rows.push_back({1.0, static_cast<double>(n)});
        ys.push_back(sup);
    }
    if (rows.size() < 3)
        throw domain_error("remainder check: fewer than 3 orders carry measurable remainders");

    Eigen::MatrixXd a(static_cast<int>(rows.size()), 2);
    Eigen::VectorXd b(static_cast<int>(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        a(static_cast<int>(i), 0) = rows[i][0];
        a(static_cast<int>(i), 1) = rows[i][1];
        b(static_cast<int>(i)) = ys[i];
    }
    Eigen::VectorXd w = a.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
    rep.logC = w(0);
    rep.logB = w(1);
    rep.residual = std::sqrt((a * w - b).squaredNorm() / static_cast<double>(rows.size()));
    rep.certified = rep.residual < residual_tol;
    return rep;
}

double vandermonde_bound(double a, double b, double rho, int m) {
    if (!(a < b)) throw domain_error("arc needs a < b");
    if (rho <= 0) throw domain_error("arc radius must be positive");
    if (m < 1) throw domain_error("need at least one point");

    Eigen::MatrixXcd g(m, m);
    for (int i = 0; i < m; ++i) {
        const double phi = a + (b - a) * (2.0 * i + 1.0) / (2.0 * m);
        const std::complex<double> t = std::polar(rho, phi);
        std::complex<double> p = 1.0;
        for (int j = 0; j < m; ++j) {
            g(i, j) = p;
            p *= t;
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(g);
    if (!lu.isInvertible()) throw domain_error("Vandermonde matrix is singular");
    Eigen::MatrixXcd inv = lu.inverse();
    double norm1 = 0.0;
    for (int j = 0; j < m; ++j) {
        double col = 0.0;
        for (int i = 0; i < m; ++i) col += std::abs(inv(i, j));
        norm1 = std::max(norm1, col);
    }
    return m * norm1;
}

OdeResidualReport euler_ode_residual(const std::vector<double>& ts, double h, double quad_tol) {
    const ContinuationHandle g = ContinuationHandle::closed_form("log1p");
    auto y = [&](double t) {
        return laplace_sum(g, Rational(1), 0.0, {std::complex<double>(t, 0.0)}, quad_tol)
            .samples.front()
            .value.real();
    };
    OdeResidualReport rep;
    for (double t : ts) {
        const double yp = (y(t + h) - y(t - h)) / (2.0 * h);
        const double res = std::fabs(t * t * yp + y(t) - t);
        rep.samples.emplace_back(t, res);
        rep.max_residual = std::max(rep.max_residual, res);
    }
    return rep;
}

}  // namespace germsum
