#include "germsum/mseries.hpp"

#include <algorithm>
#include <sstream>

namespace germsum {

std::string Exponent::to_string() const {
    std::string s = "[";
    for (size_t j = 0; j < e.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(e[j]);
    }
    return s + "]";
}

MultiSeries::MultiSeries(int dim, int cap) : dim_(dim), cap_(cap) {
    if (dim < 1) throw dimension_error("series dimension must be >= 1");
    if (cap < 0) throw domain_error("series cap must be >= 0");
}

MultiSeries MultiSeries::constant(int dim, int cap, const GaussRational& c) {
    MultiSeries s(dim, cap);
    s.insert_term(Exponent(dim), c);
    return s;
}

MultiSeries MultiSeries::monomial(int dim, int cap, const Exponent& exp, const GaussRational& c) {
    MultiSeries s(dim, cap);
    s.insert_term(exp, c);
    return s;
}

GaussRational MultiSeries::coeff(const Exponent& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? GaussRational() : it->second;
}

int MultiSeries::max_total_degree() const {
    int m = 0;
    for (const auto& [exp, c] : terms_) m = std::max(m, exp.total_degree());
    return m;
}

std::optional<int> MultiSeries::valuation() const {
    if (terms_.empty()) return std::nullopt;
    int m = cap_ + 1;
    for (const auto& [exp, c] : terms_) m = std::min(m, exp.total_degree());
    return m;
}

MultiSeries MultiSeries::truncated(int new_cap) const {
    MultiSeries r(dim_, new_cap);
    for (const auto& [exp, c] : terms_)
        if (exp.total_degree() <= new_cap) r.terms_.emplace(exp, c);
    return r;
}

MultiSeries MultiSeries::with_cap(int new_cap) const {
    if (new_cap < cap_) return truncated(new_cap);
    MultiSeries r(dim_, new_cap);
    r.terms_ = terms_;
    return r;
}

void MultiSeries::check_same_shape(const MultiSeries& other) const {
    if (dim_ != other.dim_)
        throw dimension_error("series dimension mismatch: " + std::to_string(dim_) +
                              " vs " + std::to_string(other.dim_));
}

void MultiSeries::insert_term(const Exponent& exp, const GaussRational& c) {
    if (exp.dim() != dim_) throw dimension_error("exponent dimension mismatch");
    for (int v : exp.e)
        if (v < 0) throw domain_error("negative exponent");
    if (c.is_zero()) return;
    if (exp.total_degree() > cap_) return;
    if (!terms_.emplace(exp, c).second)
        throw error("duplicate exponent " + exp.to_string());
}

void MultiSeries::add_term(const Exponent& exp, const GaussRational& c) {
    if (c.is_zero() || exp.total_degree() > cap_) return;
    auto [it, fresh] = terms_.emplace(exp, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiSeries MultiSeries::operator-() const {
    MultiSeries r(dim_, cap_);
    for (const auto& [exp, c] : terms_) r.terms_.emplace(exp, -c);
    return r;
}

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
    a.check_same_shape(b);
    MultiSeries r(a.dim_, std::min(a.cap_, b.cap_));
    for (const auto& [exp, c] : a.terms_)
        if (exp.total_degree() <= r.cap_) r.terms_.emplace(exp, c);
    for (const auto& [exp, c] : b.terms_) r.add_term(exp, c);
    return r;
}

MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) {
    return a + (-b);
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    a.check_same_shape(b);
    MultiSeries r(a.dim_, std::min(a.cap_, b.cap_));
    for (const auto& [ea, ca] : a.terms_) {
        const int da = ea.total_degree();
        if (da > r.cap_) continue;
        for (const auto& [eb, cb] : b.terms_) {
            if (da + eb.total_degree() > r.cap_) continue;
            r.add_term(ea + eb, ca * cb);
        }
    }
    return r;
}

MultiSeries operator*(const GaussRational& c, const MultiSeries& a) {
    MultiSeries r(a.dim_, a.cap_);
    if (c.is_zero()) return r;
    for (const auto& [exp, v] : a.terms_) r.terms_.emplace(exp, c * v);
    return r;
}

MultiSeries MultiSeries::derive(int j) const {
    if (j < 0 || j >= dim_) throw domain_error("derivation axis out of range");
    if (cap_ == 0) throw domain_error("cap exhausted: cannot certify a derivative");
    MultiSeries r(dim_, cap_ - 1);
    for (const auto& [exp, c] : terms_) {
        if (exp[j] == 0) continue;
        Exponent e = exp;
        e[j] -= 1;
        r.add_term(e, GaussRational(Rational(exp[j])) * c);
    }
    return r;
}

MultiSeries MultiSeries::substitute(const std::vector<MultiSeries>& rules,
                                    bool certify_units) const {
    if (static_cast<int>(rules.size()) != dim_)
        throw dimension_error("substitution needs one rule per axis");
    const int tdim = rules.front().dim();
    int rcap = cap_;
    for (const auto& rule : rules) {
        if (rule.dim() != tdim) throw dimension_error("substitution rules disagree on dimension");
        if (!certify_units && !rule.constant_term().is_zero())
            throw domain_error("substitution rule has a nonzero constant term "
                               "and no truncation certification");
        rcap = std::min(rcap, rule.cap());
    }

    // Per-axis power cache: powers[j][k] = rules[j]^k truncated at rcap.
    std::vector<std::vector<MultiSeries>> powers(static_cast<size_t>(dim_));
    for (int j = 0; j < dim_; ++j)
        powers[static_cast<size_t>(j)].push_back(MultiSeries::constant(tdim, rcap, GaussRational(1)));

    auto power = [&](int j, int k) -> const MultiSeries& {
        auto& col = powers[static_cast<size_t>(j)];
        while (static_cast<int>(col.size()) <= k)
            col.push_back(col.back() * rules[static_cast<size_t>(j)].truncated(rcap));
        return col[static_cast<size_t>(k)];
    };

    MultiSeries r(tdim, rcap);
    for (const auto& [exp, c] : terms_) {
        MultiSeries t = MultiSeries::constant(tdim, rcap, c);
        for (int j = 0; j < dim_; ++j)
            if (exp[j] > 0) t = t * power(j, exp[j]);
        r = r + t;
    }
    return r;
}

MultiSeries MultiSeries::invert_unit() const {
    const GaussRational u0 = constant_term();
    if (u0.is_zero()) throw domain_error("invert_unit: series is not a unit");
    const GaussRational u0inv = GaussRational(1) / u0;
    // u = u0 (1 + w) with val(w) >= 1; 1/u = u0^{-1} sum (-w)^k.
    MultiSeries w = u0inv * *this;
    w.terms_.erase(Exponent(dim_));
    MultiSeries acc = MultiSeries::constant(dim_, cap_, GaussRational(1));
    MultiSeries wk = MultiSeries::constant(dim_, cap_, GaussRational(1));
    for (int k = 1; k <= cap_; ++k) {
        wk = wk * w;
        if (wk.is_zero()) break;
        acc = (k % 2 == 1) ? acc - wk : acc + wk;
    }
    return u0inv * acc;
}

MultiSeries MultiSeries::divide_by_monomial(const Exponent& gamma) const {
    if (gamma.dim() != dim_) throw dimension_error("monomial dimension mismatch");
    for (int v : gamma.e)
        if (v < 0) throw domain_error("negative exponent in divisor monomial");
    MultiSeries r(dim_, cap_);
    for (const auto& [exp, c] : terms_) {
        if (!leq(gamma, exp))
            throw domain_error("divide_by_monomial: exponent " + exp.to_string() +
                               " is not divisible by " + gamma.to_string());
        r.terms_.emplace(exp - gamma, c);
    }
    return r;
}

MultiSeries MultiSeries::mul_monomial(const Exponent& gamma, const GaussRational& c) const {
    if (gamma.dim() != dim_) throw dimension_error("monomial dimension mismatch");
    for (int v : gamma.e)
        if (v < 0) throw domain_error("negative exponent in factor monomial");
    MultiSeries r(dim_, cap_ + gamma.total_degree());
    if (c.is_zero()) return r;
    for (const auto& [exp, v] : terms_) r.terms_.emplace(exp + gamma, c * v);
    return r;
}

MultiSeries MultiSeries::pow(int n) const {
    if (n < 0) throw domain_error("negative power");
    MultiSeries r = MultiSeries::constant(dim_, cap_, GaussRational(1));
    for (int i = 0; i < n; ++i) {
        r = r * *this;
        if (r.is_zero()) break;
    }
    return r;
}

std::complex<double> MultiSeries::eval(const std::vector<std::complex<double>>& x) const {
    if (static_cast<int>(x.size()) != dim_) throw dimension_error("evaluation point dimension mismatch");
    std::complex<double> sum = 0.0;
    for (const auto& [exp, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < exp[j]; ++k) t *= x[static_cast<size_t>(j)];
        sum += t;
    }
    return sum;
}

double MultiSeries::majorant(double r) const {
    double sum = 0.0;
    for (const auto& [exp, c] : terms_)
        sum += abs_double(c) * std::pow(r, exp.total_degree());
    return sum;
}

std::string MultiSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exp, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << format_gauss(c) << ")*x^" << exp.to_string();
    }
    return os.str();
}

Germ::Germ(MultiSeries s, bool exact) : series(std::move(s)), exact_polynomial(exact) {
    if (!series.constant_term().is_zero())
        throw domain_error("germ must vanish at the origin");
    if (series.is_zero())
        throw domain_error("germ is zero up to its cap");
}

MultiSeries euler_compose(const Germ& p) {
    const int cap = p.series.cap();
    const int val = p.series.valuation().value();
    MultiSeries sum = MultiSeries::zero(p.series.dim(), cap);
    MultiSeries pk = p.series;  // P^{n+1}
    Rational nfact(1);
    for (int n = 0; (n + 1) * val <= cap; ++n) {
        if (n > 0) {
            pk = pk * p.series;
            nfact *= n;
        }
        if (pk.is_zero()) break;
        const GaussRational c(n % 2 == 0 ? nfact : -nfact);
        sum = sum + c * pk;
    }
    return sum;
}

MultiSeries euler_series(int dim, int cap, int axis) {
    Exponent e(dim);
    e[axis] = 1;
    return euler_compose(Germ(MultiSeries::monomial(dim, cap, e), true));
}

}  // namespace germsum
