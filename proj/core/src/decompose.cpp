#include "germsum/decompose.hpp"

#include <algorithm>
#include <map>

namespace germsum {

LinearForm::LinearForm(std::vector<Rational> weights, int dim, int cap)
    : weights_(std::move(weights)), cap_(cap) {
    if (static_cast<int>(weights_.size()) != dim)
        throw dimension_error("linear form needs one weight per axis");
    for (const Rational& w : weights_)
        if (w <= 0) throw domain_error("linear form weights must be positive");

    // Injectivity on the box {|beta| <= cap}, by enumeration.
    std::map<Rational, Exponent> seen;
    Exponent beta(dim);
    // Odometer over the box.
    for (;;) {
        auto [it, fresh] = seen.emplace(value(beta), beta);
        if (!fresh)
            throw domain_error("linear form is not injective on the degree-" +
                               std::to_string(cap) + " box: ell" + it->second.to_string() +
                               " == ell" + beta.to_string() +
                               "; perturb the weights by small distinct rationals");
        int j = 0;
        while (j < dim) {
            beta[j] += 1;
            if (beta.total_degree() <= cap) break;
            beta[j] = 0;
            ++j;
        }
        if (j == dim) break;
    }
}

LinearForm LinearForm::positional(int dim, int cap) {
    std::vector<Rational> w;
    w.reserve(static_cast<size_t>(dim));
    Rational b(cap + 1), cur(1);
    for (int j = 0; j < dim; ++j) {
        w.push_back(cur);
        cur *= b;
    }
    // Base-(cap+1) positional weights are injective by construction, but we
    // still run the constructor check to keep one code path.
    return LinearForm(std::move(w), dim, cap);
}

Rational LinearForm::value(const Exponent& beta) const {
    Rational v(0);
    for (int j = 0; j < dim(); ++j) v += weights_[static_cast<size_t>(j)] * beta[j];
    return v;
}

Exponent nu_ell(const MultiSeries& p, const LinearForm& ell) {
    if (p.is_zero()) throw domain_error("nu_ell of the zero series");
    const Exponent* best = nullptr;
    Rational best_v;
    for (const auto& [exp, c] : p.terms()) {
        Rational v = ell.value(exp);
        if (!best || v < best_v) {
            best = &exp;
            best_v = v;
        }
    }
    return *best;
}

MultiSeries Decomposition::base_series() const {
    if (monomial_base()) {
        return MultiSeries::monomial(alpha().dim(), std::max(certified_cap, alpha().total_degree()),
                                     alpha());
    }
    return germ().series;
}

MultiSeries Decomposition::reconstruct() const {
    if (monomial_base()) {
        const Exponent& a = alpha();
        MultiSeries sum = tail.truncated(certified_cap);
        for (size_t n = 0; n < components.size(); ++n) {
            MultiSeries shifted =
                components[n].mul_monomial(static_cast<int>(n) * a).truncated(certified_cap);
            sum = sum + shifted;
        }
        return sum;
    }
    const MultiSeries& p = germ().series;
    MultiSeries sum = MultiSeries::zero(p.dim(), certified_cap);
    MultiSeries pk = MultiSeries::constant(p.dim(), p.cap(), GaussRational(1));
    for (const auto& comp : components) {
        sum = sum + (comp * pk).truncated(certified_cap);
        pk = pk * p;
    }
    sum = sum + (tail * pk).truncated(certified_cap);
    return sum;
}

Decomposition t_alpha(const MultiSeries& f, const Exponent& alpha, int n_max) {
    if (alpha.dim() != f.dim()) throw dimension_error("alpha dimension mismatch");
    if (alpha.is_zero()) throw domain_error("t_alpha needs a nonzero alpha");
    for (int v : alpha.e)
        if (v < 0) throw domain_error("t_alpha needs a nonnegative alpha");
    if (n_max < 0) throw domain_error("n_max must be >= 0");

    Decomposition dec{alpha, std::nullopt, {}, MultiSeries::zero(f.dim(), f.cap()), f.cap()};
    auto component_cap = [&](int n) {
        return std::max(0, f.cap() - n * alpha.total_degree());
    };
    for (const auto& [gamma, c] : f.terms()) {
        int n = -1;
        for (int j = 0; j < f.dim(); ++j) {
            if (alpha[j] == 0) continue;
            const int q = gamma[j] / alpha[j];
            if (n < 0 || q < n) n = q;
        }
        if (n >= n_max) {
            dec.tail.add_term(gamma, c);
            continue;
        }
        while (static_cast<int>(dec.components.size()) <= n)
            dec.components.push_back(MultiSeries::zero(
                f.dim(), component_cap(static_cast<int>(dec.components.size()))));
        dec.components[static_cast<size_t>(n)].add_term(gamma - n * alpha, c);
    }
    while (static_cast<int>(dec.components.size()) < n_max)
        dec.components.push_back(MultiSeries::zero(
            f.dim(), component_cap(static_cast<int>(dec.components.size()))));
    return dec;
}

namespace {

/// Strict order on exponents by exact ell-value. Injective on the working
/// box, so ties cannot occur there.
struct EllLess {
    const LinearForm* ell;
    bool reversed;
    bool operator()(const Exponent& a, const Exponent& b) const {
        const Rational va = ell->value(a), vb = ell->value(b);
        if (va != vb) return reversed ? vb < va : va < vb;
        return reversed ? b < a : a < b;  // beyond-box safety net
    }
};

}  // namespace

DivisionResult weierstrass_divide(const MultiSeries& g, const Germ& p, const LinearForm& ell,
                                  ReductionOrder order) {
    if (g.dim() != p.dim()) throw dimension_error("division dimension mismatch");
    if (ell.dim() != g.dim()) throw dimension_error("linear form dimension mismatch");
    const int cap = std::min(g.cap(), p.cap());

    const Exponent nu = nu_ell(p, ell);
    const GaussRational lead = p.series.coeff(nu);

    // Remainder kept in an ell-ordered map. Every reduction step removes
    // the chosen reducible term and only inserts terms of strictly larger
    // ell-value inside a finite box, so either strategy terminates and
    // both compute the same (q, r).
    EllLess cmp{&ell, order == ReductionOrder::GreatestFirst};
    std::map<Exponent, GaussRational, EllLess> rem(cmp);
    for (const auto& [exp, c] : g.terms())
        if (exp.total_degree() <= cap) rem.emplace(exp, c);

    MultiSeries q(g.dim(), std::max(0, cap - nu.total_degree()));
    for (;;) {
        auto it = rem.begin();
        while (it != rem.end() && !leq(nu, it->first)) ++it;
        if (it == rem.end()) break;

        const Exponent delta = it->first - nu;
        const GaussRational coef = it->second / lead;
        rem.erase(it);
        q.add_term(delta, coef);
        for (const auto& [pe, pc] : p.series.terms()) {
            if (pe == nu) continue;
            const Exponent target = delta + pe;
            if (target.total_degree() > cap) continue;
            auto [slot, fresh] = rem.emplace(target, -(coef * pc));
            if (!fresh) {
                slot->second -= coef * pc;
                if (slot->second.is_zero()) rem.erase(slot);
            }
        }
    }

    MultiSeries r(g.dim(), cap);
    for (const auto& [exp, c] : rem) r.insert_term(exp, c);
    return {std::move(q), std::move(r), nu};
}

Decomposition t_p_ell(const MultiSeries& f, const Germ& p, const LinearForm& ell, int n_max) {
    if (n_max < 0) throw domain_error("n_max must be >= 0");
    const Exponent nu = nu_ell(p, ell);
    const int cap = std::min(f.cap(), p.cap());
    const int certified = cap - nu.total_degree() * n_max;
    if (certified < 0)
        throw domain_error("n_max " + std::to_string(n_max) + " exceeds what cap " +
                           std::to_string(cap) + " certifies (|nu| = " +
                           std::to_string(nu.total_degree()) + ")");

    Decomposition dec{p, ell, {}, MultiSeries::zero(f.dim(), f.cap()), certified};
    MultiSeries cur = f.truncated(cap);
    for (int n = 0; n < n_max; ++n) {
        DivisionResult d = weierstrass_divide(cur, p, ell);
        dec.components.push_back(std::move(d.remainder));
        cur = std::move(d.quotient);
    }
    dec.tail = cur;
    return dec;
}

Decomposition power_regroup(const Decomposition& dec, int m) {
    if (m < 1) throw domain_error("regroup modulus must be >= 1");
    const int count = static_cast<int>(dec.components.size());
    if (count < m)
        throw domain_error("decomposition has fewer than " + std::to_string(m) + " components");
    const int groups = count / m;

    Decomposition out{dec.base, dec.ell, {}, dec.tail, dec.certified_cap};

    // Leftover components and the old tail fold into the new tail so the
    // reconstruction identity is preserved.
    if (dec.monomial_base()) {
        const Exponent& a = dec.alpha();
        out.base = m * a;
        for (int n = 0; n < groups; ++n) {
            MultiSeries gn = dec.components[static_cast<size_t>(n * m)];
            for (int j = 1; j < m; ++j)
                gn = gn + dec.components[static_cast<size_t>(n * m + j)].mul_monomial(j * a);
            out.components.push_back(std::move(gn));
        }
        MultiSeries tail = dec.tail;
        for (int j = groups * m; j < count; ++j)
            tail = tail + dec.components[static_cast<size_t>(j)]
                              .mul_monomial(j * a)
                              .truncated(tail.cap());
        out.tail = std::move(tail);
        return out;
    }

    const MultiSeries& base = dec.germ().series;
    out.base = Germ(base.pow(m), dec.germ().exact_polynomial);
    for (int n = 0; n < groups; ++n) {
        MultiSeries gn = dec.components[static_cast<size_t>(n * m)];
        MultiSeries pj = MultiSeries::constant(base.dim(), base.cap(), GaussRational(1));
        for (int j = 1; j < m; ++j) {
            pj = pj * base;
            gn = gn + dec.components[static_cast<size_t>(n * m + j)] * pj;
        }
        out.components.push_back(std::move(gn));
    }
    MultiSeries tail = MultiSeries::zero(base.dim(), dec.tail.cap());
    MultiSeries pj = MultiSeries::constant(base.dim(), base.cap(), GaussRational(1));
    for (int j = groups * m; j < count; ++j) {
        tail = tail + dec.components[static_cast<size_t>(j)] * pj;
        pj = pj * base;
    }
    tail = tail + dec.tail * pj;
    out.tail = std::move(tail);
    return out;
}

}  // namespace germsum
