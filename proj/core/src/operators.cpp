#include "germsum/operators.hpp"

#include <algorithm>
#include <limits>

namespace germsum {

namespace {

Rational binom(int m, int i) {
    mpz_class v;
    mpz_bin_uiui(v.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(i));
    return Rational(v);
}

MultiSeries derive_n(const MultiSeries& f, int axis, int n) {
    MultiSeries r = f;
    for (int i = 0; i < n; ++i) {
        if (r.is_zero()) return MultiSeries::zero(f.dim(), std::max(0, r.cap() - 1));
        r = r.derive(axis);
    }
    return r;
}

/// Exact polynomial division f / g with zero remainder, by lex-leading
/// term reduction. Throws when a reduction step fails: that signals a
/// transcription bug in the caller's identity, never a rounding issue.
MultiSeries exact_poly_divide(const MultiSeries& f, const MultiSeries& g) {
    if (g.is_zero()) throw domain_error("division by the zero polynomial");
    MultiSeries rem = f;
    MultiSeries q(f.dim(), f.cap());
    const auto glead = std::prev(g.terms().end());  // lex-greatest term
    while (!rem.is_zero()) {
        const auto rlead = std::prev(rem.terms().end());
        if (!leq(glead->first, rlead->first))
            throw domain_error("exact division failed at exponent " + rlead->first.to_string() +
                               ": not divisible by the leading term " + glead->first.to_string());
        const Exponent delta = rlead->first - glead->first;
        const GaussRational coef = rlead->second / glead->second;
        q.add_term(delta, coef);
        rem = rem - g.mul_monomial(delta, coef).truncated(rem.cap());
    }
    return q;
}

}  // namespace

SkewOperator SkewOperator::derivation(int dim, int axis) {
    SkewOperator op(dim, axis);
    op.set_term(1, MultiSeries::constant(dim, std::numeric_limits<int>::max() / 4, GaussRational(1)));
    return op;
}

SkewOperator SkewOperator::multiplication(const MultiSeries& f, int axis) {
    SkewOperator op(f.dim(), axis);
    op.set_term(0, f);
    return op;
}

SkewOperator& SkewOperator::set_term(int m, MultiSeries coeff) {
    if (m < 0) throw domain_error("negative derivative order");
    if (coeff.dim() != dim_) throw dimension_error("operator coefficient dimension mismatch");
    if (coeff.is_zero())
        terms_.erase(m);
    else
        terms_.insert_or_assign(m, std::move(coeff));
    return *this;
}

MultiSeries SkewOperator::coeff(int m, int cap) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? MultiSeries::zero(dim_, cap) : it->second;
}

MultiSeries SkewOperator::apply(const MultiSeries& y) const {
    if (y.dim() != dim_) throw dimension_error("operand dimension mismatch");
    MultiSeries out = MultiSeries::zero(dim_, std::max(0, y.cap() - order()));
    for (const auto& [m, coeff] : terms_)
        out = out + (coeff * derive_n(y, axis_, m)).truncated(out.cap());
    return out;
}

SkewOperator operator+(const SkewOperator& a, const SkewOperator& b) {
    if (a.dim_ != b.dim_ || a.axis_ != b.axis_)
        throw dimension_error("operator sum needs matching dimension and axis");
    SkewOperator out(a.dim_, a.axis_);
    out.terms_ = a.terms_;
    for (const auto& [m, coeff] : b.terms_) {
        auto it = out.terms_.find(m);
        if (it == out.terms_.end())
            out.terms_.emplace(m, coeff);
        else {
            MultiSeries s = it->second + coeff;
            if (s.is_zero())
                out.terms_.erase(it);
            else
                it->second = std::move(s);
        }
    }
    return out;
}

SkewOperator operator*(const SkewOperator& a, const SkewOperator& b) {
    if (a.dim_ != b.dim_ || a.axis_ != b.axis_)
        throw dimension_error("operator product needs matching dimension and axis");
    SkewOperator out(a.dim_, a.axis_);
    for (const auto& [m, am] : a.terms_) {
        for (const auto& [n, bn] : b.terms_) {
            // d^m (bn ...) = sum_i binom(m,i) (d^{m-i} bn) d^{i}
            for (int i = 0; i <= m; ++i) {
                MultiSeries piece = GaussRational(binom(m, i)) * (am * derive_n(bn, a.axis_, m - i));
                MultiSeries cur = out.coeff(i + n, piece.cap()) + piece;
                out.set_term(i + n, std::move(cur));
            }
        }
    }
    return out;
}

SkewOperator euler_operator(const Germ& p, int axis) {
    SkewOperator op(p.dim(), axis);
    op.set_term(1, p.series * p.series);
    op.set_term(0, p.series.derive(axis));
    return op;
}

bool euler_system_check(const Germ& p, int axis) {
    if (!p.exact_polynomial)
        throw domain_error("euler_system_check needs a polynomial-exact germ");
    const int deg = p.series.max_total_degree();
    if (p.cap() < 2 * deg + 2)
        throw domain_error("cap " + std::to_string(p.cap()) +
                           " too small for the check; need at least " + std::to_string(2 * deg + 2));
    const MultiSeries y = euler_compose(p);
    const MultiSeries lhs = euler_operator(p, axis).apply(y);
    const MultiSeries rhs = p.series.derive(axis) * p.series;
    return (lhs - rhs).is_zero();
}

CommonMultiple build_L(const Germ& p, const Germ& q, int axis) {
    if (p.dim() != q.dim()) throw dimension_error("germ dimension mismatch");
    if (!p.exact_polynomial || !q.exact_polynomial)
        throw domain_error("build_L needs polynomial-exact germs");
    const int j = axis;
    const int dp = p.series.max_total_degree();
    const int dq = q.series.max_total_degree();
    const int big = 8 * (dp + dq) + 8;  // holds every product formed below

    const MultiSeries P = p.series.with_cap(big);
    const MultiSeries Q = q.series.with_cap(big);
    const MultiSeries Pj = P.derive(j), Qj = Q.derive(j);
    const MultiSeries Pjj = Pj.derive(j), Qjj = Qj.derive(j);
    const MultiSeries one = MultiSeries::constant(P.dim(), big, GaussRational(1));
    const MultiSeries P2 = P * P, Q2 = Q * Q;
    const MultiSeries P4 = P2 * P2, Q4 = Q2 * Q2;

    const MultiSeries a = P2 * Q2 * (Q2 * Pj - P2 * Qj);
    if (a.is_zero())
        throw domain_error("degenerate pair: A_j vanishes identically, which happens exactly "
                           "when Q = (1 + cQ) P; the common multiple adds no new equation");

    const MultiSeries two_p_1 = GaussRational(2) * P + one;
    const MultiSeries two_q_1 = GaussRational(2) * Q + one;
    const MultiSeries b =
        Q4 * (two_p_1 * (Pj * Pj) - P2 * Pjj) - P4 * (two_q_1 * (Qj * Qj) - Q2 * Qjj);

    // Right division of L_j by L_{P,j} = P^2 d_j + d_j P gives
    //   M_{P,j} = (A_j/P^2) d_j + (B_j - (A_j/P^2)(2P+1) d_jP) / P^2
    // and the remainder condition R_{P,j} = 0 determines C_j. All the
    // divisions below are exact by construction and asserted.
    auto side = [&](const MultiSeries& s2, const MultiSeries& two_s_1, const MultiSeries& sj,
                    const MultiSeries& sjj) {
        const MultiSeries m1 = exact_poly_divide(a, s2);
        const MultiSeries m0 = exact_poly_divide(b - m1 * two_s_1 * sj, s2);
        const MultiSeries c = m1 * sjj + m0 * sj;
        struct Side {
            MultiSeries m1, m0, c;
        };
        return Side{m1, m0, c};
    };
    const auto ps = side(P2, two_p_1, Pj, Pjj);
    const auto qs = side(Q2, two_q_1, Qj, Qjj);
    if (!(ps.c == qs.c))
        throw error("C_j from the two remainder conditions disagree; the identity was "
                    "transcribed wrongly");

    SkewOperator l(P.dim(), j);
    l.set_term(2, a).set_term(1, b).set_term(0, ps.c);

    // rhs = M_{P,j}(P d_jP) + M_{Q,j}(Q d_jQ).
    auto apply_m = [&](const MultiSeries& m1, const MultiSeries& m0, const MultiSeries& target) {
        return m1 * target.derive(j) + m0 * target;
    };
    const MultiSeries rhs = apply_m(ps.m1, ps.m0, P * Pj) + apply_m(qs.m1, qs.m0, Q * Qj);

    const int certified = std::min(p.cap(), q.cap()) - 2;
    if (certified < 0) throw domain_error("cap too small to certify the system check");
    return {l, a, b, ps.c, rhs, certified};
}

bool verify_two_euler(const Germ& p, const Germ& q, int axis) {
    CommonMultiple cm = build_L(p, q, axis);
    const int cap = std::min(p.cap(), q.cap());
    const MultiSeries y =
        euler_compose(Germ(p.series.truncated(cap), p.exact_polynomial)) +
        euler_compose(Germ(q.series.truncated(cap), q.exact_polynomial));
    const MultiSeries lhs = cm.l.apply(y);
    const MultiSeries diff = (lhs - cm.rhs).truncated(cm.certified_cap);
    return diff.is_zero();
}

AnnihilatorReport annihilator_check(const Germ& p, const Germ& q, int axis) {
    CommonMultiple cm = build_L(p, q, axis);

    AnnihilatorReport rep;
    int degj = -1;
    for (const auto& [exp, c] : cm.rhs.terms()) degj = std::max(degj, exp[axis]);
    rep.order = degj + 1;

    const int cap = std::min(p.cap(), q.cap());
    rep.certified_cap = cm.certified_cap - rep.order;
    if (rep.certified_cap < 0)
        throw domain_error("cap too small for the annihilator check: need " +
                           std::to_string(rep.order) + " extra orders");
    const MultiSeries y =
        euler_compose(Germ(p.series.truncated(cap), p.exact_polynomial)) +
        euler_compose(Germ(q.series.truncated(cap), q.exact_polynomial));
    const MultiSeries homogeneous = derive_n(cm.l.apply(y), axis, rep.order);
    rep.homogeneous_ok = homogeneous.truncated(rep.certified_cap).is_zero();
    return rep;
}

}  // namespace germsum
