#pragma once

#include <map>
#include <optional>

#include "germsum/mseries.hpp"

namespace germsum {

/// Differential operator along one axis: sum_m terms[m] * d_j^m with
/// series coefficients. Lives in the skew ring where
/// d_j * f = f d_j + (d_j f).
class SkewOperator {
public:
    SkewOperator(int dim, int axis) : dim_(dim), axis_(axis) {
        if (axis < 0 || axis >= dim) throw domain_error("operator axis out of range");
    }

    static SkewOperator derivation(int dim, int axis);
    static SkewOperator multiplication(const MultiSeries& f, int axis);

    int dim() const { return dim_; }
    int axis() const { return axis_; }
    int order() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    const std::map<int, MultiSeries>& terms() const { return terms_; }

    SkewOperator& set_term(int m, MultiSeries coeff);
    MultiSeries coeff(int m, int cap) const;

    /// sum_m terms[m] * d_j^m y; cap drops by the operator order.
    MultiSeries apply(const MultiSeries& y) const;

    friend SkewOperator operator+(const SkewOperator& a, const SkewOperator& b);
    /// Skew product via the Leibniz rule
    ///   d^m * f = sum_i binom(m,i) (d^{m-i} f) d^i.
    friend SkewOperator operator*(const SkewOperator& a, const SkewOperator& b);

private:
    int dim_;
    int axis_;
    std::map<int, MultiSeries> terms_;
};

/// L_{P,j} = P^2 d_j + (d_j P).
SkewOperator euler_operator(const Germ& p, int axis);

/// Checks P^2 d_j y + (d_j P) y = (d_j P) P for y = E(P), exactly on all
/// stored terms up to the certified cap.
bool euler_system_check(const Germ& p, int axis);

/// The common-multiple operator L_j = A_j d_j^2 + B_j d_j + C_j for the
/// pair (P, Q), together with the right-hand side making E(P) + E(Q) a
/// formal solution of L_j y = rhs. All divisions by P^2 and Q^2 are exact
/// polynomial divisions and are asserted; C_j is computed from both
/// remainder conditions and the two values are asserted equal.
struct CommonMultiple {
    SkewOperator l;
    MultiSeries a;
    MultiSeries b;
    MultiSeries c;
    MultiSeries rhs;
    int certified_cap;
};
CommonMultiple build_L(const Germ& p, const Germ& q, int axis);

/// End-to-end check that E(P) + E(Q) solves L_j y = rhs modulo the
/// certified cap.
bool verify_two_euler(const Germ& p, const Germ& q, int axis);

/// Minimal N with d_j^N rhs == 0 (rhs is polynomial), plus the check that
/// the formal solution satisfies the homogeneous equation d_j^N L_j y = 0
/// at the certified order.
struct AnnihilatorReport {
    int order = 0;
    bool homogeneous_ok = false;
    int certified_cap = 0;
};
AnnihilatorReport annihilator_check(const Germ& p, const Germ& q, int axis);

}  // namespace germsum
