#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germsum/gevrey.hpp"
#include "germsum/mseries.hpp"

namespace germsum {

/// Element of Lambda_d: a nonzero exponent alpha with a positive level k,
/// considered modulo the scaling (alpha, 1/k) ~ (alpha', 1/k') iff
/// k*alpha = k'*alpha'. The normal form k*alpha is what all comparisons
/// work on.
struct Couple {
    Exponent alpha;
    Rational k;

    Couple(Exponent a, Rational kk);
    int dim() const { return alpha.dim(); }
    std::vector<Rational> normal_form() const;
    std::string to_string() const;
};

Couple parse_couple(const std::string& text);

bool couple_equiv(const Couple& a, const Couple& b);

enum class CoupleOrder { Equal, StrictLess, Less, StrictGreater, Greater, Incomparable };

/// Classification under the componentwise order of normal forms. Strict
/// means strict in every coordinate.
CoupleOrder couple_compare(const Couple& a, const Couple& b);

/// The max-ratio criterion: when all entries of b.alpha are nonzero,
/// a < b strictly iff max_j a_j/b_j < k_b/k_a.
bool strict_less_max_ratio(const Couple& a, const Couple& b);

/// Word in the elementary monomial maps. Pi(i, j, n): n-fold application
/// of the map whose pullback adds alpha_j to alpha_i (substitution
/// x_j -> x_i x_j). Ram(j, m): x_j -> x_j^m, multiplying alpha_j by m.
/// Axes are 0-based in code and 1-based in the text form
/// "pi(2,1)^3 ; ram(1,2)".
struct MapStep {
    enum class Kind { Pi, Ram } kind;
    int i = 0;  // Pi: receiving axis. Ram: ramified axis.
    int j = 0;  // Pi: source axis.
    int count = 1;   // Pi repetition
    int order = 2;   // Ram order m >= 2
};

struct MonomialMap {
    std::vector<MapStep> word;

    static MonomialMap identity() { return {}; }
    static MapStep pi(int i, int j, int count = 1);
    static MapStep ram(int j, int order);

    MonomialMap& then(const MapStep& s) {
        word.push_back(s);
        return *this;
    }

    std::string to_string() const;
};

MonomialMap parse_monomial_map(const std::string& text);

Exponent pullback_exponent(const MonomialMap& m, const Exponent& e);
Couple pullback_couple(const MonomialMap& m, const Couple& c);
MultiSeries pullback_series(const MonomialMap& m, const MultiSeries& f);

/// One corrective step taken by order_couples, kept for auditability:
/// which couples were targeted, which axes, and the exact bound that the
/// chosen repetition count must exceed.
struct OrderingStep {
    enum class Reason { ZeroFix, OrderFix } reason;
    MapStep step;
    int couple_a = -1;  // OrderFix: index of the couple smaller on axis j
    int couple_b = -1;
    std::optional<Rational> bound;  // OrderFix: minimal N must exceed this
};

struct OrderingResult {
    MonomialMap map;
    std::vector<int> order;  // indices into the input, ascending under <
    std::vector<Couple> images;
    std::vector<OrderingStep> trace;
};

/// Makes a family of pairwise non-equivalent couples strictly totally
/// ordered with all-positive entries, by monomial blow-ups. Strategy:
/// first give every couple positive entries, then repeatedly fix the
/// lexicographically first non-strictly-comparable pair with the minimal
/// admissible repetition count.
OrderingResult order_couples(const std::vector<Couple>& couples);

/// Couple of a germ P with a positive level k.
struct GermCouple {
    Germ p;
    Rational k;
    GermCouple(Germ g, Rational kk);
};

/// Equivalence of germ couples: minimal positive integers p_a, p_b with
/// p_a/k_a = p_b/k_b, then P_b^{p_b} == U * P_a^{p_a} for a unit U,
/// decided by exact ray division at the certified order.
struct GermEquivResult {
    bool equivalent = false;
    bool exact = false;   // germ powers were complete polynomials
    int certified_cap = 0;
    int power_a = 0;
    int power_b = 0;
    explicit operator bool() const { return equivalent; }
};
GermEquivResult germ_couple_equiv(const GermCouple& a, const GermCouple& b);

/// Infinity marker for the blow-up chart parameter.
struct ChartAtInfinity {};
inline constexpr ChartAtInfinity chart_infinity{};

/// f composed with the chart b_xi : v -> (v2, (xi+v1)v2, v'') of the
/// blow-up with center {x1 = x2 = 0}.
MultiSeries blowup_chart(const MultiSeries& f, const GaussRational& xi);
/// f composed with b_inf : v -> (v1 v2, v2, v'').
MultiSeries blowup_chart(const MultiSeries& f, ChartAtInfinity);

/// Testing utility: growth verdicts for f, f o r_m and f o b_xi should
/// agree, since convergence is preserved both ways by these maps.
struct TransportReport {
    GrowthVerdict base;
    GrowthVerdict ramified;
    GrowthVerdict blown_up;
    bool agree = false;
};
TransportReport convergence_transport_check(const MultiSeries& f, int ram_order = 2,
                                            const GaussRational& xi = GaussRational(0));

}  // namespace germsum
