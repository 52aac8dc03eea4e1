#include "germsum/tauberian.hpp"

#include <sstream>

namespace germsum {

namespace {

/// Growth fit against a couple whose alpha may have zero entries: those
/// axes impose no factorial constraint, matching the min over positive
/// entries in the monomial bound.
GevreyFit fit_for_couple(const MultiSeries& f, const Couple& c, Window window) {
    Exponent alpha = c.alpha;
    bool all_positive = true;
    for (int v : alpha.e) all_positive = all_positive && v > 0;
    if (all_positive) return fit_monomial_gevrey(f, alpha, window);
    // Decompose along the couple and fit the component growth instead.
    Decomposition dec = t_alpha(f, alpha, f.cap() / std::max(1, alpha.total_degree()) + 1);
    Window w{0, static_cast<int>(dec.components.size()) - 1};
    return fit_component_gevrey(dec, 0.5, w);
}

}  // namespace

TauberianReport tauberian_verdict(const MultiSeries& f, const std::vector<Couple>& couples,
                                  Window fit_window, VerdictThresholds th) {
    if (couples.empty()) throw domain_error("tauberian verdict needs at least one couple");
    TauberianReport rep;
    for (const auto& c : couples) rep.fits.push_back(fit_for_couple(f, c, fit_window));

    if (couples.size() == 1) {
        rep.outcome = TauberianReport::Outcome::GrowthReport;
        const GevreyFit& fit = rep.fits.front();
        std::ostringstream os;
        if (fit.s > th.s_tol)
            os << "divergent, Gevrey ~ " << fit.s << " w.r.t. " << couples.front().alpha.to_string();
        else
            os << "growth compatible with convergence w.r.t. "
               << couples.front().alpha.to_string();
        rep.implication = os.str();
        return rep;
    }

    rep.pairwise_inequivalent = true;
    for (size_t i = 0; i < couples.size() && rep.pairwise_inequivalent; ++i)
        for (size_t j = i + 1; j < couples.size(); ++j)
            if (couple_equiv(couples[i], couples[j])) {
                rep.pairwise_inequivalent = false;
                rep.implication = "couples " + std::to_string(i) + " and " + std::to_string(j) +
                                  " are equivalent: the summability methods coincide and no "
                                  "convergence is forced";
                break;
            }
    if (!rep.pairwise_inequivalent) {
        rep.outcome = TauberianReport::Outcome::EquivalentCouples;
        return rep;
    }

    rep.implication =
        "couples are pairwise non-equivalent: summability w.r.t. all of them forces "
        "convergence; check radius";
    rep.radius = radius_estimate(f, th);
    rep.outcome = rep.radius.kind == GrowthKind::Convergent
                      ? TauberianReport::Outcome::ForcedConvergent
                      : TauberianReport::Outcome::Contradiction;
    return rep;
}

}  // namespace germsum
