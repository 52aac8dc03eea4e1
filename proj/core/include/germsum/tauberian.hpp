#pragma once

#include <string>
#include <vector>

#include "germsum/geometry.hpp"
#include "germsum/gevrey.hpp"

namespace germsum {

/// Combined verdict for a series claimed summable with respect to a list
/// of couples. With one couple the report is the fitted growth class.
/// With two or more pairwise non-equivalent couples, summability with
/// respect to all of them forces convergence, so the radius check decides:
/// a divergent series demonstrates (by contrapositive) that the claims
/// cannot all hold.
struct TauberianReport {
    enum class Outcome {
        GrowthReport,        // single couple: fitted order reported
        ForcedConvergent,    // inequivalent couples and radius check passed
        Contradiction,       // inequivalent couples but the series diverges
        EquivalentCouples,   // some pair equivalent: no tauberian force
    };
    Outcome outcome;
    std::vector<GevreyFit> fits;       // one per couple, in input order
    GrowthVerdict radius;              // radius check (multi-couple outcomes)
    std::string implication;           // human-readable implication line
    bool pairwise_inequivalent = false;
};

TauberianReport tauberian_verdict(const MultiSeries& f, const std::vector<Couple>& couples,
                                  Window fit_window, VerdictThresholds th = {});

}  // namespace germsum
