#pragma once

#include <optional>
#include <vector>

#include "boxline/data.hpp"
#include "boxline/slicer.hpp"

namespace boxline {

struct OutlierReport {
    int k_found = 0;               // smallest discard budget that succeeded
    ParamBox hull;                 // hull of the fit at that budget
    std::vector<int> outlier_indices;  // 1-based input positions, ascending
};

// Smallest-k consistent fit: tries k = 0 (plain united fit), then crude
// fits with growing discard budgets, and reports the first that is not
// proven empty.  Flagged measurements are those whose rectangle the final
// hull's line family provably misses.  Throws MaxKExhaustedError when even
// k = max_k fails and std::invalid_argument for max_k outside [0, n-2].
struct MaxKExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
OutlierReport detect_outliers(const Dataset& d, const SliceOptions& opts, int max_k);

enum class StopReason { not_nested, empty, exhausted };

struct AsymptoteReport {
    int n_used = 0;      // measurements in the last accepted prefix
    ParamBox hull;       // united hull of that prefix
    StopReason stop_reason = StopReason::exhausted;
};

// Fits growing prefixes of the data sorted by x midpoint and stops as soon
// as enlarging the prefix breaks hull nestedness (or empties the fit): on
// asymptotically linear data the surviving prefix brackets the asymptote.
// Requires n >= 3; throws SeedIndeterminateError when no starting pair has
// disjoint x.
AsymptoteReport fit_asymptote(const Dataset& d, SortDirection dir,
                              const SliceOptions& opts);

struct LsqConstants {
    double a = 0.0;
    double b = 0.0;
    double sigma_a = 0.0;
    double sigma_b = 0.0;
};

struct CorridorRow {
    double x = 0.0;
    Interval y_fit = Interval::empty();       // hull image at x, unrounded
    std::optional<Interval> lsq_corridor;     // y_lsq -/+ 3*sigma(x)
    std::optional<double> width_ratio;        // width(y_fit) / width(corridor)
};

// Evaluates the fitted line family at each x.  With LSQ constants given,
// adds the classical three-sigma corridor (sigma(x) = sqrt((x*sigma_a)^2 +
// sigma_b^2), plain double arithmetic) and the width ratio.
std::vector<CorridorRow> corridor_table(const ParamBox& hull,
                                        const std::vector<double>& xs,
                                        const std::optional<LsqConstants>& lsq);

}  // namespace boxline
