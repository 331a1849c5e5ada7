#pragma once

#include <stdexcept>

#include "boxline/data.hpp"
#include "boxline/predicates.hpp"

namespace boxline {

struct SliceOptions {
    // Slab-width fraction below which a side gives up (relative schedule).
    double eps = 1e-6;
    // Cap on outer passes of the solve loop; hitting it flags the report.
    int max_outer = 1000;
    // Absolute give-up width, in units of the last place of the larger
    // endpoint magnitude of the parameter being sliced.
    double abs_floor = 4.0;
};

// No pair of measurements constrains the slope, so no finite starting box
// can be trusted (tolerable/controllable seeding, asymptote extraction).
struct SeedIndeterminateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Param { a, b };
enum class CutSide { left, right };

struct SliceResult {
    ParamBox box;
    bool success = false;
};

// Tries to cut one slab off the chosen side of one parameter.  Probes a
// half-width slab first and narrows geometrically; the first slab that the
// rule set provably rejects is removed.  Gives up when the slab fraction
// drops to eps (or the slab width to the absolute floor) without a
// rejection.  At most one slab is removed per call.
SliceResult slice_side(const ParamBox& box, Param param, CutSide cut,
                       const RuleSet& rs, const Dataset& d, const SliceOptions& opts);

// Cycles slice_side over (a,left), (a,right), (b,left), (b,right) until a
// full cycle removes nothing.  The result is a sound shrink of `box`.
ParamBox shave(const ParamBox& box, const RuleSet& rs, const Dataset& d,
               const SliceOptions& opts);

// Interval hull of the requested solution set of y = a*x + b over the
// dataset.  Statuses: `solved` means slicing reached its fixpoint and the
// hull is a guaranteed enclosure (possibly of an empty set); `proven_empty`
// and `seed_empty` are definitive emptiness proofs.  `omega` bounds the
// fallback seed box; `k_allowed` is the crude fit's discard budget.
// Throws std::invalid_argument on fewer than 2 measurements and
// SeedIndeterminateError when a tolerable/controllable seed cannot be built.
FitReport solve(SolutionKind kind, const Dataset& d, const SliceOptions& opts = {},
                double omega = 1e40, int k_allowed = 0);

}  // namespace boxline
