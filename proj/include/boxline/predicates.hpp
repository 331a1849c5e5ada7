#pragma once

#include <vector>

#include "boxline/data.hpp"
#include "boxline/interval.hpp"

namespace boxline {

// Which face of the data a rule set prunes towards: `below` removes
// parameter boxes whose lines run provably below the measurements (their
// survivors bound the data from above), `above` the opposite.
enum class Side { below, above };

// Rejection rules for one slicing run.  `aux` points at the per-measurement
// images of the seed box through each x (tolerable/controllable only),
// indexed by position in the dataset.  `k_allowed` is the number of
// measurements a crude fit may discard.
struct RuleSet {
    SolutionKind kind = SolutionKind::united;
    Side side = Side::below;
    const std::vector<Interval>* aux = nullptr;
    int k_allowed = 0;
};

// a*x + b evaluated in interval arithmetic.
Interval line_image(const Interval& a, const Interval& b, const Interval& x);

// Whether the point line y = a*x + b satisfies measurement m under the
// given solution kind (united/tolerable/controllable).  Plain double
// arithmetic: this is the sampling predicate, not an enclosure.
bool point_satisfies(SolutionKind kind, double a, double b, const Measurement& m);

// Whether every line in `box` provably violates measurement m according to
// the rule set.  `aux_m` is the seed image through m.x (required for
// tolerable/controllable, ignored otherwise).  A true result licenses
// removing `box`; false is always safe.
bool rejects(const RuleSet& rs, const ParamBox& box, const Measurement& m,
             const Interval* aux_m);

// Number of measurements whose rectangle provably excludes every line in
// `box` (the crude fit's discard counter).
int count_failures(const ParamBox& box, const Dataset& d);

}  // namespace boxline
