#pragma once

#include "boxline/data.hpp"
#include "boxline/seeding.hpp"

namespace boxline {

struct GridResult {
    ParamBox hull;        // hull of accepted sample points; empty if none
    long long accepted = 0;
};

// Brute-force check: samples the centers of a resolution x resolution cell
// grid over `box` and hulls the (a, b) points whose line satisfies every
// measurement under `kind`.  The hull of sample points can only lie inside
// the true solution hull, so it must land inside any sound solver hull.
// Rejects crude (see crude_grid) and resolutions < 2.
GridResult grid_hull(SolutionKind kind, const Dataset& d, const ParamBox& box,
                     int resolution, Exec exec = Exec::parallel);

// Same scan accepting points that miss at most k measurement rectangles.
GridResult crude_grid(const Dataset& d, const ParamBox& box, int resolution,
                      int k, Exec exec = Exec::parallel);

}  // namespace boxline
