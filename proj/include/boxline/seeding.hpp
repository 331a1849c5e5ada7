#pragma once

#include <optional>
#include <vector>

#include "boxline/data.hpp"
#include "boxline/interval.hpp"

namespace boxline {

// Kernel selection for the pair-enumeration and grid routines.  The
// parallel path produces bit-identical results to the serial one (all
// merges are exact min/max or intersections).
enum class Exec { serial, parallel };

// Exact-envelope fit through two measurements with disjoint x-intervals:
// a = (y2 - y1) / (x2 - x1), b = (y1 - a*x1) in both orientations,
// intersected.  The slope is tight; the intercept may overestimate.
// Throws std::invalid_argument when the x-intervals overlap (or touch so
// closely that outward rounding puts 0 in the denominator).
ParamBox two_point_fit(const Measurement& m1, const Measurement& m2);

// Hull of all two-point fits over pairs with disjoint x.  With no usable
// pair, falls back to the square [-omega, omega]^2.
ParamBox initial_union_box(const Dataset& d, double omega, Exec exec = Exec::parallel);

// Intersection of the same two-point fits: a box every tolerable (or
// controllable) solution must inhabit.  Returns nullopt when no pair has
// disjoint x (nothing can be concluded); otherwise the box, possibly empty.
std::optional<ParamBox> pairwise_intersection_box(const Dataset& d,
                                                  Exec exec = Exec::parallel);

// Images of the seed box's line family through each measurement's x, in
// dataset order.  Throws on an empty seed box.
std::vector<Interval> auxiliary_images(const ParamBox& seed, const Dataset& d);

}  // namespace boxline
