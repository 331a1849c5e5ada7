#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "boxline/data.hpp"

namespace fixtures {

using boxline::Dataset;
using boxline::Interval;

inline std::string data_path(const std::string& name) {
    return std::string(BOXLINE_TEST_DATA_DIR) + "/" + name;
}

inline Interval centered(double c, double r) { return Interval::make(c - r, c + r); }

// The ten-measurement worked example used throughout the tests; the
// published five-digit hull of its united solutions is kPubA x kPubB.
inline Dataset table1() {
    const double xc[10] = {0.9, 1.9, 2.9, 3.9, 5.4, 5.9, 6.9, 8.7, 9.1, 10.1};
    const double yc[10] = {3.65, 4.60, 5.65, 6.60, 8.00, 8.55, 9.60, 11.30, 12.75, 13.70};
    const double yr[10] = {0.45, 0.40, 0.22, 0.40, 0.50, 0.35, 0.50, 0.50, 0.55, 0.30};
    std::vector<std::pair<Interval, Interval>> boxes;
    for (int i = 0; i < 10; ++i)
        boxes.emplace_back(centered(xc[i], 0.1), centered(yc[i], yr[i]));
    return Dataset::from_boxes(boxes);
}

// Same data with the y centers of the given 1-based rows shifted by +5
// (turns them into unarguable outliers).
inline Dataset table1_shifted(const std::vector<int>& rows) {
    Dataset base = table1();
    std::vector<boxline::Measurement> ms(base.begin(), base.end());
    for (int r : rows) {
        Interval& y = ms[r - 1].y;
        y = Interval::make(y.lo() + 5.0, y.hi() + 5.0);
    }
    return Dataset(std::move(ms));
}

// Consistent synthetic data on y = 2x + 1 with shrinking y-radii; every
// prefix hull nests strictly inside the previous one.
inline Dataset nested_line(int n) {
    std::vector<std::pair<Interval, Interval>> boxes;
    for (int i = 0; i < n; ++i) {
        double x = 1.0 + i;
        double ry = 0.4 / (1.0 + 0.3 * i);
        boxes.emplace_back(centered(x, 0.05), centered(2.0 * x + 1.0, ry));
    }
    return Dataset::from_boxes(boxes);
}

// Five points on y = 2x + 1 with +-0.1 boxes, then a sixth far above the
// line: the linear head fits, the bend breaks nesting.
inline Dataset bend_line() {
    std::vector<std::pair<Interval, Interval>> boxes;
    for (int i = 0; i < 5; ++i) {
        double x = 1.0 + i;
        boxes.emplace_back(centered(x, 0.1), centered(2.0 * x + 1.0, 0.1));
    }
    boxes.emplace_back(centered(6.0, 0.1), centered(2.0 * 6.0 + 1.0 + 4.0, 0.1));
    return Dataset::from_boxes(boxes);
}

// Samples of y(t) = 1 + 10*exp(-t) at exactly known times t = 0.025*(i-1)
// with +-0.01 y-boxes; near t = 0 the tangent line has slope -10.  The
// sample times are thin on purpose: a t-radius r would let every line shift
// by |slope|*r ~ 10r vertically, and with boxes that loose the prefix fit
// absorbs the curve far past the tangent region before going empty.  Tight
// boxes make the incremental fit die while its slope still hugs -10.
inline Dataset sampled_exponential() {
    std::vector<std::pair<Interval, Interval>> boxes;
    for (int i = 1; i <= 40; ++i) {
        double t = 0.025 * (i - 1);
        double y = 1.0 + 10.0 * std::exp(-t);
        boxes.emplace_back(Interval::point(t), centered(y, 0.01));
    }
    return Dataset::from_boxes(boxes);
}

// Thin x-coordinates, fat y-boxes: the tolerable and united sets coincide.
inline Dataset thin_x_line() {
    std::vector<std::pair<Interval, Interval>> boxes;
    const double ry[6] = {0.5, 0.35, 0.45, 0.3, 0.5, 0.4};
    for (int i = 0; i < 6; ++i) {
        double x = 0.5 + i;
        boxes.emplace_back(Interval::point(x), centered(1.5 * x + 0.5, ry[i]));
    }
    return Dataset::from_boxes(boxes);
}

// Fat x-boxes, thin y-coordinates: controllable coincides with united.
inline Dataset thin_y_line() {
    std::vector<std::pair<Interval, Interval>> boxes;
    const double rx[6] = {0.2, 0.3, 0.25, 0.3, 0.2, 0.25};
    for (int i = 0; i < 6; ++i) {
        double x = 1.0 + i;
        boxes.emplace_back(centered(x, rx[i]), Interval::point(0.75 * x + 2.0));
    }
    return Dataset::from_boxes(boxes);
}

// Wide y-corridor around y = 2x + 1: tolerable solutions clearly exist.
inline Dataset tolerant_corridor() {
    std::vector<std::pair<Interval, Interval>> boxes;
    for (int i = 0; i < 6; ++i) {
        double x = 0.5 + i;
        boxes.emplace_back(centered(x, 0.2), centered(2.0 * x + 1.0, 1.0));
    }
    return Dataset::from_boxes(boxes);
}

// Wide x-boxes with narrow y: lines through a box sweep a tall image, so
// controllable solutions (image covering y) clearly exist.
inline Dataset controllable_corridor() {
    std::vector<std::pair<Interval, Interval>> boxes;
    for (int i = 0; i < 6; ++i) {
        double x = 1.0 + i;
        boxes.emplace_back(centered(x, 0.5), centered(2.0 * x + 1.0, 0.2));
    }
    return Dataset::from_boxes(boxes);
}

// Four near-thin points on two parallel lines: every pair fit is sharp,
// and the two clusters force contradictory intercepts, so the pairwise
// intersection box is empty.
inline Dataset parallel_clusters() {
    std::vector<std::pair<Interval, Interval>> boxes;
    boxes.emplace_back(Interval::make(0.0, 0.0), Interval::make(0.0, 0.001));
    boxes.emplace_back(Interval::make(1.0, 1.0), Interval::make(1.0, 1.001));
    boxes.emplace_back(Interval::make(0.0, 0.0), Interval::make(5.0, 5.001));
    boxes.emplace_back(Interval::make(1.0, 1.0), Interval::make(6.0, 6.001));
    return Dataset::from_boxes(boxes);
}

// All x-intervals overlap: no pair determines a bounded slope.
inline Dataset overlapping_x() {
    std::vector<std::pair<Interval, Interval>> boxes;
    boxes.emplace_back(Interval::make(0.0, 2.0), Interval::make(0.0, 1.0));
    boxes.emplace_back(Interval::make(1.0, 3.0), Interval::make(1.0, 2.0));
    boxes.emplace_back(Interval::make(0.5, 2.5), Interval::make(0.5, 1.5));
    return Dataset::from_boxes(boxes);
}

inline const Interval kPubA = Interval::make(1.02270, 1.13159);
inline const Interval kPubB = Interval::make(2.06840, 2.96827);

inline constexpr double kLsqA = 1.08530271;
inline constexpr double kLsqB = 2.43730211;
inline constexpr double kLsqSigmaA = 0.0136506381;
inline constexpr double kLsqSigmaB = 0.0823259652;

struct TableRow {
    double x;
    double lo;
    double hi;
};

// The published two-decimal fitted bounds at 22 evaluation points.
inline const std::vector<TableRow>& table3_rows() {
    static const std::vector<TableRow> rows = {
        {0.0, 2.06, 2.97},    {0.8, 2.88, 3.88},   {1.0, 3.09, 4.10},
        {1.8, 3.90, 5.01},    {2.0, 4.11, 5.24},   {2.8, 4.93, 6.14},
        {3.0, 5.13, 6.37},    {3.8, 5.95, 7.27},   {4.0, 6.15, 7.50},
        {5.3, 7.48, 8.97},    {5.5, 7.69, 9.20},   {5.8, 8.00, 9.54},
        {6.0, 8.20, 9.76},    {6.8, 9.02, 10.67},  {7.0, 9.22, 10.89},
        {8.6, 10.86, 12.70},  {8.8, 11.06, 12.93}, {9.0, 11.27, 13.16},
        {9.2, 11.47, 13.38},  {10.0, 12.29, 14.29},{10.2, 12.50, 14.52},
        {20.0, 22.52, 25.60},
    };
    return rows;
}

}  // namespace fixtures
