#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "boxline/interval.hpp"

namespace boxline {

// One observation: x and y are non-empty boxes; index is the 1-based
// position in the original input and survives sorting.
struct Measurement {
    Interval x;
    Interval y;
    int index = 0;
};

class Dataset {
public:
    Dataset() = default;
    // Keeps the given measurements (and their indices) as-is.
    explicit Dataset(std::vector<Measurement> ms);
    // Assigns indices 1..n in order.
    static Dataset from_boxes(const std::vector<std::pair<Interval, Interval>>& boxes);

    std::size_t size() const noexcept { return ms_.size(); }
    const Measurement& operator[](std::size_t i) const { return ms_.at(i); }
    auto begin() const noexcept { return ms_.begin(); }
    auto end() const noexcept { return ms_.end(); }

    // First `count` measurements, order and indices preserved.
    Dataset prefix(std::size_t count) const;

private:
    std::vector<Measurement> ms_;
};

enum class SortDirection { ascending, descending };

// Stable sort by x midpoint; original indices ride along.
Dataset sort_by_x(const Dataset& d, SortDirection dir);

// Axis-aligned box in (slope, intercept) space.  Empty iff a component is.
struct ParamBox {
    Interval a = Interval::empty();
    Interval b = Interval::empty();

    bool is_empty() const noexcept { return a.is_empty() || b.is_empty(); }
    static ParamBox empty() noexcept { return ParamBox{}; }
};

ParamBox intersect(const ParamBox& p, const ParamBox& q) noexcept;
ParamBox box_hull(const ParamBox& p, const ParamBox& q) noexcept;
bool box_subset(const ParamBox& inner, const ParamBox& outer) noexcept;
bool operator==(const ParamBox& p, const ParamBox& q) noexcept;
bool operator!=(const ParamBox& p, const ParamBox& q) noexcept;

enum class SolutionKind { united, tolerable, controllable, crude };
enum class FitStatus { solved, proven_empty, seed_empty };

std::string to_string(SolutionKind k);
std::string to_string(FitStatus s);
// Throws std::invalid_argument on unknown names.
SolutionKind solution_kind_from_string(const std::string& name);

struct FitReport {
    SolutionKind kind = SolutionKind::united;
    ParamBox hull;
    FitStatus status = FitStatus::solved;
    int outer_iterations = 0;
    double eps_used = 0.0;
    int k_allowed = 0;        // discards permitted; meaningful for crude fits
    bool idempotent = true;   // false only if the outer-iteration cap was hit
};

bool operator==(const FitReport& p, const FitReport& q) noexcept;

enum class CsvStyle { bounds, center_radius };

// CSV loader.  Requires a header row; columns are matched by name
// (x_lo,x_hi,y_lo,y_hi or x_center,x_radius,y_center,y_radius), extra
// columns are ignored.  Throws std::runtime_error with a line number on
// malformed input, non-finite values, negative radii, or fewer than 2 rows.
Dataset load_dataset(std::istream& in, CsvStyle style);
Dataset load_dataset_file(const std::string& path, CsvStyle style);

// Bounds-style CSV with round-trip (shortest exact) number formatting.
std::string dataset_to_csv(const Dataset& d);

// JSON mirror: array of {"x": [lo, hi], "y": [lo, hi]} objects.
Dataset dataset_from_json(const std::string& text);
std::string dataset_to_json(const Dataset& d);

}  // namespace boxline
