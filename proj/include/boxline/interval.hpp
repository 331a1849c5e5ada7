#pragma once

#include <string>

namespace boxline {

// Closed interval of reals with an explicit empty state.  Arithmetic rounds
// endpoints outward, so every result is a superset of the exact real-number
// result.  Endpoints may be infinite; NaN is rejected at construction.
class Interval {
public:
    // Throws std::invalid_argument on NaN endpoints or lo > hi.
    static Interval make(double lo, double hi);
    static Interval point(double v) { return make(v, v); }
    static Interval empty() noexcept;
    static Interval entire() noexcept;  // [-inf, +inf]

    bool is_empty() const noexcept { return empty_; }
    // Endpoint access throws std::logic_error on the empty interval.
    double lo() const;
    double hi() const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    // Throws std::domain_error when 0 lies in the divisor.
    friend Interval operator/(const Interval& a, const Interval& b);

    friend bool operator==(const Interval& a, const Interval& b) noexcept;
    friend bool operator!=(const Interval& a, const Interval& b) noexcept;

private:
    Interval(double lo, double hi, bool empty) : lo_(lo), hi_(hi), empty_(empty) {}
    static Interval raw(double lo, double hi);  // trusted endpoints, debug-checked

    double lo_ = 0.0;
    double hi_ = 0.0;
    bool empty_ = true;
};

Interval intersect(const Interval& a, const Interval& b) noexcept;
// Tightest interval containing both; empty operands are ignored.
Interval interval_hull(const Interval& a, const Interval& b) noexcept;

double width(const Interval& a);     // hi - lo; throws on empty
double midpoint(const Interval& a);  // throws on empty
bool contains_point(const Interval& a, double v) noexcept;
bool is_subset(const Interval& inner, const Interval& outer) noexcept;
bool is_disjoint(const Interval& a, const Interval& b) noexcept;

// Widens [lo, hi] onto a decimal grid: `sigfigs` counts digits after the
// leading significant digit of each endpoint, so round_out([1.0227004,
// 1.1315893], 5) = [1.02270, 1.13159].  Containment is guaranteed.
Interval round_out(const Interval& a, int sigfigs);
// Same, but to a fixed number of digits after the decimal point.
Interval round_out_decimals(const Interval& a, int decimals);

// Renders an already-rounded endpoint with the digit count the rounding
// used, preserving trailing zeros ("1.02270", not "1.0227").
std::string format_rounded(double v, int sigfigs);
std::string format_decimals(double v, int decimals);

}  // namespace boxline
