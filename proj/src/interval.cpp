#include "boxline/interval.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace boxline {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMaxD = std::numeric_limits<double>::max();
constexpr double kMinNormal = std::numeric_limits<double>::min();
constexpr double kDenormMin = std::numeric_limits<double>::denorm_min();

double step_down(double v) { return std::nextafter(v, -kInf); }
double step_up(double v) { return std::nextafter(v, kInf); }

// Directed-rounding scalar kernels.  Each computes the round-to-nearest
// result, recovers the exact rounding error with an error-free transform,
// and nudges one representable value outward only when the true result
// lies beyond the computed one.  Overflowed results facing inward are
// clamped to +-DBL_MAX so the interval stays a superset of the reals.

double add_down(double a, double b) {
    double s = a + b;
    if (std::isinf(s)) return s > 0 ? kMaxD : s;
    double t = s - a;  // Knuth two-sum residual (exact)
    double err = (a - (s - t)) + (b - t);
    return err < 0 ? step_down(s) : s;
}

double add_up(double a, double b) {
    double s = a + b;
    if (std::isinf(s)) return s < 0 ? -kMaxD : s;
    double t = s - a;
    double err = (a - (s - t)) + (b - t);
    return err > 0 ? step_up(s) : s;
}

double mul_down(double a, double b) {
    double p = a * b;
    if (std::isnan(p)) return -kInf;  // 0 * inf: no usable bound
    if (std::isinf(p)) return p > 0 ? kMaxD : p;
    if (p == 0.0) {
        if (a == 0.0 || b == 0.0) return p;  // exact zero
        return ((a < 0) != (b < 0)) ? -kDenormMin : 0.0;  // underflow
    }
    if (std::fabs(p) < kMinNormal) return step_down(p);  // subnormal: residual unreliable
    double r = std::fma(a, b, -p);  // exact for normal p
    return r < 0 ? step_down(p) : p;
}

double mul_up(double a, double b) {
    double p = a * b;
    if (std::isnan(p)) return kInf;
    if (std::isinf(p)) return p < 0 ? -kMaxD : p;
    if (p == 0.0) {
        if (a == 0.0 || b == 0.0) return p;
        return ((a < 0) != (b < 0)) ? 0.0 : kDenormMin;
    }
    if (std::fabs(p) < kMinNormal) return step_up(p);
    double r = std::fma(a, b, -p);
    return r > 0 ? step_up(p) : p;
}

// Callers guarantee y != 0 and x, y finite-or-inf without 0/0 forms.
double div_down(double x, double y) {
    double q = x / y;
    if (std::isnan(q)) return -kInf;
    if (std::isinf(q)) return q > 0 ? kMaxD : q;
    if (q == 0.0) {
        if (x == 0.0) return 0.0;
        return ((x < 0) != (y < 0)) ? -kDenormMin : 0.0;
    }
    if (std::isinf(y)) return step_down(q);
    if (std::fabs(q) < kMinNormal || std::fabs(x) < kMinNormal) return step_down(q);
    double r = std::fma(-q, y, x);  // r = x - q*y exactly while q is normal
    if (r == 0.0) return q;
    // true quotient = q + r/y
    return ((r < 0) != (y < 0)) ? step_down(q) : q;
}

double div_up(double x, double y) {
    double q = x / y;
    if (std::isnan(q)) return kInf;
    if (std::isinf(q)) return q < 0 ? -kMaxD : q;
    if (q == 0.0) {
        if (x == 0.0) return 0.0;
        return ((x < 0) != (y < 0)) ? 0.0 : kDenormMin;
    }
    if (std::isinf(y)) return step_up(q);
    if (std::fabs(q) < kMinNormal || std::fabs(x) < kMinNormal) return step_up(q);
    double r = std::fma(-q, y, x);  // r = x - q*y exactly while q is normal
    if (r == 0.0) return q;
    return ((r < 0) != (y < 0)) ? q : step_up(q);
}

void require_operands(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty())
        throw std::domain_error("arithmetic on empty interval");
}

int decimal_exponent(double v) {
    int e = static_cast<int>(std::floor(std::log10(std::fabs(v))));
    // log10 can land one off right at powers of ten; fix by comparison.
    while (std::fabs(v) < std::pow(10.0, e)) --e;
    while (std::fabs(v) >= std::pow(10.0, e + 1)) ++e;
    return e;
}

double round_dec_down(double v, int digits) {
    if (v == 0.0 || !std::isfinite(v)) return v;
    double scale = std::pow(10.0, digits);
    double scaled = v * scale;
    if (!std::isfinite(scaled) || !std::isfinite(scale)) return v;
    double c = std::floor(scaled) / scale;
    while (c > v) c = step_down(c);  // containment despite scaling error
    return c;
}

double round_dec_up(double v, int digits) {
    if (v == 0.0 || !std::isfinite(v)) return v;
    double scale = std::pow(10.0, digits);
    double scaled = v * scale;
    if (!std::isfinite(scaled) || !std::isfinite(scale)) return v;
    double c = std::ceil(scaled) / scale;
    while (c < v) c = step_up(c);
    return c;
}

}  // namespace

Interval Interval::make(double lo, double hi) {
    if (std::isnan(lo) || std::isnan(hi))
        throw std::invalid_argument("interval endpoint is NaN");
    if (lo > hi)
        throw std::invalid_argument("interval endpoints reversed");
    return Interval(lo, hi, false);
}

Interval Interval::empty() noexcept { return Interval(0.0, 0.0, true); }

Interval Interval::entire() noexcept { return Interval(-kInf, kInf, false); }

Interval Interval::raw(double lo, double hi) {
    assert(!(std::isnan(lo) || std::isnan(hi)) && lo <= hi);
    return Interval(lo, hi, false);
}

double Interval::lo() const {
    if (empty_) throw std::logic_error("lo() on empty interval");
    return lo_;
}

double Interval::hi() const {
    if (empty_) throw std::logic_error("hi() on empty interval");
    return hi_;
}

Interval operator+(const Interval& a, const Interval& b) {
    require_operands(a, b);
    return Interval::raw(add_down(a.lo_, b.lo_), add_up(a.hi_, b.hi_));
}

Interval operator-(const Interval& a, const Interval& b) {
    require_operands(a, b);
    return Interval::raw(add_down(a.lo_, -b.hi_), add_up(a.hi_, -b.lo_));
}

Interval operator*(const Interval& a, const Interval& b) {
    require_operands(a, b);
    double lo = std::min(std::min(mul_down(a.lo_, b.lo_), mul_down(a.lo_, b.hi_)),
                         std::min(mul_down(a.hi_, b.lo_), mul_down(a.hi_, b.hi_)));
    double hi = std::max(std::max(mul_up(a.lo_, b.lo_), mul_up(a.lo_, b.hi_)),
                         std::max(mul_up(a.hi_, b.lo_), mul_up(a.hi_, b.hi_)));
    return Interval::raw(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
    require_operands(a, b);
    if (b.lo_ <= 0.0 && b.hi_ >= 0.0)
        throw std::domain_error("division by interval containing zero");
    double lo = std::min(std::min(div_down(a.lo_, b.lo_), div_down(a.lo_, b.hi_)),
                         std::min(div_down(a.hi_, b.lo_), div_down(a.hi_, b.hi_)));
    double hi = std::max(std::max(div_up(a.lo_, b.lo_), div_up(a.lo_, b.hi_)),
                         std::max(div_up(a.hi_, b.lo_), div_up(a.hi_, b.hi_)));
    return Interval::raw(lo, hi);
}

bool operator==(const Interval& a, const Interval& b) noexcept {
    if (a.empty_ || b.empty_) return a.empty_ && b.empty_;
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
}

bool operator!=(const Interval& a, const Interval& b) noexcept { return !(a == b); }

Interval intersect(const Interval& a, const Interval& b) noexcept {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    double lo = std::max(a.lo(), b.lo());
    double hi = std::min(a.hi(), b.hi());
    if (lo > hi) return Interval::empty();
    return Interval::make(lo, hi);
}

Interval interval_hull(const Interval& a, const Interval& b) noexcept {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    return Interval::make(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

double width(const Interval& a) { return a.hi() - a.lo(); }

double midpoint(const Interval& a) {
    double mid = a.lo() + (a.hi() - a.lo()) / 2.0;
    if (std::isnan(mid)) mid = 0.0;  // [-inf, inf]
    return mid;
}

bool contains_point(const Interval& a, double v) noexcept {
    return !a.is_empty() && a.lo() <= v && v <= a.hi();
}

bool is_subset(const Interval& inner, const Interval& outer) noexcept {
    if (inner.is_empty()) return true;
    if (outer.is_empty()) return false;
    return outer.lo() <= inner.lo() && inner.hi() <= outer.hi();
}

bool is_disjoint(const Interval& a, const Interval& b) noexcept {
    return intersect(a, b).is_empty();
}

Interval round_out(const Interval& a, int sigfigs) {
    if (a.is_empty()) throw std::domain_error("round_out on empty interval");
    if (sigfigs < 0) throw std::invalid_argument("negative digit count");
    double lo = a.lo() == 0.0 ? 0.0 : round_dec_down(a.lo(), sigfigs - decimal_exponent(a.lo()));
    double hi = a.hi() == 0.0 ? 0.0 : round_dec_up(a.hi(), sigfigs - decimal_exponent(a.hi()));
    return Interval::make(lo, hi);
}

Interval round_out_decimals(const Interval& a, int decimals) {
    if (a.is_empty()) throw std::domain_error("round_out_decimals on empty interval");
    return Interval::make(round_dec_down(a.lo(), decimals), round_dec_up(a.hi(), decimals));
}

std::string format_rounded(double v, int sigfigs) {
    if (!std::isfinite(v)) return v > 0 ? "inf" : "-inf";
    int e = v == 0.0 ? 0 : decimal_exponent(v);
    char buf[64];
    if (e >= -4 && e <= 15) {
        int frac = std::max(0, sigfigs - e);
        std::snprintf(buf, sizeof(buf), "%.*f", frac, v);
    } else {
        std::snprintf(buf, sizeof(buf), "%.*e", sigfigs, v);
    }
    return buf;
}

std::string format_decimals(double v, int decimals) {
    if (!std::isfinite(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", std::max(0, decimals), v);
    return buf;
}

}  // namespace boxline
