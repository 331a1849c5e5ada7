#include "boxline/slicer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "boxline/seeding.hpp"

namespace boxline {

namespace {

bool probe_rejected(const ParamBox& candidate, const RuleSet& rs, const Dataset& d) {
    if (rs.kind == SolutionKind::crude)
        return count_failures(candidate, d) > rs.k_allowed;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const Interval* aux = rs.aux ? &(*rs.aux)[i] : nullptr;
        if (rejects(rs, candidate, d[i], aux)) return true;
    }
    return false;
}

ParamBox with_param(const ParamBox& box, Param param, const Interval& iv) {
    return param == Param::a ? ParamBox{iv, box.b} : ParamBox{box.a, iv};
}

double ulp_of(double magnitude) {
    double next = std::nextafter(magnitude, std::numeric_limits<double>::infinity());
    double u = next - magnitude;
    return u > 0.0 ? u : std::numeric_limits<double>::denorm_min();
}

}  // namespace

SliceResult slice_side(const ParamBox& box, Param param, CutSide cut,
                       const RuleSet& rs, const Dataset& d, const SliceOptions& opts) {
    if (box.is_empty()) throw std::invalid_argument("slice_side: empty box");

    const Interval iv = param == Param::a ? box.a : box.b;
    const double lo = iv.lo(), hi = iv.hi();
    const double w = hi - lo;
    if (!(w > 0.0)) return {box, false};  // thin parameter: nothing to cut

    const double floor_w = opts.abs_floor * ulp_of(std::max(std::fabs(lo), std::fabs(hi)));

    if (cut == CutSide::left) {
        double xi = 1.0;
        while (true) {
            xi *= 0.5;
            double p = lo + xi * w;
            if (!(p > lo && p < hi)) return {box, false};  // cut point degenerated
            if (probe_rejected(with_param(box, param, Interval::make(lo, p)), rs, d))
                return {with_param(box, param, Interval::make(p, hi)), true};
            if (xi <= opts.eps) return {box, false};
            if (p - lo <= floor_w) return {box, false};
        }
    }
    double xi = 0.0;
    while (true) {
        xi = (1.0 + xi) * 0.5;
        double p = lo + xi * w;
        if (!(p > lo && p < hi)) return {box, false};
        if (probe_rejected(with_param(box, param, Interval::make(p, hi)), rs, d))
            return {with_param(box, param, Interval::make(lo, p)), true};
        if (1.0 - xi <= opts.eps) return {box, false};
        if (hi - p <= floor_w) return {box, false};
    }
}

ParamBox shave(const ParamBox& box, const RuleSet& rs, const Dataset& d,
               const SliceOptions& opts) {
    if (box.is_empty()) throw std::invalid_argument("shave: empty box");
    // Every successful cut removes at least an eps-fraction slab, so the
    // cycle count is bounded in practice; the cap only guards pathology
    // (the returned box is a sound enclosure either way).
    constexpr long kMaxCycles = 1000000;
    ParamBox cur = box;
    for (long cycle = 0; cycle < kMaxCycles; ++cycle) {
        bool any = false;
        for (Param p : {Param::a, Param::b}) {
            for (CutSide s : {CutSide::left, CutSide::right}) {
                SliceResult r = slice_side(cur, p, s, rs, d, opts);
                cur = r.box;
                any = any || r.success;
            }
        }
        if (!any) break;
    }
    return cur;
}

namespace {

FitReport report(SolutionKind kind, ParamBox hull, FitStatus status, int iterations,
                 const SliceOptions& opts, int k_allowed, bool idempotent = true) {
    return FitReport{kind, hull, status, iterations, opts.eps, k_allowed, idempotent};
}

FitReport solve_crude(const Dataset& d, const SliceOptions& opts, double omega, int k) {
    RuleSet rs{SolutionKind::crude, Side::below, nullptr, k};
    ParamBox v = initial_union_box(d, omega);
    // Single rule set, no side split: alternate a whole-box miss count
    // with one slicing cycle until the box stops moving.  The count check
    // is what proves emptiness — a box that misses more than k
    // measurements cannot contain a crude solution.
    for (int it = 1; it <= opts.max_outer; ++it) {
        if (count_failures(v, d) > k)
            return report(SolutionKind::crude, ParamBox::empty(), FitStatus::proven_empty,
                          it, opts, k);
        ParamBox next = v;
        for (Param p : {Param::a, Param::b})
            for (CutSide s : {CutSide::left, CutSide::right})
                next = slice_side(next, p, s, rs, d, opts).box;
        if (next == v) return report(SolutionKind::crude, v, FitStatus::solved, it, opts, k);
        v = next;
    }
    return report(SolutionKind::crude, v, FitStatus::solved, opts.max_outer, opts, k, false);
}

}  // namespace

FitReport solve(SolutionKind kind, const Dataset& d, const SliceOptions& opts,
                double omega, int k_allowed) {
    if (d.size() < 2) throw std::invalid_argument("solve: need >= 2 measurements");
    if (kind == SolutionKind::crude) {
        if (k_allowed < 0) throw std::invalid_argument("solve: negative discard budget");
        return solve_crude(d, opts, omega, k_allowed);
    }

    std::vector<Interval> aux;
    SolutionKind rule_kind = kind;
    if (kind == SolutionKind::tolerable || kind == SolutionKind::controllable) {
        auto seed = pairwise_intersection_box(d);
        if (!seed)
            throw SeedIndeterminateError(
                "no measurement pair with disjoint x-intervals: seed box indeterminate");
        if (seed->is_empty())
            return report(kind, ParamBox::empty(), FitStatus::seed_empty, 0, opts, 0);
        aux = auxiliary_images(*seed, d);

        // With every x thin the tolerable set coincides with the united
        // set (and likewise controllable with every y thin), so the united
        // rules apply verbatim and the two runs stay bit-identical.
        bool all_thin_x = true, all_thin_y = true;
        for (const Measurement& m : d) {
            all_thin_x = all_thin_x && width(m.x) == 0.0;
            all_thin_y = all_thin_y && width(m.y) == 0.0;
        }
        if ((kind == SolutionKind::tolerable && all_thin_x) ||
            (kind == SolutionKind::controllable && all_thin_y))
            rule_kind = SolutionKind::united;
    }

    const std::vector<Interval>* aux_ptr =
        rule_kind == SolutionKind::united ? nullptr : &aux;
    RuleSet below{rule_kind, Side::below, aux_ptr, 0};
    RuleSet above{rule_kind, Side::above, aux_ptr, 0};

    ParamBox v = initial_union_box(d, omega);
    for (int it = 1; it <= opts.max_outer; ++it) {
        // Shave the same box under each one-sided rule set independently;
        // solutions survive both, so their intersection keeps them all.
        ParamBox v_below = shave(v, below, d, opts);
        ParamBox v_above = shave(v, above, d, opts);
        ParamBox next = intersect(v_below, v_above);
        if (next.is_empty())
            return report(kind, ParamBox::empty(), FitStatus::proven_empty, it, opts, 0);
        if (next == v) return report(kind, v, FitStatus::solved, it, opts, 0);
        v = next;
    }
    return report(kind, v, FitStatus::solved, opts.max_outer, opts, 0, false);
}

}  // namespace boxline
