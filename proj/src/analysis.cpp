#include "boxline/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "boxline/predicates.hpp"

namespace boxline {

OutlierReport detect_outliers(const Dataset& d, const SliceOptions& opts, int max_k) {
    const int n = static_cast<int>(d.size());
    if (max_k < 0 || max_k > n - 2)
        throw std::invalid_argument("detect_outliers: max_k must lie in [0, n-2]");

    FitReport fit;
    int k_found = -1;
    for (int k = 0; k <= max_k; ++k) {
        // k = 0 is the plain united fit, so a clean dataset reports the
        // united hull itself; larger budgets use the miss-counting engine.
        fit = k == 0 ? solve(SolutionKind::united, d, opts)
                     : solve(SolutionKind::crude, d, opts, 1e40, k);
        if (fit.status == FitStatus::solved) {
            k_found = k;
            break;
        }
    }
    if (k_found < 0)
        throw MaxKExhaustedError("no consistent fit up to max_k = " + std::to_string(max_k));

    OutlierReport rep;
    rep.k_found = k_found;
    rep.hull = fit.hull;
    for (const Measurement& m : d) {
        Interval img = line_image(fit.hull.a, fit.hull.b, m.x);
        if (is_disjoint(img, m.y)) rep.outlier_indices.push_back(m.index);
    }
    std::sort(rep.outlier_indices.begin(), rep.outlier_indices.end());
    return rep;
}

AsymptoteReport fit_asymptote(const Dataset& d, SortDirection dir,
                              const SliceOptions& opts) {
    if (d.size() < 3) throw std::invalid_argument("fit_asymptote: need >= 3 measurements");
    Dataset sorted = sort_by_x(d, dir);
    const std::size_t n = sorted.size();

    // Shortest prefix containing a pair that determines a bounded slope.
    std::size_t start = 0;
    for (std::size_t j = 1; j < n && start == 0; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (is_disjoint(sorted[i].x, sorted[j].x)) {
                start = j + 1;
                break;
            }
    if (start == 0)
        throw SeedIndeterminateError(
            "no measurement pair with disjoint x-intervals: asymptote fit indeterminate");

    FitReport cur = solve(SolutionKind::united, sorted.prefix(start), opts);
    if (cur.status != FitStatus::solved)
        return AsymptoteReport{static_cast<int>(start), ParamBox::empty(), StopReason::empty};

    // Each prefix is solved independently, and the solver stops refining once
    // the relative cut width falls below opts.eps, so two consecutive hulls of
    // the same underlying line can disagree by up to eps * width per endpoint.
    // The nesting test must ignore escapes below that resolution or it would
    // fire on solver noise rather than on curvature.
    auto nested_at_resolution = [&](const ParamBox& inner, const ParamBox& outer) {
        const double slack_a = opts.eps * width(outer.a);
        const double slack_b = opts.eps * width(outer.b);
        ParamBox grown{Interval::make(outer.a.lo() - slack_a, outer.a.hi() + slack_a),
                       Interval::make(outer.b.lo() - slack_b, outer.b.hi() + slack_b)};
        return box_subset(inner, grown);
    };

    for (std::size_t count = start + 1; count <= n; ++count) {
        FitReport next = solve(SolutionKind::united, sorted.prefix(count), opts);
        if (next.status != FitStatus::solved)
            return AsymptoteReport{static_cast<int>(count - 1), cur.hull, StopReason::empty};
        // Adding a measurement can only cut the solution set, so as long
        // as the data is linear the hulls nest; the first hull that
        // escapes marks where the curvature outweighs the boxes.
        if (!nested_at_resolution(next.hull, cur.hull))
            return AsymptoteReport{static_cast<int>(count - 1), cur.hull,
                                   StopReason::not_nested};
        cur = next;
    }
    return AsymptoteReport{static_cast<int>(n), cur.hull, StopReason::exhausted};
}

std::vector<CorridorRow> corridor_table(const ParamBox& hull,
                                        const std::vector<double>& xs,
                                        const std::optional<LsqConstants>& lsq) {
    if (hull.is_empty()) throw std::invalid_argument("corridor_table: empty hull");
    std::vector<CorridorRow> rows;
    rows.reserve(xs.size());
    for (double x : xs) {
        CorridorRow row;
        row.x = x;
        row.y_fit = line_image(hull.a, hull.b, Interval::point(x));
        if (lsq) {
            double sigma = std::sqrt((x * lsq->sigma_a) * (x * lsq->sigma_a) +
                                     lsq->sigma_b * lsq->sigma_b);
            double center = lsq->a * x + lsq->b;
            Interval corridor = Interval::make(center - 3.0 * sigma, center + 3.0 * sigma);
            row.lsq_corridor = corridor;
            if (width(corridor) > 0.0)
                row.width_ratio = width(row.y_fit) / width(corridor);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace boxline
