#include "boxline/oracle.hpp"

#include <limits>
#include <stdexcept>

#include "boxline/predicates.hpp"

namespace boxline {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool point_accepted(SolutionKind kind, double a, double b, const Dataset& d, int k) {
    if (kind == SolutionKind::crude) {
        int misses = 0;
        for (const Measurement& m : d) {
            if (!point_satisfies(SolutionKind::united, a, b, m) && ++misses > k)
                return false;
        }
        return true;
    }
    for (const Measurement& m : d)
        if (!point_satisfies(kind, a, b, m)) return false;
    return true;
}

GridResult scan(SolutionKind kind, const Dataset& d, const ParamBox& box,
                int resolution, int k, Exec exec) {
    if (box.is_empty()) throw std::invalid_argument("grid scan: empty box");
    if (resolution < 2) throw std::invalid_argument("grid scan: resolution must be >= 2");

    const double a_lo = box.a.lo(), a_w = width(box.a);
    const double b_lo = box.b.lo(), b_w = width(box.b);
    const int res = resolution;

    long long accepted = 0;
    double a_min = kInf, a_max = -kInf, b_min = kInf, b_max = -kInf;

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static) reduction(+ : accepted) \
    reduction(min : a_min, b_min) reduction(max : a_max, b_max)
        for (int i = 0; i < res; ++i) {
            const double av = a_lo + (i + 0.5) * a_w / res;
            for (int j = 0; j < res; ++j) {
                const double bv = b_lo + (j + 0.5) * b_w / res;
                if (point_accepted(kind, av, bv, d, k)) {
                    ++accepted;
                    a_min = std::min(a_min, av);
                    a_max = std::max(a_max, av);
                    b_min = std::min(b_min, bv);
                    b_max = std::max(b_max, bv);
                }
            }
        }
    } else {
        for (int i = 0; i < res; ++i) {
            const double av = a_lo + (i + 0.5) * a_w / res;
            for (int j = 0; j < res; ++j) {
                const double bv = b_lo + (j + 0.5) * b_w / res;
                if (point_accepted(kind, av, bv, d, k)) {
                    ++accepted;
                    a_min = std::min(a_min, av);
                    a_max = std::max(a_max, av);
                    b_min = std::min(b_min, bv);
                    b_max = std::max(b_max, bv);
                }
            }
        }
    }

    GridResult r;
    r.accepted = accepted;
    r.hull = accepted > 0
                 ? ParamBox{Interval::make(a_min, a_max), Interval::make(b_min, b_max)}
                 : ParamBox::empty();
    return r;
}

}  // namespace

GridResult grid_hull(SolutionKind kind, const Dataset& d, const ParamBox& box,
                     int resolution, Exec exec) {
    if (kind == SolutionKind::crude)
        throw std::invalid_argument("grid_hull: use crude_grid for the crude kind");
    return scan(kind, d, box, resolution, 0, exec);
}

GridResult crude_grid(const Dataset& d, const ParamBox& box, int resolution,
                      int k, Exec exec) {
    if (k < 0) throw std::invalid_argument("crude_grid: negative discard budget");
    return scan(SolutionKind::crude, d, box, resolution, k, exec);
}

}  // namespace boxline
