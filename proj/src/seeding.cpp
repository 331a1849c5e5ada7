#include "boxline/seeding.hpp"

#include <cstddef>
#include <stdexcept>

#include "boxline/predicates.hpp"

namespace boxline {

namespace {

std::optional<ParamBox> pair_fit(const Measurement& m1, const Measurement& m2) {
    if (!is_disjoint(m1.x, m2.x)) return std::nullopt;
    Interval dx = m2.x - m1.x;
    // Outward rounding of near-touching intervals can pull 0 into the
    // denominator; such a pair constrains the slope too weakly to use.
    if (dx.lo() <= 0.0 && dx.hi() >= 0.0) return std::nullopt;
    Interval a = (m2.y - m1.y) / dx;
    Interval b = intersect(m1.y - a * m1.x, m2.y - a * m2.x);
    if (b.is_empty()) return std::nullopt;  // unreachable for a genuine pair
    return ParamBox{a, b};
}

}  // namespace

ParamBox two_point_fit(const Measurement& m1, const Measurement& m2) {
    auto fit = pair_fit(m1, m2);
    if (!fit)
        throw std::invalid_argument(
            "two_point_fit requires measurements with disjoint x-intervals");
    return *fit;
}

ParamBox initial_union_box(const Dataset& d, double omega, Exec exec) {
    if (d.size() < 2) throw std::invalid_argument("initial_union_box: need >= 2 measurements");
    if (!(omega > 0.0)) throw std::invalid_argument("initial_union_box: omega must be positive");

    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(d.size());
    ParamBox acc = ParamBox::empty();

    if (exec == Exec::parallel) {
#pragma omp parallel
        {
            ParamBox local = ParamBox::empty();
#pragma omp for schedule(dynamic) nowait
            for (std::ptrdiff_t j = 0; j < n; ++j)
                for (std::ptrdiff_t k = j + 1; k < n; ++k)
                    if (auto fit = pair_fit(d[j], d[k])) local = box_hull(local, *fit);
#pragma omp critical
            acc = box_hull(acc, local);
        }
    } else {
        for (std::ptrdiff_t j = 0; j < n; ++j)
            for (std::ptrdiff_t k = j + 1; k < n; ++k)
                if (auto fit = pair_fit(d[j], d[k])) acc = box_hull(acc, *fit);
    }

    if (acc.is_empty()) {
        Interval square = Interval::make(-omega, omega);
        return ParamBox{square, square};
    }
    return acc;
}

std::optional<ParamBox> pairwise_intersection_box(const Dataset& d, Exec exec) {
    if (d.size() < 2)
        throw std::invalid_argument("pairwise_intersection_box: need >= 2 measurements");

    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(d.size());
    ParamBox acc{Interval::entire(), Interval::entire()};
    bool any = false;

    if (exec == Exec::parallel) {
#pragma omp parallel
        {
            ParamBox local{Interval::entire(), Interval::entire()};
            bool local_any = false;
#pragma omp for schedule(dynamic) nowait
            for (std::ptrdiff_t j = 0; j < n; ++j)
                for (std::ptrdiff_t k = j + 1; k < n; ++k)
                    if (auto fit = pair_fit(d[j], d[k])) {
                        local = intersect(local, *fit);
                        local_any = true;
                    }
#pragma omp critical
            {
                if (local_any) {
                    acc = any ? intersect(acc, local) : local;
                    any = true;
                }
            }
        }
    } else {
        for (std::ptrdiff_t j = 0; j < n; ++j)
            for (std::ptrdiff_t k = j + 1; k < n; ++k)
                if (auto fit = pair_fit(d[j], d[k])) {
                    acc = intersect(acc, *fit);
                    any = true;
                }
    }

    if (!any) return std::nullopt;
    return acc;
}

std::vector<Interval> auxiliary_images(const ParamBox& seed, const Dataset& d) {
    if (seed.is_empty()) throw std::invalid_argument("auxiliary_images: empty seed box");
    std::vector<Interval> images;
    images.reserve(d.size());
    for (const Measurement& m : d) images.push_back(line_image(seed.a, seed.b, m.x));
    return images;
}

}  // namespace boxline
