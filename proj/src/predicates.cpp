#include "boxline/predicates.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxline {

Interval line_image(const Interval& a, const Interval& b, const Interval& x) {
    return a * x + b;
}

bool point_satisfies(SolutionKind kind, double a, double b, const Measurement& m) {
    double v1 = a * m.x.lo() + b;
    double v2 = a * m.x.hi() + b;
    double lo = std::min(v1, v2);
    double hi = std::max(v1, v2);
    switch (kind) {
        case SolutionKind::united:
            return !(hi < m.y.lo() || lo > m.y.hi());
        case SolutionKind::tolerable:
            return m.y.lo() <= lo && hi <= m.y.hi();
        case SolutionKind::controllable:
            return lo <= m.y.lo() && m.y.hi() <= hi;
        case SolutionKind::crude:
            break;
    }
    throw std::invalid_argument("point_satisfies: crude has no point predicate");
}

namespace {

// The whole rectangle is provably missed: the image through x lies
// strictly below or strictly above y.
bool misses_rectangle(const ParamBox& box, const Measurement& m) {
    Interval img = line_image(box.a, box.b, m.x);
    return img.hi() < m.y.lo() || img.lo() > m.y.hi();
}

}  // namespace

bool rejects(const RuleSet& rs, const ParamBox& box, const Measurement& m,
             const Interval* aux_m) {
    if (box.is_empty()) throw std::invalid_argument("rejects: empty box");

    switch (rs.kind) {
        case SolutionKind::united: {
            Interval img = line_image(box.a, box.b, m.x);
            return rs.side == Side::below ? img.hi() < m.y.lo()
                                          : img.lo() > m.y.hi();
        }
        case SolutionKind::crude:
            // Two-sided: the crude fit counts misses rather than splitting
            // the run by side.
            return misses_rectangle(box, m);
        case SolutionKind::tolerable:
        case SolutionKind::controllable:
            break;
    }

    if (aux_m == nullptr)
        throw std::invalid_argument("rejects: tolerable/controllable need an aux image");

    // Common rule: every candidate line leaves the corridor the seed box
    // spans through this x, so none can reach the required relation with y.
    Interval img = line_image(box.a, box.b, m.x);
    if (is_disjoint(img, *aux_m)) return true;

    // One-sided rules, evaluated at the x-interval's endpoints where the
    // image over the whole box is extremal in the slope direction.
    Interval at_lo = line_image(box.a, box.b, Interval::point(m.x.lo()));
    Interval at_hi = line_image(box.a, box.b, Interval::point(m.x.hi()));

    if (rs.kind == SolutionKind::tolerable) {
        // Containment of the image in y fails for the whole box.
        if (rs.side == Side::below)
            return at_lo.hi() < m.y.lo() || at_hi.hi() < m.y.lo();
        return at_lo.lo() > m.y.hi() || at_hi.lo() > m.y.hi();
    }
    // Controllable: the image must cover y; reject when it provably cannot
    // reach y's corresponding edge from the required side.
    if (rs.side == Side::below)
        return std::min(at_lo.lo(), at_hi.lo()) > m.y.lo();
    return std::max(at_lo.hi(), at_hi.hi()) < m.y.hi();
}

int count_failures(const ParamBox& box, const Dataset& d) {
    if (box.is_empty()) throw std::invalid_argument("count_failures: empty box");
    int n = 0;
    for (const Measurement& m : d)
        if (misses_rectangle(box, m)) ++n;
    return n;
}

}  // namespace boxline
