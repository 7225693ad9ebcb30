#include "gns/gapset.hpp"

#include <algorithm>
#include <stdexcept>

namespace gns {

GapSet::GapSet(int d, std::vector<Point> gaps) : d_(d), gaps_(std::move(gaps)) {
    if (d_ < 1)
        throw std::invalid_argument("gap set dimension must be positive");
    for (const Point& p : gaps_) {
        if (p.dim() != d_)
            throw std::invalid_argument("gap " + p.str() + " has wrong dimension");
        if (p.is_zero())
            throw std::invalid_argument("zero vector cannot be a gap");
    }
    std::sort(gaps_.begin(), gaps_.end());
    if (std::adjacent_find(gaps_.begin(), gaps_.end()) != gaps_.end())
        throw std::invalid_argument("duplicate gap in gap set");
}

bool GapSet::contains(const Point& p) const {
    return std::binary_search(gaps_.begin(), gaps_.end(), p);
}

bool GapSet::in_semigroup(const Point& p) const {
    return p.dim() == d_ && !contains(p);
}

GapSet GapSet::without(const Point& p) const {
    if (!contains(p))
        throw std::invalid_argument(p.str() + " is not a gap of this set");
    std::vector<Point> rest;
    rest.reserve(gaps_.size() - 1);
    for (const Point& g : gaps_)
        if (g != p) rest.push_back(g);
    return GapSet(d_, std::move(rest));
}

GapSet GapSet::with(const Point& p) const {
    std::vector<Point> all = gaps_;
    all.push_back(p);
    return GapSet(d_, std::move(all));
}

std::string ClosureViolation::str() const {
    return gap.str() + " = " + a.str() + " + " + b.str() +
           " with both summands outside the gap set";
}

std::optional<ClosureViolation> closure_violation(const GapSet& gs) {
    for (const Point& h : gs.gaps()) {
        for (const Point& a : box_points(h)) {
            if (a.is_zero() || a == h) continue;
            const Point b = *subtract(h, a);
            if (!gs.contains(a) && !gs.contains(b))
                return ClosureViolation{h, a, b};
        }
    }
    return std::nullopt;
}

bool is_valid_gap_set(const GapSet& gs) {
    return !closure_violation(gs).has_value();
}

}  // namespace gns
