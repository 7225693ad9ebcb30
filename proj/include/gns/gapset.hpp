#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gns/point.hpp"

namespace gns {

// Finite gap set H of a candidate generalized numerical semigroup
// S = N_0^d \ H.  Stored canonically: lex-sorted, duplicate-free, every point
// nonzero and of dimension d.  Whether the complement is actually closed under
// addition is a separate question (closure_violation below); GapSet itself
// only enforces shape, so invalid candidates can be represented and rejected.
class GapSet {
public:
    GapSet(int d, std::vector<Point> gaps);  // throws std::invalid_argument on shape errors

    int dim() const noexcept { return d_; }
    int genus() const noexcept { return static_cast<int>(gaps_.size()); }
    const std::vector<Point>& gaps() const noexcept { return gaps_; }

    bool contains(const Point& p) const;      // p in H
    bool in_semigroup(const Point& p) const;  // equivalent to !contains for points of N_0^d

    GapSet without(const Point& p) const;  // H \ {p}; throws if p is not a gap
    GapSet with(const Point& p) const;     // H u {p}

    friend bool operator==(const GapSet&, const GapSet&) = default;
    friend auto operator<=>(const GapSet&, const GapSet&) = default;

private:
    int d_ = 0;
    std::vector<Point> gaps_;
};

// One addition that escapes the complement: gap = a + b with a, b both
// nonzero non-gaps.  Its existence is exactly failure of closure.
struct ClosureViolation {
    Point gap, a, b;
    std::string str() const;
};

// First violation in deterministic order (gaps canonically, decompositions in
// lex order of the first part), or nullopt when N_0^d \ H is a semigroup.
std::optional<ClosureViolation> closure_violation(const GapSet& gs);
bool is_valid_gap_set(const GapSet& gs);

}  // namespace gns
