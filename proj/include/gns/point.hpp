#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace gns {

// Lattice point in N_0^d.  Coordinates stay tiny at the scales this library
// targets, so plain int is plenty.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<int> coords);
    Point(std::initializer_list<int> coords) : Point(std::vector<int>(coords)) {}

    int dim() const noexcept { return static_cast<int>(c_.size()); }
    int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& coords() const noexcept { return c_; }

    bool is_zero() const noexcept;
    int degree() const noexcept;  // coordinate sum

    Point operator+(const Point& b) const;
    Point scaled(int k) const;

    // equality and *lexicographic* order; the latter is the canonical storage
    // order for point sets, not the semigroup partial order
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;

    std::string str() const;  // "(1,2)"
    friend std::ostream& operator<<(std::ostream& os, const Point& p) {
        return os << p.str();
    }

private:
    std::vector<int> c_;
};

Point zero_point(int d);

// natural (componentwise) partial order on N_0^d
bool partial_leq(const Point& a, const Point& b);
bool partial_lt(const Point& a, const Point& b);  // a <= b and a != b

// a - b if the difference stays inside N_0^d, nullopt otherwise
std::optional<Point> subtract(const Point& a, const Point& b);

// componentwise max; throws std::invalid_argument on empty input
Point lub(std::span<const Point> pts);

// all x with 0 <= x <= bound componentwise, in lex ascending order
std::vector<Point> box_points(const Point& bound);

// the points of pts that are maximal under the natural partial order,
// returned in canonical (lex) order
std::vector<Point> maximal_points(std::span<const Point> pts);

enum class MonomialOrder { lex, grlex };

// strict total order extending the natural partial order
bool monomial_less(MonomialOrder o, const Point& a, const Point& b);

MonomialOrder parse_order(const std::string& name);  // "lex" | "grlex"
std::string order_name(MonomialOrder o);

}  // namespace gns
