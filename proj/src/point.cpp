#include "gns/point.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gns {

namespace {

void require_same_dim(const Point& a, const Point& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("dimension mismatch: " + a.str() + " vs " + b.str());
}

}  // namespace

Point::Point(std::vector<int> coords) : c_(std::move(coords)) {
    if (c_.empty())
        throw std::invalid_argument("point needs at least one coordinate");
    for (int v : c_)
        if (v < 0)
            throw std::invalid_argument("negative coordinate in point");
}

bool Point::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
}

int Point::degree() const noexcept {
    return std::accumulate(c_.begin(), c_.end(), 0);
}

Point Point::operator+(const Point& b) const {
    require_same_dim(*this, b);
    std::vector<int> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        out[i] = c_[i] + b.c_[i];
    return Point(std::move(out));
}

Point Point::scaled(int k) const {
    if (k < 0)
        throw std::invalid_argument("negative scale factor");
    std::vector<int> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        out[i] = k * c_[i];
    return Point(std::move(out));
}

std::string Point::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c_[i]);
    }
    s += ')';
    return s;
}

Point zero_point(int d) {
    if (d < 1)
        throw std::invalid_argument("dimension must be positive");
    return Point(std::vector<int>(static_cast<std::size_t>(d), 0));
}

bool partial_leq(const Point& a, const Point& b) {
    require_same_dim(a, b);
    for (int i = 0; i < a.dim(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool partial_lt(const Point& a, const Point& b) {
    return partial_leq(a, b) && a != b;
}

std::optional<Point> subtract(const Point& a, const Point& b) {
    require_same_dim(a, b);
    std::vector<int> out(static_cast<std::size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i] < b[i]) return std::nullopt;
        out[static_cast<std::size_t>(i)] = a[i] - b[i];
    }
    return Point(std::move(out));
}

Point lub(std::span<const Point> pts) {
    if (pts.empty())
        throw std::invalid_argument("lub of an empty point set");
    std::vector<int> out = pts.front().coords();
    for (const Point& p : pts.subspan(1)) {
        require_same_dim(pts.front(), p);
        for (int i = 0; i < p.dim(); ++i)
            out[static_cast<std::size_t>(i)] = std::max(out[static_cast<std::size_t>(i)], p[i]);
    }
    return Point(std::move(out));
}

std::vector<Point> box_points(const Point& bound) {
    std::vector<Point> out;
    const int d = bound.dim();
    std::vector<int> cur(static_cast<std::size_t>(d), 0);
    while (true) {
        out.push_back(Point(cur));
        int i = d - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == bound[i]) {
            cur[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return out;
}

std::vector<Point> maximal_points(std::span<const Point> pts) {
    std::vector<Point> out;
    for (const Point& p : pts) {
        bool dominated = false;
        for (const Point& q : pts)
            if (partial_lt(p, q)) { dominated = true; break; }
        if (!dominated) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool monomial_less(MonomialOrder o, const Point& a, const Point& b) {
    require_same_dim(a, b);
    switch (o) {
        case MonomialOrder::lex:
            return a.coords() < b.coords();
        case MonomialOrder::grlex: {
            const int da = a.degree(), db = b.degree();
            if (da != db) return da < db;
            return a.coords() < b.coords();
        }
    }
    throw std::logic_error("unreachable");
}

MonomialOrder parse_order(const std::string& name) {
    if (name == "lex") return MonomialOrder::lex;
    if (name == "grlex") return MonomialOrder::grlex;
    throw std::invalid_argument("unknown monomial order: " + name);
}

std::string order_name(MonomialOrder o) {
    return o == MonomialOrder::lex ? "lex" : "grlex";
}

}  // namespace gns
