#pragma once
#include "limshape/rational.hpp"

#include <vector>

namespace limshape {

struct Point {
    Rational x, y;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// (b - a) x (c - a)
Rational cross(const Point& a, const Point& b, const Point& c);

// Simple polygon, counterclockwise, implicit closure. Not necessarily convex:
// complements of limiting shapes are star-shaped but usually not convex.
struct RationalPolygon {
    std::vector<Point> vertices;

    bool empty() const { return vertices.size() < 3; }
    Rational area() const;  // shoelace, absolute value
    bool is_convex() const;
    bool contains(const Point& p) const;  // closed polygon, convex only
    friend bool operator==(const RationalPolygon&, const RationalPolygon&) = default;
};

Rational signed_area(const std::vector<Point>& pts);

// Drops repeated points, collinear middle vertices and zero-width spikes;
// orients counterclockwise starting at the smallest (x, y). Fewer than three survivors means empty.
RationalPolygon make_polygon(std::vector<Point> pts);

// Exact monotone-chain hull, counterclockwise, no collinear vertices.
RationalPolygon convex_hull(std::vector<Point> pts);

// Keeps the part of the polygon where a*x + b*y >= c.
RationalPolygon clip(const RationalPolygon& P, const Rational& a, const Rational& b, const Rational& c);

// The triangle x, y >= 0, x + y <= t.
RationalPolygon simplex(const Rational& t);

}  // namespace limshape
