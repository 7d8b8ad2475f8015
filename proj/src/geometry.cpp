#include "limshape/geometry.hpp"

#include <algorithm>

namespace limshape {

Rational cross(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

Rational signed_area(const std::vector<Point>& pts) {
    Rational s(0);
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = pts[i];
        const Point& q = pts[(i + 1) % n];
        s += p.x * q.y - q.x * p.y;
    }
    return s / Rational(2);
}

Rational RationalPolygon::area() const { return empty() ? Rational(0) : abs(signed_area(vertices)); }

bool RationalPolygon::is_convex() const {
    const std::size_t n = vertices.size();
    if (n < 3) return true;
    for (std::size_t i = 0; i < n; ++i)
        if (cross(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]).sign() < 0) return false;
    return true;
}

bool RationalPolygon::contains(const Point& p) const {
    const std::size_t n = vertices.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (cross(vertices[i], vertices[(i + 1) % n], p).sign() < 0) return false;
    return true;
}

RationalPolygon make_polygon(std::vector<Point> pts) {
    bool changed = true;
    while (changed && pts.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < pts.size() && pts.size() >= 3; ++i) {
            const std::size_t n = pts.size();
            const Point& prev = pts[(i + n - 1) % n];
            const Point& cur = pts[i];
            const Point& next = pts[(i + 1) % n];
            // duplicates, straight-through points and back-tracking spikes all
            // have zero cross product at cur
            if (cur == next || cross(prev, cur, next).sign() == 0) {
                pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (pts.size() < 3) return {};
    if (signed_area(pts).sign() < 0) std::reverse(pts.begin(), pts.end());
    std::rotate(pts.begin(), std::min_element(pts.begin(), pts.end()), pts.end());
    return RationalPolygon{std::move(pts)};
}

RationalPolygon convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return {};
    std::vector<Point> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p).sign() <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return make_polygon(std::move(h));
}

RationalPolygon clip(const RationalPolygon& P, const Rational& a, const Rational& b, const Rational& c) {
    if (P.empty()) return {};
    auto val = [&](const Point& p) { return a * p.x + b * p.y - c; };
    std::vector<Point> out;
    const auto& v = P.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& cur = v[i];
        const Point& nxt = v[(i + 1) % v.size()];
        Rational fc = val(cur), fn = val(nxt);
        if (fc.sign() >= 0) out.push_back(cur);
        if ((fc.sign() > 0 && fn.sign() < 0) || (fc.sign() < 0 && fn.sign() > 0)) {
            Rational s = fc / (fc - fn);
            out.push_back(Point{cur.x + s * (nxt.x - cur.x), cur.y + s * (nxt.y - cur.y)});
        }
    }
    return make_polygon(std::move(out));
}

RationalPolygon simplex(const Rational& t) {
    if (t.sign() <= 0) return {};
    return RationalPolygon{{Point{Rational(0), Rational(0)}, Point{t, Rational(0)}, Point{Rational(0), t}}};
}

}  // namespace limshape
