#include "limshape/planar.hpp"

#include "limshape/errors.hpp"

#include <algorithm>
#include <numeric>

namespace limshape {

namespace {

Rational rat(std::int64_t v) { return Rational(static_cast<long long>(v)); }

std::vector<Point> merge_collinear(const std::vector<Point>& pts) {
    std::vector<Point> out;
    for (const auto& p : pts) {
        if (!out.empty() && out.back() == p) continue;
        while (out.size() >= 2 && cross(out[out.size() - 2], out.back(), p).sign() == 0) out.pop_back();
        out.push_back(p);
    }
    return out;
}

// Sutherland-Hodgman against x <= t, keeping the input orientation.
std::vector<Point> clip_right(const std::vector<Point>& v, const Rational& t) {
    std::vector<Point> out;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& cur = v[i];
        const Point& nxt = v[(i + 1) % n];
        const bool in_cur = cur.x <= t, in_nxt = nxt.x <= t;
        if (in_cur) out.push_back(cur);
        if (in_cur != in_nxt && cur.x != t && nxt.x != t) {
            Rational s = (t - cur.x) / (nxt.x - cur.x);
            out.push_back({t, cur.y + s * (nxt.y - cur.y)});
        }
    }
    return out;
}

}  // namespace

void validate_configuration(const LineConfiguration& c) {
    if (c.counts.empty()) throw ValidationError("counts: at least one line required");
    for (auto a : c.counts)
        if (a < 1) throw ValidationError("counts: every line needs a positive point count");
    if (c.shared_intersection) {
        if (c.counts.size() != 2) throw ValidationError("counts: shared_intersection needs exactly two lines");
        const auto a1 = c.counts[0], a2 = c.counts[1];
        if (a1 < a2) throw ValidationError("counts: need a_1 >= a_2");
        if (a1 * a2 <= a1 + a2)
            throw ValidationError("counts: need a_1*a_2 > a_1+a_2, got " + std::to_string(a1 * a2) +
                                  " <= " + std::to_string(a1 + a2));
        return;
    }
    for (std::size_t i = 1; i < c.counts.size(); ++i)
        if (c.counts[i] >= c.counts[i - 1])
            throw ValidationError("counts: must be strictly decreasing (a_" + std::to_string(i) + " = " +
                                  std::to_string(c.counts[i - 1]) + ", a_" + std::to_string(i + 1) + " = " +
                                  std::to_string(c.counts[i]) + ")");
}

std::int64_t divisibility_modulus(const LineConfiguration& c) {
    if (c.shared_intersection) return c.counts[0] * (c.counts[0] + c.counts[1]);
    // the last line's count never appears in a denominator
    std::int64_t l = 1;
    for (std::size_t i = 0; i + 1 < c.counts.size(); ++i) l = std::lcm(l, c.counts[i]);
    return l;
}

ReductionVector reduction_vector(const LineConfiguration& c, std::int64_t m, bool allow_approximate) {
    validate_configuration(c);
    if (m < 1) throw ValidationError("m must be >= 1");
    ReductionVector u;
    u.multiplicity = m;
    const std::int64_t mod = divisibility_modulus(c);
    if (m % mod != 0) {
        if (!allow_approximate)
            throw ValidationError("m = " + std::to_string(m) + " is not a multiple of " + std::to_string(mod) +
                                  "; pass approximate mode to round");
        u.approximate = true;
    }
    const std::size_t n = c.counts.size();
    std::vector<std::int64_t> mult(n, m);  // common multiplicity of each line's own points
    std::int64_t shared = c.shared_intersection ? m : 0;
    std::vector<std::int64_t> w(n);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i) w[i] = c.counts[i] * mult[i] + (c.shared_intersection ? shared : 0);
        auto best = std::max_element(w.begin(), w.end());  // first maximum: lowest index
        if (*best == 0) break;
        const auto i = static_cast<std::size_t>(best - w.begin());
        u.entries.push_back(*best);
        mult[i] = std::max<std::int64_t>(0, mult[i] - 1);
        if (c.shared_intersection) shared = std::max<std::int64_t>(0, shared - 1);
    }
    u.entries.push_back(0);
    return u;
}

PLGraph dhf_envelope(const ReductionVector& u) {
    if (u.multiplicity < 1) throw ValidationError("reduction vector without multiplicity");
    // row i covers x in [i, i + u_i) at height i; the envelope touches (i + u_i, i)
    std::vector<std::pair<std::int64_t, std::int64_t>> st;
    auto cr = [](auto o, auto a, auto b) {
        return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
    };
    for (std::size_t i = 0; i < u.entries.size(); ++i) {
        std::pair<std::int64_t, std::int64_t> p{static_cast<std::int64_t>(i) + u.entries[i],
                                                 static_cast<std::int64_t>(i)};
        while (st.size() >= 2 && cr(st[st.size() - 2], st.back(), p) >= 0) st.pop_back();
        st.push_back(p);
    }
    std::vector<Point> pts{{Rational(0), Rational(0)}};
    const Rational m = rat(u.multiplicity);
    for (auto it = st.rbegin(); it != st.rend(); ++it) pts.push_back({rat(it->first) / m, rat(it->second) / m});
    return PLGraph{merge_collinear(pts)};
}

PLGraph dhf_vertices_closed_form(const std::vector<std::int64_t>& counts) {
    validate_configuration(LineConfiguration{counts, false});
    const std::size_t n = counts.size();
    std::vector<std::int64_t> a(counts);
    a.push_back(0);  // a_{n+1}
    std::vector<Point> pts{{Rational(0), Rational(0)}, {rat(static_cast<std::int64_t>(n)), rat(static_cast<std::int64_t>(n))}};
    // 0-based: vertex i uses a[i] (= a_{i+1}) and S_i = sum_{j <= k < i} (a[k] - a[k+1]) / a[j]
    for (std::size_t i = n - 1; i >= 1; --i) {
        Rational S(0);
        for (std::size_t j = 0; j < i; ++j)
            for (std::size_t k = j; k < i; ++k) S += rat(a[k] - a[k + 1]) / rat(a[j]);
        pts.push_back({rat(a[i]) + S, S});
    }
    pts.push_back({rat(a[0]), Rational(0)});
    return PLGraph{merge_collinear(pts)};
}

PLGraph two_line_vertices(std::int64_t a1, std::int64_t a2) {
    validate_configuration(LineConfiguration{{a1, a2}, true});
    std::vector<Point> pts{{Rational(0), Rational(0)}, {Rational(2), Rational(2)}};
    if (a1 > a2) {
        pts.push_back({rat(a1 * a2 + a1 + a2) / rat(a1 + a2), Rational(1)});
        pts.push_back({rat(a2 + 1), rat(a1 - a2) / rat(a1)});
    } else {
        pts.push_back({rat(a1 + 2) / Rational(2), Rational(1)});
    }
    pts.push_back({rat(a1 + 1), Rational(0)});
    return PLGraph{merge_collinear(pts)};
}

PLGraph truncate_graph(const PLGraph& g, const Rational& t) {
    if (g.vertices.empty()) return g;
    auto out = clip_right(g.vertices, t);
    // the closing edge back to (0,0) runs along y = 0 and may contribute (t, 0)
    return PLGraph{merge_collinear(out)};
}

Rational area_under_graph(const PLGraph& g) {
    if (g.vertices.size() < 3) return Rational(0);
    return abs(signed_area(g.vertices));
}

RationalPolygon gamma_vertices(const PLGraph& g, const Rational& t) {
    if (t.sign() < 0) throw ValidationError("t must be non-negative, got " + t.str());
    auto region = clip_right(g.vertices, t);
    std::vector<Point> img;
    for (const auto& p : region) img.push_back({p.y, p.x - p.y});
    return make_polygon(std::move(img));
}

PLGraph graph_from_gamma(const RationalPolygon& gamma) {
    const auto& v = gamma.vertices;
    if (v.empty()) return {};
    const Point origin{Rational(0), Rational(0)};
    auto start = std::find(v.begin(), v.end(), origin);
    if (start == v.end()) throw ValidationError("Gamma polygon does not contain the origin as a vertex");
    std::vector<Point> out;
    const std::size_t n = v.size(), s = static_cast<std::size_t>(start - v.begin());
    for (std::size_t k = 0; k < n; ++k) {
        const Point& p = v[(s + k) % n];
        out.push_back({p.x + p.y, p.x});
        if (k > 0 && p.x.sign() == 0) break;  // reached the y-axis
    }
    return PLGraph{merge_collinear(out)};
}

}  // namespace limshape
