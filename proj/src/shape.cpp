#include "limshape/shape.hpp"

#include "limshape/errors.hpp"

#include <algorithm>

namespace limshape {

namespace {

Rational rat(std::int64_t v) { return Rational(static_cast<long long>(v)); }

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < k) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

bool covered(const StaircaseRegion& R, const ExponentVector& b) {
    for (const auto& [c, slack] : R.corners)
        if (monomial_divides(c, b)) return true;
    return false;
}

void count_rec(const StaircaseRegion& R, ExponentVector& b, std::size_t pos, std::int64_t left, std::int64_t& n) {
    if (pos == b.size()) {
        if (covered(R, b)) ++n;
        return;
    }
    for (std::int64_t e = 0; e <= left; ++e) {
        b[pos] = e;
        count_rec(R, b, pos + 1, left - e, n);
    }
}

MonomialIdeal planar_ideal(const GradedFamily& F, std::int64_t m) {
    if (F.vars > 3)
        throw DimensionUnsupported("limiting shapes are planar: family has " + std::to_string(F.vars) +
                                   " variables, at most 3 supported");
    return F.at(m).padded(3);
}

bool on_hypotenuse(const Point& p, const Rational& t) { return p.x + p.y == t; }

}  // namespace

StaircaseRegion staircase_region(const MonomialIdeal& I, std::int64_t m, const Rational& t) {
    if (m < 1) throw ValidationError("m must be >= 1");
    if (t.sign() < 0) throw ValidationError("t must be non-negative, got " + t.str());
    StaircaseRegion R;
    R.dim = I.vars() - 1;
    R.bound = rat(m) * t;
    std::vector<std::pair<ExponentVector, Rational>> cand;
    for (const auto& g : I.gens()) {
        if (rat(degree(g)) > R.bound) continue;
        ExponentVector prefix(g.begin(), g.end() - 1);
        cand.emplace_back(std::move(prefix), R.bound - rat(g.back()));
    }
    std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) {
        auto da = degree(a.first), db = degree(b.first);
        return da != db ? da < db : (a.first != b.first ? a.first < b.first : b.second < a.second);
    });
    for (auto& c : cand) {
        bool dominated = false;
        for (const auto& k : R.corners)
            if (monomial_divides(k.first, c.first)) {
                dominated = true;
                break;
            }
        if (!dominated) R.corners.push_back(std::move(c));
    }
    return R;
}

GammaRegion gamma_region(const MonomialIdeal& I, std::int64_t m, const Rational& t) {
    return GammaRegion{staircase_region(I, m, t)};
}

std::int64_t lattice_count(const SimplexRegion& R) {
    if (R.bound.sign() < 0) return 0;
    const auto D = R.bound.floor_int();
    return binom(D + static_cast<std::int64_t>(R.dim), static_cast<std::int64_t>(R.dim));
}

std::int64_t lattice_count(const StaircaseRegion& R) {
    if (R.corners.empty() || R.bound.sign() < 0) return 0;
    ExponentVector b(R.dim, 0);
    std::int64_t n = 0;
    count_rec(R, b, 0, R.bound.floor_int(), n);
    return n;
}

std::int64_t lattice_count(const GammaRegion& G) {
    return lattice_count(SimplexRegion{G.staircase.dim, G.staircase.bound}) - lattice_count(G.staircase);
}

Rational region_volume(const SimplexRegion& R) {
    if (R.dim == 1) return R.bound;
    if (R.dim == 2) return R.bound * R.bound / rat(2);
    throw DimensionUnsupported("exact volume only for dimension 1 or 2 (got " + std::to_string(R.dim) +
                               "); use lattice counts instead");
}

Rational region_volume(const StaircaseRegion& R) {
    if (R.dim != 1 && R.dim != 2)
        throw DimensionUnsupported("exact volume only for dimension 1 or 2 (got " + std::to_string(R.dim) +
                                   "); use lattice counts instead");
    if (R.corners.empty()) return Rational(0);
    const Rational& s = R.bound;
    if (R.dim == 1) {
        Rational lo = rat(R.corners.front().first[0]);
        for (const auto& c : R.corners) lo = min(lo, rat(c.first[0]));
        return max(Rational(0), s - lo);
    }
    // step function h(x) = min{c_1 : c_0 <= x}; the region over x is [h, s - x]
    std::vector<std::pair<std::int64_t, std::int64_t>> cs;
    for (const auto& c : R.corners) cs.emplace_back(c.first[0], c.first[1]);
    std::sort(cs.begin(), cs.end());
    Rational vol(0);
    std::int64_t h = cs.front().second;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        h = std::min(h, cs[i].second);
        Rational a = rat(cs[i].first);
        Rational b = i + 1 < cs.size() ? rat(cs[i + 1].first) : s;
        Rational u = s - rat(h);
        b = min(b, u);
        if (b > a) vol += ((u - a) * (u - a) - (u - b) * (u - b)) / rat(2);
    }
    return vol;
}

Rational region_volume(const GammaRegion& G) {
    return region_volume(SimplexRegion{G.staircase.dim, G.staircase.bound}) - region_volume(G.staircase);
}

Rational region_volume(const RationalPolygon& P) { return P.area(); }

Shape limiting_shape(const GradedFamily& F, const Rational& t, std::int64_t M) {
    if (t.sign() < 0) throw ValidationError("t must be non-negative, got " + t.str());
    if (M < 1) throw ValidationError("max-m must be >= 1");
    if (F.vars > 3)
        throw DimensionUnsupported("limiting shapes are planar: family has " + std::to_string(F.vars) +
                                   " variables, at most 3 supported");
    Shape S;
    S.t = t;
    if (F.exact_shape()) {
        S.exact = true;
        S.polygon = simplex(t);
        for (const auto& c : F.constraints) S.polygon = clip(S.polygon, c.ca, c.cb, c.rhs);
        return S;
    }
    std::vector<Point> pts;
    for (std::int64_t m = 1; m <= M; ++m) {
        const auto I = planar_ideal(F, m);
        for (const auto& g : I.gens()) {
            if (rat(degree(g)) > rat(m) * t) continue;
            Rational c0 = rat(g[0]) / rat(m), c1 = rat(g[1]) / rat(m);
            pts.push_back({c0, c1});
            pts.push_back({t - c1, c1});
            pts.push_back({c0, t - c0});
        }
    }
    S.polygon = convex_hull(std::move(pts));
    return S;
}

// Boundary of delta inside T_t, from A (the hypotenuse vertex with largest x)
// clockwise to B (the one with smallest x).
static std::vector<Point> lower_chain(const Shape& delta) {
    const Rational& t = delta.t;
    const auto& v = delta.polygon.vertices;
    const std::size_t n = v.size();
    std::size_t ia = n, ib = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (!on_hypotenuse(v[i], t)) continue;
        if (ia == n || v[i].x > v[ia].x) ia = i;
        if (ib == n || v[i].x < v[ib].x) ib = i;
    }
    if (ia == n) throw ComputationError("shape does not reach the hypotenuse of T_t");
    std::vector<Point> chain{v[ia]};
    for (std::size_t i = (ia + n - 1) % n; i != ib; i = (i + n - 1) % n) chain.push_back(v[i]);
    if (ib != ia) chain.push_back(v[ib]);
    return chain;
}

Shape complement_in_simplex(const Shape& delta) {
    const Rational& t = delta.t;
    Shape G{RationalPolygon{}, t, delta.exact};
    if (delta.polygon.empty()) {
        G.polygon = simplex(t);
        return G;
    }
    const auto chain = lower_chain(delta);
    const Point& A = chain.front();
    const Point& B = chain.back();
    std::vector<Point> pts{B};
    if (B != Point{Rational(0), t}) pts.push_back({Rational(0), t});
    pts.push_back({Rational(0), Rational(0)});
    if (A != Point{t, Rational(0)}) pts.push_back({t, Rational(0)});
    pts.insert(pts.end(), chain.begin(), chain.end() - 1);
    G.polygon = make_polygon(std::move(pts));
    return G;
}

Shape gamma_limit(const GradedFamily& F, const Rational& t, std::int64_t M) {
    return complement_in_simplex(limiting_shape(F, t, M));
}

Rational waldschmidt_from_shape(const Shape& gamma) {
    if (!gamma.exact) throw ComputationError("waldschmidt_from_shape: shape is an inner approximation, refusing");
    if (gamma.polygon.empty()) return Rational(0);
    Rational best(0);
    for (const auto& p : gamma.polygon.vertices)
        if (p.y.sign() == 0) best = max(best, p.x);
    if (best == gamma.t)
        throw ComputationError("waldschmidt_from_shape: shape does not meet the x0-axis below t = " + gamma.t.str() +
                               "; increase t");
    return best;
}

Rational areg_from_shape(const Shape& delta) {
    if (!delta.exact) throw ComputationError("areg_from_shape: shape is an inner approximation, refusing");
    if (delta.polygon.empty()) throw ComputationError("areg_from_shape: empty shape");
    // Past the last vertex the boundary continues along x0 = const at the top
    // and x1 = const at the bottom; anything else means a vertex lies beyond t.
    const auto chain = lower_chain(delta);
    const bool bottom_ok = chain.size() >= 2 && chain[0].y == chain[1].y;
    const bool top_ok = chain.size() >= 2 && chain[chain.size() - 1].x == chain[chain.size() - 2].x;
    if (!bottom_ok || !top_ok)
        throw ComputationError("areg_from_shape: extremal points not all visible at t = " + delta.t.str() +
                               "; increase t");
    Rational best(0);
    for (const auto& p : chain)
        if (!on_hypotenuse(p, delta.t)) best = max(best, p.x + p.y);
    return best;
}

Rational suggested_t(const GradedFamily& F) {
    if (!F.exact_shape()) throw ValidationError("family '" + F.label + "' has no closed-form shape; pass --t");
    Rational top(0);
    for (const auto& c : F.constraints) {
        top = max(top, c.rhs / c.ca);
        if (c.cb.sign() > 0) top = max(top, c.rhs / c.cb);
    }
    return top + Rational(1);
}

AhfResult ahf(const GradedFamily& F, const Rational& t, std::int64_t M, bool diagnostics) {
    AhfResult r;
    const Shape G = gamma_limit(F, t, M);
    r.value = G.polygon.area();
    r.exact = G.exact;
    if (diagnostics)
        for (std::int64_t m = 1; m <= M; ++m) {
            auto count = lattice_count(gamma_region(planar_ideal(F, m), m, t));
            r.sequence.emplace_back(m, rat(count) / rat(m * m));
        }
    return r;
}

std::vector<std::vector<Rational>> lift_slice(const RationalPolygon& slice, const Rational& t) {
    std::vector<std::vector<Rational>> out;
    for (const auto& p : slice.vertices) out.push_back({p.x, p.y, t - p.x - p.y});
    return out;
}

}  // namespace limshape
