// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failures (capped at 1).

#include "limshape/cli.hpp"
#include "limshape/errors.hpp"
#include "limshape/family.hpp"
#include "limshape/hilbert.hpp"
#include "limshape/json_io.hpp"
#include "limshape/planar.hpp"
#include "limshape/shape.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace limshape;

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }
Rational ri(std::int64_t n) { return Rational(static_cast<long long>(n)); }
Point P(Rational x, Rational y) { return Point{std::move(x), std::move(y)}; }

struct Outcome {
    bool ok = true;
    std::string note;
    void fail(const std::string& why) {
        if (ok) note = why;
        ok = false;
    }
    void expect(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) ++failures;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << buf << ")";
    if (!o.note.empty()) std::cout << ": " << o.note;
    std::cout << std::endl;
}

std::vector<std::pair<Rational, Rational>> chain_bp() { return {{r(4), r(0)}, {r(3), r(1)}, {r(1), r(4)}, {r(0), r(7)}}; }

// Borel base for the power family: (x0^2, x0*x1, x1^3) in three variables.
MonomialIdeal power_base() { return MonomialIdeal(3, {{2, 0, 0}, {1, 1, 0}, {0, 3, 0}}); }

std::vector<GradedFamily> builtins() {
    return {make_power_family(power_base()),
            make_doubling_family(0),
            make_doubling_family(1),
            make_halfplane_family(r(2), r(3)),
            make_halfplane_family(r(7, 5), r(9, 4)),
            make_ceiling_family(r(22, 7)),
            make_chain_family(chain_bp()),
            make_oscillating_family(1, 2, 2)};
}

std::string pt(const Point& p) { return "(" + p.x.str() + "," + p.y.str() + ")"; }

std::string show(const std::vector<Point>& v) {
    std::string s;
    for (const auto& p : v) s += pt(p);
    return s;
}

// Strictly decreasing tuples with entries in [1, top] and length in [1, maxlen].
void decreasing_tuples(std::int64_t top, std::size_t maxlen, std::vector<std::int64_t>& cur,
                       std::vector<std::vector<std::int64_t>>& out) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == maxlen) return;
    std::int64_t hi = cur.empty() ? top : cur.back() - 1;
    for (std::int64_t a = hi; a >= 1; --a) {
        cur.push_back(a);
        decreasing_tuples(top, maxlen, cur, out);
        cur.pop_back();
    }
}

}  // namespace

int main() {
    criterion(1, "planar-vertices 10,8,5,3 exact", [](Outcome& o) {
        auto t0 = std::chrono::steady_clock::now();
        std::ostringstream out, err;
        int code = run_cli({"planar-vertices", "--counts", "10,8,5,3"}, out, err);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.expect(code == 0, "exit code " + std::to_string(code));
        auto g = graph_from_json(json::parse(out.str()));
        std::vector<Point> want{P(r(0), r(0)), P(r(4), r(4)), P(r(189, 40), r(69, 40)),
                                P(r(47, 8), r(7, 8)), P(r(41, 5), r(1, 5)), P(r(10), r(0))};
        o.expect(g.vertices == want, "got " + show(g.vertices));
        o.expect(secs < 1.0, "took " + std::to_string(secs) + "s");
    });

    criterion(2, "closed form equals reduction-vector envelope, entries <= 12, length <= 4", [](Outcome& o) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<std::vector<std::int64_t>> tuples;
        std::vector<std::int64_t> cur;
        decreasing_tuples(12, 4, cur, tuples);
        std::size_t checked = 0;
        for (const auto& c : tuples) {
            std::int64_t L = 1;
            for (auto a : c) L = std::lcm(L, a);
            auto closed = dhf_vertices_closed_form(c);
            for (std::int64_t k : {1, 2}) {
                auto env = dhf_envelope(reduction_vector(LineConfiguration{c, false}, k * L));
                ++checked;
                if (!(env == closed)) {
                    std::string s;
                    for (auto a : c) s += std::to_string(a) + " ";
                    o.fail("mismatch at counts " + s + "m=" + std::to_string(k * L));
                }
            }
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.expect(checked == 2 * 793, "checked " + std::to_string(checked));
        o.expect(secs < 60.0, "sweep took " + std::to_string(secs) + "s");
    });

    criterion(3, "two lines through a shared point", [](Outcome& o) {
        std::size_t checked = 0;
        for (std::int64_t a1 = 1; a1 <= 10; ++a1)
            for (std::int64_t a2 = 1; a2 <= a1; ++a2) {
                if (a1 * a2 <= a1 + a2) continue;
                LineConfiguration c{{a1, a2}, true};
                auto g = two_line_vertices(a1, a2);
                std::int64_t mod = divisibility_modulus(c);
                for (std::int64_t k : {1, 2}) {
                    auto env = dhf_envelope(reduction_vector(c, k * mod));
                    ++checked;
                    o.expect(env == g, "envelope differs at " + std::to_string(a1) + "," + std::to_string(a2));
                }
                o.expect(area_under_graph(g) == Rational(static_cast<long long>(a1 + a2 + 1), 2),
                         "area at " + std::to_string(a1) + "," + std::to_string(a2));
            }
        o.expect(checked > 0, "nothing checked");
    });

    criterion(4, "Hilbert functions of the doubling families, m <= 8, t <= 40", [](Outcome& o) {
        auto I = make_doubling_family(0), J = make_doubling_family(1);
        for (std::int64_t m = 1; m <= 8; ++m) {
            const std::int64_t p = std::int64_t{1} << m;
            const Rational M = ri(m);
            auto Im = I.at(m), Jm = J.at(m);
            // t runs over multiples of 1/(2m), so every integer degree mt up to 40m is hit
            for (std::int64_t k = 0; k <= 80 * m; ++k) {
                Rational t(static_cast<long long>(k), static_cast<long long>(2 * m));
                Rational mt = M * t;
                std::int64_t hi = hilbert_function_extended(Im, mt);
                std::int64_t hj = hilbert_function_extended(Jm, mt);
                std::int64_t fl = mt.floor_int();
                // the piecewise formula for I_m describes [0,1) cut out of [0, mt]; below mt = 1
                // only the origin is left
                std::int64_t want_i = mt < r(1) ? 1 : (t >= Rational(static_cast<long long>(p + 1)) / M ? 1 : 2);
                std::int64_t want_j = t <= ri(p) / M ? 2 * fl + 1 : fl + 1 + p;
                if (hi != want_i) o.fail("I_" + std::to_string(m) + " at t=" + t.str());
                if (hj != want_j) o.fail("J_" + std::to_string(m) + " at t=" + t.str());
            }
            std::int64_t reg = regularity_index(Im);
            o.expect((ri(reg) / M).floor_int() == (ri(p + 1) / M).floor_int(), "ri(I_" + std::to_string(m) + ") = " + std::to_string(reg));
            o.expect(reg == p + 1, "ri(I_" + std::to_string(m) + ") in degrees = " + std::to_string(reg));
        }
    });

    criterion(5, "halfplane shape invariants", [](Outcome& o) {
        for (auto [q1, q2] : std::vector<std::pair<Rational, Rational>>{{r(2), r(3)}, {r(7, 5), r(9, 4)}}) {
            auto F = make_halfplane_family(q1, q2);
            auto t = suggested_t(F);
            auto w = waldschmidt_from_shape(gamma_limit(F, t, 1));
            auto a = areg_from_shape(limiting_shape(F, t, 1));
            o.expect(w == q1, "waldschmidt " + w.str() + " for q1=" + q1.str());
            o.expect(a == q2, "areg " + a.str() + " for q2=" + q2.str());
        }
    });

    criterion(6, "chain family shape, waldschmidt 4, areg 7", [](Outcome& o) {
        auto F = make_chain_family(chain_bp());
        const Rational t = r(8);
        auto D = limiting_shape(F, t, 1);
        o.expect(D.exact, "shape not exact");
        // vertices off the hypotenuse x + y = t are exactly the breakpoints
        std::vector<Point> inner;
        for (const auto& v : D.polygon.vertices)
            if (v.x + v.y != t) inner.push_back(v);
        std::sort(inner.begin(), inner.end());
        std::vector<Point> want;
        for (const auto& [s, u] : chain_bp()) want.push_back(P(s, u));
        std::sort(want.begin(), want.end());
        o.expect(inner == want, "vertices " + show(D.polygon.vertices));
        auto w = waldschmidt_from_shape(gamma_limit(F, t, 1));
        auto a = areg_from_shape(D);
        o.expect(w == r(4), "waldschmidt " + w.str());
        o.expect(a == r(7), "areg " + a.str());
        // cross-check against the discrete values alpha(I_m)/m and reg(I_m)/m
        for (std::int64_t m = 1; m <= 6; ++m) o.expect(alpha(F.at(m)) == 4 * m, "alpha(I_" + std::to_string(m) + ")");
    });

    criterion(7, "halfplane (2,3): #Gamma/m^2 converges within 10/m, m <= 60", [](Outcome& o) {
        auto F = make_halfplane_family(r(2), r(3));
        for (long t : {3, 4, 5}) {
            auto res = ahf(F, r(t), 60, true);
            o.expect(res.exact, "volume not exact");
            o.expect(res.sequence.size() == 60, "sequence length");
            std::vector<Rational> err;
            for (const auto& [m, v] : res.sequence) {
                // independent count of the same lattice points
                auto I = F.at(m).padded(3);
                auto cnt = lattice_count(gamma_region(I, m, r(t)));
                o.expect(Rational(static_cast<long long>(cnt)) / ri(m * m) == v, "sequence entry at m=" + std::to_string(m));
                Rational e = abs(v - res.value);
                err.push_back(e);
                if (!(e < r(10) / ri(m))) o.fail("t=" + std::to_string(t) + " m=" + std::to_string(m) + " error " + e.str());
            }
            for (std::size_t i = 30; i + 1 < err.size(); ++i)
                if (err[i + 1] > err[i]) o.fail("tail not monotone at t=" + std::to_string(t) + " m=" + std::to_string(i + 2));
        }
    });

    criterion(8, "bridge: lattice count of Gamma equals HF, all built-in families", [](Outcome& o) {
        std::size_t checked = 0;
        for (const auto& F : builtins()) {
            for (std::int64_t m = 1; m <= 8; ++m) {
                auto I = F.at(m);
                for (long tt = 1; tt <= 12; ++tt) {
                    Rational t(tt, 2);
                    auto a = lattice_count(gamma_region(I, m, t));
                    auto b = hilbert_function_extended(I, ri(m) * t);
                    ++checked;
                    if (a != b) o.fail(F.label + " m=" + std::to_string(m) + " t=" + t.str());
                }
            }
        }
        o.expect(checked == 8 * 8 * 12, "checked " + std::to_string(checked));
    });

    criterion(9, "truncated area equals Gamma volume for the four-line graph", [](Outcome& o) {
        auto g = dhf_vertices_closed_form({10, 8, 5, 3});
        for (Rational t : {r(2), r(4), r(47, 8), r(10)}) {
            auto a = area_under_graph(truncate_graph(g, t));
            auto v = region_volume(gamma_vertices(g, t));
            o.expect(a == v, "t=" + t.str() + ": " + a.str() + " vs " + v.str());
        }
        o.expect(area_under_graph(g) == r(13), "total " + area_under_graph(g).str());
    });

    criterion(10, "oscillating family: areg estimate oscillates between 1/2 and 3/2", [](Outcome& o) {
        auto e = areg_estimate(make_oscillating_family(1, 2, 2), 40);
        o.expect(e.oscillating, "not flagged oscillating");
        bool lo = false, hi = false;
        for (const auto& s : e.subsequences) {
            if (abs(s.value - r(1, 2)) <= r(1, 20)) lo = true;
            if (abs(s.value - r(3, 2)) <= r(1, 20)) hi = true;
        }
        o.expect(lo && hi, "subsequence limits not recovered");
    });

    criterion(11, "Fekete subadditivity of alpha, p + q <= 16", [](Outcome& o) {
        for (const auto& F : builtins()) {
            std::vector<std::int64_t> a(17);
            for (std::int64_t m = 1; m <= 16; ++m) a[m] = alpha(F.at(m));
            for (std::int64_t p = 1; p <= 15; ++p)
                for (std::int64_t q = 1; p + q <= 16; ++q)
                    if (a[p + q] > a[p] + a[q]) o.fail(F.label + " at " + std::to_string(p) + "," + std::to_string(q));
            o.expect(fekete_violations(F, 16).empty(), F.label + ": library reports violations");
        }
    });

    criterion(12, "gradedness of the built-in constructors and a corrupted family", [](Outcome& o) {
        std::vector<GradedFamily> six{make_power_family(power_base()),
                                      make_doubling_family(0),
                                      make_halfplane_family(r(2), r(3)),
                                      make_ceiling_family(r(22, 7)),
                                      make_chain_family(chain_bp()),
                                      make_oscillating_family(1, 2, 2)};
        for (const auto& F : six) {
            auto rep = verify_graded(F, 10);
            o.expect(rep.ok(), F.label + " reported not graded");
            o.expect(rep.pairs_checked > 0, F.label + " checked nothing");
        }
        // I_m = (x^ceil(m/2)) except I_2 = (x^3): I_1 * I_1 = (x^2) is not in I_2
        auto bad = make_custom_family(
            1, [](std::int64_t m) { return MonomialIdeal(1, {{m == 2 ? 3 : (m + 1) / 2}}); }, "corrupted");
        auto rep = verify_graded(bad, 10);
        o.expect(!rep.ok(), "corruption not detected");
        for (const auto& v : rep.violations) {
            auto prod = ideal_product(bad.at(v.p), bad.at(v.q));
            o.expect(prod.contains(v.witness) && !bad.at(v.p + v.q).contains(v.witness), "witness is not a witness");
        }
    });

    std::cout << (failures ? "FAILED " : "ALL PASSED ") << failures << std::endl;
    return failures ? 1 : 0;
}
