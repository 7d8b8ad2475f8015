#include "doctest.h"
#include "limshape/errors.hpp"
#include "limshape/family.hpp"
#include "limshape/hilbert.hpp"

using namespace limshape;

namespace {

MonomialIdeal I2(std::vector<ExponentVector> g) { return MonomialIdeal(2, std::move(g)); }

using BP = std::vector<std::pair<Rational, Rational>>;
BP chain_bp() { return {{Rational(4), Rational(0)}, {Rational(3), Rational(1)}, {Rational(1), Rational(4)}, {Rational(0), Rational(7)}}; }

std::vector<GradedFamily> builtins() {
    return {make_power_family(I2({{1, 0}, {0, 1}})),
            make_power_family(I2({{2, 0}, {1, 2}})),
            make_doubling_family(0),
            make_doubling_family(1),
            make_halfplane_family(Rational(2), Rational(3)),
            make_halfplane_family(Rational(7, 5), Rational(9, 4)),
            make_ceiling_family(Rational(22, 7)),
            make_chain_family(chain_bp()),
            make_oscillating_family(1, 2, 2),
            make_oscillating_family(2, 5, 3)};
}

// Brute-force membership for the constraint families.
bool in_halfplane(std::int64_t a, std::int64_t b, std::int64_t m, const Rational& q1, const Rational& q2) {
    return Rational(static_cast<long long>(a)) * q2 + Rational(static_cast<long long>(b)) * q1 >=
           Rational(static_cast<long long>(m)) * q1 * q2;
}

}  // namespace

TEST_CASE("power family") {
    auto F = make_power_family(I2({{1, 0}, {0, 1}}));
    CHECK(F.at(2) == I2({{2, 0}, {1, 1}, {0, 2}}));
    auto G = make_power_family(I2({{2, 0}, {1, 2}}));
    CHECK(G.at(2) == I2({{4, 0}, {3, 2}, {2, 4}}));
    CHECK(G.at(1) == I2({{2, 0}, {1, 2}}));
    CHECK_FALSE(G.exact_shape());
    CHECK_THROWS_AS(make_power_family(MonomialIdeal::zero(2)), ValidationError);
    CHECK_THROWS_AS(make_power_family(MonomialIdeal::unit(2)), ValidationError);
    CHECK_THROWS_AS(G.at(0), ValidationError);
}

TEST_CASE("doubling family") {
    auto F = make_doubling_family(0);
    CHECK(F.at(1) == I2({{2, 0}, {1, 2}}));
    CHECK(F.at(3) == I2({{2, 0}, {1, 8}}));
    CHECK(ideal_product(F.at(1), F.at(1)).gens().size() == 3);
    CHECK_FALSE(F.at(2).first_outside(ideal_product(F.at(1), F.at(1))).has_value());
    auto J = make_doubling_family(1);
    CHECK(J.at(1) == MonomialIdeal(3, {{2, 0, 0}, {1, 2, 0}}));
    CHECK_THROWS_AS(make_doubling_family(2), ValidationError);
    CHECK_THROWS_AS(F.at(61), ComputationError);
}

TEST_CASE("halfplane family matches the inequality") {
    auto F = make_halfplane_family(Rational(2), Rational(3));
    CHECK(F.at(1).contains({2, 0}));
    CHECK_FALSE(F.at(1).contains({1, 0}));
    for (auto [q1, q2] : std::vector<std::pair<Rational, Rational>>{{Rational(2), Rational(3)}, {Rational(7, 5), Rational(9, 4)}, {Rational(1), Rational(1)}}) {
        auto H = make_halfplane_family(q1, q2);
        for (std::int64_t m = 1; m <= 6; ++m) {
            auto I = H.at(m);
            CHECK(is_borel_fixed(I));
            for (std::int64_t a = 0; a <= 20; ++a)
                for (std::int64_t b = 0; b <= 20; ++b) CHECK(I.contains({a, b}) == in_halfplane(a, b, m, q1, q2));
        }
    }
    CHECK_THROWS_AS(make_halfplane_family(Rational(3), Rational(2)), ValidationError);
    CHECK_THROWS_AS(make_halfplane_family(Rational(0), Rational(2)), ValidationError);
}

TEST_CASE("ceiling family") {
    auto F = make_ceiling_family(Rational(22, 7));
    CHECK(F.at(7) == MonomialIdeal(1, {{22}}));
    CHECK(F.at(1) == MonomialIdeal(1, {{4}}));
    CHECK_THROWS_AS(make_ceiling_family(Rational(0)), ValidationError);
}

TEST_CASE("chain family") {
    auto F = make_chain_family(chain_bp());
    for (std::int64_t m = 1; m <= 5; ++m) {
        auto I = F.at(m);
        CHECK(is_borel_fixed(I));
        for (std::int64_t a = 0; a <= 40; ++a)
            for (std::int64_t b = 0; b <= 40; ++b) {
                bool want = a + b >= 4 * m && 3 * a + 2 * b >= 11 * m && 3 * a + b >= 7 * m;
                CHECK(I.contains({a, b}) == want);
            }
    }
    BP bad{{Rational(4), Rational(0)}, {Rational(2), Rational(1)}, {Rational(0), Rational(7)}};
    CHECK_THROWS_WITH_AS(make_chain_family(bad), doctest::Contains("-1/2"), ValidationError);
    BP not_convex{{Rational(4), Rational(0)}, {Rational(2), Rational(4)}, {Rational(0), Rational(6)}};
    CHECK_THROWS_AS(make_chain_family(not_convex), ValidationError);
    BP bad_start{{Rational(4), Rational(1)}, {Rational(0), Rational(7)}};
    CHECK_THROWS_AS(make_chain_family(bad_start), ValidationError);
}

TEST_CASE("oscillating family") {
    auto F = make_oscillating_family(1, 2, 2);
    CHECK(F.at(1) == I2({{1, 0}}));
    CHECK(F.at(2) == I2({{2, 0}, {1, 2}}));
    CHECK(F.at(3) == I2({{2, 0}}));
    auto G = make_oscillating_family(1, 2, 3);
    CHECK(G.at(4) == I2({{2, 0}}));
    CHECK(G.at(5) == I2({{3, 0}, {2, 4}}));
    CHECK(G.at(6) == I2({{3, 0}, {2, 4}}));
    CHECK_THROWS_AS(make_oscillating_family(2, 2, 2), ValidationError);
    CHECK_THROWS_AS(make_oscillating_family(1, 2, 1), ValidationError);
    CHECK_THROWS_AS(make_oscillating_family(0, 2, 2), ValidationError);
}

TEST_CASE("built-in families are graded, Borel when claimed, and satisfy Fekete") {
    for (const auto& F : builtins()) {
        CAPTURE(F.label);
        for (std::int64_t M = 2; M <= 12; ++M) CHECK(verify_graded(F, M).ok());
        if (F.claims_borel)
            for (std::int64_t m = 1; m <= 8; ++m) CHECK(is_borel_fixed(F.at(m)));
        CHECK(fekete_violations(F, 16).empty());
    }
}

TEST_CASE("serial and parallel graded checks agree") {
    auto bad = make_custom_family(1, [](std::int64_t m) {
        return MonomialIdeal(1, {{m == 2 ? 3 : (m + 1) / 2}});
    }, "corrupted");
    for (std::int64_t M = 2; M <= 10; ++M) {
        auto a = verify_graded(bad, M), b = verify_graded_serial(bad, M);
        CHECK(a.pairs_checked == b.pairs_checked);
        REQUIRE(a.violations.size() == b.violations.size());
        for (std::size_t i = 0; i < a.violations.size(); ++i) {
            CHECK(a.violations[i].p == b.violations[i].p);
            CHECK(a.violations[i].witness == b.violations[i].witness);
        }
    }
    auto rep = verify_graded(bad, 6);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations.front().p == 1);
    CHECK(rep.violations.front().q == 1);
    CHECK(rep.violations.front().witness == ExponentVector{2});
    CHECK_THROWS_AS(verify_graded(bad, 1), ValidationError);
}

TEST_CASE("waldschmidt_estimate") {
    CHECK(waldschmidt_estimate(make_halfplane_family(Rational(2), Rational(3)), 20).inf_value == Rational(2));
    CHECK(waldschmidt_estimate(make_ceiling_family(Rational(22, 7)), 21).inf_value == Rational(22, 7));
    auto e = waldschmidt_estimate(make_power_family(I2({{1, 0}, {0, 1}})), 8);
    for (const auto& [m, v] : e.values) CHECK(v == Rational(1));
    auto zero = make_custom_family(2, [](std::int64_t) { return MonomialIdeal::zero(2); }, "zero");
    CHECK_THROWS_AS(waldschmidt_estimate(zero, 3), ComputationError);
}

TEST_CASE("areg_estimate") {
    auto h = areg_estimate(make_halfplane_family(Rational(2), Rational(3)), 30);
    CHECK_FALSE(h.oscillating);
    CHECK(abs(h.limsup - Rational(3)) <= Rational(1, 10));
    CHECK(abs(h.liminf - Rational(3)) <= Rational(1, 10));

    auto o = areg_estimate(make_oscillating_family(1, 2, 2), 40);
    CHECK(o.oscillating);
    REQUIRE(o.subsequences.size() == 2);
    CHECK(o.subsequences[0].value == Rational(3, 2));
    CHECK(abs(o.subsequences[1].value - Rational(1, 2)) < Rational(1, 20));

    auto d = areg_estimate(make_doubling_family(0), 12);
    CHECK(d.divergent);
    CHECK_FALSE(h.divergent);

    auto nonborel = make_custom_family(2, [](std::int64_t m) { return MonomialIdeal(2, {{0, m}}); }, "y^m");
    CHECK_THROWS_AS(areg_estimate(nonborel, 4), ValidationError);
}

TEST_CASE("ri along the doubling family is not linearly bounded") {
    auto F = make_doubling_family(0);
    for (std::int64_t m = 1; m <= 8; ++m) CHECK(regularity_index(F.at(m)) == (std::int64_t{1} << m) + 1);
    auto e = ri_estimate(F, 10);
    CHECK(e.divergent);
    // no line a*m + b through the first two values bounds the rest
    const auto ri = [&](std::int64_t m) { return e.values[static_cast<std::size_t>(m - 1)].second * Rational(static_cast<long long>(m)); };
    Rational slope = ri(2) - ri(1);
    CHECK(ri(10) > ri(1) + slope * Rational(9));
}

TEST_CASE("linear sandwich gives a non-oscillating areg") {
    // reg(I_m) for the chain family lies between 7m and 7m + 2
    auto F = make_chain_family(chain_bp());
    for (std::int64_t m = 1; m <= 12; ++m) {
        auto r = borel_regularity(F.at(m));
        CHECK(r >= 7 * m);
        CHECK(r <= 7 * m + 2);
    }
    auto e = areg_estimate(F, 24);
    CHECK_FALSE(e.oscillating);
    CHECK(abs(e.limsup - Rational(7)) <= Rational(1, 20));
}

TEST_CASE("make_family dispatch") {
    FamilyDescription d;
    d.kind = "halfplane";
    d.q1 = Rational(2);
    d.q2 = Rational(3);
    CHECK(make_family(d).at(1) == make_halfplane_family(Rational(2), Rational(3)).at(1));
    d.kind = "nope";
    CHECK_THROWS_AS(make_family(d), ValidationError);
    d.kind = "power";
    CHECK_THROWS_AS(make_family(d), ValidationError);
}
