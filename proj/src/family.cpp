#include "limshape/family.hpp"

#include "limshape/errors.hpp"
#include "limshape/hilbert.hpp"

#include <algorithm>

namespace limshape {

namespace {

Rational R(std::int64_t v) { return Rational(static_cast<long long>(v)); }

std::vector<MonomialIdeal> evaluate_all(const GradedFamily& F, std::int64_t M) {
    std::vector<MonomialIdeal> out;
    out.reserve(static_cast<std::size_t>(M));
    for (std::int64_t m = 1; m <= M; ++m) out.push_back(F.at(m));
    return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> graded_pairs(std::int64_t M) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::int64_t p = 1; 2 * p <= M; ++p)
        for (std::int64_t q = p; p + q <= M; ++q) pairs.emplace_back(p, q);
    return pairs;
}

std::optional<ExponentVector> graded_witness(const std::vector<MonomialIdeal>& I, std::int64_t p, std::int64_t q) {
    const auto& Ip = I[static_cast<std::size_t>(p - 1)];
    const auto& Iq = I[static_cast<std::size_t>(q - 1)];
    const auto& Ipq = I[static_cast<std::size_t>(p + q - 1)];
    for (const auto& g : Ip.gens())
        for (const auto& h : Iq.gens()) {
            auto prod = monomial_mul(g, h);
            if (!Ipq.contains(prod)) return prod;
        }
    return std::nullopt;
}

LimitEstimate summarize(std::vector<std::pair<std::int64_t, Rational>> values, const Rational& tol,
                        std::optional<std::int64_t> period) {
    LimitEstimate e;
    e.tolerance = tol;
    const std::int64_t M = values.back().first;
    const std::int64_t start = (M + 1) / 2;
    e.inf_value = values.front().second;
    for (const auto& [m, v] : values) e.inf_value = min(e.inf_value, v);
    bool first = true, increasing = true;
    Rational prev;
    for (const auto& [m, v] : values) {
        if (m < start) continue;
        if (first) {
            e.liminf = e.limsup = v;
            first = false;
        } else {
            e.liminf = min(e.liminf, v);
            e.limsup = max(e.limsup, v);
            if (!(prev < v)) increasing = false;
        }
        prev = v;
    }
    e.oscillating = e.limsup - e.liminf > tol;
    const Rational& at_half = values[static_cast<std::size_t>(start - 1)].second;
    e.divergent = M >= 4 && increasing && values.back().second >= R(2) * at_half;
    if (period) {
        const std::int64_t d = *period;
        for (std::int64_t r = 0; r < d; ++r) {
            for (std::int64_t m = M; m >= 1; --m)
                if (m % d == r) {
                    e.subsequences.push_back({r, m, values[static_cast<std::size_t>(m - 1)].second});
                    break;
                }
        }
    }
    e.values = std::move(values);
    return e;
}

void require_m(std::int64_t M, const char* what) {
    if (M < 1) throw ValidationError(std::string(what) + ": max-m must be at least 1");
}

}  // namespace

MonomialIdeal GradedFamily::at(std::int64_t m) const {
    if (m < 1) throw ValidationError("family index m must be >= 1, got " + std::to_string(m));
    MonomialIdeal I = rule(m);
    if (I.vars() != vars)
        throw ComputationError(label + ": rule produced an ideal in " + std::to_string(I.vars()) +
                               " variables, expected " + std::to_string(vars));
    return I;
}

MonomialIdeal ideal_from_constraints(const std::vector<HalfPlane>& cs, std::int64_t m, std::size_t vars) {
    if (vars < 2) throw ValidationError("constraint ideals need at least 2 variables");
    if (cs.empty()) throw ValidationError("no constraints");
    Rational A(0);
    for (const auto& c : cs) {
        if (c.ca.sign() <= 0 || c.cb.sign() < 0 || c.rhs.sign() < 0)
            throw ValidationError("constraint coefficients must satisfy ca > 0, cb >= 0, rhs >= 0");
        A = max(A, R(m) * c.rhs / c.ca);
    }
    std::vector<ExponentVector> gens;
    const std::int64_t amax = A.ceil_int();
    for (std::int64_t a = 0; a <= amax; ++a) {
        std::int64_t b = 0;
        bool feasible = true;
        for (const auto& c : cs) {
            Rational need = R(m) * c.rhs - c.ca * R(a);
            if (need.sign() <= 0) continue;
            if (c.cb.sign() == 0) {
                feasible = false;
                break;
            }
            b = std::max(b, (need / c.cb).ceil_int());
        }
        if (!feasible) continue;
        ExponentVector g(vars, 0);
        g[0] = a;
        g[1] = b;
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(vars, std::move(gens));
}

GradedFamily make_power_family(const MonomialIdeal& I) {
    if (I.is_zero()) throw ValidationError("power family: base ideal is zero");
    if (I.is_unit()) throw ValidationError("power family: base ideal is the unit ideal");
    GradedFamily F;
    F.vars = I.vars();
    F.rule = [I](std::int64_t m) {
        MonomialIdeal P = I;
        for (std::int64_t k = 1; k < m; ++k) P = ideal_product(P, I);
        return P;
    };
    F.label = "power " + I.str();
    F.claims_borel = is_borel_fixed(I);
    F.description.kind = "power";
    F.description.base = I;
    return F;
}

GradedFamily make_doubling_family(int extra_vars) {
    if (extra_vars != 0 && extra_vars != 1)
        throw ValidationError("doubling family: extra_vars must be 0 or 1");
    GradedFamily F;
    F.vars = static_cast<std::size_t>(2 + extra_vars);
    const std::size_t vars = F.vars;
    F.rule = [vars](std::int64_t m) {
        if (m > 60) throw ComputationError("doubling family: 2^m overflows for m > 60");
        ExponentVector g1(vars, 0), g2(vars, 0);
        g1[0] = 2;
        g2[0] = 1;
        g2[1] = std::int64_t{1} << m;
        return MonomialIdeal(vars, {g1, g2});
    };
    F.label = extra_vars ? "doubling (3 vars)" : "doubling";
    F.claims_borel = true;
    F.description.kind = "doubling";
    F.description.extra_vars = extra_vars;
    return F;
}

GradedFamily make_halfplane_family(const Rational& q1, const Rational& q2) {
    if (q1.sign() <= 0) throw ValidationError("halfplane family: q1 must be positive");
    if (q1 > q2) throw ValidationError("halfplane family: q1 must not exceed q2");
    GradedFamily F;
    F.vars = 2;
    F.constraints = {HalfPlane{q2, q1, q1 * q2}};
    auto cs = F.constraints;
    F.rule = [cs](std::int64_t m) { return ideal_from_constraints(cs, m, 2); };
    F.label = "halfplane q1=" + q1.str() + " q2=" + q2.str();
    F.claims_borel = true;
    F.description.kind = "halfplane";
    F.description.q1 = q1;
    F.description.q2 = q2;
    return F;
}

GradedFamily make_ceiling_family(const Rational& q) {
    if (q.sign() <= 0) throw ValidationError("ceiling family: q must be positive");
    GradedFamily F;
    F.vars = 1;
    F.constraints = {HalfPlane{Rational(1), Rational(0), q}};
    F.rule = [q](std::int64_t m) { return MonomialIdeal(1, {{(R(m) * q).ceil_int()}}); };
    F.label = "ceiling q=" + q.str();
    F.claims_borel = true;
    F.description.kind = "ceiling";
    F.description.q = q;
    return F;
}

GradedFamily make_chain_family(const std::vector<std::pair<Rational, Rational>>& bp) {
    if (bp.size() < 2) throw ValidationError("chain family: need at least two breakpoints");
    if (bp.front().second.sign() != 0) throw ValidationError("chain family: first breakpoint must be (s_0, 0)");
    if (bp.back().first.sign() != 0) throw ValidationError("chain family: last breakpoint must be (0, t_n)");
    std::vector<Rational> slopes;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        const auto& [s0, t0] = bp[i];
        const auto& [s1, t1] = bp[i + 1];
        if (!(s1 < s0))
            throw ValidationError("chain family: s must be strictly decreasing at breakpoint " + std::to_string(i + 1));
        if (!(t0 < t1))
            throw ValidationError("chain family: t must be strictly increasing at breakpoint " + std::to_string(i + 1));
        slopes.push_back((t1 - t0) / (s1 - s0));
    }
    if (slopes[0] > Rational(-1))
        throw ValidationError("chain family: slope (t_1-t_0)/(s_1-s_0) = " + slopes[0].str() + " must be <= -1");
    for (std::size_t i = 1; i < slopes.size(); ++i)
        if (!(slopes[i] < slopes[i - 1]))
            throw ValidationError("chain family: slope (t_" + std::to_string(i + 1) + "-t_" + std::to_string(i) +
                                  ")/(s_" + std::to_string(i + 1) + "-s_" + std::to_string(i) + ") = " +
                                  slopes[i].str() + " must be < " + slopes[i - 1].str());
    GradedFamily F;
    F.vars = 2;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        const auto& [s0, t0] = bp[i];
        const auto& [s1, t1] = bp[i + 1];
        F.constraints.push_back(HalfPlane{t1 - t0, s0 - s1, s0 * t1 - s1 * t0});
    }
    auto cs = F.constraints;
    F.rule = [cs](std::int64_t m) { return ideal_from_constraints(cs, m, 2); };
    F.label = "chain";
    for (const auto& [s, t] : bp) F.label += " (" + s.str() + "," + t.str() + ")";
    F.claims_borel = true;
    F.description.kind = "chain";
    F.description.breakpoints = bp;
    return F;
}

GradedFamily make_oscillating_family(std::int64_t a, std::int64_t b, std::int64_t d) {
    if (a < 1) throw ValidationError("oscillating family: a must be >= 1");
    if (b <= a) throw ValidationError("oscillating family: b must exceed a");
    if (d < 2) throw ValidationError("oscillating family: d must be >= 2");
    GradedFamily F;
    F.vars = 2;
    F.rule = [a, b, d](std::int64_t m) {
        const std::int64_t k = ceil_div(m, d);
        if (m - d * (k - 1) == 1) return MonomialIdeal(2, {{a * k, 0}});
        return MonomialIdeal(2, {{a * k + 1, 0}, {a * k, b * k}});
    };
    F.label = "oscillating a=" + std::to_string(a) + " b=" + std::to_string(b) + " d=" + std::to_string(d);
    F.claims_borel = true;
    F.period = d;
    F.description.kind = "oscillating";
    F.description.a = a;
    F.description.b = b;
    F.description.d = d;
    return F;
}

GradedFamily make_custom_family(std::size_t vars, GradedFamily::Rule rule, std::string label, bool claims_borel) {
    GradedFamily F;
    F.vars = vars;
    F.rule = std::move(rule);
    F.label = std::move(label);
    F.claims_borel = claims_borel;
    F.description.kind = "custom";
    return F;
}

GradedFamily make_family(const FamilyDescription& d) {
    if (d.kind == "power") {
        if (!d.base) throw ValidationError("power family: missing params.ideal");
        return make_power_family(*d.base);
    }
    if (d.kind == "doubling") return make_doubling_family(d.extra_vars);
    if (d.kind == "halfplane") return make_halfplane_family(d.q1, d.q2);
    if (d.kind == "ceiling") return make_ceiling_family(d.q);
    if (d.kind == "chain") return make_chain_family(d.breakpoints);
    if (d.kind == "oscillating") return make_oscillating_family(d.a, d.b, d.d);
    throw ValidationError("unknown family kind '" + d.kind + "'");
}

GradedReport verify_graded(const GradedFamily& F, std::int64_t M) {
    if (M < 2) throw ValidationError("verify_graded: max-m must be at least 2");
    const auto ideals = evaluate_all(F, M);
    const auto pairs = graded_pairs(M);
    std::vector<std::optional<ExponentVector>> found(pairs.size());
    const std::int64_t n = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto [p, q] = pairs[static_cast<std::size_t>(i)];
        found[static_cast<std::size_t>(i)] = graded_witness(ideals, p, q);
    }
    GradedReport rep;
    rep.max_m = M;
    rep.pairs_checked = n;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (found[i]) rep.violations.push_back({pairs[i].first, pairs[i].second, *found[i]});
    return rep;
}

GradedReport verify_graded_serial(const GradedFamily& F, std::int64_t M) {
    if (M < 2) throw ValidationError("verify_graded: max-m must be at least 2");
    const auto ideals = evaluate_all(F, M);
    GradedReport rep;
    rep.max_m = M;
    for (auto [p, q] : graded_pairs(M)) {
        ++rep.pairs_checked;
        if (auto w = graded_witness(ideals, p, q)) rep.violations.push_back({p, q, *w});
    }
    return rep;
}

LimitEstimate waldschmidt_estimate(const GradedFamily& F, std::int64_t M) {
    require_m(M, "waldschmidt");
    std::vector<std::pair<std::int64_t, Rational>> v;
    for (std::int64_t m = 1; m <= M; ++m) {
        auto I = F.at(m);
        if (I.is_zero()) throw ComputationError("waldschmidt: I_" + std::to_string(m) + " is the zero ideal");
        v.emplace_back(m, R(alpha(I)) / R(m));
    }
    return summarize(std::move(v), Rational(1, 20), F.period);
}

LimitEstimate areg_estimate(const GradedFamily& F, std::int64_t M, const Rational& tol) {
    require_m(M, "areg");
    if (!F.claims_borel) throw ValidationError("areg: family '" + F.label + "' is not Borel-fixed");
    std::vector<std::pair<std::int64_t, Rational>> v;
    for (std::int64_t m = 1; m <= M; ++m) v.emplace_back(m, R(borel_regularity(F.at(m))) / R(m));
    return summarize(std::move(v), tol, F.period);
}

LimitEstimate ri_estimate(const GradedFamily& F, std::int64_t M, const Rational& tol) {
    require_m(M, "ri");
    std::vector<std::pair<std::int64_t, Rational>> v;
    for (std::int64_t m = 1; m <= M; ++m) v.emplace_back(m, R(regularity_index(F.at(m))) / R(m));
    return summarize(std::move(v), tol, F.period);
}

std::vector<std::pair<std::int64_t, std::int64_t>> fekete_violations(const GradedFamily& F, std::int64_t M) {
    const auto ideals = evaluate_all(F, M);
    std::vector<std::pair<std::int64_t, std::int64_t>> bad;
    auto a = [&](std::int64_t m) { return alpha(ideals[static_cast<std::size_t>(m - 1)]); };
    for (auto [p, q] : graded_pairs(M))
        if (a(p + q) > a(p) + a(q)) bad.emplace_back(p, q);
    return bad;
}

}  // namespace limshape
