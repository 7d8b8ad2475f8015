#include "limshape/json_io.hpp"

#include "limshape/errors.hpp"

namespace limshape {

namespace {

const json& field(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) throw ValidationError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ValidationError(where + "." + key + ": missing");
    return *it;
}

std::int64_t int_field(const json& j, const std::string& key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_number_integer()) throw ValidationError(where + "." + key + ": expected an integer");
    return v.get<std::int64_t>();
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j, const std::string& name) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
    if (!j.is_string()) throw ValidationError(name + ": expected a rational string \"num/den\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const ValidationError& e) {
        throw ValidationError(name + ": " + e.what());
    }
}

json to_json(const ExponentVector& e) { return json(e); }

json to_json(const MonomialIdeal& I) {
    json gens = json::array();
    for (const auto& g : I.gens()) gens.push_back(to_json(g));
    return json{{"vars", I.vars()}, {"gens", gens}};
}

MonomialIdeal ideal_from_json(const json& j) {
    const auto vars = int_field(j, "vars", "ideal");
    if (vars < 1) throw ValidationError("ideal.vars: must be positive");
    const json& gs = field(j, "gens", "ideal");
    if (!gs.is_array()) throw ValidationError("ideal.gens: expected an array");
    std::vector<ExponentVector> gens;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const std::string where = "ideal.gens[" + std::to_string(i) + "]";
        if (!gs[i].is_array()) throw ValidationError(where + ": expected an exponent array");
        ExponentVector e;
        for (const auto& x : gs[i]) {
            if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
                throw ValidationError(where + ": exponents must be non-negative integers");
            e.push_back(x.get<std::int64_t>());
        }
        if (e.size() != static_cast<std::size_t>(vars))
            throw ValidationError(where + ": has " + std::to_string(e.size()) + " exponents, expected " +
                                  std::to_string(vars));
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(static_cast<std::size_t>(vars), std::move(gens));
}

json to_json(const Point& p) { return json::array({to_json(p.x), to_json(p.y)}); }

Point point_from_json(const json& j, const std::string& name) {
    if (!j.is_array() || j.size() != 2) throw ValidationError(name + ": expected a pair [x, y]");
    return Point{rational_from_json(j[0], name + "[0]"), rational_from_json(j[1], name + "[1]")};
}

namespace {

json vertex_list(const std::vector<Point>& v) {
    json a = json::array();
    for (const auto& p : v) a.push_back(to_json(p));
    return a;
}

std::vector<Point> vertices_from_json(const json& j, const std::string& what) {
    const json& vs = field(j, "vertices", what);
    if (!vs.is_array()) throw ValidationError(what + ".vertices: expected an array");
    std::vector<Point> out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        out.push_back(point_from_json(vs[i], what + ".vertices[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

json to_json(const RationalPolygon& P) { return json{{"vertices", vertex_list(P.vertices)}}; }

RationalPolygon polygon_from_json(const json& j) { return RationalPolygon{vertices_from_json(j, "polygon")}; }

json to_json(const PLGraph& g) { return json{{"vertices", vertex_list(g.vertices)}}; }

PLGraph graph_from_json(const json& j) { return PLGraph{vertices_from_json(j, "graph")}; }

json to_json(const FamilyDescription& d) {
    json p = json::object();
    if (d.kind == "power") {
        p["ideal"] = to_json(*d.base);
    } else if (d.kind == "doubling") {
        p["extra_vars"] = d.extra_vars;
    } else if (d.kind == "halfplane") {
        p["q1"] = to_json(d.q1);
        p["q2"] = to_json(d.q2);
    } else if (d.kind == "ceiling") {
        p["q"] = to_json(d.q);
    } else if (d.kind == "chain") {
        json bp = json::array();
        for (const auto& [s, t] : d.breakpoints) bp.push_back(json::array({to_json(s), to_json(t)}));
        p["breakpoints"] = bp;
    } else if (d.kind == "oscillating") {
        p["a"] = d.a;
        p["b"] = d.b;
        p["d"] = d.d;
    }
    return json{{"kind", d.kind}, {"params", p}};
}

FamilyDescription family_from_json(const json& j) {
    FamilyDescription d;
    const json& kind = field(j, "kind", "family");
    if (!kind.is_string()) throw ValidationError("family.kind: expected a string");
    d.kind = kind.get<std::string>();
    const json empty = json::object();
    const json& p = j.contains("params") ? j["params"] : empty;
    if (!p.is_object()) throw ValidationError("family.params: expected an object");
    if (d.kind == "power") {
        d.base = ideal_from_json(field(p, "ideal", "family.params"));
    } else if (d.kind == "doubling") {
        d.extra_vars = p.contains("extra_vars") ? static_cast<int>(int_field(p, "extra_vars", "family.params")) : 0;
    } else if (d.kind == "halfplane") {
        d.q1 = rational_from_json(field(p, "q1", "family.params"), "family.params.q1");
        d.q2 = rational_from_json(field(p, "q2", "family.params"), "family.params.q2");
    } else if (d.kind == "ceiling") {
        d.q = rational_from_json(field(p, "q", "family.params"), "family.params.q");
    } else if (d.kind == "chain") {
        const json& bp = field(p, "breakpoints", "family.params");
        if (!bp.is_array()) throw ValidationError("family.params.breakpoints: expected an array");
        for (std::size_t i = 0; i < bp.size(); ++i) {
            Point q = point_from_json(bp[i], "family.params.breakpoints[" + std::to_string(i) + "]");
            d.breakpoints.emplace_back(q.x, q.y);
        }
    } else if (d.kind == "oscillating") {
        d.a = int_field(p, "a", "family.params");
        d.b = int_field(p, "b", "family.params");
        d.d = int_field(p, "d", "family.params");
    } else {
        throw ValidationError("family.kind: unknown kind '" + d.kind + "'");
    }
    return d;
}

json to_json(const LineConfiguration& c) {
    return json{{"counts", c.counts}, {"shared_intersection", c.shared_intersection}};
}

LineConfiguration configuration_from_json(const json& j) {
    LineConfiguration c;
    const json& counts = field(j, "counts", "configuration");
    if (!counts.is_array()) throw ValidationError("configuration.counts: expected an array");
    for (const auto& x : counts) {
        if (!x.is_number_integer()) throw ValidationError("configuration.counts: expected integers");
        c.counts.push_back(x.get<std::int64_t>());
    }
    if (j.contains("shared_intersection")) {
        if (!j["shared_intersection"].is_boolean())
            throw ValidationError("configuration.shared_intersection: expected a boolean");
        c.shared_intersection = j["shared_intersection"].get<bool>();
    }
    return c;
}

json to_json(const IntegerPolynomial& p) {
    json c = json::array();
    for (const auto& x : p.coeffs) c.push_back(to_json(x));
    return json{{"coefficients", c}, {"text", p.str()}};
}

json to_json(const GradedReport& r) {
    json v = json::array();
    for (const auto& x : r.violations)
        v.push_back(json{{"p", x.p}, {"q", x.q}, {"witness", to_json(x.witness)},
                         {"witness_monomial", format_monomial(x.witness)}});
    return json{{"status", r.ok() ? "ok" : "violated"},
                {"max_m", r.max_m},
                {"pairs_checked", r.pairs_checked},
                {"violations", v}};
}

json to_json(const LimitEstimate& e) {
    json vals = json::array();
    for (const auto& [m, x] : e.values) vals.push_back(json::array({m, to_json(x)}));
    json subs = json::array();
    for (const auto& s : e.subsequences)
        subs.push_back(json{{"residue", s.residue}, {"m", s.m}, {"value", to_json(s.value)}});
    return json{{"values", vals},
                {"inf_value", to_json(e.inf_value)},
                {"liminf", to_json(e.liminf)},
                {"limsup", to_json(e.limsup)},
                {"oscillating", e.oscillating},
                {"divergent", e.divergent},
                {"tolerance", to_json(e.tolerance)},
                {"subsequences", subs}};
}

json to_json(const Shape& s) {
    json j = to_json(s.polygon);
    j["t"] = to_json(s.t);
    j["exact"] = s.exact;
    return j;
}

json to_json(const ReductionVector& u) {
    return json{{"multiplicity", u.multiplicity}, {"approximate", u.approximate}, {"entries", u.entries}};
}

}  // namespace limshape
