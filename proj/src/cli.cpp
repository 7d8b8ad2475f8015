#include "limshape/cli.hpp"

#include "limshape/errors.hpp"
#include "limshape/family.hpp"
#include "limshape/hilbert.hpp"
#include "limshape/json_io.hpp"
#include "limshape/planar.hpp"
#include "limshape/shape.hpp"
#include "limshape/svg.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace limshape {

namespace {

struct FamilyOpts {
    std::string kind, input, ideal, q1, q2, q, breakpoints;
    int extra_vars = 0;
    std::int64_t a = 0, b = 0, d = 0;
};

struct Common {
    std::string output, svg;
    std::int64_t max_m = 0, m = 0, degree = -1, max_degree = -1;
    std::string t;
    bool polynomial = false, diagnostics = false, shared = false, approximate = false;
    std::string counts, method = "closed";
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("input: cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        throw ValidationError(what + ": malformed JSON: " + msg);
    }
}

Rational parse_flag(const std::string& s, const std::string& flag) {
    if (s.empty()) throw ValidationError(flag + ": required");
    try {
        return Rational::parse(s);
    } catch (const ValidationError& e) {
        throw ValidationError(flag + ": " + e.what());
    }
}

std::vector<std::pair<Rational, Rational>> parse_breakpoints(const std::string& s) {
    std::vector<std::pair<Rational, Rational>> out;
    std::stringstream ss(s);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
        auto comma = pair.find(',');
        if (comma == std::string::npos) throw ValidationError("--breakpoints: expected 's,t;s,t;...'");
        out.emplace_back(parse_flag(pair.substr(0, comma), "--breakpoints"),
                         parse_flag(pair.substr(comma + 1), "--breakpoints"));
    }
    return out;
}

std::vector<std::int64_t> parse_counts(const std::string& s) {
    if (s.empty()) throw ValidationError("--counts: required");
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ValidationError("--counts: not an integer: '" + part + "'");
        }
    }
    return out;
}

void add_family_opts(CLI::App* sc, FamilyOpts& f) {
    sc->add_option("--family", f.kind, "power|doubling|halfplane|ceiling|chain|oscillating");
    sc->add_option("--input", f.input, "family JSON file {\"kind\",\"params\"}");
    sc->add_option("--ideal", f.ideal, "base ideal JSON for --family power");
    sc->add_option("--q1", f.q1);
    sc->add_option("--q2", f.q2);
    sc->add_option("--q", f.q);
    sc->add_option("--breakpoints", f.breakpoints, "s0,0;s1,t1;...;0,tn");
    sc->add_option("--extra-vars", f.extra_vars);
    sc->add_option("--a", f.a);
    sc->add_option("--b", f.b);
    sc->add_option("--d", f.d);
}

FamilyDescription description_from_opts(const FamilyOpts& f) {
    if (!f.input.empty()) return family_from_json(parse_json(read_file(f.input), "input"));
    if (f.kind.empty()) throw ValidationError("--family: required (or --input)");
    FamilyDescription d;
    d.kind = f.kind;
    if (f.kind == "power") {
        if (f.ideal.empty()) throw ValidationError("--ideal: required for --family power");
        d.base = ideal_from_json(parse_json(f.ideal, "--ideal"));
    } else if (f.kind == "doubling") {
        d.extra_vars = f.extra_vars;
    } else if (f.kind == "halfplane") {
        d.q1 = parse_flag(f.q1, "--q1");
        d.q2 = parse_flag(f.q2, "--q2");
    } else if (f.kind == "ceiling") {
        d.q = parse_flag(f.q, "--q");
    } else if (f.kind == "chain") {
        if (f.breakpoints.empty()) throw ValidationError("--breakpoints: required for --family chain");
        d.breakpoints = parse_breakpoints(f.breakpoints);
    } else if (f.kind == "oscillating") {
        d.a = f.a;
        d.b = f.b;
        d.d = f.d;
    } else {
        throw ValidationError("--family: unknown kind '" + f.kind + "'");
    }
    return d;
}

void emit(const json& j, const Common& c, std::ostream& out) {
    const std::string text = j.dump(2) + "\n";
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.output, std::ios::binary);
    if (!f) throw ValidationError("--output: cannot write '" + c.output + "'");
    f << text;
}

void write_svg(const std::string& path, const std::string& svg, std::ostream& out) {
    if (path == "-") {
        out << svg;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("--svg: cannot write '" + path + "'");
    f << svg;
}

Rational t_or_default(const Common& c, const GradedFamily& F) {
    return c.t.empty() ? suggested_t(F) : parse_flag(c.t, "--t");
}

MonomialIdeal ideal_for_hf(const FamilyOpts& f, const Common& c) {
    if (!f.kind.empty() || (!f.input.empty() && f.ideal.empty())) {
        // a family file or flags: evaluate at --m
        if (!f.input.empty()) {
            json j = parse_json(read_file(f.input), "input");
            if (j.contains("gens")) return ideal_from_json(j);
        }
        if (c.m < 1) throw ValidationError("--m: required with --family");
        return make_family(description_from_opts(f)).at(c.m);
    }
    if (f.ideal.empty()) throw ValidationError("--ideal: required (or --input / --family)");
    return ideal_from_json(parse_json(f.ideal, "--ideal"));
}

LineConfiguration configuration_from_opts(const Common& c, const FamilyOpts& f) {
    if (!f.input.empty()) return configuration_from_json(parse_json(read_file(f.input), "input"));
    return LineConfiguration{parse_counts(c.counts), c.shared};
}

PLGraph planar_graph(const LineConfiguration& cfg, const Common& c) {
    validate_configuration(cfg);
    if (c.method == "envelope") {
        std::int64_t m = c.m > 0 ? c.m : divisibility_modulus(cfg);
        return dhf_envelope(reduction_vector(cfg, m, c.approximate));
    }
    if (c.method != "closed") throw ValidationError("--method: expected 'closed' or 'envelope'");
    if (cfg.shared_intersection) return two_line_vertices(cfg.counts[0], cfg.counts[1]);
    return dhf_vertices_closed_form(cfg.counts);
}

int dispatch(const std::string& cmd, const FamilyOpts& f, const Common& c, std::ostream& out) {
    if (cmd == "family-eval") {
        const auto desc = description_from_opts(f);
        const auto F = make_family(desc);
        const std::int64_t M = c.max_m > 0 ? c.max_m : 5;
        json ideals = json::array();
        for (std::int64_t m = 1; m <= M; ++m) {
            auto I = F.at(m);
            ideals.push_back(json{{"m", m}, {"ideal", to_json(I)}, {"text", I.str()}});
        }
        emit(json{{"family", to_json(desc)}, {"label", F.label}, {"ideals", ideals}}, c, out);
        return 0;
    }
    if (cmd == "check-graded") {
        const auto F = make_family(description_from_opts(f));
        const auto rep = verify_graded(F, c.max_m > 0 ? c.max_m : 10);
        json j = to_json(rep);
        j["family"] = F.label;
        emit(j, c, out);
        return 0;
    }
    if (cmd == "hf") {
        const auto I = ideal_for_hf(f, c);
        json j{{"ideal", to_json(I)}, {"text", I.str()}};
        json vals = json::array();
        if (!c.t.empty()) {
            Rational t = parse_flag(c.t, "--t");
            j["t"] = to_json(t);
            j["hf_extended"] = hilbert_function_extended(I, t);
        }
        if (c.degree >= 0) {
            j["degree"] = c.degree;
            j["hf"] = hilbert_function(I, c.degree);
            j["first_difference"] = first_difference_hf(I, c.degree);
        }
        if (c.max_degree >= 0) {
            for (std::int64_t d = 0; d <= c.max_degree; ++d) vals.push_back(json::array({d, hilbert_function(I, d)}));
            j["values"] = vals;
        }
        if (c.polynomial || (c.t.empty() && c.degree < 0 && c.max_degree < 0)) {
            const auto hd = hilbert_data(I);
            j["hilbert_polynomial"] = to_json(hd.polynomial);
            j["regularity_index"] = hd.regularity_index;
            j["degree_cap"] = hd.cap;
        }
        emit(j, c, out);
        return 0;
    }
    if (cmd == "shape") {
        const auto F = make_family(description_from_opts(f));
        const Rational t = t_or_default(c, F);
        const std::int64_t M = c.max_m > 0 ? c.max_m : 20;
        const Shape delta = limiting_shape(F, t, M);
        const Shape gamma = complement_in_simplex(delta);
        json j{{"family", F.label}, {"t", to_json(t)}, {"max_m", M}, {"exact", delta.exact},
               {"delta", to_json(delta)}, {"gamma", to_json(gamma)},
               {"gamma_area", to_json(gamma.polygon.area())},
               {"lift", json::array()}};
        for (const auto& v : lift_slice(delta.polygon, t)) {
            json p = json::array();
            for (const auto& x : v) p.push_back(to_json(x));
            j["lift"].push_back(p);
        }
        if (!c.svg.empty()) write_svg(c.svg, render(scene_for_polygon(gamma.polygon, true, "Gamma at t=" + t.str())), out);
        emit(j, c, out);
        return 0;
    }
    if (cmd == "waldschmidt" || cmd == "areg") {
        const auto F = make_family(description_from_opts(f));
        const std::int64_t M = c.max_m > 0 ? c.max_m : 20;
        json j{{"family", F.label}};
        if (F.exact_shape()) {
            const Rational t = t_or_default(c, F);
            const Shape delta = limiting_shape(F, t, M);
            j["t"] = to_json(t);
            j["source"] = "shape";
            j[cmd] = to_json(cmd == "areg" ? areg_from_shape(delta) : waldschmidt_from_shape(complement_in_simplex(delta)));
        } else {
            const auto e = cmd == "areg" ? areg_estimate(F, M) : waldschmidt_estimate(F, M);
            j["source"] = "estimate";
            j[cmd] = to_json(cmd == "areg" ? e.limsup : e.inf_value);
            j["estimate"] = to_json(e);
        }
        emit(j, c, out);
        return 0;
    }
    if (cmd == "ahf") {
        const auto F = make_family(description_from_opts(f));
        const Rational t = parse_flag(c.t, "--t");
        const std::int64_t M = c.max_m > 0 ? c.max_m : 20;
        const auto r = ahf(F, t, M, c.diagnostics);
        json j{{"family", F.label}, {"t", to_json(t)}, {"ahf", to_json(r.value)}, {"exact", r.exact}};
        if (c.diagnostics) {
            json seq = json::array();
            for (const auto& [m, v] : r.sequence)
                seq.push_back(json{{"m", m}, {"count_over_m2", to_json(v)}, {"gap", to_json(abs(v - r.value))}});
            j["sequence"] = seq;
        }
        emit(j, c, out);
        return 0;
    }
    if (cmd == "planar-reduce") {
        const auto cfg = configuration_from_opts(c, f);
        validate_configuration(cfg);
        const std::int64_t m = c.m > 0 ? c.m : divisibility_modulus(cfg);
        const auto u = reduction_vector(cfg, m, c.approximate);
        json j{{"configuration", to_json(cfg)}, {"reduction_vector", to_json(u)},
               {"envelope", to_json(dhf_envelope(u))}};
        emit(j, c, out);
        return 0;
    }
    if (cmd == "planar-vertices") {
        const auto cfg = configuration_from_opts(c, f);
        const PLGraph g = planar_graph(cfg, c);
        json j{{"configuration", to_json(cfg)}, {"method", c.method}, {"vertices", to_json(g)["vertices"]},
               {"area", to_json(area_under_graph(g))}};
        if (!c.t.empty()) j["gamma"] = to_json(gamma_vertices(g, parse_flag(c.t, "--t")));
        if (!c.svg.empty()) write_svg(c.svg, render(scene_for_graph(g, "dHF")), out);
        emit(j, c, out);
        return 0;
    }
    if (cmd == "render") {
        std::string svg;
        if (!c.counts.empty()) {
            const auto cfg = LineConfiguration{parse_counts(c.counts), c.shared};
            const PLGraph g = planar_graph(cfg, c);
            if (c.t.empty()) {
                svg = render(scene_for_graph(g, "dHF"));
            } else {
                svg = render(scene_for_polygon(gamma_vertices(g, parse_flag(c.t, "--t")), true, "Gamma"));
            }
        } else if (!f.ideal.empty()) {
            const auto I = ideal_from_json(parse_json(f.ideal, "--ideal"));
            if (c.m < 1) throw ValidationError("--m: required with --ideal");
            const auto R = staircase_region(I, c.m, parse_flag(c.t, "--t"));
            svg = render(scene_for_staircase(R, "L_{" + std::to_string(c.m) + "," + c.t + "}"));
        } else if (!f.kind.empty()) {
            const auto F = make_family(description_from_opts(f));
            const Rational t = t_or_default(c, F);
            const Shape gamma = gamma_limit(F, t, c.max_m > 0 ? c.max_m : 20);
            svg = render(scene_for_polygon(gamma.polygon, true, "Gamma at t=" + t.str()));
        } else if (!f.input.empty()) {
            json j = parse_json(read_file(f.input), "input");
            if (j.contains("counts")) {
                svg = render(scene_for_graph(planar_graph(configuration_from_json(j), c), "dHF"));
            } else {
                auto P = polygon_from_json(j);
                bool is_graph = j.value("type", std::string()) == "graph";
                svg = is_graph ? render(scene_for_graph(PLGraph{P.vertices}, "dHF"))
                               : render(scene_for_polygon(make_polygon(P.vertices), true, "polygon"));
            }
        } else {
            throw ValidationError("render: give --input, --counts, --ideal or --family");
        }
        write_svg(c.svg.empty() ? (c.output.empty() ? "-" : c.output) : c.svg, svg, out);
        return 0;
    }
    throw ValidationError("unknown subcommand '" + cmd + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"limiting shapes and asymptotic invariants of graded monomial families", "limshape"};
    app.require_subcommand(1);
    FamilyOpts f;
    Common c;

    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {"family-eval", "print I_1..I_M of a family"},
        {"check-graded", "check I_p I_q in I_{p+q} for p+q <= M"},
        {"hf", "Hilbert function, polynomial and regularity index"},
        {"shape", "limiting shape and its complement at level t"},
        {"waldschmidt", "Waldschmidt constant"},
        {"areg", "asymptotic regularity"},
        {"ahf", "asymptotic Hilbert function at t"},
        {"planar-reduce", "reduction vector of a line configuration"},
        {"planar-vertices", "vertices of the limiting first-difference graph"},
        {"render", "SVG of a polygon, graph or staircase"},
    };
    for (const auto& s : subs) {
        CLI::App* sc = app.add_subcommand(s.name, s.help);
        add_family_opts(sc, f);
        sc->add_option("--output,-o", c.output, "write JSON here instead of stdout");
        sc->add_option("--svg", c.svg, "also write an SVG figure ('-' for stdout)");
        sc->add_option("--max-m", c.max_m);
        sc->add_option("--m", c.m);
        sc->add_option("--t", c.t, "rational level, e.g. 47/8");
        sc->add_option("--degree", c.degree);
        sc->add_option("--max-degree", c.max_degree);
        sc->add_flag("--polynomial", c.polynomial);
        sc->add_flag("--diagnostics", c.diagnostics);
        sc->add_option("--counts", c.counts, "points per line, e.g. 10,8,5,3");
        sc->add_flag("--shared", c.shared, "two lines sharing one extra point");
        sc->add_flag("--approximate", c.approximate, "allow m not divisible by the modulus");
        sc->add_option("--method", c.method, "closed|envelope");
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "error: " << msg << "\n";
        return 1;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return dispatch(cmd, f, c, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ComputationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace limshape
