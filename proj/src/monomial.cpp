#include "limshape/monomial.hpp"

#include "limshape/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace limshape {

namespace {

void same_length(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size())
        throw ValidationError("exponent vectors of different length (" +
                              std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
}

std::int64_t parse_nonneg(const std::string& s, const std::string& whole) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ValidationError("bad exponent in monomial '" + whole + "'");
    return std::stoll(s);
}

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

}  // namespace

std::int64_t degree(const ExponentVector& a) {
    std::int64_t d = 0;
    for (auto e : a) d += e;
    return d;
}

bool monomial_divides(const ExponentVector& a, const ExponentVector& b) {
    same_length(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ExponentVector monomial_lcm(const ExponentVector& a, const ExponentVector& b) {
    same_length(a, b);
    ExponentVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
    return c;
}

ExponentVector monomial_mul(const ExponentVector& a, const ExponentVector& b) {
    same_length(a, b);
    ExponentVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

std::string format_tuple(const ExponentVector& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

std::string format_monomial(const ExponentVector& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (a[i] > 1) s += "^" + std::to_string(a[i]);
    }
    return s.empty() ? "1" : s;
}

ExponentVector parse_monomial(const std::string& raw, std::size_t vars) {
    std::string s = strip(raw);
    if (s.empty()) throw ValidationError("empty monomial");
    ExponentVector out;
    if (s.front() == '(' || s.front() == '[') {
        if (s.size() < 2 || (s.back() != ')' && s.back() != ']'))
            throw ValidationError("unterminated tuple '" + raw + "'");
        std::stringstream ss(s.substr(1, s.size() - 2));
        std::string part;
        while (std::getline(ss, part, ',')) out.push_back(parse_nonneg(part, raw));
        if (vars && out.size() != vars)
            throw ValidationError("monomial '" + raw + "' has " + std::to_string(out.size()) +
                                  " exponents, expected " + std::to_string(vars));
        return out;
    }
    if (vars == 0) throw ValidationError("variable count needed to parse '" + raw + "'");
    out.assign(vars, 0);
    if (s == "1") return out;
    std::stringstream ss(s);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
        if (factor.size() < 2 || factor[0] != 'x') throw ValidationError("bad factor in monomial '" + raw + "'");
        auto caret = factor.find('^');
        std::int64_t idx = parse_nonneg(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1), raw);
        std::int64_t e = caret == std::string::npos ? 1 : parse_nonneg(factor.substr(caret + 1), raw);
        if (idx >= static_cast<std::int64_t>(vars))
            throw ValidationError("variable x" + std::to_string(idx) + " out of range in '" + raw + "'");
        out[static_cast<std::size_t>(idx)] += e;
    }
    return out;
}

MonomialIdeal::MonomialIdeal(std::size_t vars, std::vector<ExponentVector> gens) : vars_(vars) {
    if (vars == 0) throw ValidationError("ideal needs at least one variable");
    for (const auto& g : gens) {
        if (g.size() != vars)
            throw ValidationError("generator " + format_tuple(g) + " has wrong length, expected " +
                                  std::to_string(vars));
        for (auto e : g)
            if (e < 0) throw ValidationError("negative exponent in generator " + format_tuple(g));
    }
    std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
        auto da = degree(a), db = degree(b);
        return da != db ? da < db : a > b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (auto& g : gens) {
        bool redundant = false;
        for (const auto& k : gens_)
            if (monomial_divides(k, g)) { redundant = true; break; }
        if (!redundant) gens_.push_back(std::move(g));
    }
    // lex-descending: x0-heavy generators first
    std::sort(gens_.begin(), gens_.end(), std::greater<>());
}

MonomialIdeal MonomialIdeal::unit(std::size_t vars) {
    return MonomialIdeal(vars, {ExponentVector(vars, 0)});
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && degree(gens_[0]) == 0;
}

bool MonomialIdeal::contains(const ExponentVector& m) const {
    if (m.size() != vars_)
        throw ValidationError("monomial " + format_tuple(m) + " does not match ideal with " +
                              std::to_string(vars_) + " variables");
    for (const auto& g : gens_)
        if (monomial_divides(g, m)) return true;
    return false;
}

std::optional<ExponentVector> MonomialIdeal::first_outside(const MonomialIdeal& J) const {
    for (const auto& g : J.gens())
        if (!contains(g)) return g;
    return std::nullopt;
}

MonomialIdeal MonomialIdeal::padded(std::size_t vars) const {
    if (vars < vars_) throw ValidationError("cannot pad ideal to fewer variables");
    std::vector<ExponentVector> gs;
    for (auto g : gens_) {
        g.resize(vars, 0);
        gs.push_back(std::move(g));
    }
    return MonomialIdeal(vars, std::move(gs));
}

std::string MonomialIdeal::str() const {
    if (gens_.empty()) return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += format_monomial(gens_[i]);
    }
    return s + ")";
}

bool ideal_contains(const MonomialIdeal& I, const ExponentVector& m) { return I.contains(m); }

MonomialIdeal minimal_generators(std::size_t vars, const std::vector<ExponentVector>& gens) {
    return MonomialIdeal(vars, gens);
}

MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.vars() != J.vars())
        throw ValidationError("ideal product: " + std::to_string(I.vars()) + " vs " +
                              std::to_string(J.vars()) + " variables");
    std::vector<ExponentVector> gs;
    gs.reserve(I.gens().size() * J.gens().size());
    for (const auto& a : I.gens())
        for (const auto& b : J.gens()) gs.push_back(monomial_mul(a, b));
    return MonomialIdeal(I.vars(), std::move(gs));
}

bool is_borel_fixed(const MonomialIdeal& I) {
    if (I.is_zero()) throw ValidationError("Borel test on the zero ideal");
    for (const auto& w : I.gens())
        for (std::size_t j = 1; j < w.size(); ++j) {
            if (w[j] == 0) continue;
            for (std::size_t i = 0; i < j; ++i) {
                ExponentVector v = w;
                ++v[i];
                --v[j];
                if (!I.contains(v)) return false;
            }
        }
    return true;
}

std::int64_t alpha(const MonomialIdeal& I) {
    if (I.is_zero()) throw ValidationError("alpha of the zero ideal is undefined");
    std::int64_t best = degree(I.gens().front());
    for (const auto& g : I.gens()) best = std::min(best, degree(g));
    return best;
}

std::int64_t borel_regularity(const MonomialIdeal& I) {
    if (I.is_zero()) throw ValidationError("regularity of the zero ideal is undefined");
    if (!is_borel_fixed(I)) throw ValidationError("borel_regularity requires a Borel-fixed ideal: " + I.str());
    std::int64_t best = 0;
    for (const auto& g : I.gens()) best = std::max(best, degree(g));
    return best;
}

}  // namespace limshape
