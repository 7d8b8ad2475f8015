#include "limshape/hilbert.hpp"

#include "limshape/errors.hpp"
#include "limshape/kernels.hpp"

#include <algorithm>
#include <cstdlib>

namespace limshape {

Rational IntegerPolynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntegerPolynomial::str(const std::string& var) const {
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs[static_cast<std::size_t>(k)];
        if (c.sign() == 0) continue;
        Rational a = abs(c);
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (k == 0)
            out += a.str();
        else if (a == Rational(1))
            out += mono;
        else if (a.is_integer())
            out += a.str() + mono;
        else
            out += a.str() + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

IntegerPolynomial interpolate(const std::vector<std::int64_t>& xs, const std::vector<std::int64_t>& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw ValidationError("interpolate: bad point set");
    const std::size_t n = xs.size();
    std::vector<Rational> result(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        std::vector<Rational> basis{Rational(1)};
        Rational denom(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * Rational(static_cast<long long>(xs[j]));
            }
            basis = std::move(next);
            denom *= Rational(static_cast<long long>(xs[i] - xs[j]));
        }
        Rational scale = Rational(static_cast<long long>(ys[i])) / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) result[k] += basis[k] * scale;
    }
    while (!result.empty() && result.back().sign() == 0) result.pop_back();
    return IntegerPolynomial{std::move(result)};
}

std::int64_t hilbert_function(const MonomialIdeal& I, std::int64_t d) {
    if (d < 0) return 0;
    return kernels::hf_parallel(I, d);
}

std::int64_t hilbert_function_extended(const MonomialIdeal& I, const Rational& t) {
    if (t.sign() < 0) throw ValidationError("t must be non-negative, got " + t.str());
    return hilbert_function(I, t.floor_int());
}

std::int64_t first_difference_hf(const MonomialIdeal& I, std::int64_t d) {
    if (d < 0) throw ValidationError("degree must be non-negative");
    return hilbert_function(I, d) - hilbert_function(I, d - 1);
}

std::int64_t degree_cap(const MonomialIdeal& I) {
    if (const char* env = std::getenv("LIMSHAPE_MAX_DEGREE")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || v < 0)
            throw ValidationError(std::string("LIMSHAPE_MAX_DEGREE: not a non-negative integer: ") + env);
        return v;
    }
    std::int64_t top = 0;
    for (const auto& g : I.gens()) top = std::max(top, limshape::degree(g));
    return std::max<std::int64_t>(4 * top, 50);
}

HilbertData hilbert_data(const MonomialIdeal& I, std::int64_t window) {
    const std::int64_t n = static_cast<std::int64_t>(I.vars()) - 1;
    if (window == 0) window = n + 2;
    if (window < n + 2)
        throw ValidationError("window must be at least " + std::to_string(n + 2));
    const std::int64_t cap = degree_cap(I);
    const std::int64_t last = cap + 2 * window;
    const auto hf = kernels::hf_range(I, last);

    std::vector<std::int64_t> xs, ys;
    for (std::int64_t d = last - n; d <= last; ++d) {
        xs.push_back(d);
        ys.push_back(hf[static_cast<std::size_t>(d)]);
    }
    IntegerPolynomial p = interpolate(xs, ys);

    auto agrees = [&](std::int64_t d) {
        return p(Rational(static_cast<long long>(d))) == Rational(static_cast<long long>(hf[static_cast<std::size_t>(d)]));
    };
    for (std::int64_t d = cap; d <= last; ++d)
        if (!agrees(d))
            throw NotStabilized("Hilbert function not polynomial on [" + std::to_string(cap) + ", " +
                                std::to_string(last) + "] (disagrees at degree " + std::to_string(d) + ")");
    std::int64_t ri = cap;
    while (ri > 0 && agrees(ri - 1)) --ri;
    return HilbertData{std::move(p), ri, cap, window};
}

IntegerPolynomial hilbert_polynomial(const MonomialIdeal& I, std::int64_t window) {
    return hilbert_data(I, window).polynomial;
}

std::int64_t regularity_index(const MonomialIdeal& I) { return hilbert_data(I).regularity_index; }

}  // namespace limshape
