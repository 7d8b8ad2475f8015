#pragma once
#include "limshape/monomial.hpp"
#include "limshape/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace limshape {

// Coefficients in ascending degree; trailing zeros trimmed.
struct IntegerPolynomial {
    std::vector<Rational> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
    Rational operator()(const Rational& x) const;
    // "t + 3", "1/2*t^2 + 3/2*t + 1"
    std::string str(const std::string& var = "t") const;

    friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;
};

// Unique polynomial of degree < xs.size() through the points.
IntegerPolynomial interpolate(const std::vector<std::int64_t>& xs, const std::vector<std::int64_t>& ys);

std::int64_t hilbert_function(const MonomialIdeal& I, std::int64_t d);
std::int64_t hilbert_function_extended(const MonomialIdeal& I, const Rational& t);
std::int64_t first_difference_hf(const MonomialIdeal& I, std::int64_t d);

// Degree bound up to which HF is scanned: max(4 * max generator degree, 50),
// or LIMSHAPE_MAX_DEGREE when set.
std::int64_t degree_cap(const MonomialIdeal& I);

struct HilbertData {
    IntegerPolynomial polynomial;
    std::int64_t regularity_index = 0;
    std::int64_t cap = 0;
    std::int64_t window = 0;
};

// window = 0 means n+2. Throws NotStabilized when HF is not polynomial on
// [cap, cap + 2*window].
HilbertData hilbert_data(const MonomialIdeal& I, std::int64_t window = 0);
IntegerPolynomial hilbert_polynomial(const MonomialIdeal& I, std::int64_t window = 0);
std::int64_t regularity_index(const MonomialIdeal& I);

}  // namespace limshape
