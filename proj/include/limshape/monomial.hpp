#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace limshape {

// Exponents of x_0, ..., x_n. x_0 is the largest variable.
using ExponentVector = std::vector<std::int64_t>;

std::int64_t degree(const ExponentVector& a);
bool monomial_divides(const ExponentVector& a, const ExponentVector& b);
ExponentVector monomial_lcm(const ExponentVector& a, const ExponentVector& b);
ExponentVector monomial_mul(const ExponentVector& a, const ExponentVector& b);

// "(2,0,1)"
std::string format_tuple(const ExponentVector& a);
// "x0^2*x2"; the constant monomial prints as "1"
std::string format_monomial(const ExponentVector& a);
// Accepts either format. For the x-form, vars fixes the length.
ExponentVector parse_monomial(const std::string& s, std::size_t vars);

class MonomialIdeal {
public:
    MonomialIdeal() = default;
    // Minimalizes and sorts gens. Throws ValidationError on bad lengths or negatives.
    MonomialIdeal(std::size_t vars, std::vector<ExponentVector> gens);

    static MonomialIdeal zero(std::size_t vars) { return MonomialIdeal(vars, {}); }
    static MonomialIdeal unit(std::size_t vars);

    std::size_t vars() const { return vars_; }
    const std::vector<ExponentVector>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;

    bool contains(const ExponentVector& m) const;
    // Some generator of J that is not in *this, if any.
    std::optional<ExponentVector> first_outside(const MonomialIdeal& J) const;
    // Pads every generator with zero exponents up to `vars` variables.
    MonomialIdeal padded(std::size_t vars) const;

    std::string str() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::size_t vars_ = 0;
    std::vector<ExponentVector> gens_;
};

bool ideal_contains(const MonomialIdeal& I, const ExponentVector& m);
MonomialIdeal minimal_generators(std::size_t vars, const std::vector<ExponentVector>& gens);
MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J);
bool is_borel_fixed(const MonomialIdeal& I);
std::int64_t alpha(const MonomialIdeal& I);
std::int64_t borel_regularity(const MonomialIdeal& I);

}  // namespace limshape
