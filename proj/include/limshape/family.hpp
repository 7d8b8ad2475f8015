#pragma once
#include "limshape/monomial.hpp"
#include "limshape/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace limshape {

// ca*x0 + cb*x1 >= rhs, per unit of m: the family's m-th ideal is cut out by
// ca*a + cb*b >= m*rhs.
struct HalfPlane {
    Rational ca, cb, rhs;
};

// Constructor arguments, kept so a family can be serialized back.
struct FamilyDescription {
    std::string kind;  // power, doubling, halfplane, ceiling, chain, oscillating, custom
    std::optional<MonomialIdeal> base;
    int extra_vars = 0;
    Rational q1, q2, q;
    std::vector<std::pair<Rational, Rational>> breakpoints;
    std::int64_t a = 0, b = 0, d = 0;
};

struct GradedFamily {
    using Rule = std::function<MonomialIdeal(std::int64_t)>;

    std::size_t vars = 0;
    Rule rule;
    std::string label;
    bool claims_borel = false;
    // Non-empty iff the limiting shape is known in closed form.
    std::vector<HalfPlane> constraints;
    // Residue period for estimator subsequences (oscillating family).
    std::optional<std::int64_t> period;
    FamilyDescription description;

    bool exact_shape() const { return !constraints.empty(); }
    MonomialIdeal at(std::int64_t m) const;
};

GradedFamily make_power_family(const MonomialIdeal& I);
GradedFamily make_doubling_family(int extra_vars);
GradedFamily make_halfplane_family(const Rational& q1, const Rational& q2);
GradedFamily make_ceiling_family(const Rational& q);
GradedFamily make_chain_family(const std::vector<std::pair<Rational, Rational>>& breakpoints);
GradedFamily make_oscillating_family(std::int64_t a, std::int64_t b, std::int64_t d);
GradedFamily make_custom_family(std::size_t vars, GradedFamily::Rule rule, std::string label,
                                bool claims_borel = false);
GradedFamily make_family(const FamilyDescription& desc);

// Minimal generators of {(a,b) : ca*a + cb*b >= m*rhs for every constraint},
// as an ideal in `vars` >= 2 variables (x0^a x1^b).
MonomialIdeal ideal_from_constraints(const std::vector<HalfPlane>& cs, std::int64_t m, std::size_t vars);

struct GradedViolation {
    std::int64_t p = 0, q = 0;
    ExponentVector witness;  // in I_p * I_q but not in I_{p+q}
};

struct GradedReport {
    std::int64_t max_m = 0;
    std::int64_t pairs_checked = 0;
    std::vector<GradedViolation> violations;
    bool ok() const { return violations.empty(); }
};

// All p <= q with p + q <= M. OpenMP over pairs; the serial version is the
// reference.
GradedReport verify_graded(const GradedFamily& F, std::int64_t M);
GradedReport verify_graded_serial(const GradedFamily& F, std::int64_t M);

struct SubsequenceValue {
    std::int64_t residue = 0;
    std::int64_t m = 0;
    Rational value;
};

struct LimitEstimate {
    std::vector<std::pair<std::int64_t, Rational>> values;  // (m, x_m / m)
    Rational inf_value, liminf, limsup;
    bool oscillating = false;
    bool divergent = false;
    Rational tolerance;
    std::vector<SubsequenceValue> subsequences;
};

LimitEstimate waldschmidt_estimate(const GradedFamily& F, std::int64_t M);
LimitEstimate areg_estimate(const GradedFamily& F, std::int64_t M, const Rational& tolerance = Rational(1, 20));
LimitEstimate ri_estimate(const GradedFamily& F, std::int64_t M, const Rational& tolerance = Rational(1, 20));

// Pairs (p, q), p <= q, p + q <= M, with alpha(I_{p+q}) > alpha(I_p) + alpha(I_q).
std::vector<std::pair<std::int64_t, std::int64_t>> fekete_violations(const GradedFamily& F, std::int64_t M);

}  // namespace limshape
