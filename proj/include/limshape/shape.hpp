#pragma once
#include "limshape/family.hpp"
#include "limshape/geometry.hpp"
#include "limshape/monomial.hpp"
#include "limshape/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace limshape {

// T^n_s = {x in R^n_{>=0} : sum x <= s}
struct SimplexRegion {
    std::size_t dim = 0;
    Rational bound;
};

// L_{m,t}: union over corners c of (c + R^n_{>=0}), intersected with T^n_{mt}.
// A generator a contributes the corner (a_0..a_{n-1}) when |a| <= mt; slack is
// mt - a_n. Corners are minimal under componentwise order.
struct StaircaseRegion {
    std::size_t dim = 0;
    Rational bound;
    std::vector<std::pair<ExponentVector, Rational>> corners;
};

// Gamma_{m,t} = T^n_{mt} minus the staircase.
struct GammaRegion {
    StaircaseRegion staircase;
};

StaircaseRegion staircase_region(const MonomialIdeal& I, std::int64_t m, const Rational& t);
GammaRegion gamma_region(const MonomialIdeal& I, std::int64_t m, const Rational& t);

// Lattice points, boundary included for the simplex and the staircase, so
// that #Gamma = #T - #L.
std::int64_t lattice_count(const SimplexRegion& R);
std::int64_t lattice_count(const StaircaseRegion& R);
std::int64_t lattice_count(const GammaRegion& R);

// Exact for dim 1 and 2, DimensionUnsupported otherwise.
Rational region_volume(const SimplexRegion& R);
Rational region_volume(const StaircaseRegion& R);
Rational region_volume(const GammaRegion& R);
Rational region_volume(const RationalPolygon& P);

// A planar slice at level t. exact is false when the polygon is only the hull
// of the scaled staircases for m <= M.
struct Shape {
    RationalPolygon polygon;
    Rational t;
    bool exact = false;
};

// Families in fewer than 3 variables are padded with unused trailing variables.
Shape limiting_shape(const GradedFamily& F, const Rational& t, std::int64_t M);
Shape gamma_limit(const GradedFamily& F, const Rational& t, std::int64_t M);
// T_t minus a convex, upward-closed subset of T_t.
Shape complement_in_simplex(const Shape& delta);

Rational waldschmidt_from_shape(const Shape& gamma);
Rational areg_from_shape(const Shape& delta);

// A level at which every vertex of the exact shape is visible.
Rational suggested_t(const GradedFamily& F);

struct AhfResult {
    Rational value;
    bool exact = false;
    // (m, #Gamma_{m,t} / m^2)
    std::vector<std::pair<std::int64_t, Rational>> sequence;
};

AhfResult ahf(const GradedFamily& F, const Rational& t, std::int64_t M, bool diagnostics = false);

// f_t(x_0, x_1) = (x_0, x_1, t - x_0 - x_1) applied to each vertex.
std::vector<std::vector<Rational>> lift_slice(const RationalPolygon& slice, const Rational& t);

}  // namespace limshape
