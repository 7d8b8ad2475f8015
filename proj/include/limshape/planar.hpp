#pragma once
#include "limshape/geometry.hpp"
#include "limshape/rational.hpp"

#include <cstdint>
#include <vector>

namespace limshape {

// a_1 > a_2 > ... > a_n points on lines L_1..L_n, no point on two lines. With
// shared_intersection there are exactly two lines and one extra point at
// L_1 cap L_2.
struct LineConfiguration {
    std::vector<std::int64_t> counts;
    bool shared_intersection = false;
};

// Throws ValidationError describing the first violated condition.
void validate_configuration(const LineConfiguration& c);

// m must be a multiple of this for the exact reduction vector.
std::int64_t divisibility_modulus(const LineConfiguration& c);

struct ReductionVector {
    std::vector<std::int64_t> entries;  // ends with 0
    std::int64_t multiplicity = 0;
    bool approximate = false;
};

// Greedy line peeling on the configuration with every point of multiplicity
// m. Ties go to the lowest line index. Non-divisible m throws unless
// allow_approximate is set.
ReductionVector reduction_vector(const LineConfiguration& c, std::int64_t m, bool allow_approximate = false);

// Piecewise-linear graph starting at (0,0) and ending on y = 0. x is not
// necessarily monotone.
struct PLGraph {
    std::vector<Point> vertices;
    friend bool operator==(const PLGraph&, const PLGraph&) = default;
};

PLGraph dhf_envelope(const ReductionVector& u);
PLGraph dhf_vertices_closed_form(const std::vector<std::int64_t>& counts);
PLGraph two_line_vertices(std::int64_t a1, std::int64_t a2);

// Region under the graph cut at x = t; ends with (t, 0) when the cut is active.
PLGraph truncate_graph(const PLGraph& g, const Rational& t);
Rational area_under_graph(const PLGraph& g);

// Image of the region under the graph, cut at x = t, under (x,y) -> (y, x-y).
RationalPolygon gamma_vertices(const PLGraph& g, const Rational& t);
// Inverse map (u,v) -> (u+v, u) on the Gamma boundary, dropping the y-axis.
PLGraph graph_from_gamma(const RationalPolygon& gamma);

}  // namespace limshape
