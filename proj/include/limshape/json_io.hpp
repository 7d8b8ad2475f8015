#pragma once
#include "limshape/family.hpp"
#include "limshape/geometry.hpp"
#include "limshape/hilbert.hpp"
#include "limshape/monomial.hpp"
#include "limshape/planar.hpp"
#include "limshape/rational.hpp"
#include "limshape/shape.hpp"

#include "json.hpp"

#include <string>

namespace limshape {

using json = nlohmann::ordered_json;

// Rationals travel as "num/den" strings (plain integers also accepted on input).
json to_json(const Rational& r);
Rational rational_from_json(const json& j, const std::string& field);

json to_json(const ExponentVector& e);
json to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const json& j);

json to_json(const Point& p);
Point point_from_json(const json& j, const std::string& field);
json to_json(const RationalPolygon& P);
RationalPolygon polygon_from_json(const json& j);
json to_json(const PLGraph& g);
PLGraph graph_from_json(const json& j);

json to_json(const FamilyDescription& d);
FamilyDescription family_from_json(const json& j);

json to_json(const LineConfiguration& c);
LineConfiguration configuration_from_json(const json& j);

json to_json(const IntegerPolynomial& p);
json to_json(const GradedReport& r);
json to_json(const LimitEstimate& e);
json to_json(const Shape& s);
json to_json(const ReductionVector& u);

}  // namespace limshape
