#pragma once
#include "limshape/geometry.hpp"
#include "limshape/planar.hpp"
#include "limshape/shape.hpp"

#include <string>
#include <vector>

namespace limshape {

struct SvgScene {
    struct Shape {
        std::vector<Point> vertices;
        bool closed = true;
        bool hatched = false;
    };
    struct Marker {
        Point at;
        std::string label;  // empty: coordinates are printed
    };
    std::string title;
    std::string x_label = "x0", y_label = "x1";
    std::vector<Shape> shapes;
    std::vector<Marker> markers;
};

SvgScene scene_for_polygon(const RationalPolygon& P, bool hatched, const std::string& title);
SvgScene scene_for_graph(const PLGraph& g, const std::string& title);
// Outline of T_{mt} with each staircase corner's region hatched. Dimension 2 only.
SvgScene scene_for_staircase(const StaircaseRegion& R, const std::string& title);

// Deterministic SVG 1.1. Coordinates are 12-digit decimals of the exact values.
std::string render(const SvgScene& scene);

}  // namespace limshape
