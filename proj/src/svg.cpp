#include "limshape/svg.hpp"

#include "limshape/errors.hpp"

#include <sstream>

namespace limshape {

namespace {

std::string esc(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '<') o += "&lt;";
        else if (c == '>') o += "&gt;";
        else if (c == '&') o += "&amp;";
        else if (c == '"') o += "&quot;";
        else o += c;
    }
    return o;
}

std::string px(const Rational& r) { return r.decimal(12); }

std::string coords(const Point& p) { return px(p.x) + "," + px(-p.y); }

}  // namespace

SvgScene scene_for_polygon(const RationalPolygon& P, bool hatched, const std::string& title) {
    SvgScene s;
    s.title = title;
    if (!P.empty()) {
        s.shapes.push_back({P.vertices, true, hatched});
        for (const auto& v : P.vertices) s.markers.push_back({v, ""});
    }
    return s;
}

SvgScene scene_for_graph(const PLGraph& g, const std::string& title) {
    SvgScene s;
    s.title = title;
    s.x_label = "t";
    s.y_label = "dHF";
    if (!g.vertices.empty()) {
        s.shapes.push_back({g.vertices, false, false});
        for (const auto& v : g.vertices) s.markers.push_back({v, ""});
    }
    return s;
}

SvgScene scene_for_staircase(const StaircaseRegion& R, const std::string& title) {
    if (R.dim != 2) throw DimensionUnsupported("staircase rendering needs dimension 2");
    SvgScene s;
    s.title = title;
    RationalPolygon T = simplex(R.bound);
    if (!T.empty()) s.shapes.push_back({T.vertices, true, false});
    for (const auto& [c, slack] : R.corners) {
        Rational c0(static_cast<long long>(c[0])), c1(static_cast<long long>(c[1]));
        RationalPolygon piece = clip(clip(T, Rational(1), Rational(0), c0), Rational(0), Rational(1), c1);
        if (!piece.empty()) s.shapes.push_back({piece.vertices, true, true});
        s.markers.push_back({Point{c0, c1}, ""});
    }
    return s;
}

std::string render(const SvgScene& scene) {
    Rational lo_x(0), lo_y(0), hi_x(1), hi_y(1);
    auto grow = [&](const Point& p) {
        lo_x = min(lo_x, p.x);
        lo_y = min(lo_y, p.y);
        hi_x = max(hi_x, p.x);
        hi_y = max(hi_y, p.y);
    };
    for (const auto& sh : scene.shapes)
        for (const auto& p : sh.vertices) grow(p);
    for (const auto& mk : scene.markers) grow(mk.at);
    const Rational extent = max(hi_x - lo_x, hi_y - lo_y);
    const Rational pad = extent / Rational(8);
    const Rational font = extent / Rational(30);
    const Rational stroke = extent / Rational(300);

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" viewBox=\""
      << px(lo_x - pad) << " " << px(-(hi_y + pad)) << " " << px(hi_x - lo_x + 2 * pad) << " "
      << px(hi_y - lo_y + 2 * pad) << "\">\n";
    if (!scene.title.empty()) o << "<title>" << esc(scene.title) << "</title>\n";
    o << "<defs><pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" width=\"" << px(extent / Rational(40))
      << "\" height=\"" << px(extent / Rational(40)) << "\" patternTransform=\"rotate(45)\">"
      << "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"" << px(extent / Rational(40)) << "\" stroke=\"#555\" stroke-width=\""
      << px(stroke) << "\"/></pattern></defs>\n";

    // axes
    o << "<g stroke=\"#000\" stroke-width=\"" << px(stroke) << "\">\n";
    o << "<line x1=\"" << px(lo_x) << "\" y1=\"0\" x2=\"" << px(hi_x + pad / Rational(2)) << "\" y2=\"0\"/>\n";
    o << "<line x1=\"0\" y1=\"" << px(-lo_y) << "\" x2=\"0\" y2=\"" << px(-(hi_y + pad / Rational(2))) << "\"/>\n";
    o << "</g>\n";
    o << "<g font-family=\"sans-serif\" font-size=\"" << px(font) << "\">\n";
    o << "<text x=\"" << px(hi_x + pad / Rational(2)) << "\" y=\"" << px(font) << "\">" << esc(scene.x_label)
      << "</text>\n";
    o << "<text x=\"" << px(font / Rational(2)) << "\" y=\"" << px(-(hi_y + pad / Rational(2))) << "\">"
      << esc(scene.y_label) << "</text>\n";
    o << "</g>\n";

    for (const auto& sh : scene.shapes) {
        std::string pts;
        for (std::size_t i = 0; i < sh.vertices.size(); ++i) {
            if (i) pts += " ";
            pts += coords(sh.vertices[i]);
        }
        const char* tag = sh.closed ? "polygon" : "polyline";
        const char* fill = sh.hatched ? "url(#hatch)" : "none";
        o << "<" << tag << " points=\"" << pts << "\" fill=\"" << fill << "\" stroke=\"#000\" stroke-width=\""
          << px(stroke) << "\"/>\n";
    }

    o << "<g font-family=\"sans-serif\" font-size=\"" << px(font) << "\">\n";
    for (const auto& mk : scene.markers) {
        std::string label = mk.label.empty() ? "(" + mk.at.x.str() + ", " + mk.at.y.str() + ")" : mk.label;
        o << "<circle cx=\"" << px(mk.at.x) << "\" cy=\"" << px(-mk.at.y) << "\" r=\"" << px(stroke * 2)
          << "\" fill=\"#000\"/>\n";
        o << "<text x=\"" << px(mk.at.x + font / Rational(3)) << "\" y=\"" << px(-mk.at.y - font / Rational(3))
          << "\">" << esc(label) << "</text>\n";
    }
    o << "</g>\n</svg>\n";
    return o.str();
}

}  // namespace limshape
