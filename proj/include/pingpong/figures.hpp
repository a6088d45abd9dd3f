#pragma once

#include "pingpong/generators.hpp"
#include "pingpong/projection.hpp"
#include "pingpong/unipotent.hpp"
#include "pingpong/uniqueness.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

// Figure data assembled from exact rational geometry. Decimal conversion
// happens only inside the SVG writer, with 12 significant digits; the CSV
// writer emits exact numerator/denominator pairs.

namespace pingpong {

struct IOError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FigPoint {
    std::string label;
    PlanePoint p;
};

struct FigPath {
    std::string label;
    std::string style;  // css-ish class name used by the svg writer
    std::vector<PlanePoint> vertices;
    bool closed = false;
};

struct FigureData {
    std::string name;
    std::vector<FigPath> paths;
    std::vector<FigPoint> points;
    bool unit_circle = false;
};

namespace detail {

inline PlanePoint project_generator(const Mat& m, const Vec& g) { return project(m * g); }

inline FigPath triangle(const std::string& label, const std::string& style,
                        const Mat& m, const Vec& g0, const Vec& g1, const Vec& g2) {
    return FigPath{label, style,
                   {project_generator(m, g0), project_generator(m, g1), project_generator(m, g2)},
                   true};
}

}  // namespace detail

// Projections of X = +/-C and its rotated and folded-back copies: the big
// triangle u v w, its three rotations, and the three images T(R^i X) inside
// the big triangle.
inline FigureData figure_pingpong_triangles() {
    const HGTriple h = build_generators(3);
    const Vec &u = cone_u(), &v = cone_v(), &w = cone_w();
    FigureData fig;
    fig.name = "pingpong_triangles";
    const Mat id = Mat::identity(3);
    fig.paths.push_back(detail::triangle("X", "cone-x", id, u, v, w));
    for (long i = 1; i <= 3; ++i) {
        fig.paths.push_back(
            detail::triangle("R^" + std::to_string(i) + "X", "cone-y", h.R.pow(i), u, v, w));
    }
    for (long i = 1; i <= 3; ++i) {
        fig.paths.push_back(detail::triangle("T*R^" + std::to_string(i) + "X", "cone-tx",
                                             h.T * h.R.pow(i), u, v, w));
    }
    fig.points.push_back({"p", project(u)});
    fig.points.push_back({"q", project(v)});
    fig.points.push_back({"r", project(w)});
    return fig;
}

// The circle orbits (TR)^t(1,0) and (TR^-1)^t(0,1), t = 1..n, with the
// limit tangents computed from the exact derivative of the rational
// parametrization (they become horizontal resp. vertical).
inline FigureData figure_circle_orbits(int npoints = 25) {
    FigureData fig;
    fig.name = "circle_orbits";
    fig.unit_circle = true;

    PlanePoint p{Rat(1), Rat(0)};
    for (int t = 1; t <= npoints; ++t) {
        p = act2d(PlaneMap::T, act2d(PlaneMap::R, p));
        fig.points.push_back({"TR^" + std::to_string(t), p});
    }
    PlanePoint q{Rat(0), Rat(1)};
    for (int t = 1; t <= npoints; ++t) {
        q = act2d(PlaneMap::T, act2d(PlaneMap::Rinv, q));
        fig.points.push_back({"TRinv^" + std::to_string(t), q});
    }

    // Parametrize rho((TR)^t v) = (A/D, B/D) with UniPoly entries and take
    // the leading coefficients of the derivative direction
    // (A'D - AD', B'D - BD').
    const HGTriple h = build_generators(3);
    auto tangent_direction = [](const PolyMat& powers, const Vec& start) {
        const std::vector<UniPoly> orbit = powers.apply(start);
        const UniPoly a_num = (orbit[0] - orbit[2]) * Rat(-2);
        const UniPoly b_num = orbit[1] * Rat(-2);
        const UniPoly den = orbit[0] - orbit[1] + orbit[2];
        const UniPoly da = a_num.derivative() * den - a_num * den.derivative();
        const UniPoly db = b_num.derivative() * den - b_num * den.derivative();
        const int top = std::max(da.degree(), db.degree());
        Vec dir(2);
        dir[0] = da.coeff(static_cast<std::size_t>(top));
        dir[1] = db.coeff(static_cast<std::size_t>(top));
        return dir;
    };
    const Vec dir1 = tangent_direction(matrix_power_poly(h.T * h.R), cone_v());
    const Vec dir2 = tangent_direction(matrix_power_poly(h.T * inverse(h.R)), cone_u());

    auto tangent_path = [](const std::string& label, PlanePoint through, Vec dir) {
        const Rat scale = abs(dir[0]) > abs(dir[1]) ? abs(dir[0]) : abs(dir[1]);
        Vec d(2);
        d[0] = dir[0] / scale;
        d[1] = dir[1] / scale;
        PlanePoint from{through.a - 2 * d[0], through.b - 2 * d[1]};
        PlanePoint to{through.a + 2 * d[0], through.b + 2 * d[1]};
        return FigPath{label, "tangent", {from, to}, false};
    };
    fig.paths.push_back(tangent_path("limit_tangent_u", project(cone_u()), dir1));
    fig.paths.push_back(tangent_path("limit_tangent_v", project(cone_v()), dir2));
    fig.points.push_back({"tangent_intersection", {Rat(1), Rat(1)}});
    return fig;
}

// The affine cones Q1, Q2 rooted at (1,1) and the cones X1', X2' whose
// intersection is the candidate triangle for s = (l2+1, l1+l2+1).
inline FigureData figure_q_cones(const Rat& l1, const Rat& l2) {
    FigureData fig;
    fig.name = "q_cones";
    const Rat reach(3);
    auto ray_pair = [&](const std::string& label, const std::string& style, PlanePoint apex,
                        PlanePoint d1, PlanePoint d2) {
        return FigPath{label, style,
                       {{apex.a + reach * d1.a, apex.b + reach * d1.b},
                        apex,
                        {apex.a + reach * d2.a, apex.b + reach * d2.b}},
                       false};
    };
    fig.paths.push_back(ray_pair("Q1", "cone-q", {Rat(1), Rat(1)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}));
    fig.paths.push_back(ray_pair("Q2", "cone-q", {Rat(1), Rat(1)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}));
    const PlanePoint s{l2 + 1, l1 + l2 + 1};
    fig.paths.push_back(ray_pair("X1'", "cone-xp", {Rat(0), Rat(1)},
                                 {s.a, s.b - 1}, {Rat(1), Rat(-1)}));
    fig.paths.push_back(ray_pair("X2'", "cone-xp", {Rat(1), Rat(0)},
                                 {s.a - 1, s.b}, {Rat(-1), Rat(1)}));
    fig.points.push_back({"s", s});
    return fig;
}

namespace detail {

// 12 significant digits, emission only
inline std::string decimal(const Rat& x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x.get_d());
    return buf;
}

}  // namespace detail

inline void write_svg(const FigureData& fig, std::ostream& os) {
    // bounds from the exact data, padded
    Rat lo(-1), hi(1);
    auto see = [&](const PlanePoint& p) {
        lo = std::min({lo, p.a, p.b});
        hi = std::max({hi, p.a, p.b});
    };
    for (const auto& path : fig.paths)
        for (const auto& p : path.vertices) see(p);
    for (const auto& pt : fig.points) see(pt.p);
    const double pad = 0.3;
    const double x0 = lo.get_d() - pad, x1 = hi.get_d() + pad;
    const double w = x1 - x0;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\""
       << x0 << " " << -x1 << " " << w << " " << w << "\">\n";
    os << "  <style>\n"
          "    .cone-x { fill: #d62728; fill-opacity: 0.35; stroke: #d62728; stroke-width: 0.01; }\n"
          "    .cone-y { fill: #1f77b4; fill-opacity: 0.25; stroke: #1f77b4; stroke-width: 0.01; }\n"
          "    .cone-tx { fill: #2ca02c; fill-opacity: 0.45; stroke: #2ca02c; stroke-width: 0.01; }\n"
          "    .cone-q { fill: none; stroke: #9467bd; stroke-width: 0.02; }\n"
          "    .cone-xp { fill: none; stroke: #ff7f0e; stroke-width: 0.02; }\n"
          "    .tangent { fill: none; stroke: #7f7f7f; stroke-width: 0.01; stroke-dasharray: 0.05 0.03; }\n"
          "    .orbit { fill: #d62728; }\n"
          "    .axis { stroke: #bbbbbb; stroke-width: 0.008; }\n"
          "    .circle { fill: none; stroke: #bbbbbb; stroke-width: 0.01; }\n"
          "  </style>\n";
    // svg y grows downward; flip b
    os << "  <line class=\"axis\" x1=\"" << x0 << "\" y1=\"0\" x2=\"" << x1 << "\" y2=\"0\"/>\n";
    os << "  <line class=\"axis\" x1=\"0\" y1=\"" << -x1 << "\" x2=\"0\" y2=\"" << -x0 << "\"/>\n";
    if (fig.unit_circle)
        os << "  <circle class=\"circle\" cx=\"0\" cy=\"0\" r=\"1\"/>\n";
    for (const auto& path : fig.paths) {
        os << "  <" << (path.closed ? "polygon" : "polyline") << " class=\"" << path.style
           << "\" data-label=\"" << path.label << "\" points=\"";
        bool first = true;
        for (const auto& p : path.vertices) {
            if (!first) os << " ";
            first = false;
            os << detail::decimal(p.a) << "," << detail::decimal(-p.b);
        }
        os << "\"/>\n";
    }
    for (const auto& pt : fig.points) {
        os << "  <circle class=\"orbit\" data-label=\"" << pt.label << "\" cx=\""
           << detail::decimal(pt.p.a) << "\" cy=\"" << detail::decimal(-pt.p.b)
           << "\" r=\"0.02\"/>\n";
    }
    os << "</svg>\n";
}

// header: label,a_num,a_den,b_num,b_den
inline void write_csv(const FigureData& fig, std::ostream& os) {
    os << "label,a_num,a_den,b_num,b_den\n";
    auto line = [&](const std::string& label, const PlanePoint& p) {
        os << label << "," << p.a.get_num().get_str() << "," << p.a.get_den().get_str() << ","
           << p.b.get_num().get_str() << "," << p.b.get_den().get_str() << "\n";
    };
    for (const auto& path : fig.paths)
        for (std::size_t i = 0; i < path.vertices.size(); ++i)
            line(path.label + "[" + std::to_string(i) + "]", path.vertices[i]);
    for (const auto& pt : fig.points) line(pt.label, pt.p);
}

inline void write_svg_file(const FigureData& fig, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw IOError("cannot open for writing: " + path);
    write_svg(fig, os);
    if (!os) throw IOError("write failed: " + path);
}

inline void write_csv_file(const FigureData& fig, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw IOError("cannot open for writing: " + path);
    write_csv(fig, os);
    if (!os) throw IOError("write failed: " + path);
}

}  // namespace pingpong
