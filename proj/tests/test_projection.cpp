#include "pingpong/figures.hpp"
#include "pingpong/generators.hpp"
#include "pingpong/projection.hpp"
#include "pingpong/uniqueness.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace pingpong;
using testutil::Rng;

TEST_CASE("the projection sends u, v, w to the chart corners") {
    CHECK(project(Vec{1, -2, 1}) == PlanePoint{rat(0), rat(1)});
    CHECK(project(Vec{1, 0, 3}) == PlanePoint{rat(1), rat(0)});
    CHECK(project(Vec{0, -1, 1}) == PlanePoint{rat(1), rat(1)});
    // constant on lines through the origin
    CHECK(project(Vec{2, -4, 2}) == PlanePoint{rat(0), rat(1)});
    CHECK(project(Vec{-1, 2, -1}) == PlanePoint{rat(0), rat(1)});
    CHECK_THROWS_AS(project(Vec{1, 1, 0}), OnProjectionHorizon);
}

TEST_CASE("unproject is a section of project") {
    CHECK(unproject({rat(0), rat(1)}) == Vec::parse("1/4,-1/2,1/4"));
    CHECK(unproject({rat(1), rat(0)}) == Vec::parse("1/4,0,3/4"));
    CHECK(unproject({rat(1), rat(1)}) == Vec::parse("0,-1/2,1/2"));
    Rng rng(81);
    for (int k = 0; k < 100; ++k) {
        const PlanePoint p{rng.rational(), rng.rational()};
        const Vec s = unproject(p);
        CHECK(projection_functional(s) == 1);
        CHECK(project(s) == p);
    }
}

TEST_CASE("plane actions of R and T") {
    CHECK(act2d(PlaneMap::R, {rat(1), rat(1)}) == PlanePoint{rat(1), rat(-1)});
    CHECK(act2d(PlaneMap::T, {rat(1), rat(0)}) == PlanePoint{rat(0), rat(1)});
    // T is an involution away from its pole
    const PlanePoint p{rat(2), rat(2)};
    CHECK(act2d(PlaneMap::T, act2d(PlaneMap::T, p)) == p);
    CHECK_THROWS_AS(act2d(PlaneMap::T, PlanePoint{rat(3, 4), rat(3, 4)}), TPoleHit);

    // R has order 4 on samples and symbolically: R^4(a, b) = (a, b)
    PlanePoint q{rat(5, 7), rat(-3, 2)};
    PlanePoint r = q;
    for (int i = 0; i < 4; ++i) r = act2d(PlaneMap::R, r);
    CHECK(r == q);
    CHECK(act2d(PlaneMap::Rinv, act2d(PlaneMap::R, q)) == q);
    {
        // exact composition of the formulas
        MultiPoly a = MultiPoly::var("a"), b = MultiPoly::var("b");
        MultiPoly ca = a, cb = b;
        for (int i = 0; i < 4; ++i) {
            const MultiPoly na = cb, nb = -ca;
            ca = na;
            cb = nb;
        }
        CHECK(ca == a);
        CHECK(cb == b);
    }
}

TEST_CASE("semiconjugacy between the matrix action and the plane action") {
    const HGTriple h = build_generators(3);
    Rng rng(97);
    int checked = 0;
    while (checked < 500) {
        const Vec s = rng.vector(3);
        if (s.is_zero() || projection_functional(s) == 0) continue;
        for (const auto& [m, g] : {std::pair<Mat, PlaneMap>{h.R, PlaneMap::R},
                                   std::pair<Mat, PlaneMap>{h.T, PlaneMap::T}}) {
            const Vec ms = m * s;
            if (projection_functional(ms) == 0) continue;
            CHECK(project(ms) == act2d(g, project(s)));
            ++checked;
        }
    }
}

TEST_CASE("circle invariance holds as a polynomial identity") {
    const auto rep = circle_invariance_identity();
    CHECK(rep.t_identity);
    CHECK(rep.r_identity);
    CHECK(rep.t_residual.is_zero());

    // numeric spot check on the circle
    const PlanePoint on{rat(3, 5), rat(4, 5)};
    const PlanePoint img = act2d(PlaneMap::T, on);
    CHECK(img.a * img.a + img.b * img.b == 1);
    const PlanePoint rimg = act2d(PlaneMap::R, {rat(1), rat(0)});
    CHECK(rimg == PlanePoint{rat(0), rat(-1)});
    CHECK(rimg.a * rimg.a + rimg.b * rimg.b == 1);

    CHECK(reflection_conjugations_hold());
}

TEST_CASE("quadric membership matches the circle after projection") {
    CHECK(quadric_membership(unproject({rat(3, 5), rat(4, 5)})));
    CHECK(quadric_membership(Vec{1, -2, 1}));       // 4*0 + 16 == 16
    CHECK_FALSE(quadric_membership(Vec{1, 0, 0}));  // 4 != 1
    // preimages of circle points under scaling stay on the quadric
    Rng rng(13);
    for (int k = 0; k < 50; ++k) {
        const Rat t = rng.rational(-10, 10, 6);
        // rational circle point ((1-t^2)/(1+t^2), 2t/(1+t^2))
        const Rat d = 1 + t * t;
        const PlanePoint p{(1 - t * t) / d, 2 * t / d};
        CHECK(quadric_membership(unproject(p) * rng.positive_rational()));
    }
}

TEST_CASE("q1q2 obstruction: closed forms and forced sign clash") {
    const auto r01 = q1q2_obstruction(rat(0), rat(1));
    CHECK(r01.theta == rat(-9));
    CHECK(r01.b == rat(-2, 9));
    CHECK(r01.d == rat(10, 9));
    CHECK(r01.closed_forms_match);
    CHECK(r01.opposite_signs);

    const auto r10 = q1q2_obstruction(rat(1), rat(0));
    CHECK(r10.a == 0);
    CHECK(r10.c == 0);
    CHECK(r10.theta == rat(-2));
    CHECK(r10.b == rat(2) / r10.theta);
    CHECK(r10.d == rat(-4) / r10.theta);
    CHECK(r10.closed_forms_match);
    CHECK(r10.opposite_signs);

    CHECK_THROWS_AS(q1q2_obstruction(rat(0), rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(q1q2_obstruction(rat(3, 2), rat(1)), ThetaZero);

    // grid sweep: sign(b) = -sign(d) everywhere admissible
    for (Rat l1 = rat(0); l1 <= rat(3); l1 += rat(1, 4)) {
        for (Rat l2 = rat(0); l2 <= rat(3); l2 += rat(1, 4)) {
            if ((l1 == 0 && l2 == 0) || l1 == rat(3, 2)) continue;
            const auto r = q1q2_obstruction(l1, l2);
            CHECK(r.closed_forms_match);
            CHECK(r.opposite_signs);
        }
    }
}

TEST_CASE("figure 1 geometry: the projected triangles") {
    const FigureData fig = figure_pingpong_triangles();
    REQUIRE(fig.paths.size() == 7);
    CHECK(fig.paths[0].label == "X");
    CHECK(fig.paths[0].vertices[0] == PlanePoint{rat(0), rat(1)});
    CHECK(fig.paths[0].vertices[1] == PlanePoint{rat(1), rat(0)});
    CHECK(fig.paths[0].vertices[2] == PlanePoint{rat(1), rat(1)});

    // rotated copies are the plane rotations of the base triangle
    for (std::size_t i = 1; i <= 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            PlanePoint expect = fig.paths[0].vertices[j];
            for (std::size_t k = 0; k < i; ++k) expect = act2d(PlaneMap::R, expect);
            CHECK(fig.paths[i].vertices[j] == expect);
        }
    }

    // the folded-back triangles live inside the closed first-quadrant triangle
    for (std::size_t i = 4; i <= 6; ++i)
        for (const auto& p : fig.paths[i].vertices) {
            CHECK(p.a >= 0);
            CHECK(p.b >= 0);
            CHECK(p.a + p.b >= 1);  // inside X's triangle: above the pq edge
            CHECK(p.a <= 1);
            CHECK(p.b <= 1);
        }
}

TEST_CASE("figure 2 orbits stay on the unit circle") {
    const FigureData fig = figure_circle_orbits(25);
    REQUIRE(fig.points.size() == 51);  // 25 + 25 + tangent intersection
    CHECK(fig.points[0].label == "TR^1");
    CHECK(fig.points[0].p == PlanePoint{rat(3, 5), rat(4, 5)});
    for (const auto& pt : fig.points)
        if (pt.label != "tangent_intersection")
            CHECK(pt.p.a * pt.p.a + pt.p.b * pt.p.b == 1);

    // limit tangents: horizontal through (0,1), vertical through (1,0)
    REQUIRE(fig.paths.size() == 2);
    CHECK(fig.paths[0].vertices[0].b == fig.paths[0].vertices[1].b);
    CHECK(fig.paths[0].vertices[0].b == 1);
    CHECK(fig.paths[1].vertices[0].a == fig.paths[1].vertices[1].a);
    CHECK(fig.paths[1].vertices[0].a == 1);
}

TEST_CASE("figure writers emit svg and exact csv") {
    const FigureData fig = figure_circle_orbits(3);
    std::ostringstream svg;
    write_svg(fig, svg);
    CHECK(svg.str().find("<svg") != std::string::npos);
    CHECK(svg.str().find("</svg>") != std::string::npos);
    CHECK(svg.str().find("circle") != std::string::npos);

    std::ostringstream csv;
    write_csv(fig, csv);
    CHECK(csv.str().rfind("label,a_num,a_den,b_num,b_den", 0) == 0);
    CHECK(csv.str().find("TR^1,3,5,4,5") != std::string::npos);

    const FigureData q = figure_q_cones(rat(1), rat(1));
    REQUIRE(q.paths.size() == 4);
    CHECK(q.points[0].p == PlanePoint{rat(2), rat(3)});
    std::ostringstream qsvg;
    write_svg(q, qsvg);
    CHECK(qsvg.str().find("Q1") != std::string::npos);
}
