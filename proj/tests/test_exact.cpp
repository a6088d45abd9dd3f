#include "pingpong/generators.hpp"
#include "pingpong/linalg.hpp"
#include "pingpong/multipoly.hpp"
#include "pingpong/poly.hpp"
#include "pingpong/rat.hpp"
#include "pingpong/unipotent.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pingpong;
using testutil::Rng;

TEST_CASE("rationals parse exactly and stay canonical") {
    CHECK(parse_rat("3/6") == rat(1, 2));
    CHECK(parse_rat("-4/2") == rat(-2));
    CHECK(parse_rat("7") == rat(7));
    CHECK(to_string(rat(-3, 6)) == "-1/2");
    CHECK(to_string(rat(5)) == "5");
    CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rat("1e3"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat(""), ParseError);

    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const Rat a = rng.rational(), b = rng.rational();
        const Rat s = a + b;
        CHECK(s.get_den() > 0);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
        CHECK(g == 1);  // lowest terms after arithmetic
    }
}

TEST_CASE("solve: identity, cone coefficients, multiply-back") {
    const Mat i3 = Mat::identity(3);
    const Vec b{1, -2, 1};
    CHECK(solve(i3, b) == b);

    // columns u, v, w; right-hand side TR * v resolves to (2, 1, 4)
    const Mat basis = Mat::from_columns({Vec{1, -2, 1}, Vec{1, 0, 3}, Vec{0, -1, 1}});
    const HGTriple h = build_generators(3);
    const Vec rhs = h.T * h.R * Vec{1, 0, 3};
    const Vec x = solve(basis, rhs);
    CHECK(x == Vec{2, 1, 4});

    Rng rng(5);
    for (int k = 0; k < 30; ++k) {
        const Mat a = rng.nonsingular_matrix(3);
        const Vec rhs2 = rng.vector(3);
        CHECK(a * solve(a, rhs2) == rhs2);
    }
    CHECK_THROWS_AS(solve(Mat{{1, 2}, {2, 4}}, Vec{1, 1}), SingularMatrix);
    CHECK_THROWS_AS(solve(i3, Vec{1, 2}), DimensionMismatch);
}

TEST_CASE("rank: rank-one T - I, rank-two logs, zero matrix") {
    const HGTriple h = build_generators(3);
    CHECK(rank(h.T - Mat::identity(3)) == 1);
    CHECK(rank(unipotent_log(h.T * h.R)) == 2);
    CHECK(rank(Mat(3, 3)) == 0);

    // invariance under row/column permutation
    Rng rng(7);
    for (int k = 0; k < 20; ++k) {
        const Mat a = rng.matrix(4);
        const std::size_t r = rank(a);
        Mat p = a;
        for (std::size_t j = 0; j < 4; ++j) std::swap(p(0, j), p(2, j));  // swap rows
        CHECK(rank(p) == r);
        Mat q = a.transpose();
        CHECK(rank(q) == r);
    }
}

TEST_CASE("charpoly: companion polynomials and identity") {
    const HGTriple h = build_generators(3);
    CHECK(charpoly(h.R) == UniPoly{1, 1, 1, 1});       // x^3 + x^2 + x + 1, by hand
    CHECK(charpoly(h.U) == UniPoly{-1, 3, -3, 1});     // (x - 1)^3
    CHECK(charpoly(Mat::identity(3)) == UniPoly{-1, 3, -3, 1});

    for (int n = 2; n <= 4; ++n) {
        const HGTriple g = build_generators(n);
        std::vector<Rat> ones(static_cast<std::size_t>(n) + 1, Rat(1));
        CHECK(charpoly(g.R) == UniPoly::from(std::move(ones)));
        UniPoly target(Rat(1));
        for (int i = 0; i < n; ++i) target = target * UniPoly{-1, 1};
        CHECK(charpoly(g.U) == target);
        CHECK(gcd(charpoly(g.R), charpoly(g.U)) == UniPoly(Rat(1)));
    }
}

TEST_CASE("unipotent_log reproduces the displayed logarithms") {
    const HGTriple h = build_generators(3);
    const Mat TR = h.T * h.R;
    const Mat P = unipotent_log(TR);
    CHECK(P == Mat::parse("-3/2,-1/2,1/2; 2,0,-2; -1/2,1/2,3/2"));
    CHECK(unipotent_log(Mat::identity(4)).is_zero());

    // exp undoes log, exactly
    CHECK(nilpotent_exp(P) == TR);
    const Mat Q = unipotent_log(h.T * inverse(h.R));
    CHECK(Q == Mat::parse("-3/2,-1/2,1/2; -3,1,1; -3/2,-5/2,1/2"));
    CHECK(nilpotent_exp(Q) == h.T * inverse(h.R));

    // n = 4: P x reproduces the published vector
    const HGTriple h4 = build_generators(4);
    const Mat P4 = unipotent_log(h4.T * h4.R);
    CHECK(P4 * Vec{0, 7, -2, 7} == Vec{-5, 9, -15, 11});

    CHECK_THROWS_AS(unipotent_log(h.R), NotUnipotent);  // R has eigenvalue i
}

TEST_CASE("matrix_power_poly matches the displayed t^2 expansions") {
    const HGTriple h = build_generators(3);
    const Mat TR = h.T * h.R;
    const PolyMat Pt = matrix_power_poly(TR);
    CHECK(Pt.coefficient(0) == Mat::identity(3));
    CHECK(Pt.coefficient(1) == unipotent_log(TR));
    CHECK(Pt.coefficient(2) == Mat::parse("1/2,1/2,1/2; -1,-1,-1; 1/2,1/2,1/2"));

    const PolyMat Qt = matrix_power_poly(h.T * inverse(h.R));
    CHECK(Qt.coefficient(2) == Mat::parse("3/2,-1/2,-1/2; 0,0,0; 9/2,-3/2,-3/2"));

    CHECK(Pt.eval(rat(2)) == TR * TR);  // repeated-multiplication oracle
    for (long k = 0; k <= 6; ++k) CHECK(Pt.eval(rat(k)) == TR.pow(k));
    CHECK(Pt.eval(rat(-1)) == inverse(TR));
    CHECK_THROWS_AS(matrix_power_poly(h.R), NotUnipotent);
}

TEST_CASE("power polynomials of random unipotent matrices") {
    Rng rng(29);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (int trial = 0; trial < 15; ++trial) {
        // M = S (I + N) S^-1 with N strictly upper triangular
        Mat n(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) n(i, j) = entry(rng.raw());
        const Mat s = rng.nonsingular_matrix(3);
        const Mat m = s * (Mat::identity(3) + n) * inverse(s);
        REQUIRE(is_unipotent(m));
        CHECK(nilpotent_exp(unipotent_log(m)) == m);
        const PolyMat mt = matrix_power_poly(m);
        for (long k = 0; k <= 6; ++k) CHECK(mt.eval(rat(k)) == m.pow(k));
    }
}

TEST_CASE("leading_direction recovers the limit rays") {
    const HGTriple h = build_generators(3);
    const PolyMat Pt = matrix_power_poly(h.T * h.R);
    const Vec u{1, -2, 1};

    // x + y + z = 1 > 0: the +u ray
    CHECK(ray_sign(leading_direction(Pt, Vec{1, 0, 0}), u) == +1);
    // x + y + z = 0, z - x = -1: the -u ray
    CHECK(ray_sign(leading_direction(Pt, Vec{1, -1, 0}), u) == -1);
    // u itself is fixed
    CHECK(ray_sign(leading_direction(Pt, u), u) == +1);

    // the TR^{-1} family approaches +/- v
    const PolyMat Qt = matrix_power_poly(h.T * inverse(h.R));
    const Vec v{1, 0, 3};
    CHECK(ray_sign(leading_direction(Qt, Vec{1, 0, 0}), v) == +1);   // 3x - y - z = 3
    CHECK(ray_sign(leading_direction(Qt, Vec{1, 1, 2}), v) == -1);   // 3x-y-z = 0, -y = -1
    CHECK(ray_sign(leading_direction(Qt, v), v) == +1);

    PolyMat zero(2);
    CHECK_THROWS_AS(leading_direction(zero, Vec{1, 1}), ZeroVector);
}

TEST_CASE("column space intersection pins down the shared line") {
    const HGTriple h = build_generators(3);
    const Mat P = unipotent_log(h.T * h.R);
    const Mat Q = unipotent_log(h.T * inverse(h.R));
    const auto basis = column_space_intersection(P, Q);
    REQUIRE(basis.size() == 1);
    CHECK(ray_sign(basis[0], Vec{0, -1, 1}) != 0);

    // n = 4: col(P^2) and col(Q^2) meet in the line of (0, 1, -2, 1)
    const HGTriple h4 = build_generators(4);
    const Mat P4 = unipotent_log(h4.T * h4.R);
    const Mat Q4 = unipotent_log(inverse(h4.R * h4.T));
    const auto basis4 = column_space_intersection(P4 * P4, Q4 * Q4);
    REQUIRE(basis4.size() == 1);
    CHECK(ray_sign(basis4[0], Vec{0, 1, -2, 1}) != 0);

    const auto full = column_space_intersection(Mat::identity(3), Mat::identity(3));
    CHECK(full.size() == 3);
    const auto none = column_space_intersection(Mat::from_columns({Vec{1, 0, 0}}),
                                                Mat::from_columns({Vec{0, 1, 0}}));
    CHECK(none.empty());
}

TEST_CASE("primitive directions and multiples") {
    CHECK(primitive(Vec::parse("0,12,-24,12")) == Vec{0, 1, -2, 1});
    CHECK(primitive(Vec::parse("1/2,1/3")) == Vec{3, 2});
    CHECK(multiple_of(Vec{2, 4}, Vec{1, 2}) == rat(2));
    CHECK(!multiple_of(Vec{2, 5}, Vec{1, 2}).has_value());
    CHECK(ray_sign(Vec{-3, 6, -3}, Vec{1, -2, 1}) == -1);
}

TEST_CASE("multipoly ring arithmetic is exact and canonical") {
    const MultiPoly x = MultiPoly::var("x"), y = MultiPoly::var("y");
    const MultiPoly p = (x + y).pow(2);
    CHECK(p == x * x + Rat(2) * x * y + y * y);
    CHECK((p - p).is_zero());
    CHECK(p.coefficient({{"x", 1}, {"y", 1}}) == 2);
    CHECK(p.degree("x") == 2);

    // substitution is exact
    CHECK(p.eval({{"x", rat(1, 2)}, {"y", rat(1, 3)}}) == rat(25, 36));
    CHECK(p.subst({{"x", rat(0)}}) == y * y);

    // coefficient extraction
    const MultiPoly q = x * x * y - Rat(4) * y + MultiPoly(Rat(7));
    CHECK(q.coeff_of("y", 1) == x * x - MultiPoly(Rat(4)));
    CHECK(q.coeff_of("y", 0) == MultiPoly(Rat(7)));

    // determinant of a small polynomial matrix
    const MultiPoly d = det({{x, y}, {y, x}});
    CHECK(d == x * x - y * y);

    Rng rng(3);
    for (int i = 0; i < 40; ++i) {
        const Rat a = rng.rational(), b = rng.rational();
        // ring homomorphism under evaluation
        const std::map<std::string, Rat> at{{"x", a}, {"y", b}};
        CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
    }
}

TEST_CASE("unipoly division and gcd") {
    const UniPoly a{-1, 0, 1};  // x^2 - 1
    const UniPoly b{-1, 1};     // x - 1
    auto [q, r] = a.divmod(b);
    CHECK(q == UniPoly{1, 1});
    CHECK(r.is_zero());
    CHECK(gcd(a, b) == b.monic());
    CHECK(gcd(UniPoly{1, 1, 1, 1}, UniPoly{-1, 3, -3, 1}) == UniPoly(Rat(1)));
    CHECK(UniPoly{0, 0, 3}.derivative() == UniPoly{0, 6});
}
