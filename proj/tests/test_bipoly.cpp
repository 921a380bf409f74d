#include "doctest.h"

#include "eggers/bipoly.hpp"

using namespace eggers;

TEST_CASE("parsing and printing") {
    BiPoly f = parse_poly("Y^7 + X*Y^4 + X^2*Y^2 - 2*X^3");
    CHECK(f.t.size() == 4);
    CHECK(f.coeff(3, 0) == Rat(-2));
    CHECK(parse_poly(print_poly(f)).t == f.t);

    CHECK(parse_poly("0").zero());
    CHECK(parse_poly("Y^4 - X^2 + X^2*Y").t.size() == 3);
    CHECK(parse_poly("1/2*X + Y").coeff(1, 0) == Rat(1, 2));
    CHECK(parse_poly("(Y^2 - X)*(Y^2 + X)").t.size() == 2);
    CHECK(parse_poly("-X + Y").coeff(1, 0) == Rat(-1));
    CHECK_THROWS_AS(parse_poly("X +"), Error);
    CHECK_THROWS_AS(parse_poly("Z"), Error);
    CHECK_THROWS_AS(parse_poly("X^"), Error);
    CHECK_THROWS_AS(parse_poly(""), Error);

    for (const char* s : {"Y^5+X^2", "X*Y", "(Y-X^2)*(Y+X^2)*Y", "3/4*X^2 - Y^3 + 2"}) {
        BiPoly p = parse_poly(s);
        CHECK(parse_poly(print_poly(p)).t == p.t);
    }
}

TEST_CASE("basic polynomial calculus") {
    BiPoly f = parse_poly("Y^5 + X^2");
    CHECK(f.ord() == 2);
    CHECK(eval_x0(f).deg() == 5);
    CHECK(eval_y0(f).deg() == 2);
    CHECK(print_poly(bderiv_y(f)) == "5*Y^4");
    CHECK(print_poly(bderiv_x(f)) == "2*X");
    CHECK(x_factor_power(parse_poly("X^2*Y + X^3")) == 2);
    CHECK(y_factor_power(parse_poly("X*Y")) == 1);

    BiPoly sheared = shear_x(parse_poly("X"), Rat(2));
    CHECK(print_poly(sheared) == "2*Y + X");
    BiPoly back = linear_change(parse_poly("X + 2*Y"), Rat(1), Rat(-2), Rat(0), Rat(1));
    CHECK(print_poly(back) == "X");
}

TEST_CASE("univariate helpers") {
    UPoly w = upoly_from({Rat(1), Rat(0), Rat(-2), Rat(0), Rat(1)}); // (Y^2-1)^2
    CHECK(distinct_root_count(w) == 2);
    CHECK(usquarefree_part(w).deg() == 2);
    auto rr = rational_roots(w);
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.cofactor.deg() == 0);

    UPoly v = upoly_from({Rat(-2), Rat(0), Rat(1)}); // Y^2 - 2
    auto rv = rational_roots(v);
    CHECK(rv.roots.empty());
    CHECK(rv.cofactor.deg() == 2);

    CHECK(rat_nth_root(Rat(4), 2) == Rat(2));
    CHECK(rat_nth_root(Rat(8, 27), 3) == Rat(2, 3));
    CHECK(rat_nth_root(Rat(-8), 3) == Rat(-2));
    CHECK_FALSE(rat_nth_root(Rat(2), 2).has_value());
    CHECK_FALSE(rat_nth_root(Rat(-4), 2).has_value());
}

TEST_CASE("gcd and squarefree detection") {
    BiPoly a = parse_poly("(Y^2 - X)*(Y - X^2)");
    BiPoly b = parse_poly("(Y^2 - X)*(Y + X)");
    BiPoly g = bipoly_gcd(a, b);
    CHECK(g.deg_y() == 2);
    CHECK(bdiv_exact(a, g).deg_y() == 1);

    CHECK(is_squarefree(parse_poly("(Y^2 - X)*(Y - X^2)")));
    CHECK_FALSE(is_squarefree(parse_poly("(Y - X)^2 * (Y + X)")));
    CHECK_FALSE(is_squarefree(parse_poly("X^2*Y")));
    CHECK(is_squarefree(parse_poly("X*Y*(Y - X)")));
}

TEST_CASE("resultants and intersection numbers") {
    auto i1 = intersection_mult(parse_poly("Y^2 - X"), parse_poly("Y^2 + X"));
    CHECK_FALSE(i1.infinite);
    CHECK(i1.value == 2);

    auto i2 = intersection_mult(parse_poly("Y"), parse_poly("X"));
    CHECK(i2.value == 1);

    auto i3 = intersection_mult(parse_poly("Y^5 + X^2"), parse_poly("Y"));
    CHECK(i3.value == 2);

    auto i4 = intersection_mult(parse_poly("X*Y"), parse_poly("Y*(Y - X)"));
    CHECK(i4.infinite);

    // intersections away from the origin must not contribute
    auto i5 = intersection_mult(parse_poly("Y^2 - Y - X"), parse_poly("Y^2 - Y + X"));
    CHECK(i5.value == 1);

    // common factor through a point away from the origin is harmless
    auto i6 = intersection_mult(parse_poly("(X - 1)*Y"), parse_poly("(X - 1)*X"));
    CHECK_FALSE(i6.infinite);
    CHECK(i6.value == 1);

    // units meet nothing
    CHECK(intersection_mult(parse_poly("1 + X"), parse_poly("Y")).value == 0);

    // ord f * ord g lower bound and symmetry on a sample
    const char* polys[] = {"Y^2 - X^3", "Y - X", "Y^3 + X", "Y^2 + 2*X", "X"};
    for (const char* a : polys)
        for (const char* b : polys) {
            BiPoly fa = parse_poly(a), fb = parse_poly(b);
            auto ab = intersection_mult(fa, fb);
            auto ba = intersection_mult(fb, fa);
            CHECK(ab.infinite == ba.infinite);
            if (!ab.infinite) {
                CHECK(ab.value == ba.value);
                CHECK(ab.value >= Int(fa.ord()) * Int(fb.ord()));
            }
        }

    // invariance under a unimodular change of coordinates
    BiPoly f = parse_poly("Y^5 + X^2"), g = parse_poly("Y^2 - X^3");
    auto base = intersection_mult(f, g);
    BiPoly fc = linear_change(f, Rat(1), Rat(1), Rat(1), Rat(2));
    BiPoly gc = linear_change(g, Rat(1), Rat(1), Rat(1), Rat(2));
    CHECK(intersection_mult(fc, gc).value == base.value);

    CHECK_THROWS_AS(intersection_mult(parse_poly("0"), parse_poly("X")), Error);
}
