#include "doctest.h"

#include <random>

#include "eggers/newton.hpp"
#include "testgerms.hpp"

using namespace eggers;

namespace {

const char* F37 = "Y^7 + X*Y^4 + X^2*Y^2 - 2*X^3";

Int entry_total(const NewtonLedger& l) { return l.total(); }

} // namespace

TEST_CASE("polygon: boundary, merging, distances") {
    Polygon p = polygon(parse_poly(F37));
    REQUIRE(p.faces.size() == 2); // collinear pieces merge
    CHECK(p.faces[0].incl() == Rat(1, 3));
    CHECK(p.faces[1].incl() == Rat(1, 2));
    CHECK(p.delta_x == Rat(0));
    CHECK(p.delta_y == Rat(0));
    CHECK(p.hull.front() == std::make_pair(Rat(0), Rat(7)));
    CHECK(p.hull.back() == std::make_pair(Rat(3), Rat(0)));

    Polygon q = polygon(parse_poly("Y^4 - X^2"));
    REQUIRE(q.faces.size() == 1);
    CHECK(q.faces[0].incl() == Rat(1, 2));
    CHECK(q.faces[0].eps() == -1);

    Polygon xy = polygon(parse_poly("X*Y"));
    CHECK(xy.faces.empty());
    CHECK(xy.delta_x == Rat(1));
    CHECK(xy.delta_y == Rat(1));

    CHECK_THROWS_AS(polygon(parse_poly("0")), Error);
}

TEST_CASE("polygon agrees with a brute-force hull oracle") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        BiPoly f;
        int n = 3 + static_cast<int>(rng() % 6);
        for (int k = 0; k < n; ++k) f.add_term(static_cast<int>(rng() % 9), static_cast<int>(rng() % 9), Rat(1));
        Polygon p = polygon(f);
        // every support point lies on or above every face line; endpoints are support points
        for (const NFace& s : p.faces) {
            CHECK(s.len1() > 0);
            CHECK(s.len2() > 0);
            for (const auto& [e, v] : f.t) {
                Rat lhs = (Rat(e.first) - s.x0) * (s.y1 - s.y0) - (Rat(e.second) - s.y0) * (s.x1 - s.x0);
                CHECK(lhs <= 0); // right-hand side of the downward boundary
            }
            CHECK(f.coeff(rat_num(s.x0).convert_to<int>(), rat_num(s.y0).convert_to<int>()) != 0);
        }
        for (size_t i = 1; i < p.faces.size(); ++i) CHECK(p.faces[i - 1].incl() < p.faces[i].incl());
    }
}

TEST_CASE("face statistics") {
    BiPoly f = parse_poly("Y^4 - X^2");
    NFace s = polygon(f).faces[0];
    FaceStats st = face_stats(f, s);
    CHECK(st.t == 4);
    CHECK(st.d == 0);
    CHECK_FALSE(st.eps_x);
    CHECK_FALSE(st.eps_y);

    BiPoly g = parse_poly("Y^5 + X^2");
    FaceStats sg = face_stats(g, polygon(g).faces[0]);
    CHECK(sg.t == 5);
    CHECK(sg.d == 0);

    BiPoly h = parse_poly("Y^4 - 2*X*Y^2 + X^2");
    FaceStats sh = face_stats(h, polygon(h).faces[0]);
    CHECK(sh.t == 2);
    CHECK(sh.d == 2);

    BiPoly m = parse_poly(F37);
    auto faces = polygon(m).faces;
    FaceStats s0 = face_stats(m, faces[0]);
    CHECK(s0.t == 4); // zero root plus three cube roots
    CHECK(s0.d == 0);
    CHECK(s0.eps_y);
    FaceStats s1 = face_stats(m, faces[1]);
    CHECK(s1.t == 4);
    CHECK(s1.d == 0);

    CHECK_THROWS_AS(face_stats(m, NFace{Rat(0), Rat(7), Rat(3), Rat(0)}), Error);
}

TEST_CASE("derivative ledger on the worked polynomials") {
    SUBCASE("all escaping roots") {
        NewtonLedger l = derivative_ledger(parse_poly("Y^4 - X^2"));
        REQUIRE(l.entries.size() == 1);
        CHECK(l.entries[0].count_exact == 0);
        CHECK(l.entries[0].count_bound == 3);
        CHECK(l.entries[0].second_kind);
        CHECK(l.expected == 3);
        CHECK(entry_total(l) == 3);
    }
    SUBCASE("two faces, one escaping root") {
        NewtonLedger l = derivative_ledger(parse_poly(F37));
        REQUIRE(l.entries.size() == 2);
        CHECK(l.entries[0].incl == Rat(1, 3));
        CHECK(l.entries[0].count_exact == 3);
        CHECK(l.entries[1].incl == Rat(1, 2));
        CHECK(l.entries[1].count_exact == 2);
        CHECK(l.entries[1].count_bound == 1);
        CHECK(l.expected == 6);
        CHECK(entry_total(l) == 6);
    }
    SUBCASE("a deep track with conjugates folded") {
        NewtonLedger l = derivative_ledger(parse_poly("(Y^2 - X)^2 - X^5"));
        REQUIRE(l.entries.size() == 2);
        CHECK(l.entries[0].kind == LedgerEntry::Kind::x_side);
        CHECK(l.entries[0].count_bound == 1);
        CHECK(l.entries[1].kind == LedgerEntry::Kind::deep);
        CHECK(l.entries[1].mult == 2);
        CHECK(l.entries[1].count_exact == 2);
        CHECK(l.expected == 3);
        CHECK(entry_total(l) == 3);
    }
    SUBCASE("irrational continuation") {
        BiPoly f = parse_poly("(Y^2 - 2*X)^2 - X^5");
        CHECK_THROWS_AS(derivative_ledger(f), Error);
        NewtonLedger l = derivative_ledger(f, true);
        CHECK_FALSE(l.complete);
        CHECK(l.unexpanded == 2);
        CHECK(entry_total(l) + l.unexpanded == l.expected);
    }
    SUBCASE("the parameter divides the input") {
        NewtonLedger l = derivative_ledger(parse_poly("X*(Y^2+X)"));
        CHECK(l.delta_x == 1);
        CHECK(l.expected == 1);
        CHECK(entry_total(l) == 1);
    }
    CHECK_THROWS_AS(derivative_ledger(parse_poly("(Y-X)^2*Y")), Error);
}

TEST_CASE("branch extraction certifies the advertised shapes") {
    CharData a = extract_branch(parse_poly("Y^5 + X^2"));
    CHECK(a.ord == 2);
    CHECK(a.contacts == std::vector<Rat>{Rat(5, 2)});

    CHECK(extract_branch(parse_poly("Y - X^2")).smooth());
    CHECK(extract_branch(parse_poly("X")).smooth());
    CHECK(extract_branch(parse_poly("Y^2 - X^3")).contacts == std::vector<Rat>{Rat(3, 2)});
    CHECK(extract_branch(parse_poly("Y^2 - 2*X^3")).contacts == std::vector<Rat>{Rat(3, 2)});

    // two characteristic pairs reached through a deep track: the cycle of
    // X^(3/2) + X^(7/4)
    CharData d = extract_branch(parse_poly("Y^4 - 2*X^3*Y^2 - 4*X^5*Y + X^6 - X^7"));
    CHECK(d.ord == 4);
    CHECK(d.contacts == std::vector<Rat>{Rat(3, 2), Rat(13, 8)});
    CHECK(semigroup_from_char(d).betas == std::vector<Int>{4, 6, 13});
}

TEST_CASE("extraction failures") {
    CHECK_THROWS_AS(extract_branch(parse_poly("Y^2 - 2*X^2")), Error);     // splits over C
    CHECK_THROWS_AS(extract_branch(parse_poly("(Y^2 - X)^2 - X^5")), Error); // two branches
    CHECK_THROWS_AS(germ_from_poly(parse_poly("X^2*Y")), Error);           // not reduced
    CHECK_THROWS_AS(germ_from_poly(parse_poly("1 + X")), Error);           // a unit
}

TEST_CASE("germ extraction on the worked examples") {
    SUBCASE("four branches, one singular") {
        PolyGerm pg = germ_from_poly(parse_poly("(Y^5+X^2)*Y*(Y^2-X^4)"));
        REQUIRE(pg.germ.r() == 4);
        CHECK(tree_signature(build_tree(pg.germ)) == tree_signature(build_tree(germ_example_210())));
        CHECK(lojasiewicz(pg.germ) == Rat(7));
    }
    SUBCASE("three tangent smooth branches") {
        PolyGerm pg = germ_from_poly(parse_poly(F37));
        REQUIRE(pg.germ.r() == 3);
        CHECK(tree_signature(build_tree(pg.germ)) == tree_signature(build_tree(germ_example_37())));
        std::multiset<Rat> dx;
        for (const auto& b : pg.branches) dx.insert(b.d_to_x);
        CHECK(dx == std::multiset<Rat>{Rat(2), Rat(2), Rat(3)});
    }
    SUBCASE("the axis as a branch") {
        PolyGerm pg = germ_from_poly(parse_poly("X*(Y^2+X)"));
        REQUIRE(pg.germ.r() == 2);
        CHECK(pg.x_branch == 0);
        CHECK(pg.germ.d(0, 1) == ExtRat(Rat(2)));
        CHECK(lojasiewicz(pg.germ) == Rat(3));
    }
    SUBCASE("a node") {
        PolyGerm pg = germ_from_poly(parse_poly("X*Y"));
        REQUIRE(pg.germ.r() == 2);
        CHECK(pg.germ.d(0, 1) == ExtRat(Rat(1)));
        CHECK(lojasiewicz(pg.germ) == Rat(1));
    }
    SUBCASE("equisingular pair with different derivatives") {
        PolyGerm a = germ_from_poly(parse_poly("Y^4 - X^2"));
        PolyGerm b = germ_from_poly(parse_poly("Y^4 - X^2 + X^2*Y"));
        CHECK(tree_signature(build_tree(a.germ)) == tree_signature(build_tree(b.germ)));
        CHECK(a.germ.d(0, 1) == ExtRat(Rat(2)));
        CHECK(lojasiewicz(a.germ) == Rat(3));
    }
    SUBCASE("deep contact between two branches") {
        PolyGerm pg = germ_from_poly(parse_poly("Y^4 - 2*X^3*Y^2 - X^4*Y^2 + X^6 + X^7"));
        REQUIRE(pg.germ.r() == 2);
        CHECK(pg.germ.d(0, 1) == ExtRat(Rat(2)));
        auto im = intersection_mult(parse_poly("Y^2 - X^3"), parse_poly("Y^2 - X^3 - X^4"));
        CHECK(Rat(im.value, 4) == Rat(2)); // same number through resultants
    }
    SUBCASE("two smooth branches with high contact") {
        PolyGerm pg = germ_from_poly(parse_poly("(Y^2 - X)^2 - X^5"));
        REQUIRE(pg.germ.r() == 2);
        CHECK(pg.germ.branches[0].ch.smooth());
        CHECK(pg.germ.d(0, 1) == ExtRat(Rat(5)));
    }
}

TEST_CASE("ball assignment places the counted roots") {
    PolyGerm pg = germ_from_poly(parse_poly(F37));
    NewtonLedger led = derivative_ledger(parse_poly(F37));
    auto assigned = assign_balls(led, pg);
    REQUIRE(assigned.size() == 2);
    REQUIRE(assigned[0].ball.has_value());
    CHECK(assigned[0].ball->radius == ExtRat(Rat(3)));
    REQUIRE(assigned[1].ball.has_value());
    CHECK(assigned[1].ball->radius == ExtRat(Rat(2)));
    REQUIRE(assigned[1].bound.has_value());
    CHECK(assigned[1].bound->radius == ExtRat(Rat(2)));
}

TEST_CASE("cross verification on the golden corpus") {
    for (const char* s : {F37, "X*(Y^2+X)", "Y^4 - X^2", "Y^4 - X^2 + X^2*Y", "X*Y",
                          "(Y^5+X^2)*Y*(Y^2-X^4)", "(Y^2 - X)^2 - X^5", "Y^5 + X^2",
                          "(Y^2-X^3)*(Y^2-X^3-X^4)", "Y^3 - X*Y + X^2"}) {
        CAPTURE(s);
        VerifyReport r = cross_verify(parse_poly(s));
        for (const auto& c : r.checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("corrupting the extracted germ is detected") {
    PolyGerm pg = germ_from_poly(parse_poly(F37));
    // hand-edited contact: still a valid germ, but not the germ of this curve
    pg.germ.contact[0][1] = ExtRat(Rat(3));
    pg.germ.contact[1][0] = ExtRat(Rat(3));
    CHECK(validate_germ(pg.germ).empty());
    VerifyReport r = cross_verify_with(pg, parse_poly(F37));
    CHECK_FALSE(r.pass());
    bool named = false;
    for (const auto& c : r.checks)
        if (!c.pass && !c.name.empty()) named = true;
    CHECK(named);
}
