#include "doctest.h"

#include "eggers/tree.hpp"
#include "testgerms.hpp"

using namespace eggers;

TEST_CASE("collection and tree of the four-branch example") {
    Germ g = germ_example_210();
    auto coll = build_collection(g);
    int finite = 0;
    for (const auto& b : coll)
        if (!b.radius.is_inf()) ++finite;
    CHECK(coll.size() == 7);
    CHECK(finite == 3);

    EggersTree t = build_tree(g);
    REQUIRE(t.v.size() == 7);
    CHECK(t.v[t.root].ball.radius == ExtRat(Rat(1)));
    int solid = 0, edges = 0;
    for (size_t i = 0; i < t.v.size(); ++i)
        if (t.v[i].parent >= 0) {
            ++edges;
            if (t.v[i].solid_to_parent) ++solid;
        }
    CHECK(edges == 6);
    CHECK(solid == 1);

    // decorations on the three finite balls
    Ball root{0, ExtRat(Rat(1))}, b1{0, ExtRat(Rat(5, 2))}, b2{1, ExtRat(Rat(2))};
    CHECK(order_of_ball(root, g) == 5);
    CHECK(order_of_ball(b1, g) == 2);
    CHECK(order_of_ball(b2, g) == 3);
    CHECK(q_of_ball(root, g) == Rat(5));
    CHECK(q_of_ball(b1, g) == Rat(8));
    CHECK(q_of_ball(b2, g) == Rat(8));
    CHECK(m_of_ball(root, g) == 1);
    CHECK(m_of_ball(b1, g) == 1);
    CHECK(m_of_ball(b2, g) == 2);
    CHECK(nu_n_of_ball(root, g) == std::make_pair(Int(1), Int(1)));
    CHECK(nu_n_of_ball(b1, g) == std::make_pair(Int(1), Int(2)));
    CHECK(nu_n_of_ball(b2, g) == std::make_pair(Int(1), Int(1)));

    auto s0 = successor_counts(root, g);
    CHECK(std::make_tuple(s0.t, s0.t1, s0.t2) == std::make_tuple(2, 2, 0));
    auto s1 = successor_counts(b1, g);
    CHECK(std::make_tuple(s1.t, s1.t1, s1.t2) == std::make_tuple(1, 0, 1));
    auto s2 = successor_counts(b2, g);
    CHECK(std::make_tuple(s2.t, s2.t1, s2.t2) == std::make_tuple(3, 3, 0));

    CHECK(char_of_ball(b1, g).empty());
    CHECK(char_of_ball(Ball{0, ExtRat::infinity()}, g) == std::vector<Rat>{Rat(5, 2)});
    CHECK(char_of_ball(b2, g).empty());
}

TEST_CASE("polar invariants and Lojasiewicz exponents") {
    Germ g = germ_example_210();
    auto pi = polar_invariants(g);
    REQUIRE(pi.mult.size() == 2);
    CHECK(pi.mult.at(Rat(5)) == 1);
    CHECK(pi.mult.at(Rat(8)) == 3);
    CHECK(pi.q0 == Rat(8));
    CHECK(lojasiewicz(g) == Rat(7));
    CHECK(lojasiewicz_via_tangential(g) == Rat(7));

    auto classes = tangential_decomposition(g);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0] == std::vector<int>{0});
    CHECK(classes[1] == std::vector<int>{1, 2, 3});

    Germ e37 = germ_example_37();
    CHECK(polar_invariants(e37).q0 == Rat(6));
    CHECK(lojasiewicz(e37) == Rat(5));

    Germ e38 = germ_two_smooth_contact(Rat(2));
    CHECK(q_of_ball(Ball{0, ExtRat(Rat(2))}, e38) == Rat(4));
    CHECK(lojasiewicz(e38) == Rat(3));

    CHECK(lojasiewicz(germ_morse()) == Rat(1));
    CHECK(polar_invariants(germ_morse()).q0 == Rat(2));

    // ordinary singularity of order m: exponent m - 1
    Germ ord3 = make_germ({smooth_branch(), smooth_branch(), smooth_branch()}, {});
    CHECK(lojasiewicz(ord3) == Rat(2));
    CHECK(lojasiewicz_via_tangential(ord3) == Rat(2));

    // single smooth branch: nonsingular
    Germ sm = make_germ({smooth_branch()}, {});
    CHECK(lojasiewicz(sm) == Rat(0));
    CHECK_THROWS_AS(polar_invariants(sm), Error);
}

TEST_CASE("small collections") {
    Germ sm = make_germ({smooth_branch()}, {});
    auto c = build_collection(sm);
    REQUIRE(c.size() == 1);
    CHECK(c[0].radius.is_inf());

    Germ one = make_germ({char_data_from(2, {Rat(5, 2)})}, {});
    auto c1 = build_collection(one);
    REQUIRE(c1.size() == 2);
    CHECK(c1[0].radius == ExtRat(Rat(5, 2)));
    CHECK(polar_invariants(one).q0 == Rat(5));
    CHECK(lojasiewicz(one) == Rat(4)); // type (2,5)

    // unitangent pair of smooth branches: no contact-1 vertex at all
    Germ uni = germ_two_smooth_contact(Rat(2));
    EggersTree t = build_tree(uni);
    CHECK(t.v.size() == 3);
    CHECK(t.v[t.root].ball.radius == ExtRat(Rat(2)));
    CHECK(m_of_ball(Ball{0, ExtRat(Rat(2))}, uni) == 1);
}

TEST_CASE("interpolated q along edges and the trunk") {
    Germ g = germ_example_210();
    // on the trunk: q = R * ord f
    CHECK(q_of_ball(Ball{0, ExtRat(Rat(1, 2))}, g) == Rat(5, 2));
    // strictly inside the edge toward B2
    CHECK(q_of_ball(Ball{1, ExtRat(Rat(3, 2))}, g) == Rat(13, 2));
    CHECK(m_of_ball(Ball{1, ExtRat(Rat(3, 2))}, g) == 0);
    CHECK_THROWS_AS(q_of_ball(Ball{0, ExtRat::infinity()}, g), Error);
}

TEST_CASE("tree <-> germ roundtrip") {
    for (const Germ& g : {germ_example_210(), germ_example_37(), germ_two_smooth_contact(Rat(2)),
                          germ_morse(), make_germ({char_data_from(4, {Rat(3, 2), Rat(13, 8)})}, {})}) {
        EggersTree t = build_tree(g);
        Germ back = germ_from_tree(t);
        CHECK(tree_signature(build_tree(back)) == tree_signature(t));
        CHECK(back.r() == g.r());
        CHECK(back.total_order() == g.total_order());
    }
}

TEST_CASE("germ_from_tree rejects malformed trees") {
    EggersTree t = build_tree(germ_example_210());
    EggersTree broken = t;
    // make a black vertex a leaf by rerooting a white under the root
    for (auto& vx : broken.v)
        if (vx.ball.radius.is_inf() && vx.parent >= 0 && broken.v[vx.parent].ball.radius == ExtRat(Rat(5, 2)))
            vx.parent = broken.root;
    for (auto& vx : broken.v) vx.children.clear();
    for (size_t i = 0; i < broken.v.size(); ++i)
        if (broken.v[i].parent >= 0) broken.v[broken.v[i].parent].children.push_back(static_cast<int>(i));
    CHECK_THROWS_AS(germ_from_tree(broken), Error);
}

TEST_CASE("DOT output is deterministic and styled") {
    Germ g = germ_example_210();
    std::string a = to_dot(build_tree(g)), b = to_dot(build_tree(g));
    CHECK(a == b);
    CHECK(a.find("style=dashed") != std::string::npos);
    CHECK(a.find("fillcolor=black") != std::string::npos);
    size_t solids = 0;
    for (size_t p = a.find(";\n"); p != std::string::npos; p = a.find(";\n", p + 1)) ++solids;
    CHECK(a.find("label=\"5/2\"") != std::string::npos);
}
