#include "doctest.h"

#include "eggers/polar.hpp"
#include "testgerms.hpp"

using namespace eggers;

TEST_CASE("three tangent smooth branches with the X-like parameter") {
    Germ g = germ_example_37();
    ExternalBranch lam = probe_with_contacts(g, "X", {Rat(2), Rat(2), Rat(3)});
    Placement p = placement(g, lam);
    CHECK(p.delta == 0);
    REQUIRE(p.chain.size() == 2);
    CHECK(p.chain_min().radius == ExtRat(Rat(2)));
    CHECK(p.chain_max().radius == ExtRat(Rat(3)));

    CHECK(q_via_position(lam, g) == Rat(7)); // so (f,X)_0 = 7
    ExternalBranch g2 = probe_with_contacts(g, "g2", {Rat(2), Rat(2), Rat(2)});
    CHECK(q_via_position(g2, g) == Rat(6));

    CHECK(polar_multiplicity(Ball{0, ExtRat(Rat(2))}, p, g) == 3);
    CHECK(polar_multiplicity(p.chain_max(), p, g) == 3);

    auto q = polar_quotients(p, g);
    REQUIRE(q.size() == 2);
    CHECK(q.at(Rat(3)) == 3);
    CHECK(q.at(Rat(7, 3)) == 3);

    CHECK(max_polar_quotient(p, g) == Rat(3));
    CHECK(tilde_L(p, g) == Rat(4));
    auto lp = lojasiewicz_on_polar(p, g);
    CHECK(lp.exact);
    CHECK(lp.value == Rat(4));

    auto f = thm_1_11_flags(p, g);
    CHECK(f.a1);
    CHECK(f.a2);
    CHECK_FALSE(f.eq_L);
    CHECK_FALSE(f.eq_q);
    REQUIRE(f.equiv.has_value());
    CHECK(*f.equiv);

    auto rep = build_polar_report(p, g);
    CHECK(rep.total_m == 6);
    CHECK(rep.sum_ok);
}

TEST_CASE("the parameter as a branch of the germ") {
    Germ g = germ_two_smooth_contact(Rat(2));
    Placement p = placement(g, probe_same_as(g, 0));
    CHECK(p.delta == 1);
    CHECK_FALSE(p.b_f_lambda_finite());
    REQUIRE(p.tilde_ball.has_value());
    CHECK(q_of_ball(*p.tilde_ball, g) == Rat(4));
    CHECK(lojasiewicz(g) == Rat(3));

    auto lp = lojasiewicz_on_polar(p, g);
    CHECK(lp.exact);
    CHECK(lp.value == Rat(2));
    CHECK(max_polar_quotient(p, g) == Rat(2));

    auto rep = build_polar_report(p, g);
    CHECK(rep.total_m == 1);
    CHECK(rep.expected_total == 1);
    CHECK(rep.sum_ok);
    REQUIRE(rep.q_tilde_ball.has_value());
    CHECK(*rep.q_tilde_ball == Rat(4));

    auto f = rep.flags;
    CHECK(f.a1);
    CHECK(f.a2);
    CHECK_FALSE(f.eq_L);
    CHECK_FALSE(f.eq_q);
    CHECK_THROWS_AS(q_via_position(probe_same_as(g, 0), g), Error);
}

TEST_CASE("the class where the restricted exponent is not an invariant") {
    Germ g = germ_two_smooth_contact(Rat(2));
    ExternalBranch lam = probe_with_contacts(g, "X", {Rat(2), Rat(2)});
    Placement p = placement(g, lam);
    CHECK(p.delta == 0);
    REQUIRE(p.chain.size() == 1);

    auto lp = lojasiewicz_on_polar(p, g);
    CHECK_FALSE(lp.exact);
    CHECK(lp.value == Rat(2)); // upper bound only
    CHECK(tilde_L(p, g) == Rat(2));
    CHECK(max_polar_quotient(p, g) == Rat(2));

    auto rep = build_polar_report(p, g);
    CHECK(rep.total_m == 3);
    CHECK(rep.sum_ok);
    CHECK(rep.flags.bounds_only);
    CHECK_FALSE(rep.flags.eq_L);
}

TEST_CASE("Morse germs") {
    Germ g = germ_morse();
    CHECK(polar_invariants(g).q0 == Rat(2));
    CHECK(lojasiewicz(g) == Rat(1));

    SUBCASE("parameter is one of the two branches") {
        Placement p = placement(g, probe_same_as(g, 0));
        CHECK(polar_quotients(p, g).empty());
        CHECK_FALSE(max_polar_quotient(p, g).has_value());
        auto lp = lojasiewicz_on_polar(p, g);
        CHECK(lp.exact);
        CHECK(lp.value == Rat(1));
        auto rep = build_polar_report(p, g);
        CHECK(rep.total_m == 0);
        CHECK(rep.sum_ok);
        CHECK(rep.flags.morse);
        CHECK_FALSE(rep.flags.equiv.has_value());
    }
    SUBCASE("transversal parameter") {
        Placement p = placement(g, transversal_probe(g, "l"));
        CHECK(max_polar_quotient(p, g) == Rat(2));
        CHECK(lojasiewicz_on_polar(p, g).value == Rat(1));
    }
    SUBCASE("tangent parameter at contact 3") {
        Placement p = placement(g, probe_with_contacts(g, "l", {Rat(3), Rat(1)}));
        CHECK(max_polar_quotient(p, g) == Rat(4, 3));
        auto rep = build_polar_report(p, g);
        CHECK(rep.total_m == 3);
        CHECK(rep.sum_ok);
    }
}

TEST_CASE("transversal parameter reproduces the generic invariants") {
    Germ g = germ_example_210();
    Placement p = placement(g, transversal_probe(g, "l"));
    auto q = polar_quotients(p, g);
    REQUIRE(q.size() == 2);
    CHECK(q.at(Rat(5)) == 1);
    CHECK(q.at(Rat(8)) == 3);
    CHECK(max_polar_quotient(p, g) == Rat(8));
    CHECK(tilde_L(p, g) == Rat(7));
    auto lp = lojasiewicz_on_polar(p, g);
    CHECK(lp.exact);
    CHECK(lp.value == lojasiewicz(g));
    auto rep = build_polar_report(p, g);
    CHECK(rep.total_m == 4); // ord f - 1
    CHECK(rep.sum_ok);
    CHECK(rep.flags.eq_L);
    CHECK(rep.flags.eq_q);
    REQUIRE(rep.flags.equiv.has_value());
    CHECK(*rep.flags.equiv);

    // q - d(., lambda) grows along the order on eligible balls
    auto rows = rep.rows;
    for (const auto& a : rows)
        for (const auto& b : rows)
            if (ball_cmp(a.ball, b.ball, g) == BallOrder::Less)
                CHECK(a.q - a.d_lambda <= b.q - b.d_lambda);
}

TEST_CASE("special directions") {
    // tie between the two tangential components: no special direction
    Germ g = germ_example_210();
    auto v = special_verdict(g);
    REQUIRE(v.M.size() == 2);
    CHECK(v.M[0] == Rat(7));
    CHECK(v.M[1] == Rat(7));
    CHECK_FALSE(v.component.has_value());
    Placement tang = placement(g, probe_with_contacts(g, "l", {Rat(5, 2), Rat(1), Rat(1), Rat(1)}));
    CHECK_FALSE(is_special(tang, g));
    CHECK_FALSE(is_special(placement(g, transversal_probe(g, "l")), g));

    // unitangent singular germ: its tangent is special
    Germ one = make_germ({char_data_from(2, {Rat(5, 2)})}, {});
    auto v1 = special_verdict(one);
    REQUIRE(v1.component.has_value());
    CHECK(is_special(placement(one, probe_with_contacts(one, "l", {Rat(2)})), one));
    CHECK_FALSE(is_special(placement(one, transversal_probe(one, "l")), one));

    // unique maximiser between a singular and a smooth component
    Germ mix = make_germ({char_data_from(2, {Rat(5, 2)}), smooth_branch()}, {});
    auto v2 = special_verdict(mix);
    REQUIRE(v2.M.size() == 2);
    CHECK(v2.M[0] == Rat(5));
    CHECK(v2.M[1] == Rat(2));
    REQUIRE(v2.component.has_value());
    CHECK(*v2.component == 0);
}

TEST_CASE("unitangent germs: tangent parameters miss the exponent") {
    Germ g = germ_example_37();
    Placement tang = placement(g, probe_with_contacts(g, "l", {Rat(2), Rat(2), Rat(2)}));
    CHECK(tilde_L(tang, g) < lojasiewicz(g));
    Placement trans = placement(g, transversal_probe(g, "l"));
    CHECK(tilde_L(trans, g) == lojasiewicz(g));
    CHECK(lojasiewicz_on_polar(trans, g).exact);
}

TEST_CASE("placement rejects bad parameters") {
    Germ g = germ_example_210();
    ExternalBranch notsmooth = transversal_probe(g, "l");
    notsmooth.ch = char_data_from(2, {Rat(5, 2)});
    CHECK_THROWS_AS(placement(g, notsmooth), Error);
    ExternalBranch bad = probe_with_contacts(g, "l", {Rat(3), Rat(1), Rat(1), Rat(1)});
    CHECK_THROWS_AS(placement(g, bad), Error);
}
