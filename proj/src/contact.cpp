#include "eggers/contact.hpp"

#include <algorithm>

namespace eggers {

Int Germ::total_order() const {
    Int s = 0;
    for (const auto& b : branches) s += b.ch.ord;
    return s;
}

namespace {

/// Characteristic contacts of branch i strictly below `bound`.
std::vector<Rat> chars_below(const CharData& c, const ExtRat& bound) {
    std::vector<Rat> out;
    for (const Rat& d : c.contacts)
        if (ExtRat(d) < bound) out.push_back(d);
    return out;
}

void check_pair_compat(const CharData& a, const CharData& b, const ExtRat& d, int i, int j,
                       std::vector<Violation>& out) {
    if (chars_below(a, d) != chars_below(b, d))
        out.push_back({Violation::Kind::char_compat,
                       {i, j},
                       "characteristic contacts below d(" + std::to_string(i) + "," + std::to_string(j) +
                           ") differ"});
}

void check_triangle(const ExtRat& dij, const ExtRat& dik, const ExtRat& djk, int i, int j, int k,
                    std::vector<Violation>& out) {
    if (dij < ext_min(dik, djk))
        out.push_back({Violation::Kind::triangle,
                       {i, j, k},
                       "strong triangle fails on (" + std::to_string(i) + "," + std::to_string(j) + "," +
                           std::to_string(k) + ")"});
}

} // namespace

std::vector<Violation> validate_germ(const Germ& g) {
    std::vector<Violation> out;
    int r = g.r();
    if (static_cast<int>(g.contact.size()) != r) {
        out.push_back({Violation::Kind::shape, {}, "contact matrix size differs from branch count"});
        return out;
    }
    for (int i = 0; i < r; ++i)
        if (static_cast<int>(g.contact[i].size()) != r) {
            out.push_back({Violation::Kind::shape, {i}, "contact matrix row has wrong length"});
            return out;
        }
    for (int i = 0; i < r; ++i) {
        if (!g.d(i, i).is_inf())
            out.push_back({Violation::Kind::diagonal, {i}, "self-contact must be infinite"});
        for (int j = i + 1; j < r; ++j) {
            if (g.d(i, j) != g.d(j, i))
                out.push_back({Violation::Kind::symmetry, {i, j}, "contact matrix not symmetric"});
            if (g.d(i, j).is_inf())
                out.push_back({Violation::Kind::not_reduced, {i, j}, "coincident branches: germ not reduced"});
            else if (g.d(i, j).value() < 1)
                out.push_back({Violation::Kind::below_one, {i, j}, "contacts are at least 1"});
        }
    }
    if (!out.empty()) return out;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            for (int k = j + 1; k < r; ++k) {
                check_triangle(g.d(i, j), g.d(i, k), g.d(j, k), i, j, k, out);
                check_triangle(g.d(i, k), g.d(i, j), g.d(j, k), i, k, j, out);
                check_triangle(g.d(j, k), g.d(i, j), g.d(i, k), j, k, i, out);
            }
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            check_pair_compat(g.branches[i].ch, g.branches[j].ch, g.d(i, j), i, j, out);
    return out;
}

std::vector<Violation> validate_external(const Germ& g, const ExternalBranch& h) {
    std::vector<Violation> out;
    int r = g.r();
    if (static_cast<int>(h.contacts.size()) != r) {
        out.push_back({Violation::Kind::shape, {}, "external branch contact row has wrong length"});
        return out;
    }
    for (int i = 0; i < r; ++i) {
        bool coincident = h.same_as && *h.same_as == i;
        if (h.contacts[i].is_inf() != coincident) {
            out.push_back({Violation::Kind::not_reduced,
                           {i},
                           "infinite contact must mark exactly the coincident branch"});
            return out;
        }
        if (!h.contacts[i].is_inf() && h.contacts[i].value() < 1)
            out.push_back({Violation::Kind::below_one, {i}, "contacts are at least 1"});
    }
    if (h.same_as) {
        const CharData& c = g.branches[*h.same_as].ch;
        if (c.ord != h.ch.ord || c.contacts != h.ch.contacts)
            out.push_back({Violation::Kind::char_compat, {*h.same_as}, "coincident branch with different type"});
    }
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            check_triangle(g.d(i, j), h.contacts[i], h.contacts[j], i, j, r, out);
            check_triangle(h.contacts[i], g.d(i, j), h.contacts[j], i, r, j, out);
            check_triangle(h.contacts[j], g.d(i, j), h.contacts[i], j, r, i, out);
        }
    for (int i = 0; i < r; ++i)
        check_pair_compat(g.branches[i].ch, h.ch, h.contacts[i], i, r, out);
    return out;
}

bool ball_contains_branch(const Ball& b, int j, const Germ& g) {
    return !(g.d(b.center, j) < b.radius);
}

bool balls_intersect(const Ball& a, const Ball& b, const Germ& g) {
    return !(ext_min(a.radius, b.radius) > g.d(a.center, b.center));
}

BallOrder ball_cmp(const Ball& a, const Ball& b, const Germ& g) {
    if (!balls_intersect(a, b, g)) return BallOrder::Incomparable;
    if (a.radius == b.radius) return BallOrder::Equal;
    return a.radius < b.radius ? BallOrder::Less : BallOrder::Greater;
}

Ball canonical_ball(Ball b, const Germ& g) {
    for (int j = 0; j < g.r(); ++j)
        if (ball_contains_branch(b, j, g)) {
            b.center = j;
            return b;
        }
    fail(Errc::internal, "ball contains no germ branch");
}

std::string ball_str(const Ball& b, const Germ& g) {
    return "B(" + g.branches[b.center].label + "," + ext_str(b.radius) + ")";
}

ExtRat dist_ball_branch(const Ball& b, const ExternalBranch& h, const Germ& g) {
    (void)g;
    return ext_min(h.contacts[b.center], b.radius);
}

ExtRat dist_ball_branch(const Ball& b, int branch, const Germ& g) {
    return ext_min(g.d(b.center, branch), b.radius);
}

std::vector<Ball> chain_of_branch(const ExternalBranch& h, const Germ& g) {
    std::vector<Ball> chain;
    for (int i = 0; i < g.r(); ++i) {
        Ball b{i, h.contacts[i]};
        bool dup = false;
        for (const Ball& c : chain)
            if (ball_cmp(b, c, g) == BallOrder::Equal) {
                dup = true;
                break;
            }
        if (!dup) chain.push_back(canonical_ball(b, g));
    }
    std::sort(chain.begin(), chain.end(), [&](const Ball& a, const Ball& b) {
        return ball_cmp(a, b, g) == BallOrder::Less;
    });
    return chain;
}

ExtRat dist_via_germ(const ExternalBranch& a, const ExternalBranch& b, const Germ& g) {
    ExtRat best(Rat(0));
    for (int i = 0; i < g.r(); ++i) best = ext_max(best, ext_min(a.contacts[i], b.contacts[i]));
    // the two ball forms of the same number
    std::vector<Ball> ca = chain_of_branch(a, g), cb = chain_of_branch(b, g);
    ExtRat via_a = dist_ball_branch(ca.back(), b, g);
    ExtRat via_b = dist_ball_branch(cb.back(), a, g);
    check(best == via_a && best == via_b, Errc::internal, "position-determined contact forms disagree");
    return best;
}

} // namespace eggers
