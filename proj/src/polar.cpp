#include "eggers/polar.hpp"

#include <algorithm>

namespace eggers {

namespace {

std::vector<Ball> finite_collection(const Germ& g) {
    std::vector<Ball> out;
    for (const Ball& b : build_collection(g))
        if (!b.radius.is_inf()) out.push_back(b);
    return out;
}

bool same_ball(const Ball& a, const Ball& b, const Germ& g) {
    return ball_cmp(a, b, g) == BallOrder::Equal;
}

/// (f-tilde, lambda)_0: the intersection number with the lambda factor removed.
Rat coprime_intersection(const Placement& p, const Germ& g) {
    Rat s(0);
    for (int i = 0; i < g.r(); ++i) {
        if (p.lambda.same_as && *p.lambda.same_as == i) continue;
        s += p.lambda.contacts[i].value() * Rat(g.branches[i].ch.ord);
    }
    return s;
}

} // namespace

Placement placement(const Germ& g, const ExternalBranch& lambda) {
    check(lambda.ch.smooth(), Errc::not_smooth, "regular parameters are smooth");
    auto viol = validate_external(g, lambda);
    check(viol.empty(), Errc::invalid_contacts,
          viol.empty() ? "" : "probe contacts violate the distance axioms: " + viol.front().message);
    Placement p;
    p.lambda = lambda;
    p.delta = lambda.same_as ? 1 : 0;
    p.chain = chain_of_branch(lambda, g);
    if (p.delta == 1) {
        int s = *lambda.same_as;
        ExtRat best(Rat(0));
        int arg = -1;
        for (int i = 0; i < g.r(); ++i) {
            if (i == s) continue;
            if (arg < 0 || g.d(s, i) > best) {
                best = g.d(s, i);
                arg = i;
            }
        }
        check(arg >= 0, Errc::internal, "single-branch germ cannot host its own parameter");
        p.tilde_ball = canonical_ball(Ball{s, best}, g);
    }
    return p;
}

Rat q_via_position(const ExternalBranch& h, const Germ& g) {
    check(!h.same_as, Errc::branch_of_germ, "probe coincides with a branch of the germ");
    auto chain = chain_of_branch(h, g);
    return q_of_ball(chain.back(), g);
}

bool in_chain(const Ball& b, const Placement& p, const Germ& g) {
    for (const Ball& c : p.chain)
        if (same_ball(b, c, g)) return true;
    return false;
}

std::vector<Ball> eligible_balls(const Placement& p, const Germ& g) {
    std::vector<Ball> out = finite_collection(g);
    if (p.b_f_lambda_finite()) {
        const Ball& bl = p.chain_max();
        bool present = false;
        for (const Ball& b : out)
            if (same_ball(b, bl, g)) present = true;
        if (!present) {
            out.push_back(bl);
            std::sort(out.begin(), out.end(), [&](const Ball& a, const Ball& b) {
                if (a.radius != b.radius) return a.radius < b.radius;
                return a.center < b.center;
            });
        }
    }
    return out;
}

Int polar_multiplicity(const Ball& b, const Placement& p, const Germ& g) {
    check(!b.radius.is_inf(), Errc::ball_not_eligible, "polar multiplicities live on finite balls");
    bool eligible = false;
    for (const Ball& e : eligible_balls(p, g))
        if (same_ball(b, e, g)) eligible = true;
    check(eligible, Errc::ball_not_eligible, "ball is neither in the truncated collection nor B_f(lambda)");
    auto [nu, n] = nu_n_of_ball(b, g);
    auto sc = successor_counts(b, g);
    Rat m;
    if (in_chain(b, p, g)) {
        int smax = same_ball(b, p.chain_max(), g) ? 1 : 0;
        int smin = same_ball(b, p.chain_min(), g) ? 1 : 0;
        m = b.radius.value() * Rat(n) * Rat(sc.t - 1 + smax) - smin;
    } else {
        Rat dl = dist_ball_branch(b, p.lambda, g).value();
        m = dl * Rat(nu) * Rat(Int(sc.t1) + n * Int(sc.t2) - 1);
    }
    check(rat_is_integer(m) && m >= 0, Errc::invalid_contacts,
          "contacts admit no realization: polar multiplicity " + rat_str(m) + " at " + ball_str(b, g));
    return rat_num(m);
}

namespace {

std::vector<PolarRow> polar_rows(const Placement& p, const Germ& g) {
    check(g.singular(), Errc::nonsingular_germ, "polar analysis needs a singular germ");
    std::vector<PolarRow> rows;
    for (const Ball& b : eligible_balls(p, g)) {
        PolarRow r;
        r.ball = b;
        r.label = ball_str(b, g);
        r.q = q_of_ball(b, g);
        r.d_lambda = dist_ball_branch(b, p.lambda, g).value();
        r.m = polar_multiplicity(b, p, g);
        r.in_chain = in_chain(b, p, g);
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace

std::map<Rat, Int> polar_quotients(const Placement& p, const Germ& g) {
    std::map<Rat, Int> out;
    for (const auto& r : polar_rows(p, g))
        if (r.m > 0) out[r.q / r.d_lambda] += r.m;
    return out;
}

std::optional<Rat> max_polar_quotient(const Placement& p, const Germ& g) {
    check(g.singular(), Errc::nonsingular_germ, "polar analysis needs a singular germ");
    auto classes = tangential_decomposition(g);
    auto ecoll = finite_collection(g);
    int t = static_cast<int>(classes.size());
    auto value = [&](const Ball& b) { return q_of_ball(b, g) / dist_ball_branch(b, p.lambda, g).value(); };
    if (t == 2 && ecoll.size() == 1) { // Morse
        if (p.delta == 1) return std::nullopt;
        Rat fl = coprime_intersection(p, g);
        Rat direct = value(p.chain_max());
        check(direct == fl / (fl - 1), Errc::internal, "the two Morse quotient forms disagree");
        return direct;
    }
    std::optional<Rat> best;
    for (const Ball& b : ecoll) {
        if (t == 2 && p.b_f_lambda_finite() && same_ball(b, p.chain_max(), g)) continue;
        Rat v = value(b);
        if (!best || v > *best) best = v;
    }
    return best;
}

Rat tilde_L(const Placement& p, const Germ& g) {
    auto ecoll = finite_collection(g);
    check(!ecoll.empty(), Errc::empty_eggers, "truncated collection is empty");
    std::optional<Rat> best;
    for (const Ball& b : ecoll) {
        Rat v = q_of_ball(b, g) - dist_ball_branch(b, p.lambda, g).value();
        if (!best || v > *best) best = v;
    }
    return *best;
}

LPolar lojasiewicz_on_polar(const Placement& p, const Germ& g) {
    check(g.singular(), Errc::nonsingular_germ, "polar analysis needs a singular germ");
    auto ecoll = finite_collection(g);
    bool exceptional = tangential_decomposition(g).size() == 1 && ecoll.size() == 1 &&
                       p.b_f_lambda_finite() && same_ball(ecoll[0], p.chain_max(), g);
    return {!exceptional, tilde_L(p, g)};
}

SpecialVerdict special_verdict(const Germ& g) {
    check(g.singular(), Errc::nonsingular_germ, "special directions concern singular germs");
    SpecialVerdict v;
    Rat ordf(g.total_order());
    for (const auto& c : tangential_decomposition(g)) {
        Germ s = sub_germ(g, c);
        v.M.push_back(lojasiewicz(s) + ordf - Rat(s.total_order()));
    }
    Rat mx = *std::max_element(v.M.begin(), v.M.end());
    int hits = 0, arg = -1;
    for (size_t i = 0; i < v.M.size(); ++i)
        if (v.M[i] == mx) {
            ++hits;
            arg = static_cast<int>(i);
        }
    if (hits == 1) v.component = arg;
    return v;
}

std::optional<int> tangent_component(const Placement& p, const Germ& g) {
    auto classes = tangential_decomposition(g);
    for (size_t c = 0; c < classes.size(); ++c)
        if (p.lambda.contacts[classes[c].front()] > ExtRat(Rat(1))) return static_cast<int>(c);
    return std::nullopt;
}

bool is_special(const Placement& p, const Germ& g) {
    auto v = special_verdict(g);
    if (!v.component) return false;
    auto tc = tangent_component(p, g);
    return tc && *tc == *v.component;
}

Thm111 thm_1_11_flags(const Placement& p, const Germ& g) {
    Thm111 f;
    Rat L0 = lojasiewicz(g);
    LPolar lp = lojasiewicz_on_polar(p, g);
    auto q0l = max_polar_quotient(p, g);
    Rat q0 = polar_invariants(g).q0;
    f.morse = tangential_decomposition(g).size() == 2 && finite_collection(g).size() == 1;
    f.bounds_only = !lp.exact;
    f.a1 = L0 >= lp.value; // exact value or an upper bound for it
    f.a2 = !q0l || lp.value >= *q0l - 1;
    if (lp.exact) {
        f.eq_L = L0 == lp.value;
    } else {
        // in the only class with an undetermined value the gap is strict
        f.eq_L = false;
        f.a2 = !q0l || lp.value >= *q0l - 1; // bound-level check only
    }
    f.eq_q = q0l && *q0l == q0;
    if (!f.morse) f.equiv = (f.eq_L == f.eq_q);
    return f;
}

PolarReport build_polar_report(const Placement& p, const Germ& g) {
    PolarReport r;
    r.lambda_label = p.lambda.label;
    r.delta = p.delta;
    r.rows = polar_rows(p, g);
    for (const auto& row : r.rows)
        if (row.m > 0) r.quotients[row.q / row.d_lambda] += row.m;
    for (const auto& row : r.rows) r.total_m += row.m;
    Rat expect = coprime_intersection(p, g) - 1;
    check(rat_is_integer(expect), Errc::invalid_contacts, "non-integral intersection with the parameter");
    r.expected_total = rat_num(expect);
    r.sum_ok = r.total_m == r.expected_total;
    if (auto q0l = max_polar_quotient(p, g)) r.q0_lambda = *q0l;
    r.tilde_L = tilde_L(p, g);
    r.l_polar = lojasiewicz_on_polar(p, g);
    r.special = is_special(p, g);
    r.flags = thm_1_11_flags(p, g);
    if (p.tilde_ball) r.q_tilde_ball = q_of_ball(*p.tilde_ball, g);
    return r;
}

} // namespace eggers
