#include "eggers/newton.hpp"

#include <algorithm>
#include <functional>

namespace eggers {

PuiPoly pui_from(const BiPoly& f) {
    PuiPoly p;
    for (const auto& [e, v] : f.t) p[{Rat(e.first), e.second}] = v;
    return p;
}

PuiPoly pui_shift_y(const PuiPoly& f, const Rat& c, const Rat& theta) {
    PuiPoly out;
    auto add = [&](const Rat& x, int y, const Rat& v) {
        if (v == 0) return;
        auto [it, fresh] = out.emplace(std::make_pair(x, y), v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) out.erase(it);
        }
    };
    for (const auto& [e, v] : f) {
        // (cX^theta + Y)^beta, binomially
        Rat pw(1);
        Int binom = 1;
        int beta = e.second;
        for (int k = 0; k <= beta; ++k) {
            add(e.first + theta * k, beta - k, v * Rat(binom) * pw);
            pw *= c;
            binom = binom * (beta - k) / (k + 1);
        }
    }
    return out;
}

int pui_y_factor(const PuiPoly& f) {
    int k = -1;
    for (const auto& [e, v] : f) k = (k < 0) ? e.second : std::min(k, e.second);
    return std::max(k, 0);
}

namespace {

using Pt = std::pair<Rat, Rat>;

Rat cross(const Pt& a, const Pt& b, const Pt& c) {
    return (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
}

Polygon polygon_of_points(std::vector<Pt> pts) {
    check(!pts.empty(), Errc::zero_polynomial, "polygon of the zero polynomial");
    Polygon out;
    out.delta_x = pts[0].first;
    out.delta_y = pts[0].second;
    for (const Pt& p : pts) {
        out.delta_x = std::min(out.delta_x, p.first);
        out.delta_y = std::min(out.delta_y, p.second);
    }
    std::sort(pts.begin(), pts.end());
    std::vector<Pt> hull;
    for (const Pt& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    // keep the strictly descending part: the compact boundary of supp + R+^2
    std::vector<Pt> chain{hull.front()};
    for (size_t i = 1; i < hull.size(); ++i) {
        if (hull[i].second >= chain.back().second) break;
        chain.push_back(hull[i]);
    }
    out.hull = chain;
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        out.faces.push_back(NFace{chain[i].first, chain[i].second, chain[i + 1].first, chain[i + 1].second});
    return out;
}

} // namespace

Polygon polygon(const PuiPoly& f) {
    std::vector<Pt> pts;
    for (const auto& [e, v] : f) pts.emplace_back(e.first, Rat(e.second));
    return polygon_of_points(std::move(pts));
}

Polygon polygon(const BiPoly& f) { return polygon(pui_from(f)); }

Polygon polygon_above(const PuiPoly& f, const Rat& threshold) {
    Polygon p = polygon(f);
    std::vector<NFace> keep;
    for (const NFace& s : p.faces)
        if (s.incl() > threshold) keep.push_back(s);
    p.faces = std::move(keep);
    return p;
}

namespace {

bool on_face(const NFace& s, const Rat& x, const Rat& y) {
    if (x < s.x0 || x > s.x1) return false;
    return (x - s.x0) * (s.y1 - s.y0) == (y - s.y0) * (s.x1 - s.x0);
}

} // namespace

UPoly inform_as_upoly(const PuiPoly& f, const NFace& s) {
    std::vector<Rat> c;
    for (const auto& [e, v] : f) {
        if (!on_face(s, e.first, Rat(e.second))) continue;
        if (static_cast<int>(c.size()) <= e.second) c.resize(e.second + 1, Rat(0));
        c[e.second] = v;
    }
    return upoly_from(std::move(c));
}

FaceStats face_stats(const BiPoly& f, const NFace& s) {
    Polygon p = polygon(f);
    bool found = false;
    for (const NFace& t : p.faces)
        if (t.x0 == s.x0 && t.y0 == s.y0 && t.x1 == s.x1 && t.y1 == s.y1) found = true;
    check(found, Errc::face_not_on_polygon, "face is not a compact face of the polygon");
    FaceStats st;
    int min_x = -1;
    for (const auto& [e, v] : f.t)
        if (on_face(s, Rat(e.first), Rat(e.second))) {
            st.inform.add_term(e.first, e.second, v);
            min_x = min_x < 0 ? e.first : std::min(min_x, e.first);
        }
    UPoly u = inform_as_upoly(pui_from(f), s);
    st.t = distinct_root_count(u);
    check(rat_is_integer(s.len2()), Errc::internal, "face height must be integral");
    st.d = rat_num(s.len2()).convert_to<int>() + s.eps() - st.t + 1;
    st.eps_x = min_x > 0;
    st.eps_y = u.ord() > 0;
    return st;
}

Int NewtonLedger::total() const {
    Int s = 0;
    for (const auto& e : entries) s += e.count_exact + e.count_bound;
    return s;
}

std::string LedgerEntry::describe() const {
    std::string phi = "0";
    if (!track.empty()) {
        phi.clear();
        for (const auto& st : track) {
            if (!phi.empty()) phi += " + ";
            phi += rat_str(st.key) + "*X^(" + rat_str(st.theta) + ")";
        }
    }
    return "track " + phi + ", inclination " + rat_str(incl);
}

namespace {

struct FaceData {
    NFace s;
    Rat theta;
    Int nbar;     // denominator jump of theta relative to the node
    UPoly u;      // in(f_phi, S)(1, Y)
    int ylow = 0; // trailing Y-power of u
    UPoly w;      // u / Y^ylow
    UPoly W;      // deflation w(Y) = W(Y^nbar)
    bool deflated = false;
    int t = 0;
    int dcount = 0;
    bool axis = false;
    int second_kind = 0; // escaping roots at this face (per representative track)
};

struct Node {
    std::vector<TrackStep> path; // continuation steps so far
    Int N = 1;                   // common denominator of the track exponents
    Rat deg = Rat(0);            // largest exponent of the track
    PuiPoly f;
    Int mult = 1; // number of conjugate tracks represented
};

FaceData analyze_face(const Node& node, const NFace& s) {
    FaceData fd;
    fd.s = s;
    fd.theta = s.incl();
    Rat tn = fd.theta * node.N;
    fd.nbar = rat_den(tn);
    fd.u = inform_as_upoly(node.f, s);
    check(!fd.u.zero(), Errc::internal, "empty in-form on a polygon face");
    fd.ylow = fd.u.ord();
    check(Rat(fd.ylow) == s.y1, Errc::internal, "in-form trailing degree disagrees with the face");
    fd.w = fd.u;
    fd.w.c.erase(fd.w.c.begin(), fd.w.c.begin() + fd.ylow);
    fd.axis = fd.ylow == 0;
    // the roots at this exponent come in groups of nbar conjugates
    fd.deflated = true;
    long long nb = fd.nbar.convert_to<long long>();
    for (size_t i = 0; i < fd.w.c.size(); ++i)
        if (fd.w.c[i] != 0 && static_cast<long long>(i) % nb != 0) fd.deflated = false;
    if (fd.deflated) {
        std::vector<Rat> wc;
        for (size_t i = 0; i < fd.w.c.size(); i += nb) wc.push_back(fd.w.c[i]);
        fd.W = upoly_from(std::move(wc));
    }
    fd.t = distinct_root_count(fd.u);
    fd.dcount = fd.w.deg() - distinct_root_count(fd.w);
    if (fd.axis) {
        UPoly wp = uderiv(fd.w);
        if (wp.at0() == 0) fd.second_kind = wp.ord();
    }
    return fd;
}

std::string face_blame(const Node& node, const FaceData& fd) {
    LedgerEntry e;
    e.track = node.path;
    e.incl = fd.theta;
    return e.describe();
}

// ---------------------------------------------------------------- ledger ---

struct LedgerBuilder {
    NewtonLedger out;
    bool allow_partial = false;

    void rec(const Node& node, int depth) {
        check(depth < 64, Errc::internal, "track recursion too deep");
        int dy = pui_y_factor(node.f);
        check(dy <= 1, Errc::not_reduced, "repeated branch along a track");
        Polygon poly = polygon(node.f);
        for (const NFace& s : poly.faces) {
            if (!(s.incl() > node.deg)) continue;
            FaceData fd = analyze_face(node, s);
            LedgerEntry e;
            e.track = node.path;
            e.mult = node.mult;
            e.incl = fd.theta;
            bool root = node.path.empty();
            if (root)
                e.kind = fd.theta < 1   ? LedgerEntry::Kind::x_side
                         : fd.theta > 1 ? LedgerEntry::Kind::y_side
                                        : LedgerEntry::Kind::unit_direction;
            else
                e.kind = LedgerEntry::Kind::deep;
            Int count = fd.t - 1;
            if (root && e.kind == LedgerEntry::Kind::x_side && fd.second_kind > 0) {
                e.count_bound = Int(fd.second_kind) * node.mult;
                e.count_exact = (count - fd.second_kind) * node.mult;
                e.second_kind = true;
            } else {
                e.count_exact = count * node.mult;
                e.second_kind = fd.second_kind > 0;
            }
            if (e.count_exact + e.count_bound > 0) out.entries.push_back(e);
            if (fd.dcount > 0) expand(node, fd, depth);
        }
    }

    void expand(const Node& node, const FaceData& fd, int depth) {
        Int accounted = 0;
        if (fd.deflated) {
            auto rr = rational_roots(fd.W);
            for (const auto& [a, mult_e] : rr.roots) {
                if (mult_e < 2) continue;
                auto c = rat_nth_root(a, fd.nbar);
                if (!c) continue; // counted below as unexpanded
                Node child;
                child.path = node.path;
                child.path.push_back({fd.theta, *c, true});
                child.N = node.N * fd.nbar;
                child.deg = fd.theta;
                child.f = pui_shift_y(node.f, *c, fd.theta);
                child.mult = node.mult * fd.nbar;
                accounted += fd.nbar * Int(mult_e - 1);
                rec(child, depth + 1);
            }
        }
        Int missing = Int(fd.dcount) - accounted;
        check(missing >= 0, Errc::internal, "expanded more roots than the face carries");
        if (missing > 0) {
            if (!allow_partial)
                fail(Errc::irrational_track_root,
                     "multiple in-form root is not rational at " + face_blame(node, fd));
            out.complete = false;
            out.unexpanded += missing * node.mult;
            out.notes.push_back("unexpanded multiple roots at " + face_blame(node, fd));
        }
    }
};

} // namespace

NewtonLedger derivative_ledger(const BiPoly& f, bool allow_partial) {
    check(!f.zero() && f.ord() >= 1, Errc::zero_polynomial, "no curve germ at the origin");
    check(is_squarefree(f), Errc::not_reduced, "input has a repeated factor");
    int dx = x_factor_power(f);
    check(dx <= 1, Errc::not_reduced, "X^2 divides the input");
    BiPoly ft = strip_x_power(f, dx);
    UPoly f0 = eval_x0(ft);
    check(!f0.zero() && f0.ord() >= 1, Errc::zero_polynomial,
          "nothing to count: the input is the X axis");
    LedgerBuilder lb;
    lb.allow_partial = allow_partial;
    lb.out.delta_x = dx;
    lb.out.expected = f0.ord();
    lb.out.expected -= 1;
    Node root;
    root.f = pui_from(ft);
    lb.rec(root, 0);
    if (lb.out.complete)
        check(lb.out.total() == lb.out.expected, Errc::internal, "ledger count is not conserved");
    else
        check(lb.out.total() + lb.out.unexpanded == lb.out.expected, Errc::internal,
              "partial ledger count is not conserved");
    return lb.out;
}

// ------------------------------------------------------------ extraction ---

namespace {

struct Splitter {
    std::vector<TrackBranch> branches;

    TrackBranch finish(std::vector<TrackStep> path, bool exact) {
        TrackBranch br;
        br.path = std::move(path);
        br.exact_root = exact;
        std::vector<Rat> exps;
        for (const auto& st : br.path) exps.push_back(st.theta);
        br.b = gen_char_from_exponents(exps);
        try {
            br.ch = gen_char_to_char(br.b);
        } catch (const Error& e) {
            fail(Errc::unsupported_branch_shape,
                 std::string("track exponents form no valid characteristic sequence: ") + e.what());
        }
        br.d_to_x = contact_with_x(br.b);
        return br;
    }

    void rec(const Node& node, const Int& expected, int depth) {
        check(depth < 64, Errc::internal, "track recursion too deep");
        int dy = pui_y_factor(node.f);
        check(dy <= 1, Errc::not_reduced, "repeated branch along a track");
        if (dy == 1) branches.push_back(finish(node.path, true));
        Polygon poly = polygon(node.f);
        Int seen = dy;
        for (const NFace& s : poly.faces) {
            if (!(s.incl() > node.deg)) continue;
            FaceData fd = analyze_face(node, s);
            check(rat_is_integer(s.len2()), Errc::internal, "non-integral face height");
            seen += rat_num(s.len2());
            if (!fd.deflated)
                fail(Errc::unsupported_branch_shape,
                     "in-form is not symmetric under the cycle at " + face_blame(node, fd));
            auto rr = rational_roots(fd.W);
            if (rr.cofactor.deg() > 0)
                fail(Errc::unsupported_branch_shape,
                     "in-form root is not rational (the factor may be reducible over the complex "
                     "numbers) at " +
                         face_blame(node, fd));
            // visit roots in ascending order for deterministic labels
            std::sort(rr.roots.begin(), rr.roots.end());
            for (const auto& [a, mult_e] : rr.roots) {
                check(a != 0, Errc::internal, "zero root in the nonzero-root part");
                if (mult_e == 1) {
                    auto path = node.path;
                    path.push_back({fd.theta, a, false}); // orbit key; the coefficient may be irrational
                    branches.push_back(finish(std::move(path), false));
                    continue;
                }
                auto c = rat_nth_root(a, fd.nbar);
                if (!c)
                    fail(Errc::irrational_track_root,
                         "multiple in-form root " + rat_str(a) + " has no rational continuation at " +
                             face_blame(node, fd));
                Node child;
                child.path = node.path;
                child.path.push_back({fd.theta, *c, true});
                child.N = node.N * fd.nbar;
                child.deg = fd.theta;
                child.f = pui_shift_y(node.f, *c, fd.theta);
                child.mult = node.mult * fd.nbar;
                rec(child, Int(mult_e), depth + 1);
            }
        }
        check(seen == expected, Errc::internal, "track roots are not conserved");
    }
};

ExtRat root_split_contact(const ExtRat& ta, const ExtRat& tb) {
    ExtRat one(Rat(1));
    if (!(ta < one) && !(tb < one)) return ext_min(ta, tb);
    if (ta < one && tb < one) return ExtRat(Rat(1) / ext_max(ta, tb).value());
    return one;
}

} // namespace

ExtRat track_contact(const TrackBranch& a, const TrackBranch& b) {
    if (a.is_x_branch || b.is_x_branch) {
        if (a.is_x_branch && b.is_x_branch) return ExtRat::infinity();
        return ExtRat(a.is_x_branch ? b.d_to_x : a.d_to_x);
    }
    size_t k = 0;
    while (k < a.path.size() && k < b.path.size() && a.path[k] == b.path[k]) ++k;
    auto depart = [&](const TrackBranch& t) -> ExtRat {
        if (k < t.path.size()) return ExtRat(t.path[k].theta);
        check(t.exact_root, Errc::internal, "terminal track step shared by two branches");
        return ExtRat::infinity();
    };
    ExtRat ta = depart(a), tb = depart(b);
    if (ta.is_inf() && tb.is_inf()) return ExtRat::infinity(); // the same branch
    if (k == 0) return root_split_contact(ta, tb);
    std::vector<Rat> exps;
    for (size_t i = 0; i < k; ++i) exps.push_back(a.path[i].theta);
    GenCharSeq phi = gen_char_from_exponents(exps);
    Rat kappa = ext_min(ta, tb).value();
    return ExtRat(contact_with_x(phi) * alpha_of_kappa(char_diagram(phi), kappa));
}

PolyGerm germ_from_poly(const BiPoly& f) {
    check(!f.zero() && f.ord() >= 1, Errc::zero_polynomial, "no curve germ at the origin");
    check(is_squarefree(f), Errc::not_reduced, "input has a repeated factor");
    PolyGerm pg;
    pg.printed = print_poly(f);
    int dx = x_factor_power(f);
    check(dx <= 1, Errc::not_reduced, "X^2 divides the input");
    BiPoly ft = strip_x_power(f, dx);
    if (dx == 1) {
        TrackBranch xb;
        xb.is_x_branch = true;
        xb.b.b = {Int(1)};
        xb.ch = char_data_from(1, {});
        pg.x_branch = 0;
        pg.branches.push_back(std::move(xb));
    }
    UPoly f0 = eval_x0(ft);
    check(!f0.zero(), Errc::internal, "X still divides the stripped polynomial");
    if (f0.ord() >= 1) {
        Splitter sp;
        Node root;
        root.f = pui_from(ft);
        sp.rec(root, Int(f0.ord()), 0);
        for (auto& br : sp.branches) pg.branches.push_back(std::move(br));
    }
    check(!pg.branches.empty(), Errc::internal, "no branch through the origin");
    Germ& g = pg.germ;
    for (size_t i = 0; i < pg.branches.size(); ++i)
        g.branches.push_back({"f" + std::to_string(i + 1), pg.branches[i].ch});
    int r = g.r();
    g.contact.assign(r, std::vector<ExtRat>(r));
    for (int i = 0; i < r; ++i) {
        g.contact[i][i] = ExtRat::infinity();
        for (int j = i + 1; j < r; ++j) {
            ExtRat d = track_contact(pg.branches[i], pg.branches[j]);
            g.contact[i][j] = d;
            g.contact[j][i] = d;
        }
    }
    Int total = 0;
    for (const auto& b : pg.branches) total += b.ch.ord;
    check(total == f.ord(), Errc::internal, "branch orders do not add up to the order of the input");
    auto viol = validate_germ(g);
    check(viol.empty(), Errc::mismatch,
          viol.empty() ? "" : "extracted germ fails validation: " + viol.front().message);
    return pg;
}

CharData extract_branch(const BiPoly& f) {
    PolyGerm pg = germ_from_poly(f);
    check(pg.germ.r() == 1, Errc::unsupported_branch_shape,
          "the polynomial has " + std::to_string(pg.germ.r()) + " branches at the origin");
    return pg.germ.branches[0].ch;
}

ExternalBranch lambda_x_probe(const PolyGerm& pg) {
    ExternalBranch h;
    h.label = "X";
    h.ch = char_data_from(1, {});
    for (const auto& br : pg.branches)
        h.contacts.push_back(br.is_x_branch ? ExtRat::infinity() : ExtRat(br.d_to_x));
    if (pg.x_branch >= 0) h.same_as = pg.x_branch;
    return h;
}

namespace {

TrackBranch virtual_track(std::vector<TrackStep> path) {
    TrackBranch v;
    v.path = std::move(path);
    v.exact_root = true;
    std::vector<Rat> exps;
    for (const auto& st : v.path) exps.push_back(st.theta);
    v.b = gen_char_from_exponents(exps);
    v.d_to_x = contact_with_x(v.b);
    return v;
}

std::optional<Ball> resolve_ball(const PolyGerm& pg, const ExtRat& radius,
                                 const std::function<ExtRat(const TrackBranch&)>& contact) {
    for (size_t i = 0; i < pg.branches.size(); ++i)
        if (!(contact(pg.branches[i]) < radius)) return Ball{static_cast<int>(i), radius};
    return std::nullopt;
}

} // namespace

std::vector<AssignedEntry> assign_balls(const NewtonLedger& led, const PolyGerm& pg) {
    std::vector<AssignedEntry> out;
    TrackBranch yv = virtual_track({});
    for (const LedgerEntry& e : led.entries) {
        AssignedEntry a;
        a.entry = e;
        switch (e.kind) {
            case LedgerEntry::Kind::unit_direction: {
                a.ball = canonical_ball(Ball{0, ExtRat(Rat(1))}, pg.germ);
                break;
            }
            case LedgerEntry::Kind::x_side: {
                ExtRat R{Rat(1) / e.incl};
                auto ball = resolve_ball(pg, R, [&](const TrackBranch& b) {
                    return b.is_x_branch ? ExtRat::infinity() : ExtRat(b.d_to_x);
                });
                if (e.count_exact > 0) a.ball = ball;
                if (e.count_bound > 0) a.bound = ball;
                break;
            }
            case LedgerEntry::Kind::y_side: {
                ExtRat R{e.incl};
                a.ball = resolve_ball(pg, R, [&](const TrackBranch& b) { return track_contact(b, yv); });
                break;
            }
            case LedgerEntry::Kind::deep: {
                TrackBranch phi = virtual_track(e.track);
                Rat R = contact_with_x(phi.b) * alpha_of_kappa(char_diagram(phi.b), e.incl);
                a.ball = resolve_ball(pg, ExtRat(R),
                                      [&](const TrackBranch& b) { return track_contact(b, phi); });
                break;
            }
        }
        out.push_back(std::move(a));
    }
    return out;
}

// ---------------------------------------------------------- verification ---

bool VerifyReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

void add_check(VerifyReport& r, std::string name, bool pass, std::string detail = "") {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
}

} // namespace

VerifyReport cross_verify(const BiPoly& f, bool allow_partial) {
    return cross_verify_with(germ_from_poly(f), f, allow_partial);
}

VerifyReport cross_verify_with(const PolyGerm& pg, const BiPoly& f, bool allow_partial) {
    VerifyReport rep;
    const Germ& g = pg.germ;
    add_check(rep, "germ-valid", validate_germ(g).empty());
    add_check(rep, "order-sum", g.total_order() == f.ord(),
              "ord f = " + std::to_string(f.ord()));

    int dx = x_factor_power(f);
    BiPoly ft = strip_x_power(f, dx);
    Int p(eval_x0(ft).ord());

    // (f-tilde, X)_0 three ways: vertical order, branch contacts, resultant
    Rat via_contacts(0);
    for (const auto& br : pg.branches)
        if (!br.is_x_branch) via_contacts += br.d_to_x * Rat(br.ch.ord);
    BiPoly xpoly;
    xpoly.add_term(1, 0, Rat(1));
    auto im = intersection_mult(ft, xpoly);
    bool isect_ok = !im.infinite && via_contacts == Rat(p) && im.value == p;
    add_check(rep, "intersection-lambda", isect_ok,
              "ord f~(0,Y) = " + p.str() + ", contact sum = " + rat_str(via_contacts) +
                  ", resultant = " + (im.infinite ? std::string("inf") : im.value.str()));

    if (!g.singular()) {
        add_check(rep, "nonsingular", true, "no polar data for a nonsingular germ");
        return rep;
    }

    Placement pl;
    PolarReport pr;
    try {
        pl = placement(g, lambda_x_probe(pg));
        pr = build_polar_report(pl, g);
    } catch (const Error& e) {
        add_check(rep, "placement", false, e.what());
        return rep;
    }
    add_check(rep, "placement", true);
    add_check(rep, "sum-rule", pr.sum_ok && pr.expected_total == p - 1,
              "sum of multiplicities " + pr.total_m.str() + " vs " + Int(p - 1).str());
    if (pg.x_branch < 0)
        add_check(rep, "position-q", q_of_ball(pl.chain_max(), g) == Rat(p),
                  "q at B_f(X) vs the vertical intersection number");

    NewtonLedger led = derivative_ledger(f, allow_partial);
    rep.partial = !led.complete;
    add_check(rep, "ledger-total",
              led.expected == p - 1 && led.total() + led.unexpanded == led.expected,
              "counted " + led.total().str() + " of " + led.expected.str() +
                  (led.complete ? "" : " (partial)"));

    // the chain of the X parameter against the level-0 inclinations
    {
        Polygon poly = polygon(pui_from(ft));
        bool ok = true;
        std::string why;
        std::vector<Rat> incls;
        for (const NFace& s : poly.faces) incls.push_back(s.incl());
        for (const Rat& i : incls) {
            if (i >= 1) continue;
            Ball want{0, ExtRat(Rat(1) / i)};
            bool found = false;
            for (const Ball& c : pl.chain)
                if (!c.radius.is_inf() && c.radius == want.radius) found = true;
            if (!found) {
                ok = false;
                why = "missing chain ball of radius " + rat_str(Rat(1) / i);
            }
        }
        if (!incls.empty()) {
            Rat mx = *std::max_element(incls.begin(), incls.end());
            ExtRat want_min = mx < 1 ? ExtRat(Rat(1) / mx) : ExtRat(Rat(1));
            if (pl.chain_min().radius != want_min) {
                ok = false;
                why = "least chain ball disagrees with the steepest face";
            }
            Rat mn = *std::min_element(incls.begin(), incls.end());
            ExtRat want_max = pg.x_branch >= 0 ? ExtRat::infinity()
                              : mn < 1         ? ExtRat(Rat(1) / mn)
                                               : ExtRat(Rat(1));
            if (pl.chain_max().radius != want_max) {
                ok = false;
                why = "greatest chain ball disagrees with the flattest face";
            }
        }
        add_check(rep, "chain", ok, why);
    }

    // per-ball comparison, with everything below the least chain ball pooled there
    {
        auto assigned = assign_balls(led, pg);
        const Ball& pool = pl.chain_min();
        std::map<std::string, Int> got;
        std::map<std::string, bool> approx;
        bool resolved = true;
        auto bucket_of = [&](const Ball& b) {
            BallOrder o = ball_cmp(b, pool, g);
            const Ball& tgt = (o == BallOrder::Less || o == BallOrder::Equal) ? pool : b;
            return ball_str(tgt, g);
        };
        for (const auto& a : assigned) {
            if (a.entry.count_exact > 0) {
                if (!a.ball) {
                    resolved = false;
                    continue;
                }
                got[bucket_of(*a.ball)] += a.entry.count_exact;
            }
            if (a.entry.count_bound > 0) {
                if (!a.bound) {
                    resolved = false;
                    continue;
                }
                // bounded strictly below the bound ball, hence inside the pool
                std::string key = bucket_of(*a.bound);
                got[key] += a.entry.count_bound;
                approx[key] = true;
            }
        }
        bool ok = resolved && led.complete;
        std::string why = resolved ? "" : "an entry resolved to no ball of the germ; ";
        for (const auto& row : pr.rows) {
            Int have = 0;
            auto it = got.find(ball_str(row.ball, g));
            if (it != got.end()) {
                have = it->second;
                got.erase(it);
            }
            if (have != row.m) {
                ok = false;
                why += row.label + ": counted " + have.str() + " vs predicted " + row.m.str() + "; ";
            }
        }
        for (const auto& [k, v] : got)
            if (v != 0) {
                ok = false;
                why += "unmatched count " + v.str() + " at " + k + "; ";
            }
        for (const auto& [k, v] : approx) why += "second-kind roots pooled at " + k + "; ";
        add_check(rep, "per-ball", ok, why);
    }
    return rep;
}

} // namespace eggers
