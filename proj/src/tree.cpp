#include "eggers/tree.hpp"

#include <algorithm>
#include <functional>

namespace eggers {

namespace {

bool ball_less_key(const Ball& a, const Ball& b) {
    if (a.radius != b.radius) return a.radius < b.radius;
    return a.center < b.center;
}

std::vector<Ball> collection_of(const Germ& g) {
    std::vector<Ball> out;
    auto push = [&](Ball b) {
        b = canonical_ball(b, g);
        for (const Ball& c : out)
            if (ball_cmp(b, c, g) == BallOrder::Equal) return;
        out.push_back(b);
    };
    for (int i = 0; i < g.r(); ++i) {
        push(Ball{i, ExtRat::infinity()});
        for (int j = i + 1; j < g.r(); ++j) push(Ball{i, g.d(i, j)});
        for (const Rat& dk : g.branches[i].ch.contacts) push(Ball{i, ExtRat(dk)});
    }
    std::sort(out.begin(), out.end(), ball_less_key);
    return out;
}

} // namespace

std::vector<Ball> build_collection(const Germ& g) { return collection_of(g); }

std::vector<int> branches_in_ball(const Ball& b, const Germ& g) {
    std::vector<int> out;
    for (int i = 0; i < g.r(); ++i)
        if (ball_contains_branch(b, i, g)) out.push_back(i);
    return out;
}

std::vector<Rat> char_of_ball(const Ball& b, const Germ& g) {
    std::vector<Rat> out;
    for (const Rat& d : g.branches[b.center].ch.contacts)
        if (ExtRat(d) < b.radius) out.push_back(d);
    return out;
}

std::pair<Int, Int> nu_n_of_ball(const Ball& b, const Germ& g) {
    check(!b.radius.is_inf(), Errc::internal, "nu/n need a finite diameter");
    auto cs = char_of_ball(b, g);
    const CharData& c = g.branches[b.center].ch;
    Int nu = 1;
    for (size_t k = 0; k < cs.size(); ++k) nu *= c.n_seq[k];
    Int q = rat_den(b.radius.value());
    Int n = q / boost::multiprecision::gcd(q, nu * nu);
    return {nu, n};
}

SuccessorCounts successor_counts(const Ball& b, const Germ& g) {
    auto in = branches_in_ball(b, g);
    check(!in.empty(), Errc::empty_ball, "ball contains no germ branch");
    check(!b.radius.is_inf(), Errc::internal, "successor counts need a finite diameter");
    // classes of the relation d(f_i, f_j) > d(B)
    std::vector<int> rep;
    SuccessorCounts sc;
    for (int i : in) {
        bool done = false;
        for (int r : rep)
            if (g.d(i, r) > b.radius) {
                done = true;
                break;
            }
        if (done) continue;
        rep.push_back(i);
        ++sc.t;
        const auto& chars = g.branches[i].ch.contacts;
        bool solid = std::find(chars.begin(), chars.end(), b.radius.value()) != chars.end();
        solid ? ++sc.t2 : ++sc.t1;
    }
    return sc;
}

Int order_of_ball(const Ball& b, const Germ& g) {
    Int s = 0;
    for (int i : branches_in_ball(b, g)) s += g.branches[i].ch.ord;
    return s;
}

namespace {

Rat q_of_ball_in(const Ball& b, const Germ& g, const std::vector<Ball>& coll) {
    check(!b.radius.is_inf(), Errc::ball_outside_family, "q needs a finite diameter");
    check(order_of_ball(b, g) > 0, Errc::ball_outside_family, "ball disjoint from the germ");
    std::vector<Ball> chain;
    for (const Ball& c : coll)
        if (!c.radius.is_inf() && ball_cmp(c, b, g) == BallOrder::Less) chain.push_back(c);
    chain.push_back(b);
    std::sort(chain.begin(), chain.end(),
              [&](const Ball& a, const Ball& c) { return ball_cmp(a, c, g) == BallOrder::Less; });
    Rat q = Rat(order_of_ball(chain[0], g)) * chain[0].radius.value();
    for (size_t k = 1; k < chain.size(); ++k)
        q += Rat(order_of_ball(chain[k], g)) * (chain[k].radius.value() - chain[k - 1].radius.value());
    return q;
}

} // namespace

Rat q_of_ball(const Ball& b, const Germ& g) { return q_of_ball_in(b, g, collection_of(g)); }

Int m_of_ball(const Ball& b, const Germ& g) {
    check(!b.radius.is_inf(), Errc::ball_outside_family, "m needs a finite diameter");
    auto [nu, n] = nu_n_of_ball(b, g);
    auto sc = successor_counts(b, g);
    return nu * (Int(sc.t1) + n * Int(sc.t2) - 1);
}

int EggersTree::find_ball(const Ball& b) const {
    for (size_t i = 0; i < v.size(); ++i)
        if (ball_cmp(v[i].ball, b, germ) == BallOrder::Equal) return static_cast<int>(i);
    return -1;
}

int EggersTree::white_of_branch(int i) const {
    for (size_t k = 0; k < v.size(); ++k)
        if (is_white(static_cast<int>(k)) && v[k].ball.center == i) return static_cast<int>(k);
    fail(Errc::internal, "missing white vertex");
}

EggersTree build_tree(const Germ& g) {
    check(validate_germ(g).empty(), Errc::invalid_contacts, "germ fails validation");
    EggersTree t;
    t.germ = g;
    auto coll = collection_of(g);
    t.v.resize(coll.size());
    for (size_t i = 0; i < coll.size(); ++i) t.v[i].ball = coll[i];
    // parent = largest ball strictly containing this one
    for (size_t i = 0; i < coll.size(); ++i) {
        int best = -1;
        for (size_t j = 0; j < coll.size(); ++j) {
            if (i == j) continue;
            if (ball_cmp(coll[j], coll[i], g) != BallOrder::Less) continue;
            if (best < 0 || ball_cmp(coll[best], coll[j], g) == BallOrder::Less) best = static_cast<int>(j);
        }
        t.v[i].parent = best;
        if (best < 0) {
            check(t.root == -1, Errc::internal, "collection has two minimal balls");
            t.root = static_cast<int>(i);
        }
    }
    check(t.root >= 0, Errc::internal, "collection has no minimal ball");
    for (size_t i = 0; i < coll.size(); ++i)
        if (t.v[i].parent >= 0) t.v[t.v[i].parent].children.push_back(static_cast<int>(i));
    for (auto& vx : t.v)
        std::sort(vx.children.begin(), vx.children.end(),
                  [&](int a, int b) { return ball_less_key(t.v[a].ball, t.v[b].ball); });
    // decorations
    for (size_t i = 0; i < coll.size(); ++i) {
        auto& d = t.v[i].data;
        const Ball& b = coll[i];
        d.d = b.radius;
        d.char_set = char_of_ball(b, g);
        d.order = order_of_ball(b, g);
        if (!b.radius.is_inf()) {
            auto [nu, n] = nu_n_of_ball(b, g);
            d.nu = nu;
            d.n = n;
            auto sc = successor_counts(b, g);
            d.t = sc.t;
            d.t1 = sc.t1;
            d.t2 = sc.t2;
            d.q = q_of_ball_in(b, g, coll);
            d.m = m_of_ball(b, g);
        } else {
            const CharData& c = g.branches[b.center].ch;
            d.nu = c.ord;
        }
    }
    // edge styles; recount against the successor split
    for (size_t i = 0; i < coll.size(); ++i) {
        if (t.is_white(static_cast<int>(i))) continue;
        int solid = 0, dashed = 0;
        const Rat& di = t.v[i].ball.radius.value();
        for (int c : t.v[i].children) {
            const auto& cs = t.v[c].data.char_set;
            bool s = std::find(cs.begin(), cs.end(), di) != cs.end();
            t.v[c].solid_to_parent = s;
            s ? ++solid : ++dashed;
        }
        check(solid == t.v[i].data.t2 && dashed == t.v[i].data.t1, Errc::internal,
              "edge styles disagree with the successor split");
    }
    return t;
}

std::vector<std::vector<int>> tangential_decomposition(const Germ& g) {
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < g.r(); ++i) {
        bool placed = false;
        for (auto& c : classes)
            if (g.d(c.front(), i) > ExtRat(Rat(1))) {
                c.push_back(i);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({i});
    }
    return classes;
}

Germ sub_germ(const Germ& g, const std::vector<int>& idx) {
    Germ s;
    for (int i : idx) s.branches.push_back(g.branches[i]);
    s.contact.assign(idx.size(), std::vector<ExtRat>(idx.size()));
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = 0; b < idx.size(); ++b) s.contact[a][b] = g.d(idx[a], idx[b]);
    return s;
}

PolarInvariants polar_invariants(const Germ& g) {
    check(g.singular(), Errc::nonsingular_germ, "polar invariants need a singular germ");
    PolarInvariants out;
    auto coll = collection_of(g);
    for (const Ball& b : coll) {
        if (b.radius.is_inf()) continue;
        Rat q = q_of_ball_in(b, g, coll);
        Int m = m_of_ball(b, g);
        check(m > 0, Errc::internal, "collection ball with nonpositive multiplicity");
        out.mult[q] += m;
    }
    out.q0 = out.mult.rbegin()->first;
    return out;
}

Rat lojasiewicz(const Germ& g) {
    if (!g.singular()) return Rat(0);
    return polar_invariants(g).q0 - 1;
}

Rat lojasiewicz_via_tangential(const Germ& g) {
    if (!g.singular()) return Rat(0);
    auto classes = tangential_decomposition(g);
    Rat ordf(g.total_order());
    Rat best;
    bool first = true;
    for (const auto& c : classes) {
        Germ s = sub_germ(g, c);
        Rat v = lojasiewicz(s) + ordf - Rat(s.total_order());
        if (first || v > best) {
            best = v;
            first = false;
        }
    }
    return best;
}

namespace {

CharData char_data_from_contacts(const std::vector<Rat>& contacts) {
    // the order is forced: nu_g = product of the n_k
    Int nu = 1;
    for (const Rat& d : contacts) {
        Int q = rat_den(d);
        Int n = q / boost::multiprecision::gcd(q, nu * nu);
        nu *= n;
    }
    return char_data_from(nu, contacts);
}

} // namespace

Germ germ_from_tree(const EggersTree& t) {
    const auto& v = t.v;
    check(!v.empty(), Errc::malformed_tree, "empty tree");
    Germ g;
    std::vector<int> whites;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].parent >= 0) {
            const ExtRat& pd = v[v[i].parent].data.d;
            check(pd < v[i].data.d && !pd.is_inf(), Errc::malformed_tree, "diameters must increase from the root");
        }
        if (v[i].data.d.is_inf()) {
            check(v[i].children.empty(), Errc::malformed_tree, "white vertices are leaves");
            whites.push_back(static_cast<int>(i));
        } else {
            check(!v[i].children.empty(), Errc::malformed_tree, "black leaf");
        }
    }
    // branch types from root-to-white paths
    std::vector<int> white_of(v.size(), -1);
    for (int w : whites) {
        std::vector<int> path;
        for (int x = w; x >= 0; x = v[x].parent) path.push_back(x);
        std::reverse(path.begin(), path.end());
        check(path.front() == t.root, Errc::malformed_tree, "disconnected vertex");
        std::vector<Rat> contacts;
        for (size_t k = 1; k < path.size(); ++k)
            if (v[path[k]].solid_to_parent) contacts.push_back(v[path[k - 1]].data.d.value());
        Germ::Branch br;
        br.label = "f" + std::to_string(g.r() + 1);
        try {
            br.ch = char_data_from_contacts(contacts);
        } catch (const Error& e) {
            fail(Errc::malformed_tree, std::string("solid-edge contacts are not a characteristic sequence: ") + e.what());
        }
        white_of[w] = g.r();
        g.branches.push_back(std::move(br));
    }
    // pairwise contacts from deepest common ancestors
    int r = static_cast<int>(whites.size());
    g.contact.assign(r, std::vector<ExtRat>(r));
    std::vector<int> depth(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i)
        for (int x = static_cast<int>(i); v[x].parent >= 0; x = v[x].parent) ++depth[i];
    for (int a = 0; a < static_cast<int>(whites.size()); ++a) {
        g.contact[white_of[whites[a]]][white_of[whites[a]]] = ExtRat::infinity();
        for (int b = a + 1; b < static_cast<int>(whites.size()); ++b) {
            int x = whites[a], y = whites[b];
            while (depth[x] > depth[y]) x = v[x].parent;
            while (depth[y] > depth[x]) y = v[y].parent;
            while (x != y) {
                x = v[x].parent;
                y = v[y].parent;
            }
            g.contact[white_of[whites[a]]][white_of[whites[b]]] = v[x].data.d;
            g.contact[white_of[whites[b]]][white_of[whites[a]]] = v[x].data.d;
        }
    }
    check(validate_germ(g).empty(), Errc::malformed_tree, "reconstructed germ fails validation");
    EggersTree back = build_tree(g);
    check(tree_signature(back) == tree_signature(t), Errc::malformed_tree,
          "tree is not the Eggers tree of its own reconstruction");
    return g;
}

namespace {

std::string sig_rec(const EggersTree& t, int i) {
    if (t.v[i].data.d.is_inf()) return "w";
    std::vector<std::string> parts;
    for (int c : t.v[i].children)
        parts.push_back((t.v[c].solid_to_parent ? "s" : "d") + sig_rec(t, c));
    std::sort(parts.begin(), parts.end());
    std::string s = "(" + ext_str(t.v[i].data.d);
    for (auto& p : parts) s += " " + p;
    return s + ")";
}

} // namespace

std::string tree_signature(const EggersTree& t) { return sig_rec(t, t.root); }

std::string to_dot(const EggersTree& t) {
    std::string s = "graph eggers {\n  node [shape=circle];\n";
    for (size_t i = 0; i < t.v.size(); ++i) {
        s += "  n" + std::to_string(i);
        if (t.is_white(static_cast<int>(i)))
            s += " [label=\"" + t.germ.branches[t.v[i].ball.center].label + "\"];\n";
        else
            s += " [label=\"" + rat_str(t.v[i].ball.radius.value()) +
                 "\", style=filled, fillcolor=black, fontcolor=white];\n";
    }
    for (size_t i = 0; i < t.v.size(); ++i) {
        if (t.v[i].parent < 0) continue;
        s += "  n" + std::to_string(t.v[i].parent) + " -- n" + std::to_string(i);
        s += t.v[i].solid_to_parent ? ";\n" : " [style=dashed];\n";
    }
    return s + "}\n";
}

} // namespace eggers
