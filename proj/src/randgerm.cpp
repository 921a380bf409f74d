#include "eggers/randgerm.hpp"

#include <algorithm>
#include <random>

namespace eggers {

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed * 0x9e3779b97f4a7c15ULL + 1) {}
    // uniform draws via modulo keep the stream identical across platforms
    long long below(long long n) { return static_cast<long long>(eng() % static_cast<unsigned long long>(n)); }
    bool chance(int percent) { return below(100) < percent; }
};

struct Builder {
    Rng rng;
    GermGenOptions opt;
    Germ g;
    int budget;

    Builder(std::uint64_t seed, const GermGenOptions& o) : rng(seed), opt(o), budget(o.max_branches) {}

    int add_branch(const std::vector<Rat>& chars, const Int& nu) {
        Germ::Branch b;
        b.label = "f" + std::to_string(g.r() + 1);
        b.ch = char_data_from(nu, chars);
        g.branches.push_back(std::move(b));
        return g.r() - 1;
    }

    /// Subtree below a ball of diameter d; returns the contained branch indices.
    std::vector<int> node(const Rat& d_low, const std::vector<Rat>& chars, const std::vector<Int>& ns,
                          const Int& nu, int depth, std::vector<std::vector<ExtRat>>& dist) {
        // pick the diameter
        bool make_char = static_cast<int>(chars.size()) < opt.max_char_pairs && depth < opt.max_depth &&
                         rng.chance(45);
        Int n = make_char ? Int(2 + rng.below(2)) : Int(1);
        Int base = nu * nu * n;
        Int k = rat_num(d_low * base) / rat_den(d_low * base) + 1 + rng.below(3);
        if (make_char && k % n == 0) ++k; // keep the diameter outside N/nu^2
        Rat d(k, base);

        // successors: one solid class at most can stay non-characteristic
        int solid = make_char ? 1 + static_cast<int>(rng.below(2)) : 0;
        int dashed = make_char ? static_cast<int>(rng.below(2)) : 2 + static_cast<int>(rng.below(2));
        std::vector<std::vector<int>> classes;
        auto place = [&](bool is_solid) {
            if (budget <= 0) return;
            std::vector<Rat> c2 = chars;
            std::vector<Int> n2 = ns;
            Int nu2 = nu;
            if (is_solid) {
                c2.push_back(d);
                n2.push_back(n);
                nu2 = nu * n;
            }
            bool leaf = depth >= opt.max_depth || budget <= 1 || rng.chance(55);
            if (leaf) {
                --budget;
                classes.push_back({add_branch(c2, nu2)});
            } else {
                classes.push_back(node(d, c2, n2, nu2, depth + 1, dist));
            }
        };
        for (int i = 0; i < solid; ++i) place(true);
        for (int i = 0; i < dashed; ++i) place(false);
        while (classes.size() < 2 && !make_char) place(false); // pairwise balls need a split
        if (classes.empty()) {
            --budget;
            classes.push_back({add_branch(chars, nu)});
        }
        std::vector<int> all;
        for (size_t a = 0; a < classes.size(); ++a)
            for (int i : classes[a]) {
                for (size_t b = a + 1; b < classes.size(); ++b)
                    for (int j : classes[b]) {
                        dist[i][j] = ExtRat(d);
                        dist[j][i] = ExtRat(d);
                    }
                all.push_back(i);
            }
        return all;
    }
};

Rat first_char_or(const CharData& c, const Rat& fallback) {
    return c.contacts.empty() ? fallback : c.contacts.front();
}

} // namespace

Germ random_germ(std::uint64_t seed, const GermGenOptions& opt) {
    Builder b(seed, opt);
    int n = opt.max_branches;
    std::vector<std::vector<ExtRat>> dist(n + 2, std::vector<ExtRat>(n + 2, ExtRat(Rat(1))));
    int classes = b.rng.chance(45) ? 2 + static_cast<int>(b.rng.below(2)) : 1;
    for (int c = 0; c < classes && b.budget > 0; ++c) {
        if (b.rng.chance(30) && classes > 1) {
            --b.budget;
            b.add_branch({}, 1); // a lone smooth tangent direction
        } else {
            b.node(Rat(1), {}, {}, 1, 1, dist);
        }
    }
    Germ& g = b.g;
    int r = g.r();
    g.contact.assign(r, std::vector<ExtRat>(r, ExtRat(Rat(1))));
    for (int i = 0; i < r; ++i) {
        g.contact[i][i] = ExtRat::infinity();
        for (int j = 0; j < r; ++j)
            if (i != j && dist[i][j] > ExtRat(Rat(1))) g.contact[i][j] = dist[i][j];
    }
    check(validate_germ(g).empty(), Errc::internal, "generated germ fails validation");
    return g;
}

std::optional<ExternalBranch> random_probe(const Germ& g, std::uint64_t seed, ProbeMode mode) {
    Rng rng(seed ^ 0xabcdef12345ULL);
    if (mode == ProbeMode::any) {
        long long pick = rng.below(3);
        mode = pick == 0 ? ProbeMode::transversal : pick == 1 ? ProbeMode::tangent : ProbeMode::branch;
    }
    ExternalBranch h;
    h.label = "l";
    h.ch = char_data_from(1, {});
    auto transversal = [&]() {
        h.contacts.assign(g.r(), ExtRat(Rat(1)));
        h.same_as.reset();
        return h;
    };
    if (mode == ProbeMode::transversal) return transversal();
    if (mode == ProbeMode::branch) {
        std::vector<int> smooth;
        for (int i = 0; i < g.r(); ++i)
            if (g.branches[i].ch.smooth()) smooth.push_back(i);
        if (smooth.empty() || g.r() < 2) return std::nullopt;
        int i = smooth[rng.below(static_cast<long long>(smooth.size()))];
        h.label = g.branches[i].label;
        h.same_as = i;
        h.contacts.clear();
        for (int j = 0; j < g.r(); ++j)
            h.contacts.push_back(j == i ? ExtRat::infinity() : g.d(i, j));
        return h;
    }
    // tangent attachment to branch i at a contact R with 1 < R <= every cap
    int i = static_cast<int>(rng.below(g.r()));
    const Int& ordi = g.branches[i].ch.ord;
    ExtRat cap = g.branches[i].ch.contacts.empty() ? ExtRat::infinity()
                                                   : ExtRat(g.branches[i].ch.contacts.front());
    for (int j = 0; j < g.r(); ++j) {
        if (j == i) continue;
        Rat cj = first_char_or(g.branches[j].ch, Rat(0));
        if (cj != 0 && g.d(i, j) > ExtRat(cj)) cap = ext_min(cap, ExtRat(cj));
    }
    Int hi_num = cap.is_inf() ? Int(4) * ordi : rat_num(cap.value() * ordi) / rat_den(cap.value() * ordi);
    if (cap.is_inf()) hi_num += rng.below(4);
    if (!cap.is_inf() && Rat(hi_num, ordi) > cap.value()) --hi_num;
    for (Int k = hi_num - rng.below(2); k > ordi; --k) {
        Rat R(k, ordi);
        bool ok = true;
        std::vector<ExtRat> row;
        for (int j = 0; j < g.r(); ++j) {
            Rat dj = j == i ? R : std::min(R, g.d(i, j).is_inf() ? R : g.d(i, j).value());
            if (!rat_is_integer(dj * g.branches[j].ch.ord)) ok = false;
            row.emplace_back(dj);
        }
        if (!ok) continue;
        h.contacts = std::move(row);
        h.same_as.reset();
        if (!validate_external(g, h).empty()) continue;
        return h;
    }
    return transversal();
}

} // namespace eggers
