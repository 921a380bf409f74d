#pragma once

// Shared constructors for the worked example germs used across test suites.

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "eggers/contact.hpp"
#include "eggers/tree.hpp"

namespace eggers {

inline CharData smooth_branch() { return char_data_from(1, {}); }

struct ContactEntry {
    int i, j;
    Rat d;
};

inline Germ make_germ(std::vector<CharData> chars, std::vector<ContactEntry> contacts) {
    Germ g;
    for (size_t i = 0; i < chars.size(); ++i)
        g.branches.push_back({"f" + std::to_string(i + 1), chars[i]});
    int r = g.r();
    g.contact.assign(r, std::vector<ExtRat>(r, ExtRat(Rat(1))));
    for (int i = 0; i < r; ++i) g.contact[i][i] = ExtRat::infinity();
    for (const auto& e : contacts) {
        g.contact[e.i][e.j] = ExtRat(e.d);
        g.contact[e.j][e.i] = ExtRat(e.d);
    }
    return g;
}

/// One singular branch of type (2,5) and three smooth branches; the smooth
/// ones share pairwise contact 2 and everything meets f1 transversally.
inline Germ germ_example_210() {
    return make_germ({char_data_from(2, {Rat(5, 2)}), smooth_branch(), smooth_branch(), smooth_branch()},
                     {{1, 2, Rat(2)}, {1, 3, Rat(2)}, {2, 3, Rat(2)}});
}

/// Three smooth branches with pairwise contact 2 (all tangent to one line).
inline Germ germ_example_37() {
    return make_germ({smooth_branch(), smooth_branch(), smooth_branch()},
                     {{0, 1, Rat(2)}, {0, 2, Rat(2)}, {1, 2, Rat(2)}});
}

/// Two smooth branches with contact 2.
inline Germ germ_two_smooth_contact(const Rat& d) {
    return make_germ({smooth_branch(), smooth_branch()}, {{0, 1, d}});
}

/// Two smooth transverse branches.
inline Germ germ_morse() { return make_germ({smooth_branch(), smooth_branch()}, {}); }

inline ExternalBranch probe_with_contacts(const Germ& g, std::string label, std::vector<Rat> ds) {
    ExternalBranch h;
    h.label = std::move(label);
    h.ch = smooth_branch();
    for (auto& d : ds) h.contacts.emplace_back(d);
    check(static_cast<int>(h.contacts.size()) == g.r(), Errc::internal, "probe row length");
    return h;
}

inline ExternalBranch transversal_probe(const Germ& g, std::string label) {
    return probe_with_contacts(g, std::move(label), std::vector<Rat>(g.r(), Rat(1)));
}

inline ExternalBranch probe_same_as(const Germ& g, int i) {
    ExternalBranch h;
    h.label = g.branches[i].label;
    h.ch = g.branches[i].ch;
    h.same_as = i;
    for (int j = 0; j < g.r(); ++j)
        h.contacts.push_back(j == i ? ExtRat::infinity() : g.d(i, j));
    return h;
}

inline std::vector<int> branches_in_ball_for_tests(const Ball& b, const Germ& g) {
    return branches_in_ball(b, g);
}

} // namespace eggers
