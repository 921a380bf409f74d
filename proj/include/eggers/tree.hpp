#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eggers/contact.hpp"

namespace eggers {

struct VertexData {
    ExtRat d;
    std::vector<Rat> char_set;
    Int nu = 1;
    Int n = 1;       // meaningful for finite diameters only
    Int order = 0;   // sum of orders of contained branches
    int t = 0, t1 = 0, t2 = 0;
    std::optional<Rat> q;
    std::optional<Int> m;
};

/// Rooted tree of the canonical balls of the Eggers collection.  White
/// vertices (infinite diameter) are the branches; edges join successive
/// balls, solid when the parent diameter is a characteristic contact of the
/// child.
struct EggersTree {
    struct Vertex {
        Ball ball;
        int parent = -1;
        std::vector<int> children;
        bool solid_to_parent = false;
        VertexData data;
    };
    Germ germ;
    std::vector<Vertex> v;
    int root = -1;

    bool is_white(int i) const { return v[i].ball.radius.is_inf(); }
    int find_ball(const Ball& b) const; // index via ball equality, -1 if absent
    /// Index of the white vertex of branch i.
    int white_of_branch(int i) const;
};

std::vector<Ball> build_collection(const Germ& g);
EggersTree build_tree(const Germ& g);

std::vector<Rat> char_of_ball(const Ball& b, const Germ& g);
std::pair<Int, Int> nu_n_of_ball(const Ball& b, const Germ& g);
struct SuccessorCounts {
    int t = 0, t1 = 0, t2 = 0;
};
SuccessorCounts successor_counts(const Ball& b, const Germ& g);
Int order_of_ball(const Ball& b, const Germ& g);
Rat q_of_ball(const Ball& b, const Germ& g);
Int m_of_ball(const Ball& b, const Germ& g);

std::vector<int> branches_in_ball(const Ball& b, const Germ& g);

/// Partition of branch indices by shared tangent (contact > 1).
std::vector<std::vector<int>> tangential_decomposition(const Germ& g);
Germ sub_germ(const Germ& g, const std::vector<int>& idx);

struct PolarInvariants {
    std::map<Rat, Int> mult; // value -> multiplicity
    Rat q0;
};
PolarInvariants polar_invariants(const Germ& g);

/// q0(f) - 1 for singular germs; 0 for a nonsingular germ.
Rat lojasiewicz(const Germ& g);
/// Same number through the tangential decomposition.
Rat lojasiewicz_via_tangential(const Germ& g);

/// Recovers the germ from tree structure, diameters and edge styles.
/// Throws MalformedTree when the data is not the tree of any germ.
Germ germ_from_tree(const EggersTree& t);

/// Canonical text form of (structure, diameters, styles); equal signatures
/// mean equisingular germs.
std::string tree_signature(const EggersTree& t);

std::string to_dot(const EggersTree& t);

} // namespace eggers
