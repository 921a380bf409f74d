#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eggers/branch.hpp"
#include "eggers/rational.hpp"

namespace eggers {

/// Equisingularity data of a reduced germ: branch types plus the symmetric
/// matrix of pairwise orders of contact (infinite on the diagonal only).
///
/// validate_germ checks the logarithmic-distance axioms and the compatibility
/// of characteristic contacts below each pairwise contact.  Stronger
/// arithmetic realizability constraints exist and are not checked here.
struct Germ {
    struct Branch {
        std::string label;
        CharData ch;
    };
    std::vector<Branch> branches;
    std::vector<std::vector<ExtRat>> contact;

    int r() const { return static_cast<int>(branches.size()); }
    const ExtRat& d(int i, int j) const { return contact[i][j]; }
    Int total_order() const;
    bool singular() const { return total_order() >= 2; }
};

struct Violation {
    enum class Kind { shape, diagonal, not_reduced, below_one, symmetry, triangle, char_compat };
    Kind kind;
    std::vector<int> idx;
    std::string message;
};

std::vector<Violation> validate_germ(const Germ& g);

/// A probe branch given by its position relative to the germ.  When it
/// coincides with a germ branch, same_as holds that index and the contact row
/// carries infinity there.
struct ExternalBranch {
    std::string label;
    CharData ch;
    std::vector<ExtRat> contacts; // d(f_i, h) per germ branch
    std::optional<int> same_as;
};

/// Violations of the joint (germ + h) matrix.
std::vector<Violation> validate_external(const Germ& g, const ExternalBranch& h);

/// Ball in the space of branches, centred at a germ branch.  Canonical form
/// uses the least germ-branch index contained in the ball.
struct Ball {
    int center = 0;
    ExtRat radius;
};

enum class BallOrder { Less, Equal, Greater, Incomparable };

bool ball_contains_branch(const Ball& b, int j, const Germ& g);
bool balls_intersect(const Ball& a, const Ball& b, const Germ& g);
BallOrder ball_cmp(const Ball& a, const Ball& b, const Germ& g);
Ball canonical_ball(Ball b, const Germ& g);
std::string ball_str(const Ball& b, const Germ& g);

/// d(B, h) = min(d(center, h), radius).
ExtRat dist_ball_branch(const Ball& b, const ExternalBranch& h, const Germ& g);
ExtRat dist_ball_branch(const Ball& b, int branch, const Germ& g);

/// Contact between g and h as determined by their positions relative to the
/// germ: max_i min(d(f_i,g), d(f_i,h)).  Also checks both ball forms agree.
ExtRat dist_via_germ(const ExternalBranch& a, const ExternalBranch& b, const Germ& g);

/// The chain of balls B(f_i, d(f_i, h)), ascending and deduplicated.
std::vector<Ball> chain_of_branch(const ExternalBranch& h, const Germ& g);

} // namespace eggers
