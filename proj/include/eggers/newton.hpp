#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eggers/bipoly.hpp"
#include "eggers/polar.hpp"

namespace eggers {

/// Puiseux polynomial in X with integer Y-exponents; the support kernel the
/// track recursion runs on.
using PuiPoly = std::map<std::pair<Rat, int>, Rat>;

PuiPoly pui_from(const BiPoly& f);
/// f(X, c X^theta + Y).
PuiPoly pui_shift_y(const PuiPoly& f, const Rat& c, const Rat& theta);
int pui_y_factor(const PuiPoly& f);

/// Compact face of a Newton diagram boundary, upper-left to lower-right.
struct NFace {
    Rat x0, y0, x1, y1;
    Rat len1() const { return x1 - x0; }  // |S|_1
    Rat len2() const { return y0 - y1; }  // |S|_2
    Rat incl() const { return len1() / len2(); }
    int eps() const { return y1 == 0 ? -1 : 0; }
};

struct Polygon {
    std::vector<NFace> faces; // ascending inclination
    Rat delta_x, delta_y;     // distances of the diagram to the axes
    std::vector<std::pair<Rat, Rat>> hull;
};

Polygon polygon(const PuiPoly& f);
Polygon polygon(const BiPoly& f);
/// Faces of inclination strictly above the threshold.
Polygon polygon_above(const PuiPoly& f, const Rat& threshold);

struct FaceStats {
    BiPoly inform;  // in(f,S)
    int t = 0;      // distinct roots of in(f,S)(1,Y)
    int d = 0;      // |S|_2 + eps - t + 1
    bool eps_x = false, eps_y = false; // X | in-form, Y | in-form
};
FaceStats face_stats(const BiPoly& f, const NFace& s);

/// in(f,S)(1,Y) by ascending Y-degree.
UPoly inform_as_upoly(const PuiPoly& f, const NFace& s);

/// One step of a track: a term key X^theta appended to the approximation.
/// Continuation steps carry the actual coefficient; terminal steps carry the
/// orbit key (the n-th power of the coefficient), which need not be a
/// coefficient value itself.
struct TrackStep {
    Rat theta;
    Rat key;
    bool cont = true;
    bool operator==(const TrackStep&) const = default;
};

/// One counted packet of derivative roots.
struct LedgerEntry {
    std::vector<TrackStep> track; // continuation steps of the representative track
    Int mult = 1;                 // conjugate tracks folded into this entry
    Rat incl;                               // face inclination at the node
    Int count_exact = 0;                    // roots with a known ball, times mult
    Int count_bound = 0;                    // roots known only below the bound ball, times mult
    bool second_kind = false;               // some counted roots leave the polygon
    enum class Kind { unit_direction, x_side, y_side, deep } kind = Kind::x_side;
    std::string describe() const;
};

struct NewtonLedger {
    std::vector<LedgerEntry> entries;
    Int expected = 0; // ord f-tilde(0,Y) - 1
    bool complete = true;
    Int unexpanded = 0; // counts lost to irrational continuations (partial mode)
    int delta_x = 0;
    std::vector<std::string> notes;

    Int total() const;
};

/// Root counts of the Y-derivative organised by track and face.  Throws
/// IrrationalTrackRoot when a multiple in-form root cannot be continued over
/// the rationals, unless allow_partial is set.
NewtonLedger derivative_ledger(const BiPoly& f, bool allow_partial = false);

/// A branch recognised by the track recursion.
struct TrackBranch {
    GenCharSeq b;
    CharData ch;
    Rat d_to_x;                  // order of contact with the X-axis branch
    std::vector<TrackStep> path; // steps down the track tree, terminal step included
    bool exact_root = false;     // the branch is the cycle of its own track
    bool is_x_branch = false;
};

struct PolyGerm {
    Germ germ;
    std::vector<TrackBranch> branches; // aligned with germ.branches
    int x_branch = -1;                 // index when X divides the input
    std::string printed;               // normal form of the input
};

/// Splits a reduced polynomial into certified branches and derives the full
/// contact matrix.  Throws NotReduced / UnsupportedBranchShape.
PolyGerm germ_from_poly(const BiPoly& f);

/// The single-branch case of the splitting, as a standalone certification.
CharData extract_branch(const BiPoly& f);

/// Contact of two recognised branches from their track positions.
ExtRat track_contact(const TrackBranch& a, const TrackBranch& b);

struct AssignedEntry {
    LedgerEntry entry;
    std::optional<Ball> ball;  // exact position, when known
    std::optional<Ball> bound; // entries bounded strictly below this ball
};

/// Places every ledger entry on a ball of the germ.
std::vector<AssignedEntry> assign_balls(const NewtonLedger& led, const PolyGerm& pg);

/// The X-axis parameter as an external branch of the extracted germ.
ExternalBranch lambda_x_probe(const PolyGerm& pg);

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool partial = false;
    bool pass() const;
};

/// Runs the combinatorial engine and the root-counting ledger side by side
/// for lambda = X and compares everything the two can both see.
VerifyReport cross_verify(const BiPoly& f, bool allow_partial = false);
/// Same comparison against externally supplied germ data.
VerifyReport cross_verify_with(const PolyGerm& pg, const BiPoly& f, bool allow_partial = false);

} // namespace eggers
