#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eggers/tree.hpp"

namespace eggers {

/// Position of a regular parameter relative to the germ: its chain of balls,
/// the extremal chain members, and whether it is one of the branches.
struct Placement {
    ExternalBranch lambda;
    int delta = 0;                    // 1 when lambda is a branch of the germ
    std::vector<Ball> chain;          // ascending; last has infinite radius iff delta = 1
    std::optional<Ball> tilde_ball;   // delta = 1: largest ball joining lambda to another branch

    const Ball& chain_min() const { return chain.front(); }
    const Ball& chain_max() const { return chain.back(); } // B_f(lambda)
    bool b_f_lambda_finite() const { return !chain.back().radius.is_inf(); }
};

Placement placement(const Germ& g, const ExternalBranch& lambda);

/// (f,h)_0 / ord h for a probe that is not a branch of the germ.
Rat q_via_position(const ExternalBranch& h, const Germ& g);

bool in_chain(const Ball& b, const Placement& p, const Germ& g);

/// Finite balls of the truncated collection together with B_f(lambda).
std::vector<Ball> eligible_balls(const Placement& p, const Germ& g);

/// Intersection number of the polar factor package at B with lambda.
Int polar_multiplicity(const Ball& b, const Placement& p, const Germ& g);

struct PolarRow {
    Ball ball;
    std::string label;
    Rat q;
    Rat d_lambda;
    Int m;
    bool in_chain = false;
};

/// Either an exact value or only an upper bound (the one equisingularity
/// class where the restricted exponent is not an invariant).
struct LPolar {
    bool exact = true;
    Rat value; // the exact value, or the upper bound when !exact
};

struct Thm111 {
    bool a1 = false;          // L0(f) >= L0(f|polar)
    bool a2 = false;          // L0(f|polar) >= q0(f,lambda) - 1
    bool bounds_only = false; // checked through the upper bound only
    bool morse = false;
    bool eq_L = false; // L0(f) == L0(f|polar); decidable in every class
    bool eq_q = false; // q0(f) == q0(f,lambda)
    std::optional<bool> equiv; // eq_L <-> eq_q, stated for non-Morse germs
};

struct SpecialVerdict {
    std::vector<Rat> M;           // per tangential component
    std::optional<int> component; // index of the unique maximiser, if any
};

struct PolarReport {
    std::string lambda_label;
    int delta = 0;
    std::vector<PolarRow> rows;
    std::map<Rat, Int> quotients; // value -> multiplicity
    Int total_m = 0;
    Int expected_total = 0; // (f-tilde, lambda)_0 - 1
    bool sum_ok = false;
    std::optional<Rat> q0_lambda; // empty quotient set reports no value
    Rat tilde_L;
    LPolar l_polar;
    bool special = false;
    Thm111 flags;
    std::optional<Rat> q_tilde_ball; // delta = 1 only
};

std::map<Rat, Int> polar_quotients(const Placement& p, const Germ& g);
std::optional<Rat> max_polar_quotient(const Placement& p, const Germ& g);
Rat tilde_L(const Placement& p, const Germ& g);
LPolar lojasiewicz_on_polar(const Placement& p, const Germ& g);
SpecialVerdict special_verdict(const Germ& g);
bool is_special(const Placement& p, const Germ& g);
Thm111 thm_1_11_flags(const Placement& p, const Germ& g);
PolarReport build_polar_report(const Placement& p, const Germ& g);

/// Index of the tangential component the parameter is tangent to, if any.
std::optional<int> tangent_component(const Placement& p, const Germ& g);

} // namespace eggers
