#pragma once

#include <span>
#include <utility>
#include <vector>

#include "eggers/rational.hpp"

namespace eggers {

/// Minimal semigroup generators b0 < b1 < ... < bg of a plane branch.
/// A smooth branch is (1); a singular branch has b0 >= 2 and g >= 1.
struct SemigroupSeq {
    std::vector<Int> betas;
};

bool validate_semigroup(const SemigroupSeq& s);

/// A branch given by its order and strictly increasing characteristic
/// contacts d1 < ... < dg.  The sequences n_k (>= 2) and nu_k = n1...nk are
/// derived from the contacts; nu_g always equals ord.
struct CharData {
    Int ord = 1;
    std::vector<Rat> contacts;
    std::vector<Int> n_seq;
    std::vector<Int> nu_seq; // nu_0 = 1, ..., nu_g = ord

    int g() const { return static_cast<int>(contacts.size()); }
    bool smooth() const { return ord == 1; }
};

/// Builds CharData from (ord, contacts), deriving n_seq/nu_seq.
/// Throws InvalidCharData when the membership or ordering rules fail.
CharData char_data_from(Int ord, std::vector<Rat> contacts);

/// Non-throwing full check of the CharData rules.
bool validate_char(const Int& ord, const std::vector<Rat>& contacts);
bool validate_char(const CharData& c);

CharData char_from_semigroup(const SemigroupSeq& s);
SemigroupSeq semigroup_from_char(const CharData& c);

/// Contact exponent of a ball with characteristic prefix (d1..dk, n1..nk)
/// and diameter d:  d1 + n1(d2-d1) + ... + n1...nk(d - dk).
Rat contact_exponent(std::span<const Rat> char_prefix, std::span<const Int> n_prefix, const Rat& d);

/// Generalized characteristic sequence (b0,...,bh): b0 = the Puiseux
/// denominator, b1 < ... < bh the exponent numerators where the running GCD
/// drops.  (1) encodes a series with integer exponents.
struct GenCharSeq {
    std::vector<Int> b;
    int h() const { return static_cast<int>(b.size()) - 1; }
};

bool validate_gen_char(const GenCharSeq& g);

/// Derives the generalized characteristic sequence from the exponents of a
/// Puiseux polynomial (positive rationals, strictly increasing).
GenCharSeq gen_char_from_exponents(std::span<const Rat> exponents);

/// Characteristic Newton diagram of a branch relative to the X-axis:
/// the boundary vertex list (top-left to bottom-right), scaled so the vertical
/// axis vertex is (0, d(f,X)) and the lowest vertex has height 1/ord.
struct CharDiagram {
    std::vector<std::pair<Rat, Rat>> vertices; // first is (0, d), strictly descending in y
    Int ord = 1;

    const Rat& dist_to_vertical() const { return vertices.front().second; } // = d(f,X)
    /// Inclination of face k (between vertices k and k+1).
    Rat incl(size_t k) const;
    /// Abscissa where the supporting line of face k meets the horizontal axis.
    Rat intercept(size_t k) const;
    size_t face_count() const { return vertices.size() - 1; }
};

CharDiagram char_diagram(const GenCharSeq& g);

/// Horizontal-axis intercept of the supporting line of inclination kappa > 0.
Rat alpha_of_kappa(const CharDiagram& d, const Rat& kappa);
/// Abscissa of the lowest vertex; the limit position of the support point as
/// the inclination grows without bound.
Rat alpha_of_kappa_inf(const CharDiagram& d);
/// Inverse of alpha_of_kappa on the diagram's admissible range.
Rat kappa_of_alpha(const CharDiagram& d, const Rat& alpha);

/// Order of contact between the branch and X read off the sequence:
/// 1 when b0 < b1 (transverse), b0/b1 when b0 > b1, 1 for (1).
Rat contact_with_x(const GenCharSeq& g);

/// Order of the branch encoded by g: min(b0, b1), or 1 for (1).
Int order_of_gen_char(const GenCharSeq& g);

/// Characteristic contacts from the generalized sequence.  Applies the
/// three-case inverse rule (transverse; tangent with maximal contact; tangent
/// otherwise) and checks b0 = d(f,X) * n1...ng.
CharData gen_char_to_char(const GenCharSeq& g);

} // namespace eggers
