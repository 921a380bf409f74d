#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eggers/rational.hpp"

namespace eggers {

/// Univariate polynomial over the rationals, coefficients by ascending degree.
struct UPoly {
    std::vector<Rat> c;

    bool zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; } // -1 for 0
    int ord() const;                                           // trailing degree
    const Rat& lc() const { return c.back(); }
    Rat at0() const { return c.empty() ? Rat(0) : c.front(); }
    void normalize();
};

UPoly upoly_from(std::vector<Rat> coeffs);
UPoly uadd(const UPoly& a, const UPoly& b);
UPoly usub(const UPoly& a, const UPoly& b);
UPoly umul(const UPoly& a, const UPoly& b);
UPoly uscale(const UPoly& a, const Rat& s);
std::pair<UPoly, UPoly> udivrem(const UPoly& a, const UPoly& b);
UPoly udiv_exact(const UPoly& a, const UPoly& b);
UPoly ugcd(UPoly a, UPoly b); // monic
UPoly uderiv(const UPoly& a);
UPoly usquarefree_part(const UPoly& a);
/// Number of distinct complex roots (degree of the squarefree part).
int distinct_root_count(const UPoly& a);
Rat ueval(const UPoly& a, const Rat& x);

/// Rational roots with multiplicities, plus whatever factor remains.
struct RationalRoots {
    std::vector<std::pair<Rat, int>> roots;
    UPoly cofactor; // rootless (over Q) remainder, constant when fully split
};
RationalRoots rational_roots(const UPoly& a);

/// Exact rational n-th root when it exists.
std::optional<Rat> rat_nth_root(const Rat& a, const Int& n);

/// Bivariate polynomial with exact rational coefficients.
struct BiPoly {
    std::map<std::pair<int, int>, Rat> t; // (x-exponent, y-exponent) -> coefficient

    bool zero() const { return t.empty(); }
    int deg_x() const;
    int deg_y() const;
    /// Minimal total degree (infinity is represented by -1 on the zero polynomial).
    int ord() const;
    Rat coeff(int a, int b) const;
    void add_term(int a, int b, const Rat& v);
};

BiPoly badd(const BiPoly& a, const BiPoly& b);
BiPoly bsub(const BiPoly& a, const BiPoly& b);
BiPoly bmul(const BiPoly& a, const BiPoly& b);
BiPoly bneg(const BiPoly& a);
BiPoly bpow(const BiPoly& a, int n);
BiPoly bderiv_x(const BiPoly& a);
BiPoly bderiv_y(const BiPoly& a);

/// f(0, Y) and f(X, 0) as univariate polynomials.
UPoly eval_x0(const BiPoly& f);
UPoly eval_y0(const BiPoly& f);

int x_factor_power(const BiPoly& f); // largest k with X^k dividing f
int y_factor_power(const BiPoly& f);
BiPoly strip_x_power(const BiPoly& f, int k);

/// f(X + cY, Y).
BiPoly shear_x(const BiPoly& f, const Rat& c);
/// f(aX + bY, cX + dY); the matrix must be invertible.
BiPoly linear_change(const BiPoly& f, const Rat& a, const Rat& b, const Rat& c, const Rat& d);

/// View as a polynomial in Y with coefficients in Q[X], ascending in Y.
std::vector<UPoly> ypoly_view(const BiPoly& f);

BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b);
bool is_squarefree(const BiPoly& f);
BiPoly bdiv_exact(const BiPoly& a, const BiPoly& b);

/// Resultant with respect to Y, a polynomial in X.
UPoly resultant_y(const BiPoly& f, const BiPoly& g);

struct Intersection {
    bool infinite = false;
    Int value = 0;
    int shear = 0; // the X -> X + cY substitution that made the computation valid
};
/// Local intersection number of f = 0 and g = 0 at the origin.
Intersection intersection_mult(const BiPoly& f, const BiPoly& g);

BiPoly parse_poly(const std::string& text);
std::string print_poly(const BiPoly& f);

} // namespace eggers
