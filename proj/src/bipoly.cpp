#include "eggers/bipoly.hpp"

#include <algorithm>
#include <cctype>

namespace eggers {

void UPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

UPoly upoly_from(std::vector<Rat> coeffs) {
    UPoly p;
    p.c = std::move(coeffs);
    p.normalize();
    return p;
}

int UPoly::ord() const {
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) return static_cast<int>(i);
    return -1;
}

UPoly uadd(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.normalize();
    return r;
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.zero() || b.zero()) return {};
    UPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
}

UPoly uscale(const UPoly& a, const Rat& s) {
    if (s == 0) return {};
    UPoly r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

std::pair<UPoly, UPoly> udivrem(const UPoly& a, const UPoly& b) {
    check(!b.zero(), Errc::internal, "division by the zero polynomial");
    UPoly q, r = a;
    if (a.deg() < b.deg()) return {q, r};
    q.c.assign(a.deg() - b.deg() + 1, Rat(0));
    while (!r.zero() && r.deg() >= b.deg()) {
        Rat f = r.lc() / b.lc();
        int sh = r.deg() - b.deg();
        q.c[sh] = f;
        for (size_t i = 0; i < b.c.size(); ++i) r.c[sh + i] -= f * b.c[i];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

UPoly udiv_exact(const UPoly& a, const UPoly& b) {
    auto [q, r] = udivrem(a, b);
    check(r.zero(), Errc::internal, "expected exact polynomial division");
    return q;
}

UPoly ugcd(UPoly a, UPoly b) {
    while (!b.zero()) {
        auto r = udivrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.zero() && a.lc() != 1) a = uscale(a, Rat(1) / a.lc());
    return a;
}

UPoly uderiv(const UPoly& a) {
    UPoly r;
    for (size_t i = 1; i < a.c.size(); ++i) r.c.push_back(a.c[i] * Rat(Int(i)));
    r.normalize();
    return r;
}

UPoly usquarefree_part(const UPoly& a) {
    if (a.zero() || a.deg() == 0) return a;
    return udiv_exact(a, ugcd(a, uderiv(a)));
}

int distinct_root_count(const UPoly& a) {
    check(!a.zero(), Errc::internal, "root count of the zero polynomial");
    return usquarefree_part(a).deg();
}

Rat ueval(const UPoly& a, const Rat& x) {
    Rat v(0);
    for (size_t i = a.c.size(); i-- > 0;) v = v * x + a.c[i];
    return v;
}

namespace {

/// Divisors of |n| by trial division; empty when n is too hard to factor.
std::vector<Int> divisors_of(Int n) {
    if (n < 0) n = -n;
    check(n != 0, Errc::internal, "divisors of zero requested");
    std::vector<std::pair<Int, int>> fac;
    Int m = n;
    for (Int p = 2; p * p <= m && p < 100000; ++p) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        fac.emplace_back(p, e);
    }
    if (m > 1) fac.emplace_back(m, 1); // may be composite; still a valid divisor source for roots we test
    std::vector<Int> div{1};
    for (auto& [p, e] : fac) {
        size_t base = div.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) {
                div.push_back(div[i] * pk);
                if (div.size() > 20000) return {}; // give up rather than stall
            }
        }
    }
    return div;
}

} // namespace

RationalRoots rational_roots(const UPoly& a) {
    check(!a.zero(), Errc::internal, "roots of the zero polynomial");
    RationalRoots out;
    UPoly rest = a;
    // strip zero roots
    int z = rest.ord();
    if (z > 0) {
        out.roots.emplace_back(Rat(0), z);
        rest.c.erase(rest.c.begin(), rest.c.begin() + z);
    }
    if (rest.deg() == 0) {
        out.cofactor = rest;
        return out;
    }
    // scale to integer coefficients
    Int den = 1;
    for (const Rat& x : rest.c) den = den / boost::multiprecision::gcd(den, rat_den(x)) * rat_den(x);
    std::vector<Int> ic;
    for (const Rat& x : rest.c) ic.push_back(rat_num(x) * (den / rat_den(x)));
    auto ps = divisors_of(ic.front());
    auto qs = divisors_of(ic.back());
    if (!ps.empty() && !qs.empty()) {
        for (const Int& p : ps)
            for (const Int& q : qs) {
                for (int sign : {1, -1}) {
                    Rat cand(sign * p, q);
                    if (ueval(rest, cand) != 0) continue;
                    int mult = 0;
                    UPoly lin = upoly_from({-cand, Rat(1)});
                    while (true) {
                        auto [quot, rem] = udivrem(rest, lin);
                        if (!rem.zero()) break;
                        rest = quot;
                        ++mult;
                    }
                    if (mult > 0) out.roots.emplace_back(cand, mult);
                    if (rest.deg() == 0) {
                        out.cofactor = rest;
                        return out;
                    }
                }
            }
    }
    out.cofactor = rest;
    return out;
}

std::optional<Rat> rat_nth_root(const Rat& a, const Int& n) {
    check(n >= 1, Errc::internal, "root index must be positive");
    if (n == 1) return a;
    bool neg = a < 0;
    if (neg && n % 2 == 0) return std::nullopt;
    auto iroot = [&](const Int& v) -> std::optional<Int> {
        if (v == 0) return Int(0);
        Int lo = 0, hi = 1;
        while (boost::multiprecision::pow(hi, static_cast<unsigned>(n.convert_to<long>())) < v) hi <<= 1;
        while (lo < hi) {
            Int mid = (lo + hi) / 2;
            if (boost::multiprecision::pow(mid, static_cast<unsigned>(n.convert_to<long>())) < v)
                lo = mid + 1;
            else
                hi = mid;
        }
        if (boost::multiprecision::pow(lo, static_cast<unsigned>(n.convert_to<long>())) == v) return lo;
        return std::nullopt;
    };
    Int num = rat_num(a), den = rat_den(a);
    if (neg) num = -num;
    auto rn = iroot(num), rd = iroot(den);
    if (!rn || !rd) return std::nullopt;
    Rat r(*rn, *rd);
    return neg ? Rat(-r) : r;
}

int BiPoly::deg_x() const {
    int d = -1;
    for (const auto& [e, v] : t) d = std::max(d, e.first);
    return d;
}

int BiPoly::deg_y() const {
    int d = -1;
    for (const auto& [e, v] : t) d = std::max(d, e.second);
    return d;
}

int BiPoly::ord() const {
    int d = -1;
    for (const auto& [e, v] : t) {
        int s = e.first + e.second;
        if (d < 0 || s < d) d = s;
    }
    return d;
}

Rat BiPoly::coeff(int a, int b) const {
    auto it = t.find({a, b});
    return it == t.end() ? Rat(0) : it->second;
}

void BiPoly::add_term(int a, int b, const Rat& v) {
    if (v == 0) return;
    auto [it, fresh] = t.emplace(std::make_pair(a, b), v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) t.erase(it);
    }
}

BiPoly badd(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [e, v] : b.t) r.add_term(e.first, e.second, v);
    return r;
}

BiPoly bsub(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [e, v] : b.t) r.add_term(e.first, e.second, -v);
    return r;
}

BiPoly bneg(const BiPoly& a) {
    BiPoly r = a;
    for (auto& [e, v] : r.t) v = -v;
    return r;
}

BiPoly bmul(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, va] : a.t)
        for (const auto& [eb, vb] : b.t) r.add_term(ea.first + eb.first, ea.second + eb.second, va * vb);
    return r;
}

BiPoly bpow(const BiPoly& a, int n) {
    check(n >= 0, Errc::internal, "negative polynomial power");
    BiPoly r;
    r.add_term(0, 0, Rat(1));
    BiPoly base = a;
    while (n > 0) {
        if (n & 1) r = bmul(r, base);
        base = bmul(base, base);
        n >>= 1;
    }
    return r;
}

BiPoly bderiv_x(const BiPoly& a) {
    BiPoly r;
    for (const auto& [e, v] : a.t)
        if (e.first > 0) r.add_term(e.first - 1, e.second, v * Rat(e.first));
    return r;
}

BiPoly bderiv_y(const BiPoly& a) {
    BiPoly r;
    for (const auto& [e, v] : a.t)
        if (e.second > 0) r.add_term(e.first, e.second - 1, v * Rat(e.second));
    return r;
}

UPoly eval_x0(const BiPoly& f) {
    std::vector<Rat> c;
    for (const auto& [e, v] : f.t) {
        if (e.first != 0) continue;
        if (static_cast<int>(c.size()) <= e.second) c.resize(e.second + 1, Rat(0));
        c[e.second] = v;
    }
    return upoly_from(std::move(c));
}

UPoly eval_y0(const BiPoly& f) {
    std::vector<Rat> c;
    for (const auto& [e, v] : f.t) {
        if (e.second != 0) continue;
        if (static_cast<int>(c.size()) <= e.first) c.resize(e.first + 1, Rat(0));
        c[e.first] = v;
    }
    return upoly_from(std::move(c));
}

int x_factor_power(const BiPoly& f) {
    int k = -1;
    for (const auto& [e, v] : f.t) k = (k < 0) ? e.first : std::min(k, e.first);
    return std::max(k, 0);
}

int y_factor_power(const BiPoly& f) {
    int k = -1;
    for (const auto& [e, v] : f.t) k = (k < 0) ? e.second : std::min(k, e.second);
    return std::max(k, 0);
}

BiPoly strip_x_power(const BiPoly& f, int k) {
    BiPoly r;
    for (const auto& [e, v] : f.t) {
        check(e.first >= k, Errc::internal, "X power does not divide");
        r.add_term(e.first - k, e.second, v);
    }
    return r;
}

BiPoly shear_x(const BiPoly& f, const Rat& c) {
    if (c == 0) return f;
    BiPoly x_plus_cy;
    x_plus_cy.add_term(1, 0, Rat(1));
    x_plus_cy.add_term(0, 1, c);
    BiPoly r;
    for (const auto& [e, v] : f.t) {
        BiPoly term = bpow(x_plus_cy, e.first);
        for (auto& [te, tv] : term.t) r.add_term(te.first, te.second + e.second, tv * v);
    }
    return r;
}

BiPoly linear_change(const BiPoly& f, const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    check(a * d - b * c != 0, Errc::invalid_contacts, "coordinate change must be invertible");
    BiPoly nx, ny;
    nx.add_term(1, 0, a);
    nx.add_term(0, 1, b);
    ny.add_term(1, 0, c);
    ny.add_term(0, 1, d);
    BiPoly r;
    for (const auto& [e, v] : f.t) {
        BiPoly term = bmul(bpow(nx, e.first), bpow(ny, e.second));
        for (auto& [te, tv] : term.t) r.add_term(te.first, te.second, tv * v);
    }
    return r;
}

std::vector<UPoly> ypoly_view(const BiPoly& f) {
    std::vector<UPoly> out(static_cast<size_t>(std::max(f.deg_y() + 1, 0)));
    for (const auto& [e, v] : f.t) {
        auto& up = out[e.second];
        if (static_cast<int>(up.c.size()) <= e.first) up.c.resize(e.first + 1, Rat(0));
        up.c[e.first] = v;
    }
    for (auto& up : out) up.normalize();
    return out;
}

namespace {

BiPoly from_ypoly(const std::vector<UPoly>& v) {
    BiPoly r;
    for (size_t b = 0; b < v.size(); ++b)
        for (size_t a = 0; a < v[b].c.size(); ++a) r.add_term(static_cast<int>(a), static_cast<int>(b), v[b].c[a]);
    return r;
}

UPoly content_y(const std::vector<UPoly>& v) {
    UPoly g;
    for (const auto& up : v)
        if (!up.zero()) g = g.zero() ? up : ugcd(g, up);
    if (!g.zero() && g.lc() != 1) g = uscale(g, Rat(1) / g.lc());
    return g;
}

std::vector<UPoly> divide_content(const std::vector<UPoly>& v, const UPoly& g) {
    std::vector<UPoly> out;
    for (const auto& up : v) out.push_back(up.zero() ? up : udiv_exact(up, g));
    return out;
}

/// Pseudo-remainder of a by b in (Q[X])[Y].
std::vector<UPoly> prem_y(std::vector<UPoly> a, const std::vector<UPoly>& b) {
    int db = static_cast<int>(b.size()) - 1;
    auto deg = [](const std::vector<UPoly>& p) {
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
            if (!p[i].zero()) return i;
        return -1;
    };
    const UPoly& lb = b[db];
    int da = deg(a);
    while (da >= db) {
        UPoly la = a[da];
        for (auto& up : a) up = umul(up, lb);
        for (int i = 0; i <= db; ++i) a[da - db + i] = usub(a[da - db + i], umul(la, b[i]));
        int nd = deg(a);
        check(nd < da, Errc::internal, "pseudo-division failed to reduce the degree");
        da = nd;
    }
    a.resize(std::max(da + 1, 0));
    return a;
}

} // namespace

BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    auto va = ypoly_view(a), vb = ypoly_view(b);
    UPoly ca = content_y(va), cb = content_y(vb);
    UPoly cg = ugcd(ca, cb);
    va = divide_content(va, ca);
    vb = divide_content(vb, cb);
    if (va.size() < vb.size()) std::swap(va, vb);
    while (true) {
        bool vbzero = true;
        for (const auto& up : vb)
            if (!up.zero()) vbzero = false;
        if (vbzero) break;
        auto r = prem_y(va, vb);
        va = std::move(vb);
        UPoly cr = content_y(r);
        vb = r.empty() || cr.zero() ? std::vector<UPoly>{} : divide_content(r, cr);
    }
    UPoly cva = content_y(va);
    va = divide_content(va, cva);
    BiPoly prim = from_ypoly(va);
    BiPoly content;
    for (size_t i = 0; i < cg.c.size(); ++i) content.add_term(static_cast<int>(i), 0, cg.c[i]);
    BiPoly g = bmul(prim, content);
    // normalize the leading coefficient for determinism
    if (!g.t.empty()) {
        Rat l = g.t.rbegin()->second;
        for (auto& [e, v] : g.t) v /= l;
    }
    return g;
}

BiPoly bdiv_exact(const BiPoly& a, const BiPoly& b) {
    check(!b.zero(), Errc::internal, "division by zero polynomial");
    // long division in Y with exact coefficient division in Q[X]
    auto va = ypoly_view(a), vb = ypoly_view(b);
    auto deg = [](const std::vector<UPoly>& p) {
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
            if (!p[i].zero()) return i;
        return -1;
    };
    int db = deg(vb);
    check(db >= 0, Errc::internal, "division by zero polynomial");
    std::vector<UPoly> q(std::max(deg(va) - db + 1, 0));
    while (deg(va) >= db) {
        int da = deg(va);
        UPoly f = udiv_exact(va[da], vb[db]);
        q[da - db] = f;
        for (int i = 0; i <= db; ++i) va[da - db + i] = usub(va[da - db + i], umul(f, vb[i]));
        check(deg(va) < da, Errc::internal, "inexact bivariate division");
    }
    for (const auto& up : va) check(up.zero(), Errc::internal, "inexact bivariate division");
    return from_ypoly(q);
}

bool is_squarefree(const BiPoly& f) {
    check(!f.zero(), Errc::zero_polynomial, "zero polynomial");
    auto v = ypoly_view(f);
    UPoly cont = content_y(v);
    if (distinct_root_count(cont) != cont.deg()) return false;
    BiPoly prim = from_ypoly(divide_content(v, cont));
    if (prim.deg_y() == 0) return true;
    BiPoly g = bipoly_gcd(prim, bderiv_y(prim));
    if (g.deg_y() > 0 || g.deg_x() > 0) return false;
    // the primitive part must also be coprime with the content
    if (cont.deg() > 0) {
        BiPoly cpoly;
        for (size_t i = 0; i < cont.c.size(); ++i) cpoly.add_term(static_cast<int>(i), 0, cont.c[i]);
        BiPoly h = bipoly_gcd(prim, cpoly);
        if (h.deg_x() > 0 || h.deg_y() > 0) return false;
    }
    return true;
}

UPoly resultant_y(const BiPoly& f, const BiPoly& g) {
    auto vf = ypoly_view(f), vg = ypoly_view(g);
    int m = static_cast<int>(vf.size()) - 1, n = static_cast<int>(vg.size()) - 1;
    check(m >= 0 && n >= 0, Errc::zero_polynomial, "resultant of the zero polynomial");
    if (m == 0) {
        UPoly r = upoly_from({Rat(1)});
        for (int i = 0; i < n; ++i) r = umul(r, vf[0]);
        return r;
    }
    if (n == 0) {
        UPoly r = upoly_from({Rat(1)});
        for (int i = 0; i < m; ++i) r = umul(r, vg[0]);
        return r;
    }
    int N = m + n;
    std::vector<std::vector<UPoly>> M(N, std::vector<UPoly>(N));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = vf[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = vg[n - j];
    // fraction-free elimination
    UPoly prev = upoly_from({Rat(1)});
    int sign = 1;
    for (int k = 0; k + 1 < N; ++k) {
        if (M[k][k].zero()) {
            int p = -1;
            for (int i = k + 1; i < N; ++i)
                if (!M[i][k].zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return {}; // determinant vanishes identically
            std::swap(M[k], M[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j)
                M[i][j] = udiv_exact(usub(umul(M[i][j], M[k][k]), umul(M[i][k], M[k][j])), prev);
            M[i][k] = {};
        }
        prev = M[k][k];
    }
    UPoly det = M[N - 1][N - 1];
    return sign < 0 ? uscale(det, Rat(-1)) : det;
}

Intersection intersection_mult(const BiPoly& f0, const BiPoly& g0) {
    check(!f0.zero() && !g0.zero(), Errc::zero_polynomial, "intersection with the zero polynomial");
    Intersection out;
    if (f0.coeff(0, 0) != 0 || g0.coeff(0, 0) != 0) return out; // a unit: intersection 0
    BiPoly f = f0, g = g0;
    BiPoly h = bipoly_gcd(f, g);
    if (h.deg_x() > 0 || h.deg_y() > 0) {
        if (h.coeff(0, 0) == 0) {
            out.infinite = true;
            return out;
        }
        f = bdiv_exact(f, h);
        g = bdiv_exact(g, h);
    }
    for (int c = 0;; ++c) {
        check(c < 64, Errc::internal, "no substitution made the pair Y-general");
        BiPoly fs = shear_x(f, Rat(c)), gs = shear_x(g, Rat(c));
        UPoly u = eval_x0(fs), v = eval_x0(gs);
        if (u.zero() || v.zero()) continue;
        UPoly ud = u, vd = v;
        if (u.ord() > 0) ud.c.erase(ud.c.begin(), ud.c.begin() + u.ord());
        if (v.ord() > 0) vd.c.erase(vd.c.begin(), vd.c.begin() + v.ord());
        if (ugcd(ud, vd).deg() > 0) continue; // shared nonzero root on the test line
        auto vfs = ypoly_view(fs), vgs = ypoly_view(gs);
        bool lc_ok = (!vfs.empty() && vfs.back().at0() != 0) || (!vgs.empty() && vgs.back().at0() != 0);
        if (!lc_ok) continue;
        UPoly res = resultant_y(fs, gs);
        check(!res.zero(), Errc::internal, "vanishing resultant for a coprime pair");
        out.value = res.ord();
        out.shear = c;
        return out;
    }
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip() {
        while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void err(const std::string& what) {
        fail(Errc::syntax_error, what + " at position " + std::to_string(i));
    }

    Int nat() {
        skip();
        if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i]))) err("expected a number");
        Int v = 0;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        return v;
    }

    BiPoly atom() {
        skip();
        if (i >= s.size()) err("unexpected end of input");
        BiPoly p;
        if (eat('(')) {
            p = expr();
            if (!eat(')')) err("expected ')'");
            return p;
        }
        char c = s[i];
        if (c == 'X' || c == 'x') {
            ++i;
            p.add_term(1, 0, Rat(1));
            return p;
        }
        if (c == 'Y' || c == 'y') {
            ++i;
            p.add_term(0, 1, Rat(1));
            return p;
        }
        if (isdigit(static_cast<unsigned char>(c))) {
            Int num = nat();
            Int den = 1;
            size_t save = i;
            if (eat('/')) {
                skip();
                if (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
                    den = nat();
                    if (den == 0) err("zero denominator");
                } else {
                    i = save; // '/' did not start a rational literal
                }
            }
            p.add_term(0, 0, Rat(num, den));
            return p;
        }
        err("unexpected character");
    }

    BiPoly factor() {
        BiPoly p = atom();
        skip();
        if (eat('^')) {
            Int e = nat();
            check(e >= 0 && e <= 512, Errc::syntax_error, "unreasonable exponent");
            p = bpow(p, e.convert_to<int>());
        }
        return p;
    }

    BiPoly term() {
        BiPoly p = factor();
        while (true) {
            skip();
            if (eat('*'))
                p = bmul(p, factor());
            else
                break;
        }
        return p;
    }

    BiPoly expr() {
        skip();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        BiPoly p = term();
        if (neg) p = bneg(p);
        while (true) {
            skip();
            if (eat('+'))
                p = badd(p, term());
            else if (eat('-'))
                p = bsub(p, term());
            else
                break;
        }
        return p;
    }
};

} // namespace

BiPoly parse_poly(const std::string& text) {
    Parser p(text);
    p.skip();
    if (p.i >= text.size()) fail(Errc::syntax_error, "empty input");
    BiPoly out = p.expr();
    p.skip();
    if (p.i != text.size()) p.err("trailing input");
    return out;
}

std::string print_poly(const BiPoly& f) {
    if (f.zero()) return "0";
    std::vector<std::pair<std::pair<int, int>, Rat>> terms(f.t.begin(), f.t.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first.second > b.first.second;
    });
    std::string out;
    bool first = true;
    for (const auto& [e, v] : terms) {
        Rat a = v;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        if (e.first > 0) mono += e.first == 1 ? "X" : "X^" + std::to_string(e.first);
        if (e.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += e.second == 1 ? "Y" : "Y^" + std::to_string(e.second);
        }
        if (mono.empty())
            out += rat_str(a);
        else if (a == 1)
            out += mono;
        else
            out += rat_str(a) + "*" + mono;
    }
    return out;
}

} // namespace eggers
