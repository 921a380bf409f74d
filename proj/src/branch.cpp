#include "eggers/branch.hpp"

#include <algorithm>
#include <numeric>

namespace eggers {

namespace {

Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

Int lcm_int(const Int& a, const Int& b) { return a / gcd_int(a, b) * b; }

} // namespace

bool validate_semigroup(const SemigroupSeq& s) {
    const auto& b = s.betas;
    if (b.empty()) return false;
    for (const auto& x : b)
        if (x <= 0) return false;
    for (size_t i = 1; i < b.size(); ++i)
        if (b[i] <= b[i - 1]) return false;
    if (b.size() == 1) return b[0] == 1;
    if (b[0] < 2) return false;
    // running GCDs must strictly decrease down to 1
    std::vector<Int> e(b.size());
    e[0] = b[0];
    for (size_t i = 1; i < b.size(); ++i) {
        e[i] = gcd_int(e[i - 1], b[i]);
        if (e[i] == e[i - 1]) return false; // n_i = 1: not minimal
    }
    if (e.back() != 1) return false;
    // n_k b_k < b_{k+1} for k = 1..g-1
    for (size_t k = 1; k + 1 < b.size(); ++k) {
        Int nk = e[k - 1] / e[k];
        if (nk * b[k] >= b[k + 1]) return false;
    }
    return true;
}

CharData char_from_semigroup(const SemigroupSeq& s) {
    check(validate_semigroup(s), Errc::invalid_semigroup, "invalid semigroup generator sequence");
    const auto& b = s.betas;
    std::vector<Rat> contacts;
    Int e = b[0];
    for (size_t k = 1; k < b.size(); ++k) {
        contacts.emplace_back(Rat(e * b[k], b[0] * b[0]));
        e = gcd_int(e, b[k]);
    }
    return char_data_from(b[0], std::move(contacts));
}

CharData char_data_from(Int ord, std::vector<Rat> contacts) {
    check(ord >= 1, Errc::invalid_char_data, "order must be positive");
    CharData c;
    c.ord = ord;
    c.contacts = std::move(contacts);
    c.nu_seq.assign(1, Int(1));
    Rat prev(1);
    for (size_t k = 0; k < c.contacts.size(); ++k) {
        const Rat& d = c.contacts[k];
        check(d > prev, Errc::invalid_char_data, "characteristic contacts must increase strictly and exceed 1");
        prev = d;
        const Int& nu = c.nu_seq.back();
        // minimal n >= 1 with d * nu^2 * n integral
        Int q = rat_den(d);
        Int n = q / gcd_int(q, nu * nu);
        check(n >= 2, Errc::invalid_char_data, "contact denominator already accounted for by previous pairs");
        c.n_seq.push_back(n);
        c.nu_seq.push_back(nu * n);
    }
    check(c.nu_seq.back() == c.ord, Errc::invalid_char_data, "product of n_k must equal the order");
    return c;
}

bool validate_char(const Int& ord, const std::vector<Rat>& contacts) {
    try {
        char_data_from(ord, contacts);
        return true;
    } catch (const Error&) {
        return false;
    }
}

bool validate_char(const CharData& c) {
    try {
        CharData r = char_data_from(c.ord, c.contacts);
        return r.n_seq == c.n_seq && r.nu_seq == c.nu_seq;
    } catch (const Error&) {
        return false;
    }
}

SemigroupSeq semigroup_from_char(const CharData& c) {
    check(validate_char(c), Errc::invalid_char_data, "invalid characteristic data");
    SemigroupSeq s;
    s.betas.push_back(c.ord);
    for (size_t k = 0; k < c.contacts.size(); ++k) {
        Rat bk = c.contacts[k] * c.ord * c.nu_seq[k];
        check(rat_is_integer(bk), Errc::invalid_char_data, "non-integral semigroup generator");
        s.betas.push_back(rat_num(bk));
    }
    check(validate_semigroup(s), Errc::invalid_char_data, "reconstructed generators not minimal");
    return s;
}

Rat contact_exponent(std::span<const Rat> char_prefix, std::span<const Int> n_prefix, const Rat& d) {
    check(char_prefix.size() == n_prefix.size(), Errc::internal, "prefix length mismatch");
    Rat prev(0);
    for (const Rat& x : char_prefix) {
        check(x > prev, Errc::prefix_not_below_diameter, "prefix must increase strictly");
        check(x < d, Errc::prefix_not_below_diameter, "prefix contact not below the diameter");
        prev = x;
    }
    if (char_prefix.empty()) return d;
    Rat acc = char_prefix[0];
    Rat nu(1);
    for (size_t k = 0; k < char_prefix.size(); ++k) {
        nu *= Rat(n_prefix[k]);
        const Rat& next = k + 1 < char_prefix.size() ? char_prefix[k + 1] : d;
        acc += nu * (next - char_prefix[k]);
    }
    return acc;
}

bool validate_gen_char(const GenCharSeq& g) {
    const auto& b = g.b;
    if (b.empty()) return false;
    for (const auto& x : b)
        if (x <= 0) return false;
    if (b[0] == 1) return b.size() == 1;
    if (b.size() < 2) return false;
    for (size_t i = 2; i < b.size(); ++i)
        if (b[i] <= b[i - 1]) return false;
    Int e = b[0];
    for (size_t i = 1; i < b.size(); ++i) {
        Int e2 = gcd_int(e, b[i]);
        if (e2 == e) return false; // b_i is not a characteristic position
        e = e2;
    }
    return e == 1;
}

GenCharSeq gen_char_from_exponents(std::span<const Rat> exponents) {
    Int N = 1;
    Rat prev(0);
    for (const Rat& e : exponents) {
        check(e > prev, Errc::internal, "exponents must be positive and strictly increasing");
        prev = e;
        N = lcm_int(N, rat_den(e));
    }
    GenCharSeq g;
    g.b.push_back(N);
    if (N == 1) return g;
    Int run = N;
    for (const Rat& e : exponents) {
        Rat v = e * N;
        Int vi = rat_num(v);
        Int run2 = gcd_int(run, vi);
        if (run2 < run) {
            g.b.push_back(vi);
            run = run2;
        }
    }
    check(run == 1, Errc::internal, "exponent denominators do not realize the full cycle");
    return g;
}

CharDiagram char_diagram(const GenCharSeq& g) {
    check(validate_gen_char(g), Errc::invalid_gen_char, "invalid generalized characteristic sequence");
    const auto& b = g.b;
    CharDiagram d;
    d.ord = order_of_gen_char(g);
    std::vector<std::pair<Rat, Rat>> verts;
    verts.emplace_back(Rat(0), Rat(b[0]));
    Int e = b[0];
    for (size_t k = 1; k < b.size(); ++k) {
        Int e2 = gcd_int(e, b[k]);
        Rat height(e - e2);
        Rat width = Rat(b[k], b[0]) * height;
        verts.emplace_back(verts.back().first + width, verts.back().second - height);
        e = e2;
    }
    for (auto& [x, y] : verts) {
        x /= d.ord;
        y /= d.ord;
    }
    d.vertices = std::move(verts);
    return d;
}

Rat CharDiagram::incl(size_t k) const {
    check(k + 1 < vertices.size(), Errc::internal, "face index out of range");
    return (vertices[k + 1].first - vertices[k].first) / (vertices[k].second - vertices[k + 1].second);
}

Rat CharDiagram::intercept(size_t k) const { return vertices[k].first + incl(k) * vertices[k].second; }

Rat alpha_of_kappa(const CharDiagram& d, const Rat& kappa) {
    check(kappa > 0, Errc::unsupported_line, "inclination must be positive");
    Rat best = d.vertices[0].first + kappa * d.vertices[0].second;
    for (size_t i = 1; i < d.vertices.size(); ++i)
        best = std::min(best, Rat(d.vertices[i].first + kappa * d.vertices[i].second));
    return best;
}

Rat alpha_of_kappa_inf(const CharDiagram& d) { return d.vertices.back().first; }

Rat kappa_of_alpha(const CharDiagram& d, const Rat& alpha) {
    size_t nf = d.face_count();
    for (size_t k = 0; k < d.vertices.size(); ++k) {
        const auto& [x, y] = d.vertices[k];
        Rat kappa = (alpha - x) / y;
        if (kappa <= 0) continue;
        if (k > 0 && kappa < d.incl(k - 1)) continue;
        if (k < nf && kappa > d.incl(k)) continue;
        return kappa;
    }
    fail(Errc::unsupported_line, "no supporting line meets the axis at " + rat_str(alpha));
}

Rat contact_with_x(const GenCharSeq& g) {
    if (g.b.size() < 2 || g.b[0] < g.b[1]) return Rat(1);
    return Rat(g.b[0], g.b[1]);
}

Int order_of_gen_char(const GenCharSeq& g) {
    if (g.b.size() < 2) return 1;
    return std::min(g.b[0], g.b[1]);
}

CharData gen_char_to_char(const GenCharSeq& g) {
    check(validate_gen_char(g), Errc::invalid_gen_char, "invalid generalized characteristic sequence");
    CharDiagram diag = char_diagram(g);
    Rat d = diag.dist_to_vertical();
    check(d == contact_with_x(g), Errc::internal, "diagram apex disagrees with the contact rule");
    std::vector<Rat> contacts;
    size_t first = (d > 1 && rat_is_integer(d)) ? 1 : 0; // tangent, non-maximal contact: drop the first face
    for (size_t k = first; k < diag.face_count(); ++k) {
        Rat a = diag.intercept(k);
        contacts.push_back(d == 1 ? a : d * a);
    }
    CharData c;
    try {
        c = char_data_from(order_of_gen_char(g), std::move(contacts));
    } catch (const Error& e) {
        fail(Errc::invalid_gen_char, std::string("inconsistent characteristic data: ") + e.what());
    }
    // b0 must match d(f,X) * n1...ng
    check(Rat(g.b[0]) == d * c.nu_seq.back(), Errc::invalid_gen_char,
          "cycle size does not match contact times the n-sequence product");
    return c;
}

} // namespace eggers
