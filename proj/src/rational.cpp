#include "eggers/rational.hpp"

namespace eggers {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_semigroup: return "InvalidSemigroup";
        case Errc::invalid_char_data: return "InvalidCharData";
        case Errc::invalid_gen_char: return "InvalidGenChar";
        case Errc::prefix_not_below_diameter: return "PrefixNotBelowDiameter";
        case Errc::unsupported_line: return "UnsupportedLine";
        case Errc::empty_ball: return "EmptyBall";
        case Errc::ball_outside_family: return "BallOutsideFamily";
        case Errc::nonsingular_germ: return "NonsingularGerm";
        case Errc::malformed_tree: return "MalformedTree";
        case Errc::not_smooth: return "NotSmooth";
        case Errc::invalid_contacts: return "InvalidContacts";
        case Errc::branch_of_germ: return "BranchOfGerm";
        case Errc::ball_not_eligible: return "BallNotEligible";
        case Errc::empty_eggers: return "EmptyEggers";
        case Errc::syntax_error: return "SyntaxError";
        case Errc::zero_polynomial: return "ZeroPolynomial";
        case Errc::face_not_on_polygon: return "FaceNotOnPolygon";
        case Errc::irrational_track_root: return "IrrationalTrackRoot";
        case Errc::not_reduced: return "NotReduced";
        case Errc::unsupported_branch_shape: return "UnsupportedBranchShape";
        case Errc::mismatch: return "MismatchReport";
        case Errc::internal: return "InternalError";
    }
    return "Error";
}

Int rat_floor(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int f = n / d;
    if (n < 0 && f * d != n) --f;
    return f;
}

Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

bool rat_is_integer(const Rat& q) { return rat_den(q) == 1; }

std::string rat_str(const Rat& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) s += "/" + rat_den(q).str();
    return s;
}

std::optional<Rat> rat_parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = s[pos] == '-';
        ++pos;
    }
    auto digits = [&](Int& out) -> bool {
        if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos]))) return false;
        Int v = 0;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        out = v;
        return true;
    };
    Int num, den = 1;
    if (!digits(num)) return std::nullopt;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        if (!digits(den) || den == 0) return std::nullopt;
    }
    if (pos != s.size()) return std::nullopt;
    Rat q(num, den);
    return neg ? Rat(-q) : q;
}

std::string ext_str(const ExtRat& e) { return e.is_inf() ? "inf" : rat_str(e.value()); }

std::optional<ExtRat> ext_parse(const std::string& s) {
    if (s == "inf") return ExtRat::infinity();
    auto q = rat_parse(s);
    if (!q) return std::nullopt;
    return ExtRat(*q);
}

} // namespace eggers
