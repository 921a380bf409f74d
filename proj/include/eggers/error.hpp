#pragma once

#include <stdexcept>
#include <string>

namespace eggers {

enum class Errc {
    invalid_semigroup,
    invalid_char_data,
    invalid_gen_char,
    prefix_not_below_diameter,
    unsupported_line,
    empty_ball,
    ball_outside_family,
    nonsingular_germ,
    malformed_tree,
    not_smooth,
    invalid_contacts,
    branch_of_germ,
    ball_not_eligible,
    empty_eggers,
    syntax_error,
    zero_polynomial,
    face_not_on_polygon,
    irrational_track_root,
    not_reduced,
    unsupported_branch_shape,
    mismatch,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc c, std::string msg) : std::runtime_error(std::move(msg)), code_(c) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void check(bool ok, Errc c, const std::string& msg) {
    if (!ok) fail(c, msg);
}

const char* errc_name(Errc c);

} // namespace eggers
