#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>

#include "eggers/error.hpp"

namespace eggers {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

/// Largest integer <= q.
Int rat_floor(const Rat& q);
/// Smallest integer >= q.
Int rat_ceil(const Rat& q);

bool rat_is_integer(const Rat& q);

/// Canonical text form: "p/q", or just "p" when q = 1.
std::string rat_str(const Rat& q);

/// Parses "p", "p/q" or "-p/q". Returns nullopt on malformed input.
std::optional<Rat> rat_parse(const std::string& s);

/// A contact value: a rational >= some bound, or +infinity (coincident branches).
class ExtRat {
public:
    ExtRat() : inf_(false), v_(0) {}
    ExtRat(Rat v) : inf_(false), v_(std::move(v)) {}
    ExtRat(int v) : inf_(false), v_(v) {}
    static ExtRat infinity() {
        ExtRat e;
        e.inf_ = true;
        return e;
    }

    bool is_inf() const { return inf_; }
    const Rat& value() const {
        check(!inf_, Errc::internal, "finite value requested from infinite contact");
        return v_;
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ && b.inf_) return std::strong_ordering::equal;
        if (a.inf_) return std::strong_ordering::greater;
        if (b.inf_) return std::strong_ordering::less;
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    bool inf_;
    Rat v_;
};

inline ExtRat ext_min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }
inline ExtRat ext_max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }

std::string ext_str(const ExtRat& e);
std::optional<ExtRat> ext_parse(const std::string& s);

} // namespace eggers
