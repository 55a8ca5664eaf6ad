#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "subtile/errors.hpp"

namespace subtile {

// Exact scalar used everywhere set arithmetic or phase arithmetic must be
// decidable. Inputs to the toolkit have small denominators (scene files cap
// them at two digits, shift search at a configurable bound), so a reduced
// int64 rational has ample headroom.
using Rat = boost::rational<std::int64_t>;

inline Rat rat(std::int64_t num, std::int64_t den = 1) { return Rat(num, den); }

inline double to_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Largest integer n with n <= r.
inline std::int64_t floor_int(const Rat& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

inline std::int64_t ceil_int(const Rat& r) { return -floor_int(-r); }

// Fractional part in [0, 1).
inline Rat mod_one(const Rat& r) { return r - Rat(floor_int(r)); }

// "a/b" or "a"; anything else (floats in particular) is rejected.
Rat parse_rational(const std::string& text);

std::string to_string(const Rat& r);

// Coordinate vector with exact entries; points of the dual group and shifts.
struct RatVec {
    std::vector<Rat> coords;

    RatVec() = default;
    explicit RatVec(std::vector<Rat> c) : coords(std::move(c)) {}
    RatVec(std::initializer_list<Rat> c) : coords(c) {}

    int dim() const { return static_cast<int>(coords.size()); }
    Rat& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }
    const Rat& operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }

    bool operator==(const RatVec& o) const { return coords == o.coords; }
    bool operator!=(const RatVec& o) const { return !(*this == o); }
    bool operator<(const RatVec& o) const { return coords < o.coords; }

    RatVec operator+(const RatVec& o) const;
    RatVec operator-(const RatVec& o) const;
    RatVec operator-() const;

    static RatVec zero(int dim) { return RatVec(std::vector<Rat>(static_cast<std::size_t>(dim), Rat(0))); }
};

std::string to_string(const RatVec& v);

} // namespace subtile
