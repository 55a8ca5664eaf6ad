#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "subtile/rational.hpp"

namespace subtile {

struct Box;
struct BoxRegion;

// Full-rank lattice diag(p) * Z^d with positive rational periods. Keeping the
// basis diagonal is what lets every set-theoretic statement downstream stay in
// exact rational arithmetic.
struct SeparableLattice {
    std::vector<Rat> periods;

    SeparableLattice() = default;
    explicit SeparableLattice(std::vector<Rat> p);
    SeparableLattice(std::initializer_list<Rat> p)
        : SeparableLattice(std::vector<Rat>(p)) {}

    int dim() const { return static_cast<int>(periods.size()); }

    bool operator==(const SeparableLattice& o) const { return periods == o.periods; }
    bool operator!=(const SeparableLattice& o) const { return !(*this == o); }
};

// A single lattice element diag(p) * k, stored by its integer index.
struct LatticePoint {
    SeparableLattice lattice;
    std::vector<std::int64_t> index;

    LatticePoint() = default;
    LatticePoint(SeparableLattice lat, std::vector<std::int64_t> idx);

    int dim() const { return static_cast<int>(index.size()); }
    RatVec value() const;

    bool operator==(const LatticePoint& o) const { return index == o.index; }
    bool operator<(const LatticePoint& o) const { return index < o.index; }
};

// Dual lattice under e^{2*pi*i*<.,.>}: componentwise reciprocal periods.
// Involution, exactly.
SeparableLattice annihilator(const SeparableLattice& lat);

// Canonical half-open box prod_i [0, p_i).
BoxRegion fundamental_domain(const SeparableLattice& lat);

// Product of the periods, exact.
Rat covolume(const SeparableLattice& lat);

// Splits x = r + gamma with r the unique representative in the canonical
// fundamental domain.
std::pair<RatVec, LatticePoint> reduce_mod(const RatVec& x, const SeparableLattice& lat);

// e^{2*pi*i*<a, gamma>}. The phase is accumulated as an exact rational and
// reduced mod 1 before the single transcendental evaluation, so rationally
// dependent inputs yield bitwise identical characters.
std::complex<double> character(const RatVec& a, const LatticePoint& gamma);

// Same pairing for a plain rational point (used by tests and the optimizer).
std::complex<double> unit_phase(const Rat& phase_turns);

} // namespace subtile
