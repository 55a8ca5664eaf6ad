#include "subtile/lattice.hpp"

#include <cmath>

#include "subtile/errors.hpp"
#include "subtile/region.hpp"

namespace subtile {

SeparableLattice::SeparableLattice(std::vector<Rat> p) : periods(std::move(p)) {
    if (periods.empty()) throw Error("lattice needs at least one period");
    for (const auto& pi : periods)
        if (pi <= Rat(0)) throw Error("lattice periods must be positive");
}

LatticePoint::LatticePoint(SeparableLattice lat, std::vector<std::int64_t> idx)
    : lattice(std::move(lat)), index(std::move(idx)) {
    if (lattice.dim() != static_cast<int>(index.size()))
        throw DimensionMismatchError("lattice point index length differs from lattice dim");
}

RatVec LatticePoint::value() const {
    RatVec v = RatVec::zero(dim());
    for (int i = 0; i < dim(); ++i)
        v[i] = lattice.periods[static_cast<std::size_t>(i)] * Rat(index[static_cast<std::size_t>(i)]);
    return v;
}

SeparableLattice annihilator(const SeparableLattice& lat) {
    std::vector<Rat> recip;
    recip.reserve(lat.periods.size());
    for (const auto& p : lat.periods) recip.push_back(Rat(1) / p);
    return SeparableLattice(std::move(recip));
}

BoxRegion fundamental_domain(const SeparableLattice& lat) {
    RatVec lo = RatVec::zero(lat.dim());
    RatVec hi = RatVec(lat.periods);
    return BoxRegion::from_box(Box{lo, hi});
}

Rat covolume(const SeparableLattice& lat) {
    Rat v(1);
    for (const auto& p : lat.periods) v *= p;
    return v;
}

std::pair<RatVec, LatticePoint> reduce_mod(const RatVec& x, const SeparableLattice& lat) {
    if (x.dim() != lat.dim())
        throw DimensionMismatchError("reduce_mod: point and lattice dimensions differ");
    RatVec rep = RatVec::zero(lat.dim());
    std::vector<std::int64_t> idx(static_cast<std::size_t>(lat.dim()));
    for (int i = 0; i < lat.dim(); ++i) {
        const Rat& p = lat.periods[static_cast<std::size_t>(i)];
        const std::int64_t k = floor_int(x[i] / p);
        idx[static_cast<std::size_t>(i)] = k;
        rep[i] = x[i] - Rat(k) * p;
    }
    return {rep, LatticePoint(lat, std::move(idx))};
}

std::complex<double> unit_phase(const Rat& phase_turns) {
    const Rat t = mod_one(phase_turns);
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::polar(1.0, two_pi * to_double(t));
}

std::complex<double> character(const RatVec& a, const LatticePoint& gamma) {
    if (a.dim() != gamma.dim())
        throw DimensionMismatchError("character: dimensions differ");
    Rat phase(0);
    for (int i = 0; i < a.dim(); ++i)
        phase += a[i] * gamma.lattice.periods[static_cast<std::size_t>(i)] *
                 Rat(gamma.index[static_cast<std::size_t>(i)]);
    return unit_phase(phase);
}

} // namespace subtile
