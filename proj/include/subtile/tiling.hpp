#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "subtile/lattice.hpp"
#include "subtile/region.hpp"

namespace subtile {

// A finite subset of the lattice, stored as sorted integer index vectors.
struct FiberSet {
    std::vector<std::vector<std::int64_t>> gammas; // strictly increasing, lex

    int size() const { return static_cast<int>(gammas.size()); }
    bool empty() const { return gammas.empty(); }
    bool contains(const std::vector<std::int64_t>& idx) const;
    void insert(const std::vector<std::int64_t>& idx);

    bool operator==(const FiberSet& o) const { return gammas == o.gammas; }
    bool operator<(const FiberSet& o) const { return gammas < o.gammas; }
};

// Maximal subset of the fundamental domain on which the translate pattern of
// the region is constant: every point of `region` sees exactly the translates
// in `fiber` land inside the region.
struct Cell {
    BoxRegion region;
    FiberSet fiber;
    int k = 0;
};

// Exact partition of the fundamental domain into constant-multiplicity cells.
// zero_cell collects the points no translate reaches; level is the maximum
// multiplicity over positive-measure cells (the essential supremum; with
// half-open rational boxes there is no measure-zero exceptional set).
struct CellDecomposition {
    SeparableLattice lattice; // the translating lattice (Gamma)
    BoxRegion domain;         // its canonical fundamental domain
    std::vector<LatticePoint> gamma_tilde;
    std::vector<Cell> cells;  // k >= 1, sorted by fiber
    BoxRegion zero_cell;
    int level = 0;
};

// All lattice points whose translate of the fundamental domain meets the
// region with positive measure. Finite because the region is bounded.
std::vector<LatticePoint> gamma_tilde(const BoxRegion& omega_region,
                                      const SeparableLattice& gamma);

CellDecomposition decompose(const BoxRegion& omega, const SeparableLattice& gamma);

int subtiling_level(const CellDecomposition& dec);

// True iff every point of the fundamental domain has multiplicity exactly ell.
bool is_exact_multitile(const CellDecomposition& dec, int ell);

// Grows omega to a bounded superset that tiles exactly ell-fold. Candidate
// translates are taken from gamma_tilde first (lex-smallest available), then
// from an expanding enumeration of the lattice when gamma_tilde runs short.
// Throws LevelExceededError when ell is below the subtiling level.
BoxRegion complete_to_multitile(const BoxRegion& omega, const SeparableLattice& gamma,
                                int ell);

// Multiplicity and fiber at the reduction of x into the fundamental domain.
std::pair<int, FiberSet> multiplicity_at(const CellDecomposition& dec, const RatVec& x);

} // namespace subtile
