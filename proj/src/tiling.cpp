#include "subtile/tiling.hpp"

#include <algorithm>

#include "subtile/errors.hpp"

namespace subtile {

bool FiberSet::contains(const std::vector<std::int64_t>& idx) const {
    return std::binary_search(gammas.begin(), gammas.end(), idx);
}

void FiberSet::insert(const std::vector<std::int64_t>& idx) {
    auto it = std::lower_bound(gammas.begin(), gammas.end(), idx);
    if (it == gammas.end() || *it != idx) gammas.insert(it, idx);
}

namespace {

// Iterates the integer grid [lo_1,hi_1] x ... x [lo_d,hi_d] in lex order.
class IndexRange {
public:
    IndexRange(std::vector<std::int64_t> lo, std::vector<std::int64_t> hi)
        : lo_(std::move(lo)), hi_(std::move(hi)), cur_(lo_), done_(false) {
        for (std::size_t i = 0; i < lo_.size(); ++i)
            if (lo_[i] > hi_[i]) done_ = true;
    }

    bool done() const { return done_; }
    const std::vector<std::int64_t>& current() const { return cur_; }

    void advance() {
        for (std::size_t i = cur_.size(); i-- > 0;) {
            if (cur_[i] < hi_[i]) {
                ++cur_[i];
                for (std::size_t j = i + 1; j < cur_.size(); ++j) cur_[j] = lo_[j];
                return;
            }
        }
        done_ = true;
    }

private:
    std::vector<std::int64_t> lo_, hi_, cur_;
    bool done_;
};

RatVec lattice_value(const SeparableLattice& lat, const std::vector<std::int64_t>& idx) {
    RatVec v = RatVec::zero(lat.dim());
    for (int i = 0; i < lat.dim(); ++i)
        v[i] = lat.periods[static_cast<std::size_t>(i)] * Rat(idx[static_cast<std::size_t>(i)]);
    return v;
}

} // namespace

std::vector<LatticePoint> gamma_tilde(const BoxRegion& omega_region,
                                      const SeparableLattice& gamma) {
    if (omega_region.empty()) throw EmptyRegionError("gamma_tilde: region is empty");
    if (omega_region.dim() != gamma.dim())
        throw DimensionMismatchError("gamma_tilde: region and lattice dimensions differ");

    const BoxRegion q = fundamental_domain(gamma);
    const Box bb = bounding_box(omega_region);

    // (omega - p*k) can meet [0, p) only for k in a window around omega's
    // bounding box; widen by one index on each side and test exactly.
    std::vector<std::int64_t> lo(static_cast<std::size_t>(gamma.dim()));
    std::vector<std::int64_t> hi(static_cast<std::size_t>(gamma.dim()));
    for (int i = 0; i < gamma.dim(); ++i) {
        const Rat& p = gamma.periods[static_cast<std::size_t>(i)];
        lo[static_cast<std::size_t>(i)] = floor_int(bb.lo[i] / p) - 1;
        hi[static_cast<std::size_t>(i)] = ceil_int(bb.hi[i] / p) + 1;
    }

    std::vector<LatticePoint> found;
    for (IndexRange it(lo, hi); !it.done(); it.advance()) {
        const RatVec g = lattice_value(gamma, it.current());
        if (!intersect(translate(omega_region, -g), q).empty())
            found.emplace_back(gamma, it.current());
    }
    return found;
}

CellDecomposition decompose(const BoxRegion& omega, const SeparableLattice& gamma) {
    CellDecomposition dec;
    dec.lattice = gamma;
    dec.domain = fundamental_domain(gamma);
    dec.gamma_tilde = gamma_tilde(omega, gamma); // rejects empty omega

    // Overlay the translates one at a time; each overlay splits every current
    // stratum into the part that sees the new translate and the part that
    // does not.
    struct Stratum {
        BoxRegion region;
        FiberSet fiber;
    };
    std::vector<Stratum> strata{{dec.domain, {}}};
    for (const auto& gp : dec.gamma_tilde) {
        const BoxRegion piece = intersect(translate(omega, -gp.value()), dec.domain);
        std::vector<Stratum> next;
        next.reserve(strata.size() * 2);
        for (auto& s : strata) {
            BoxRegion inside = intersect(s.region, piece);
            BoxRegion outside = subtract(s.region, piece);
            if (!outside.empty()) next.push_back({std::move(outside), s.fiber});
            if (!inside.empty()) {
                FiberSet f = s.fiber;
                f.insert(gp.index);
                next.push_back({std::move(inside), std::move(f)});
            }
        }
        strata.swap(next);
    }

    dec.zero_cell = BoxRegion(gamma.dim());
    for (auto& s : strata) {
        if (s.fiber.empty()) {
            dec.zero_cell = region_union(dec.zero_cell, s.region);
        } else {
            Cell c;
            c.k = s.fiber.size();
            c.fiber = std::move(s.fiber);
            c.region = std::move(s.region);
            dec.cells.push_back(std::move(c));
        }
    }
    std::sort(dec.cells.begin(), dec.cells.end(),
              [](const Cell& a, const Cell& b) { return a.fiber < b.fiber; });

    dec.level = 0;
    for (const auto& c : dec.cells) dec.level = std::max(dec.level, c.k);
    return dec;
}

int subtiling_level(const CellDecomposition& dec) { return dec.level; }

bool is_exact_multitile(const CellDecomposition& dec, int ell) {
    if (!dec.zero_cell.empty()) return false;
    for (const auto& c : dec.cells)
        if (c.k != ell) return false;
    return true;
}

namespace {

// Candidate pool for completion: gamma_tilde in lex order, extended on demand
// by lattice indices in expanding sup-norm shells (lex within each shell).
class CandidatePool {
public:
    CandidatePool(const std::vector<LatticePoint>& gt, int dim) : dim_(dim) {
        for (const auto& g : gt) {
            order_.push_back(g.index);
            seen_.push_back(g.index);
        }
        std::sort(seen_.begin(), seen_.end());
    }

    void ensure_size(std::size_t n) {
        while (order_.size() < n) {
            std::vector<std::int64_t> lo(static_cast<std::size_t>(dim_), -shell_);
            std::vector<std::int64_t> hi(static_cast<std::size_t>(dim_), shell_);
            for (IndexRange it(lo, hi); !it.done(); it.advance()) {
                const auto& idx = it.current();
                std::int64_t norm = 0;
                for (auto v : idx) norm = std::max(norm, v < 0 ? -v : v);
                if (norm != shell_) continue;
                auto pos = std::lower_bound(seen_.begin(), seen_.end(), idx);
                if (pos != seen_.end() && *pos == idx) continue;
                order_.push_back(idx);
                seen_.insert(pos, idx);
            }
            ++shell_;
        }
    }

    // First `count` pool elements not already in `exclude`.
    std::vector<std::vector<std::int64_t>> pick(std::size_t count, const FiberSet& exclude) {
        std::vector<std::vector<std::int64_t>> out;
        std::size_t i = 0;
        while (out.size() < count) {
            ensure_size(i + 1);
            if (!exclude.contains(order_[i])) out.push_back(order_[i]);
            ++i;
        }
        return out;
    }

private:
    int dim_;
    std::int64_t shell_ = 0;
    std::vector<std::vector<std::int64_t>> order_;
    std::vector<std::vector<std::int64_t>> seen_; // sorted
};

} // namespace

BoxRegion complete_to_multitile(const BoxRegion& omega, const SeparableLattice& gamma,
                                int ell) {
    const CellDecomposition dec = decompose(omega, gamma);
    if (ell < dec.level)
        throw LevelExceededError("complete_to_multitile: requested level " +
                                 std::to_string(ell) + " is below subtiling level " +
                                 std::to_string(dec.level));

    CandidatePool pool(dec.gamma_tilde, gamma.dim());
    std::vector<Box> pieces;

    for (const auto& cell : dec.cells) {
        // Extend the fiber B to exactly ell translates.
        FiberSet extended = cell.fiber;
        for (auto& idx : pool.pick(static_cast<std::size_t>(ell - cell.k), cell.fiber))
            extended.insert(idx);
        for (const auto& idx : extended.gammas) {
            const BoxRegion moved = translate(cell.region, lattice_value(gamma, idx));
            pieces.insert(pieces.end(), moved.boxes.begin(), moved.boxes.end());
        }
    }

    if (!dec.zero_cell.empty()) {
        for (auto& idx : pool.pick(static_cast<std::size_t>(ell), FiberSet{})) {
            const BoxRegion moved = translate(dec.zero_cell, lattice_value(gamma, idx));
            pieces.insert(pieces.end(), moved.boxes.begin(), moved.boxes.end());
        }
    }

    return BoxRegion::canonicalize(gamma.dim(), pieces);
}

std::pair<int, FiberSet> multiplicity_at(const CellDecomposition& dec, const RatVec& x) {
    const RatVec r = reduce_mod(x, dec.lattice).first;
    for (const auto& c : dec.cells)
        if (contains_point(c.region, r)) return {c.k, c.fiber};
    return {0, FiberSet{}};
}

} // namespace subtile
