#pragma once

#include <string>
#include <vector>

#include "subtile/rational.hpp"

namespace subtile {

// Half-open box prod_i [lo_i, hi_i). Degenerate boxes (lo_i >= hi_i on some
// axis) denote the empty set and are never stored in a region.
struct Box {
    RatVec lo;
    RatVec hi;

    int dim() const { return lo.dim(); }
    bool empty() const;
    Rat volume() const;
    bool contains(const RatVec& x) const;

    bool operator==(const Box& o) const { return lo == o.lo && hi == o.hi; }
};

// Finite disjoint union of half-open rational boxes in canonical form:
// axis-sweep refinement with axis 0 outermost, then greedy merge, boxes
// sorted lexicographically by lo. Canonical form is unique for a point set,
// so operator== decides set equality.
//
// All arithmetic in this module is exact; floating point never enters.
struct BoxRegion {
    int dim_ = 0;
    std::vector<Box> boxes;

    BoxRegion() = default;
    explicit BoxRegion(int d) : dim_(d) {}

    int dim() const { return dim_; }
    bool empty() const { return boxes.empty(); }
    std::size_t box_count() const { return boxes.size(); }

    static BoxRegion from_box(const Box& b);
    static BoxRegion canonicalize(int dim, const std::vector<Box>& input);

    bool operator==(const BoxRegion& o) const { return dim_ == o.dim_ && boxes == o.boxes; }
    bool operator!=(const BoxRegion& o) const { return !(*this == o); }
};

Rat measure(const BoxRegion& r);

BoxRegion translate(const BoxRegion& r, const RatVec& v);

BoxRegion intersect(const BoxRegion& a, const BoxRegion& b);

BoxRegion subtract(const BoxRegion& a, const BoxRegion& b);

BoxRegion region_union(const BoxRegion& a, const BoxRegion& b);

bool contains_point(const BoxRegion& r, const RatVec& x);

// True iff inner is a subset of outer (exact).
bool contains_region(const BoxRegion& outer, const BoxRegion& inner);

// Smallest box containing r; EmptyRegionError on empty input.
Box bounding_box(const BoxRegion& r);

std::string to_string(const Box& b);
std::string to_string(const BoxRegion& r);

} // namespace subtile
