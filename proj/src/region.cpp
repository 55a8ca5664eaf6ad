#include "subtile/region.hpp"

#include <algorithm>

#include "subtile/errors.hpp"

namespace subtile {

bool Box::empty() const {
    for (int i = 0; i < dim(); ++i)
        if (!(lo[i] < hi[i])) return true;
    return false;
}

Rat Box::volume() const {
    Rat v(1);
    for (int i = 0; i < dim(); ++i) v *= hi[i] - lo[i];
    return v;
}

bool Box::contains(const RatVec& x) const {
    for (int i = 0; i < dim(); ++i)
        if (x[i] < lo[i] || !(x[i] < hi[i])) return false;
    return true;
}

namespace {

// One node of the sweep: the slab [t0, t1) on the current axis together with
// the canonical cross-section over the remaining axes.
struct Slab {
    Rat t0, t1;
    std::vector<Box> cross; // boxes over axes (axis+1 .. d-1); empty dim at last axis
};

// Canonicalizes the union of `boxes` restricted to axes [axis, d). Boxes are
// given in full dimension; only coordinates >= axis are consulted. Returns
// boxes of dimension d - axis.
std::vector<Box> sweep(const std::vector<Box>& boxes, int axis, int d) {
    std::vector<Box> out;
    if (boxes.empty()) return out;

    if (axis == d - 1) {
        // Base case: merge 1-d intervals.
        std::vector<std::pair<Rat, Rat>> iv;
        iv.reserve(boxes.size());
        for (const auto& b : boxes) iv.emplace_back(b.lo[axis], b.hi[axis]);
        std::sort(iv.begin(), iv.end());
        Rat lo = iv[0].first, hi = iv[0].second;
        auto flush = [&out](const Rat& a, const Rat& b) {
            out.push_back(Box{RatVec{a}, RatVec{b}});
        };
        for (std::size_t i = 1; i < iv.size(); ++i) {
            if (iv[i].first > hi) {
                flush(lo, hi);
                lo = iv[i].first;
                hi = iv[i].second;
            } else {
                hi = std::max(hi, iv[i].second);
            }
        }
        flush(lo, hi);
        return out;
    }

    // Breakpoints partition the axis so that every input box either covers a
    // slab entirely or misses it.
    std::vector<Rat> cuts;
    cuts.reserve(2 * boxes.size());
    for (const auto& b : boxes) {
        cuts.push_back(b.lo[axis]);
        cuts.push_back(b.hi[axis]);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Slab> slabs;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const Rat& t0 = cuts[s];
        const Rat& t1 = cuts[s + 1];
        std::vector<Box> active;
        for (const auto& b : boxes)
            if (b.lo[axis] <= t0 && b.hi[axis] >= t1) active.push_back(b);
        if (active.empty()) continue;
        slabs.push_back(Slab{t0, t1, sweep(active, axis + 1, d)});
    }

    // Greedy merge of adjacent slabs with identical cross-sections.
    std::vector<Slab> merged;
    for (auto& sl : slabs) {
        if (!merged.empty() && merged.back().t1 == sl.t0 && merged.back().cross == sl.cross)
            merged.back().t1 = sl.t1;
        else
            merged.push_back(std::move(sl));
    }

    const int sub = d - axis;
    for (const auto& sl : merged) {
        for (const auto& c : sl.cross) {
            Box b;
            b.lo.coords.reserve(static_cast<std::size_t>(sub));
            b.hi.coords.reserve(static_cast<std::size_t>(sub));
            b.lo.coords.push_back(sl.t0);
            b.hi.coords.push_back(sl.t1);
            b.lo.coords.insert(b.lo.coords.end(), c.lo.coords.begin(), c.lo.coords.end());
            b.hi.coords.insert(b.hi.coords.end(), c.hi.coords.begin(), c.hi.coords.end());
            out.push_back(std::move(b));
        }
    }
    return out;
}

void check_dims(const BoxRegion& a, const BoxRegion& b, const char* op) {
    if (a.dim() != b.dim())
        throw DimensionMismatchError(std::string(op) + ": region dimensions differ");
}

// Pieces of `a` not covered by `b`; `a` and `b` must overlap or the caller
// handles the trivial case. Appends to `out`.
void box_minus_box(const Box& a, const Box& b, std::vector<Box>& out) {
    Box cur = a;
    for (int i = 0; i < a.dim(); ++i) {
        if (b.lo[i] > cur.lo[i]) {
            Box piece = cur;
            piece.hi[i] = b.lo[i];
            if (!piece.empty()) out.push_back(piece);
            cur.lo[i] = b.lo[i];
        }
        if (b.hi[i] < cur.hi[i]) {
            Box piece = cur;
            piece.lo[i] = b.hi[i];
            if (!piece.empty()) out.push_back(piece);
            cur.hi[i] = b.hi[i];
        }
    }
    // cur is now a ∩ b and is dropped.
}

bool boxes_overlap(const Box& a, const Box& b) {
    for (int i = 0; i < a.dim(); ++i)
        if (!(a.lo[i] < b.hi[i] && b.lo[i] < a.hi[i])) return false;
    return true;
}

} // namespace

BoxRegion BoxRegion::from_box(const Box& b) {
    return canonicalize(b.dim(), {b});
}

BoxRegion BoxRegion::canonicalize(int dim, const std::vector<Box>& input) {
    if (dim <= 0) throw Error("region dimension must be positive");
    std::vector<Box> kept;
    kept.reserve(input.size());
    for (const auto& b : input) {
        if (b.lo.dim() != dim || b.hi.dim() != dim)
            throw DimensionMismatchError("canonicalize: box dimension differs from region dimension");
        if (!b.empty()) kept.push_back(b);
    }
    BoxRegion r(dim);
    r.boxes = sweep(kept, 0, dim);
    return r;
}

Rat measure(const BoxRegion& r) {
    Rat m(0);
    for (const auto& b : r.boxes) m += b.volume();
    return m;
}

BoxRegion translate(const BoxRegion& r, const RatVec& v) {
    if (r.dim() != v.dim())
        throw DimensionMismatchError("translate: vector dimension differs from region dimension");
    BoxRegion out(r.dim());
    out.boxes.reserve(r.boxes.size());
    // A rigid shift preserves canonical form.
    for (const auto& b : r.boxes) out.boxes.push_back(Box{b.lo + v, b.hi + v});
    return out;
}

BoxRegion intersect(const BoxRegion& a, const BoxRegion& b) {
    check_dims(a, b, "intersect");
    std::vector<Box> pieces;
    for (const auto& x : a.boxes) {
        for (const auto& y : b.boxes) {
            Box c;
            c.lo = x.lo;
            c.hi = x.hi;
            for (int i = 0; i < a.dim(); ++i) {
                c.lo[i] = std::max(c.lo[i], y.lo[i]);
                c.hi[i] = std::min(c.hi[i], y.hi[i]);
            }
            if (!c.empty()) pieces.push_back(std::move(c));
        }
    }
    return BoxRegion::canonicalize(a.dim(), pieces);
}

BoxRegion subtract(const BoxRegion& a, const BoxRegion& b) {
    check_dims(a, b, "subtract");
    std::vector<Box> pieces = a.boxes;
    for (const auto& y : b.boxes) {
        std::vector<Box> next;
        for (const auto& x : pieces) {
            if (boxes_overlap(x, y))
                box_minus_box(x, y, next);
            else
                next.push_back(x);
        }
        pieces.swap(next);
    }
    return BoxRegion::canonicalize(a.dim(), pieces);
}

BoxRegion region_union(const BoxRegion& a, const BoxRegion& b) {
    check_dims(a, b, "union");
    std::vector<Box> all = a.boxes;
    all.insert(all.end(), b.boxes.begin(), b.boxes.end());
    return BoxRegion::canonicalize(a.dim(), all);
}

bool contains_point(const BoxRegion& r, const RatVec& x) {
    if (r.dim() != x.dim())
        throw DimensionMismatchError("contains_point: dimensions differ");
    for (const auto& b : r.boxes)
        if (b.contains(x)) return true;
    return false;
}

bool contains_region(const BoxRegion& outer, const BoxRegion& inner) {
    return subtract(inner, outer).empty();
}

Box bounding_box(const BoxRegion& r) {
    if (r.empty()) throw EmptyRegionError("bounding_box of empty region");
    Box bb = r.boxes[0];
    for (const auto& b : r.boxes) {
        for (int i = 0; i < r.dim(); ++i) {
            bb.lo[i] = std::min(bb.lo[i], b.lo[i]);
            bb.hi[i] = std::max(bb.hi[i], b.hi[i]);
        }
    }
    return bb;
}

std::string to_string(const Box& b) {
    std::string s;
    for (int i = 0; i < b.dim(); ++i) {
        if (i) s += "x";
        s += "[" + to_string(b.lo[i]) + "," + to_string(b.hi[i]) + ")";
    }
    return s;
}

std::string to_string(const BoxRegion& r) {
    if (r.empty()) return "{}";
    std::string s = "{";
    for (std::size_t i = 0; i < r.boxes.size(); ++i) {
        if (i) s += " u ";
        s += to_string(r.boxes[i]);
    }
    s += "}";
    return s;
}

} // namespace subtile
