#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "subtile/errors.hpp"
#include "subtile/region.hpp"

using namespace subtile;

namespace {

Box box1(const Rat& lo, const Rat& hi) { return Box{RatVec{lo}, RatVec{hi}}; }

Box box2(const Rat& lx, const Rat& ly, const Rat& hx, const Rat& hy) {
    return Box{RatVec{lx, ly}, RatVec{hx, hy}};
}

} // namespace

TEST_CASE("degenerate boxes vanish under canonicalization") {
    const BoxRegion r = BoxRegion::canonicalize(1, {box1(Rat(1), Rat(1)), box1(Rat(2), Rat(1))});
    CHECK(r.empty());
    CHECK(measure(r) == Rat(0));
}

TEST_CASE("canonical form is independent of the input presentation") {
    // [0,1) in one piece vs two pieces vs overlapping pieces.
    const BoxRegion whole = BoxRegion::from_box(box1(Rat(0), Rat(1)));
    const BoxRegion split =
        BoxRegion::canonicalize(1, {box1(Rat(1, 2), Rat(1)), box1(Rat(0), Rat(1, 2))});
    const BoxRegion overlap =
        BoxRegion::canonicalize(1, {box1(Rat(0), Rat(2, 3)), box1(Rat(1, 3), Rat(1))});
    CHECK(whole == split);
    CHECK(whole == overlap);
    CHECK(whole.box_count() == 1);
}

TEST_CASE("canonical form merges an L-shape the same way from any split") {
    // L-shape: [0,2)x[0,1) plus [0,1)x[1,2).
    const BoxRegion a = BoxRegion::canonicalize(
        2, {box2(Rat(0), Rat(0), Rat(2), Rat(1)), box2(Rat(0), Rat(1), Rat(1), Rat(2))});
    const BoxRegion b = BoxRegion::canonicalize(
        2, {box2(Rat(0), Rat(0), Rat(1), Rat(2)), box2(Rat(1), Rat(0), Rat(2), Rat(1))});
    const BoxRegion c = BoxRegion::canonicalize(
        2, {box2(Rat(0), Rat(0), Rat(1), Rat(1)), box2(Rat(1), Rat(0), Rat(2), Rat(1)),
            box2(Rat(0), Rat(1), Rat(1), Rat(2))});
    CHECK(a == b);
    CHECK(a == c);
    CHECK(measure(a) == Rat(3));
}

TEST_CASE("intersect, subtract and union agree with pointwise membership") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        const int dim = 1 + static_cast<int>(testutil::below(rng, 2));
        const BoxRegion a = testutil::random_region(rng, dim, 3, 6);
        const BoxRegion b = testutil::random_region(rng, dim, 3, 6);
        const BoxRegion inter = intersect(a, b);
        const BoxRegion diff = subtract(a, b);
        const BoxRegion uni = region_union(a, b);

        // Inclusion-exclusion on exact measures.
        CHECK(measure(uni) + measure(inter) == measure(a) + measure(b));
        CHECK(measure(diff) == measure(a) - measure(inter));

        // Membership at random rational probes.
        for (int probe = 0; probe < 40; ++probe) {
            RatVec x;
            for (int i = 0; i < dim; ++i) x.coords.push_back(testutil::random_rat(rng, 8, -2, 2));
            const bool in_a = contains_point(a, x);
            const bool in_b = contains_point(b, x);
            CHECK(contains_point(inter, x) == (in_a && in_b));
            CHECK(contains_point(diff, x) == (in_a && !in_b));
            CHECK(contains_point(uni, x) == (in_a || in_b));
        }

        // Canonicalization is idempotent and set operations return canonical
        // regions: rebuilding from the stored boxes must be a no-op.
        CHECK(BoxRegion::canonicalize(dim, uni.boxes) == uni);
        CHECK(BoxRegion::canonicalize(dim, inter.boxes) == inter);
        CHECK(BoxRegion::canonicalize(dim, diff.boxes) == diff);
    }
}

TEST_CASE("canonical regions have disjoint boxes") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 1 + static_cast<int>(testutil::below(rng, 2));
        const BoxRegion r = testutil::random_region(rng, dim, 4, 5);
        Rat total(0);
        for (const auto& b : r.boxes) total += b.volume();
        CHECK(total == measure(r)); // measure sums box volumes; equal iff disjoint
        for (std::size_t i = 0; i < r.boxes.size(); ++i)
            for (std::size_t j = i + 1; j < r.boxes.size(); ++j) {
                const BoxRegion bi = BoxRegion::from_box(r.boxes[i]);
                const BoxRegion bj = BoxRegion::from_box(r.boxes[j]);
                CHECK(intersect(bi, bj).empty());
            }
    }
}

TEST_CASE("subset queries and translation") {
    const BoxRegion outer = BoxRegion::from_box(box1(Rat(0), Rat(2)));
    const BoxRegion inner =
        BoxRegion::canonicalize(1, {box1(Rat(0), Rat(1, 2)), box1(Rat(1), Rat(3, 2))});
    CHECK(contains_region(outer, inner));
    CHECK_FALSE(contains_region(inner, outer));
    CHECK(contains_region(outer, outer));

    const BoxRegion moved = translate(inner, RatVec{Rat(1, 2)});
    CHECK(measure(moved) == measure(inner));
    CHECK(contains_point(moved, RatVec{Rat(3, 4)}));
    CHECK_FALSE(contains_point(moved, RatVec{Rat(1, 4)}));
    // Translation preserves canonical form.
    CHECK(BoxRegion::canonicalize(1, moved.boxes) == moved);
}

TEST_CASE("bounding_box covers the region and rejects empty input") {
    const BoxRegion r =
        BoxRegion::canonicalize(1, {box1(Rat(-1), Rat(0)), box1(Rat(3, 2), Rat(2))});
    const Box bb = bounding_box(r);
    CHECK(bb.lo == RatVec{Rat(-1)});
    CHECK(bb.hi == RatVec{Rat(2)});
    CHECK_THROWS_AS(bounding_box(BoxRegion(1)), EmptyRegionError);
}

TEST_CASE("half-open semantics: boundaries belong to exactly one side") {
    const BoxRegion left = BoxRegion::from_box(box1(Rat(0), Rat(1)));
    const BoxRegion right = BoxRegion::from_box(box1(Rat(1), Rat(2)));
    CHECK_FALSE(contains_point(left, RatVec{Rat(1)}));
    CHECK(contains_point(right, RatVec{Rat(1)}));
    CHECK(intersect(left, right).empty());
    const BoxRegion uni = region_union(left, right);
    CHECK(uni.box_count() == 1); // adjacent pieces merge
    CHECK(measure(uni) == Rat(2));
}
