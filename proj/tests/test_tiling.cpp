#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "subtile/errors.hpp"
#include "subtile/tiling.hpp"

using namespace subtile;

namespace {

BoxRegion interval(const Rat& lo, const Rat& hi) {
    return BoxRegion::from_box(Box{RatVec{lo}, RatVec{hi}});
}

const SeparableLattice kZ{Rat(1)};

} // namespace

TEST_CASE("decompose splits [0,3/2) into the two textbook cells") {
    const CellDecomposition dec = decompose(interval(Rat(0), Rat(3, 2)), kZ);
    CHECK(dec.level == 2);
    CHECK(dec.zero_cell.empty());
    REQUIRE(dec.cells.size() == 2);
    // sorted by fiber: {(0)} before {(0),(1)}
    CHECK(dec.cells[0].fiber.gammas == std::vector<std::vector<std::int64_t>>{{0}});
    CHECK(dec.cells[0].k == 1);
    CHECK(dec.cells[0].region == interval(Rat(1, 2), Rat(1)));
    CHECK(dec.cells[1].fiber.gammas == std::vector<std::vector<std::int64_t>>{{0}, {1}});
    CHECK(dec.cells[1].k == 2);
    CHECK(dec.cells[1].region == interval(Rat(0), Rat(1, 2)));
}

TEST_CASE("decompose records uncovered territory in the zero cell") {
    // Two copies of [0,1/2) modulo Z and nothing over [1/2,1).
    const BoxRegion omega = region_union(interval(Rat(0), Rat(1, 2)), interval(Rat(1), Rat(3, 2)));
    const CellDecomposition dec = decompose(omega, kZ);
    CHECK(dec.level == 2);
    REQUIRE(dec.cells.size() == 1);
    CHECK(dec.cells[0].fiber.gammas == std::vector<std::vector<std::int64_t>>{{0}, {1}});
    CHECK(dec.cells[0].region == interval(Rat(0), Rat(1, 2)));
    CHECK(dec.zero_cell == interval(Rat(1, 2), Rat(1)));
}

TEST_CASE("gamma_tilde finds exactly the translates meeting the region") {
    const BoxRegion omega = region_union(interval(Rat(0), Rat(1, 2)), interval(Rat(1), Rat(3, 2)));
    const auto gt = gamma_tilde(omega, kZ);
    REQUIRE(gt.size() == 2);
    CHECK(gt[0].index == std::vector<std::int64_t>{0});
    CHECK(gt[1].index == std::vector<std::int64_t>{1});
}

TEST_CASE("multiplicity_at reduces into the fundamental domain first") {
    const CellDecomposition dec = decompose(interval(Rat(0), Rat(3, 2)), kZ);
    CHECK(multiplicity_at(dec, RatVec{Rat(1, 4)}).first == 2);
    CHECK(multiplicity_at(dec, RatVec{Rat(3, 4)}).first == 1);
    CHECK(multiplicity_at(dec, RatVec{Rat(7, 4)}).first == 1);  // 7/4 -> 3/4
    CHECK(multiplicity_at(dec, RatVec{Rat(-3, 4)}).first == 2); // -3/4 -> 1/4
    const auto [k, fiber] = multiplicity_at(dec, RatVec{Rat(0)});
    CHECK(k == 2);
    CHECK(fiber.gammas == std::vector<std::vector<std::int64_t>>{{0}, {1}});
}

TEST_CASE("exact multitile detection") {
    CHECK(is_exact_multitile(decompose(interval(Rat(0), Rat(1)), kZ), 1));
    CHECK(is_exact_multitile(decompose(interval(Rat(0), Rat(2)), kZ), 2));
    CHECK_FALSE(is_exact_multitile(decompose(interval(Rat(0), Rat(3, 2)), kZ), 2));
    CHECK_FALSE(is_exact_multitile(decompose(interval(Rat(0), Rat(2)), kZ), 1));
}

TEST_CASE("completion of [0,3/2) at level 2 is [0,2)") {
    const BoxRegion delta = complete_to_multitile(interval(Rat(0), Rat(3, 2)), kZ, 2);
    CHECK(delta == interval(Rat(0), Rat(2)));
}

TEST_CASE("completion fills the zero cell of a split 2-subtile") {
    const BoxRegion omega = region_union(interval(Rat(0), Rat(1, 2)), interval(Rat(1), Rat(3, 2)));
    const BoxRegion delta = complete_to_multitile(omega, kZ, 2);
    CHECK(delta == interval(Rat(0), Rat(2)));
}

TEST_CASE("completion can overshoot the level on request") {
    const BoxRegion delta = complete_to_multitile(interval(Rat(0), Rat(1)), kZ, 3);
    CHECK(measure(delta) == Rat(3));
    CHECK(is_exact_multitile(decompose(delta, kZ), 3));
    CHECK(delta == interval(Rat(-1), Rat(2))); // candidates in deterministic order
}

TEST_CASE("completion refuses a level below the subtiling level") {
    CHECK_THROWS_AS(complete_to_multitile(interval(Rat(0), Rat(3, 2)), kZ, 1),
                    LevelExceededError);
}

TEST_CASE("an exact multitile completes to itself") {
    const BoxRegion omega = interval(Rat(0), Rat(2));
    CHECK(complete_to_multitile(omega, kZ, 2) == omega);
}

TEST_CASE("decomposition properties hold on random regions") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 25; ++trial) {
        const int dim = 1 + static_cast<int>(testutil::below(rng, 2));
        const SeparableLattice gamma = dim == 1
                                           ? SeparableLattice{Rat(1)}
                                           : SeparableLattice{Rat(1), Rat(2, 3)};
        const BoxRegion omega = testutil::random_region(rng, dim, 3, 5);
        const CellDecomposition dec = decompose(omega, gamma);

        CHECK(dec.level >= 1);
        CHECK(subtiling_level(dec) == dec.level);

        // Cells plus the zero cell tile the fundamental domain exactly.
        BoxRegion acc = dec.zero_cell;
        Rat total = measure(dec.zero_cell);
        Rat weighted(0);
        int max_k = 0;
        for (const auto& cell : dec.cells) {
            CHECK(cell.k == cell.fiber.size());
            CHECK(cell.k >= 1);
            CHECK_FALSE(cell.region.empty());
            CHECK(intersect(acc, cell.region).empty());
            acc = region_union(acc, cell.region);
            total += measure(cell.region);
            weighted += Rat(cell.k) * measure(cell.region);
            max_k = std::max(max_k, cell.k);
        }
        CHECK(acc == dec.domain);
        CHECK(total == covolume(gamma));
        CHECK(weighted == measure(omega)); // sum k*|Q_k| = |Omega|, exactly
        CHECK(max_k == dec.level);

        // Pointwise: the fiber at a probe lists exactly the translates
        // containing it.
        for (int probe = 0; probe < 15; ++probe) {
            RatVec x;
            for (int i = 0; i < dim; ++i) x.coords.push_back(testutil::random_rat(rng, 7, -2, 2));
            const auto [k, fiber] = multiplicity_at(dec, x);
            CHECK(k == fiber.size());
            const auto [r, base] = reduce_mod(x, gamma);
            int direct = 0;
            for (const auto& g : gamma_tilde(omega, gamma))
                if (contains_point(omega, r + g.value())) ++direct;
            CHECK(k == direct);
        }
    }
}

TEST_CASE("completion properties hold on random regions") {
    std::mt19937_64 rng(3141592);
    for (int trial = 0; trial < 15; ++trial) {
        const int dim = 1 + static_cast<int>(testutil::below(rng, 2));
        const SeparableLattice gamma = dim == 1
                                           ? SeparableLattice{Rat(1)}
                                           : SeparableLattice{Rat(1), Rat(1, 2)};
        const BoxRegion omega = testutil::random_region(rng, dim, 3, 4);
        const CellDecomposition dec = decompose(omega, gamma);
        const BoxRegion delta = complete_to_multitile(omega, gamma, dec.level);

        CHECK(contains_region(delta, omega));
        CHECK(is_exact_multitile(decompose(delta, gamma), dec.level));
        CHECK(measure(delta) == Rat(dec.level) * covolume(gamma));
    }
}
