#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "subtile/finite.hpp"
#include "subtile/region.hpp"

// Seeded random geometry shared by the property suites. Everything routes
// through one mt19937_64 with plain modulo reduction so the draws are
// identical on every platform.
namespace testutil {

inline std::int64_t below(std::mt19937_64& rng, std::int64_t n) {
    return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
}

// Random rational in [lo, hi) with denominator <= max_den.
inline subtile::Rat random_rat(std::mt19937_64& rng, int max_den, int lo, int hi) {
    const std::int64_t q = 1 + below(rng, max_den);
    const std::int64_t n = below(rng, static_cast<std::int64_t>(hi - lo) * q);
    return subtile::Rat(lo) + subtile::Rat(n, q);
}

// Random box inside [-2, 2)^dim with positive extent <= 1 per axis.
inline subtile::Box random_box(std::mt19937_64& rng, int dim, int max_den) {
    subtile::Box b;
    for (int i = 0; i < dim; ++i) {
        const subtile::Rat lo = random_rat(rng, max_den, -2, 1);
        const std::int64_t q = 1 + below(rng, max_den);
        const subtile::Rat extent(1 + below(rng, q), q); // in (0, 1]
        b.lo.coords.push_back(lo);
        b.hi.coords.push_back(lo + extent);
    }
    return b;
}

// Random nonempty canonical region made of up to max_boxes boxes.
inline subtile::BoxRegion random_region(std::mt19937_64& rng, int dim, int max_boxes,
                                        int max_den) {
    const std::int64_t count = 1 + below(rng, max_boxes);
    std::vector<subtile::Box> boxes;
    for (std::int64_t i = 0; i < count; ++i) boxes.push_back(random_box(rng, dim, max_den));
    return subtile::BoxRegion::canonicalize(dim, boxes);
}

// Random valid finite scene: moduli in [2, max_mod], a random divisor per
// axis, and distinct support/shift elements drawn by partial Fisher-Yates
// over the whole group.
inline subtile::FiniteScene random_finite_scene(std::mt19937_64& rng, int max_mod, int max_dim,
                                                int max_omega, int max_shifts) {
    subtile::FiniteScene s;
    const std::int64_t d = 1 + below(rng, max_dim);
    for (std::int64_t i = 0; i < d; ++i) {
        const int n = static_cast<int>(2 + below(rng, max_mod - 1));
        std::vector<int> divisors;
        for (int q = 1; q <= n; ++q)
            if (n % q == 0) divisors.push_back(q);
        s.moduli.push_back(n);
        s.lambda_divisors.push_back(
            divisors[static_cast<std::size_t>(below(rng, static_cast<std::int64_t>(divisors.size())))]);
    }

    std::vector<std::vector<int>> all;
    std::vector<int> cur(s.moduli.size(), 0);
    for (;;) {
        all.push_back(cur);
        int axis = static_cast<int>(s.moduli.size()) - 1;
        while (axis >= 0) {
            if (++cur[static_cast<std::size_t>(axis)] < s.moduli[static_cast<std::size_t>(axis)]) break;
            cur[static_cast<std::size_t>(axis)] = 0;
            --axis;
        }
        if (axis < 0) break;
    }
    const auto draw_distinct = [&](std::int64_t count) {
        auto pool = all;
        std::vector<std::vector<int>> out;
        for (std::int64_t i = 0; i < count && i < static_cast<std::int64_t>(pool.size()); ++i) {
            const std::int64_t j = i + below(rng, static_cast<std::int64_t>(pool.size()) - i);
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
            out.push_back(pool[static_cast<std::size_t>(i)]);
        }
        return out;
    };
    s.omega = draw_distinct(1 + below(rng, max_omega));
    s.shifts = draw_distinct(1 + below(rng, max_shifts));
    return s;
}

} // namespace testutil
