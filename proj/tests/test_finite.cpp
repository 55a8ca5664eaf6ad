#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "subtile/errors.hpp"
#include "subtile/finite.hpp"

using namespace subtile;

namespace {

FiniteScene scene1(int n, int d, std::vector<std::vector<int>> omega,
                   std::vector<std::vector<int>> shifts) {
    FiniteScene s;
    s.moduli = {n};
    s.lambda_divisors = {d};
    s.omega = std::move(omega);
    s.shifts = std::move(shifts);
    return s;
}

// Independent cross-check of the annihilator: the set of g with
// e^{2 pi i <g, lambda> / N} = 1 for every lattice element lambda.
std::set<int> annihilator_by_pairing(int n, int d) {
    std::set<int> out;
    for (int g = 0; g < n; ++g) {
        bool kills_all = true;
        for (int k = 0; k * d < n; ++k)
            if ((static_cast<std::int64_t>(g) * (k * d)) % n != 0) kills_all = false;
        if (kills_all) out.insert(g);
    }
    return out;
}

} // namespace

TEST_CASE("annihilator generators match the exhaustive pairing definition") {
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{
             {4, 2}, {6, 3}, {6, 2}, {5, 1}, {12, 4}, {9, 3}, {8, 1}}) {
        CAPTURE(n);
        CAPTURE(d);
        const FiniteScene s = scene1(n, d, {{0}}, {{0}});
        const int gen = finite_annihilator(s)[0];
        std::set<int> from_gen;
        for (int k = 0; k < n; ++k) from_gen.insert((k * gen) % n);
        CHECK(from_gen == annihilator_by_pairing(n, d));
        CHECK(gen == n / d);
    }
}

TEST_CASE("subgroup sizes multiply to the group order") {
    std::mt19937_64 rng(7101);
    for (int trial = 0; trial < 30; ++trial) {
        const FiniteScene s = testutil::random_finite_scene(rng, 24, 2, 8, 3);
        std::int64_t order = 1, lattice_size = 1;
        for (std::size_t i = 0; i < s.moduli.size(); ++i) {
            order *= s.moduli[i];
            lattice_size *= s.moduli[i] / s.lambda_divisors[i];
        }
        // transversal_size counts dual cosets of the annihilator, which is
        // exactly |Lambda|; together with |Gamma| = prod d_i this recovers |G|.
        CHECK(transversal_size(s) == lattice_size);
        std::int64_t gamma_size = 1;
        for (int d : s.lambda_divisors) gamma_size *= d;
        CHECK(transversal_size(s) * gamma_size == order);
    }
}

TEST_CASE("hand-checked cyclic scenes, both paths") {
    // N = 4, lattice 2Z_4 = {0,2}, omega = {0,1}, one zero shift: the two
    // fibers {0} and {1} each carry the 1x1 Gram [1]; |Q_Gamma| = 2.
    const FiniteScene a = scene1(4, 2, {{0}, {1}}, {{0}});
    const FiniteBounds ab = brute_force_bounds(a);
    const FiniteBounds af = fiber_bounds_finite(a);
    CHECK(ab.is_frame);
    CHECK(af.is_frame);
    CHECK(std::abs(ab.lower - 2.0) <= 1e-12);
    CHECK(std::abs(ab.upper - 2.0) <= 1e-12);
    CHECK(std::abs(af.lower - 2.0) <= 1e-12);
    CHECK(std::abs(af.upper - 2.0) <= 1e-12);

    // Singleton omega.
    const FiniteScene b = scene1(4, 2, {{0}}, {{0}});
    CHECK(std::abs(brute_force_bounds(b).lower - 2.0) <= 1e-12);
    CHECK(std::abs(fiber_bounds_finite(b).upper - 2.0) <= 1e-12);

    // Full lattice on Z_2: the two exponentials are an orthogonal basis.
    const FiniteScene c = scene1(2, 1, {{0}, {1}}, {{0}});
    CHECK(std::abs(brute_force_bounds(c).lower - 2.0) <= 1e-12);
    CHECK(std::abs(brute_force_bounds(c).upper - 2.0) <= 1e-12);
    CHECK(brute_force_bounds(c).is_frame);

    // omega = {0,2} sits inside one coset of the annihilator of 2Z_4: the
    // fiber {0,2} needs two shifts, one is rank deficient.
    const FiniteScene d = scene1(4, 2, {{0}, {2}}, {{0}});
    CHECK_FALSE(brute_force_bounds(d).is_frame);
    CHECK_FALSE(fiber_bounds_finite(d).is_frame);

    // Adding the shift 1 makes the 2x2 character matrix unitary up to scale.
    const FiniteScene e = scene1(4, 2, {{0}, {2}}, {{0}, {1}});
    const FiniteBounds eb = brute_force_bounds(e);
    const FiniteBounds ef = fiber_bounds_finite(e);
    CHECK(eb.is_frame);
    CHECK(std::abs(eb.lower - 4.0) <= 1e-12);
    CHECK(std::abs(eb.upper - 4.0) <= 1e-12);
    CHECK(std::abs(ef.lower - 4.0) <= 1e-12);
    CHECK(std::abs(ef.upper - 4.0) <= 1e-12);
}

TEST_CASE("a transversal with the zero shift is Parseval with bound |Q_Gamma|") {
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> cases = {
        {{4}, {2}}, {{6}, {3}}, {{9}, {3}}, {{6, 4}, {3, 2}}, {{8, 3}, {2, 1}}};
    for (const auto& [moduli, divisors] : cases) {
        FiniteScene s;
        s.moduli = moduli;
        s.lambda_divisors = divisors;
        // Transversal of the dual mod the annihilator: residues below N_i/d_i.
        std::vector<std::vector<int>> omega = {{}};
        for (std::size_t i = 0; i < moduli.size(); ++i) {
            std::vector<std::vector<int>> next;
            for (const auto& prefix : omega)
                for (int r = 0; r < moduli[i] / divisors[i]; ++r) {
                    auto e = prefix;
                    e.push_back(r);
                    next.push_back(e);
                }
            omega = std::move(next);
        }
        s.omega = omega;
        s.shifts = {std::vector<int>(moduli.size(), 0)};

        const double q = static_cast<double>(transversal_size(s));
        for (const FiniteBounds& b : {brute_force_bounds(s), fiber_bounds_finite(s)}) {
            CHECK(b.is_frame);
            CHECK(std::abs(b.lower - q) <= 1e-10 * q);
            CHECK(std::abs(b.upper - q) <= 1e-10 * q);
        }
    }
}

TEST_CASE("brute force and fiberization agree on seeded random scenes") {
    std::mt19937_64 rng(424242);
    int frames_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const FiniteScene s = testutil::random_finite_scene(rng, 16, 2, 20, 4);
        CAPTURE(trial);
        const OracleComparison cmp = compare(s);
        CHECK(cmp.brute_frame == cmp.fiber_frame);
        CHECK(cmp.agree);
        if (cmp.brute_frame) {
            ++frames_seen;
            CHECK(cmp.max_rel_err <= 1e-8);
        }
    }
    // The sweep must exercise both verdicts to mean anything.
    CHECK(frames_seen > 5);
    CHECK(frames_seen < 60);
}

TEST_CASE("parallel frame operator matches the serial reference bitwise") {
    std::mt19937_64 rng(515151);
    for (int trial = 0; trial < 4; ++trial) {
        const FiniteScene s = testutil::random_finite_scene(rng, 12, 2, 48, 3);
        const eig::CMat ser = frame_operator_serial(s);
        const eig::CMat par = frame_operator(s);
        REQUIRE(ser.rows == par.rows);
        REQUIRE(ser.cols == par.cols);
        for (std::size_t i = 0; i < ser.data.size(); ++i) {
            CHECK(ser.data[i].real() == par.data[i].real());
            CHECK(ser.data[i].imag() == par.data[i].imag());
        }
    }
}

TEST_CASE("validation rejects malformed scenes") {
    CHECK_THROWS_AS(validate(scene1(4, 3, {{0}}, {{0}})), PreconditionError); // 3 !| 4
    CHECK_THROWS_AS(validate(scene1(4, 2, {}, {{0}})), EmptyRegionError);
    CHECK_THROWS_AS(validate(scene1(4, 2, {{0}, {0}}, {{0}})), PreconditionError);
    CHECK_THROWS_AS(validate(scene1(4, 2, {{4}}, {{0}})), PreconditionError); // out of range
    CHECK_THROWS_AS(validate(scene1(4, 2, {{0, 1}}, {{0}})), DimensionMismatchError);
    CHECK_THROWS_AS(validate(scene1(4, 2, {{0}}, {})), PreconditionError); // no shifts
    CHECK_THROWS_AS(validate(scene1(1, 1, {{0}}, {{0}})), PreconditionError); // N < 2

    FiniteScene ok = scene1(4, 2, {{0}, {1}}, {{0}});
    CHECK_NOTHROW(validate(ok));
}

TEST_CASE("brute force rejects oversized supports") {
    FiniteScene s;
    s.moduli = {70, 70};
    s.lambda_divisors = {1, 1};
    for (int x = 0; x < 70; ++x)
        for (int y = 0; y < 60; ++y) s.omega.push_back({x, y}); // 4200 > 4096
    s.shifts = {{0, 0}};
    CHECK_THROWS_AS(brute_force_bounds(s), SizeExceededError);
    // The fiberized path has no such cap and still answers.
    CHECK(fiber_bounds_finite(s).upper > 0.0);
}

TEST_CASE("compare reports the verdicts it combined") {
    const FiniteScene s = scene1(4, 2, {{0}, {2}}, {{0}, {1}});
    const OracleComparison cmp = compare(s);
    CHECK(cmp.brute_frame);
    CHECK(cmp.fiber_frame);
    CHECK(cmp.agree);
    CHECK(std::abs(cmp.brute_lower - 4.0) <= 1e-12);
    CHECK(std::abs(cmp.fiber_upper - 4.0) <= 1e-12);
    CHECK(cmp.max_rel_err <= 1e-12);

    const OracleComparison bad = compare(scene1(4, 2, {{0}, {2}}, {{0}}));
    CHECK_FALSE(bad.brute_frame);
    CHECK_FALSE(bad.fiber_frame);
    CHECK(bad.agree); // matching negative verdicts still agree
}
