#pragma once

#include <cstdint>
#include <vector>

#include "subtile/eig.hpp"

namespace subtile {

// Ground-truth scene on Z_{N1} x ... x Z_{Nd}. The lattice is the product of
// the subgroups d_i * Z_{N_i}; omega lives in the dual, identified with the
// same product group; counting measure on both sides.
struct FiniteScene {
    std::vector<int> moduli;                // N_i >= 2
    std::vector<int> lambda_divisors;       // d_i dividing N_i
    std::vector<std::vector<int>> omega;    // distinct, reduced into [0, N_i)
    std::vector<std::vector<int>> shifts;   // elements of G, reduced

    int dim() const { return static_cast<int>(moduli.size()); }

    bool operator==(const FiniteScene&) const = default;
};

// Throws on any invariant violation (divisibility, ranges, duplicates).
void validate(const FiniteScene& scene);

// Per-axis generators (N_i / d_i) of the annihilator of the lattice.
std::vector<int> finite_annihilator(const FiniteScene& scene);

// Number of elements in a transversal of the dual modulo the annihilator;
// this is the counting-measure |Q_Gamma| entering both bound formulas.
std::int64_t transversal_size(const FiniteScene& scene);

struct FiniteBounds {
    double lower = 0.0;
    double upper = 0.0;
    bool is_frame = false;
};

// Naive path: assembles the frame operator from raw character restrictions,
// one rank-one update per (shift, lattice element), and reads the extreme
// eigenvalues. Deliberately ignorant of fibers and cells so it can catch
// bugs in the fiberized path; only the basic eigensolver is shared.
// Rejects |omega| > 4096.
FiniteBounds brute_force_bounds(const FiniteScene& scene);

// Serial reference for the frame-operator accumulation kernel; the default
// entry point parallelizes rows with identical per-entry arithmetic.
eig::CMat frame_operator(const FiniteScene& scene);
eig::CMat frame_operator_serial(const FiniteScene& scene);

// Fiberized path: walks a transversal, collects each fiber, and scales the
// extreme eigenvalues of the per-fiber character Grams by the transversal
// size. Mirrors the continuous-side computation on the finite group.
FiniteBounds fiber_bounds_finite(const FiniteScene& scene);

struct OracleComparison {
    double brute_lower = 0.0, brute_upper = 0.0;
    double fiber_lower = 0.0, fiber_upper = 0.0;
    bool brute_frame = false, fiber_frame = false;
    double max_rel_err = 0.0;
    bool agree = false;
};

OracleComparison compare(const FiniteScene& scene);

} // namespace subtile
