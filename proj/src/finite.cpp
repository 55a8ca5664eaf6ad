#include "subtile/finite.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "subtile/errors.hpp"
#include "subtile/lattice.hpp"
#include "subtile/rational.hpp"

namespace subtile {
namespace {

constexpr std::size_t kMaxBruteOmega = 4096;
constexpr double kRankRelTol = 1e-9;
constexpr double kAgreeTol = 1e-8;

// e^{2*pi*i * sum_i a_i g_i / N_i}, phase reduced as an exact rational.
eig::cplx finite_character(const std::vector<int>& a, const std::vector<int>& g,
                           const std::vector<int>& moduli) {
    Rat phase(0);
    for (std::size_t i = 0; i < moduli.size(); ++i)
        phase += rat(static_cast<std::int64_t>(a[i]) * g[i], moduli[i]);
    return unit_phase(mod_one(phase));
}

// All points of the integer grid prod_i [0, counts_i) in lex order.
std::vector<std::vector<int>> grid_points(const std::vector<int>& counts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(counts.size(), 0);
    for (;;) {
        out.push_back(cur);
        int axis = static_cast<int>(counts.size()) - 1;
        while (axis >= 0) {
            if (++cur[static_cast<std::size_t>(axis)] < counts[static_cast<std::size_t>(axis)]) break;
            cur[static_cast<std::size_t>(axis)] = 0;
            --axis;
        }
        if (axis < 0) break;
    }
    return out;
}

void check_elements(const FiniteScene& scene, const std::vector<std::vector<int>>& elems,
                    const char* what) {
    for (const auto& e : elems) {
        if (static_cast<int>(e.size()) != scene.dim())
            throw DimensionMismatchError(std::string(what) + " element has wrong dimension");
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < 0 || e[i] >= scene.moduli[i])
                throw PreconditionError(std::string(what) + " entry " + std::to_string(e[i]) +
                                        " is outside [0, " + std::to_string(scene.moduli[i]) + ")");
    }
    auto sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionError(std::string(what) + " contains a duplicate element");
}

// Elements of the lattice prod_i d_i Z_{N_i}, lex over the multiplier grid.
std::vector<std::vector<int>> lattice_elements(const FiniteScene& scene) {
    std::vector<int> counts(scene.moduli.size());
    for (std::size_t i = 0; i < counts.size(); ++i)
        counts[i] = scene.moduli[i] / scene.lambda_divisors[i];
    auto pts = grid_points(counts);
    for (auto& p : pts)
        for (std::size_t i = 0; i < p.size(); ++i) p[i] *= scene.lambda_divisors[i];
    return pts;
}

template <bool Parallel>
eig::CMat frame_operator_impl(const FiniteScene& scene) {
    validate(scene);
    const int n = static_cast<int>(scene.omega.size());
    const auto lambda = lattice_elements(scene);
    const int d = scene.dim();

    eig::CMat s(n, n);
    std::vector<eig::cplx> v(static_cast<std::size_t>(n));
    std::vector<int> t(static_cast<std::size_t>(d));
    for (const auto& a : scene.shifts) {
        for (const auto& lam : lambda) {
            for (int i = 0; i < d; ++i) {
                const std::size_t u = static_cast<std::size_t>(i);
                t[u] = (a[u] + lam[u]) % scene.moduli[u];
            }
            for (int x = 0; x < n; ++x)
                v[static_cast<std::size_t>(x)] =
                    finite_character(t, scene.omega[static_cast<std::size_t>(x)], scene.moduli);
            // Rank-one update S += v v^H. Rows are independent, and each entry
            // sees the (shift, lattice) terms in the same order either way, so
            // the parallel kernel reproduces the serial one bitwise.
#pragma omp parallel for schedule(static) if (Parallel)
            for (int x = 0; x < n; ++x) {
                const eig::cplx vx = v[static_cast<std::size_t>(x)];
                for (int y = 0; y < n; ++y)
                    s.at(x, y) += vx * std::conj(v[static_cast<std::size_t>(y)]);
            }
        }
    }
    return s;
}

double relerr(double x, double y) {
    return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

} // namespace

void validate(const FiniteScene& scene) {
    if (scene.moduli.empty())
        throw PreconditionError("finite scene needs at least one axis");
    for (int m : scene.moduli)
        if (m < 2) throw PreconditionError("modulus " + std::to_string(m) + " must be >= 2");
    if (scene.lambda_divisors.size() != scene.moduli.size())
        throw DimensionMismatchError("lattice divisor list does not match the moduli");
    for (std::size_t i = 0; i < scene.moduli.size(); ++i) {
        const int d = scene.lambda_divisors[i];
        if (d < 1 || scene.moduli[i] % d != 0)
            throw PreconditionError("divisor " + std::to_string(d) + " does not divide modulus " +
                                    std::to_string(scene.moduli[i]));
    }
    if (scene.omega.empty()) throw EmptyRegionError("finite scene has an empty support set");
    check_elements(scene, scene.omega, "support");
    if (scene.shifts.empty()) throw PreconditionError("finite scene needs at least one shift");
    check_elements(scene, scene.shifts, "shift");
}

std::vector<int> finite_annihilator(const FiniteScene& scene) {
    std::vector<int> gen(scene.moduli.size());
    for (std::size_t i = 0; i < gen.size(); ++i)
        gen[i] = scene.moduli[i] / scene.lambda_divisors[i];
    return gen;
}

std::int64_t transversal_size(const FiniteScene& scene) {
    std::int64_t size = 1;
    for (std::size_t i = 0; i < scene.moduli.size(); ++i)
        size *= scene.moduli[i] / scene.lambda_divisors[i];
    return size;
}

eig::CMat frame_operator(const FiniteScene& scene) { return frame_operator_impl<true>(scene); }
eig::CMat frame_operator_serial(const FiniteScene& scene) { return frame_operator_impl<false>(scene); }

FiniteBounds brute_force_bounds(const FiniteScene& scene) {
    validate(scene);
    if (scene.omega.size() > kMaxBruteOmega)
        throw SizeExceededError("brute-force path refuses support sets larger than 4096");

    const auto evals = eig::jacobi_eigenvalues(frame_operator(scene));
    FiniteBounds b;
    b.lower = evals.front();
    b.upper = evals.back();
    b.is_frame = b.lower > kRankRelTol * std::max(1.0, b.upper);
    return b;
}

FiniteBounds fiber_bounds_finite(const FiniteScene& scene) {
    validate(scene);
    const auto gen = finite_annihilator(scene);
    const double covol = static_cast<double>(transversal_size(scene));
    const int m = static_cast<int>(scene.shifts.size());

    double lo = 0.0, hi = 0.0;
    bool first = true;
    bool full_rank = true;
    for (const auto& omega : grid_points(gen)) {
        // Fiber of omega: support elements congruent to omega mod the
        // annihilator, kept in the order the scene lists them.
        std::vector<const std::vector<int>*> fiber;
        for (const auto& g : scene.omega) {
            bool match = true;
            for (std::size_t i = 0; i < g.size(); ++i)
                if (g[i] % gen[i] != omega[i]) { match = false; break; }
            if (match) fiber.push_back(&g);
        }
        if (fiber.empty()) continue;

        const int r = static_cast<int>(fiber.size());
        eig::CMat e(r, m);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < m; ++j)
                e.at(i, j) = finite_character(scene.shifts[static_cast<std::size_t>(j)],
                                              *fiber[static_cast<std::size_t>(i)], scene.moduli);
        const auto evals = eig::jacobi_eigenvalues(gram(e));
        if (evals.front() <= kRankRelTol * std::max(1.0, evals.back())) full_rank = false;
        lo = first ? evals.front() : std::min(lo, evals.front());
        hi = first ? evals.back() : std::max(hi, evals.back());
        first = false;
    }

    FiniteBounds b;
    b.lower = covol * lo;
    b.upper = covol * hi;
    b.is_frame = full_rank;
    return b;
}

OracleComparison compare(const FiniteScene& scene) {
    const FiniteBounds brute = brute_force_bounds(scene);
    const FiniteBounds fiber = fiber_bounds_finite(scene);

    OracleComparison c;
    c.brute_lower = brute.lower;
    c.brute_upper = brute.upper;
    c.brute_frame = brute.is_frame;
    c.fiber_lower = fiber.lower;
    c.fiber_upper = fiber.upper;
    c.fiber_frame = fiber.is_frame;
    c.max_rel_err = std::max(relerr(brute.lower, fiber.lower), relerr(brute.upper, fiber.upper));
    c.agree = brute.is_frame == fiber.is_frame && c.max_rel_err <= kAgreeTol;
    return c;
}

} // namespace subtile
