#include "subtile/frames.hpp"

#include <algorithm>
#include <cmath>

#include "subtile/errors.hpp"

namespace subtile {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kRankRelTol = 1e-9;
constexpr double kTightRelTol = 1e-9;
constexpr int kMaxGramSize = 64;

int count_rank(const std::vector<double>& ascending) {
    if (ascending.empty()) return 0;
    const double lam_max = ascending.back();
    const double thresh = kRankRelTol * std::max(1.0, lam_max);
    int r = 0;
    for (double v : ascending)
        if (v > thresh) ++r;
    return r;
}

FrameReport check_impl(const BoxRegion& omega, const SeparableLattice& lambda,
                       const std::vector<RatVec>& shifts) {
    if (omega.empty()) throw EmptyRegionError("frame_check: omega is empty");
    if (shifts.empty()) throw Error("frame_check: at least one shift is required");
    for (const auto& a : shifts)
        if (a.dim() != lambda.dim())
            throw DimensionMismatchError("frame_check: shift dimension differs from lattice");

    const SeparableLattice gamma = annihilator(lambda);
    const CellDecomposition dec = decompose(omega, gamma);
    const Rat covol = covolume(gamma);
    const double covol_d = to_double(covol);

    FrameReport rep;
    rep.subtiling_level = dec.level;
    rep.shifts_used = shifts;
    rep.gamma_covolume = covol;
    rep.is_frame = true;

    double min_lo = 0.0, max_hi = 0.0;
    bool first = true;
    for (const auto& cell : dec.cells) {
        const FiberMatrix e = fiber_matrix(cell.fiber, gamma, shifts);
        CellSpectrum cs;
        cs.fiber = cell.fiber;
        cs.k = cell.k;
        cs.cell_measure = measure(cell.region);
        cs.spectrum = hermitian_eigenvalues(eig::gram(e.mat));
        if (cs.spectrum.rank < cell.k) rep.is_frame = false;
        const double lo = cs.spectrum.eigenvalues.front();
        const double hi = cs.spectrum.eigenvalues.back();
        if (first || lo < min_lo) min_lo = lo;
        if (first || hi > max_hi) max_hi = hi;
        first = false;
        rep.per_cell.push_back(std::move(cs));
    }

    rep.upper_bound = covol_d * max_hi;
    // A rank-deficient cell means the true smallest eigenvalue is an exact
    // zero; report it as such instead of solver round-off.
    rep.lower_bound = rep.is_frame ? covol_d * min_lo : 0.0;
    rep.tight = rep.is_frame &&
                std::abs(rep.upper_bound - rep.lower_bound) <= kTightRelTol * rep.upper_bound;
    return rep;
}

} // namespace

FiberMatrix fiber_matrix(const FiberSet& fiber, const SeparableLattice& gamma,
                         const std::vector<RatVec>& shifts) {
    if (fiber.empty()) throw Error("fiber_matrix: empty fiber");
    for (const auto& a : shifts)
        if (a.dim() != gamma.dim())
            throw DimensionMismatchError("fiber_matrix: shift dimension differs from lattice");

    FiberMatrix out;
    out.rows = fiber.size();
    out.cols = static_cast<int>(shifts.size());
    out.fiber = fiber;
    out.mat = eig::CMat(out.rows, out.cols);
    for (int i = 0; i < out.rows; ++i) {
        const LatticePoint gp(gamma, fiber.gammas[static_cast<std::size_t>(i)]);
        for (int j = 0; j < out.cols; ++j)
            out.mat.at(i, j) = character(shifts[static_cast<std::size_t>(j)], gp);
    }
    return out;
}

HermitianSpectrum hermitian_eigenvalues(const eig::CMat& gram_matrix) {
    if (gram_matrix.rows != gram_matrix.cols)
        throw NonHermitianError("hermitian_eigenvalues: matrix is not square");
    if (gram_matrix.rows > kMaxGramSize)
        throw SizeExceededError("hermitian_eigenvalues: size exceeds 64");
    if (hermitian_defect(gram_matrix) > kHermitianTol)
        throw NonHermitianError("hermitian_eigenvalues: matrix is not Hermitian within 1e-12");

    HermitianSpectrum s;
    s.eigenvalues = eig::jacobi_eigenvalues(gram_matrix);
    s.rank = count_rank(s.eigenvalues);
    return s;
}

FrameReport frame_check(const BoxRegion& omega, const SeparableLattice& lambda,
                        const std::vector<RatVec>& shifts) {
    return check_impl(omega, lambda, shifts);
}

FrameReport riesz_check(const BoxRegion& delta, const SeparableLattice& lambda,
                        const std::vector<RatVec>& shifts) {
    if (delta.empty()) throw EmptyRegionError("riesz_check: delta is empty");
    const SeparableLattice gamma = annihilator(lambda);
    const CellDecomposition dec = decompose(delta, gamma);
    const int m = static_cast<int>(shifts.size());
    if (!is_exact_multitile(dec, m))
        throw NotExactMultitileError(
            "riesz_check: region is not an exact " + std::to_string(m) + "-tile");

    FrameReport rep = check_impl(delta, lambda, shifts);
    rep.riesz = true; // every fiber matrix is square here
    return rep;
}

double tightness_defect(const BoxRegion& omega, const SeparableLattice& lambda,
                        const std::vector<RatVec>& shifts) {
    const FrameReport rep = check_impl(omega, lambda, shifts);
    return rep.upper_bound - rep.lower_bound;
}

} // namespace subtile
