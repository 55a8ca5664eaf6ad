#pragma once

#include <vector>

#include "subtile/eig.hpp"
#include "subtile/lattice.hpp"
#include "subtile/region.hpp"
#include "subtile/tiling.hpp"

namespace subtile {

// Character matrix of one cell: entry (i, j) pairs shift a_j with the i-th
// fiber element. The diagonal modulation that distinguishes points inside a
// cell is unitary and drops out of the Gram, so the cell matrix is all the
// spectral data a cell carries.
struct FiberMatrix {
    int rows = 0; // fiber size k
    int cols = 0; // number of shifts m
    eig::CMat mat;
    FiberSet fiber;
};

struct HermitianSpectrum {
    std::vector<double> eigenvalues; // ascending
    int rank = 0;                    // count above 1e-9 * max(1, lambda_max)
};

struct CellSpectrum {
    FiberSet fiber;
    int k = 0;
    Rat cell_measure;
    HermitianSpectrum spectrum;
};

struct FrameReport {
    bool is_frame = false;
    double lower_bound = 0.0; // A; exactly 0 when not a frame
    double upper_bound = 0.0; // B
    bool tight = false;
    int subtiling_level = 0;
    std::vector<RatVec> shifts_used;
    std::vector<CellSpectrum> per_cell;
    Rat gamma_covolume; // the measure factor in both bounds
    bool riesz = false; // set by riesz_check: every fiber matrix is square
};

FiberMatrix fiber_matrix(const FiberSet& fiber, const SeparableLattice& gamma,
                         const std::vector<RatVec>& shifts);

// Spectrum of a small Hermitian matrix (the per-cell Grams). Rejects
// non-Hermitian input (defect above 1e-12) and matrices larger than 64.
HermitianSpectrum hermitian_eigenvalues(const eig::CMat& gram_matrix);

// Decides whether the exponentials with frequencies a_j + Lambda form a frame
// of the square-integrable functions on omega, with optimal bounds. The dual
// lattice of lambda does the tiling; bounds are the covolume of the dual
// times the extreme Gram eigenvalues over positive-measure cells.
FrameReport frame_check(const BoxRegion& omega, const SeparableLattice& lambda,
                        const std::vector<RatVec>& shifts);

// frame_check restricted to exact multitiles with as many translate layers as
// shifts; fiber matrices are then square and frame-ness coincides with being
// a Riesz basis. Throws NotExactMultitileError otherwise.
FrameReport riesz_check(const BoxRegion& delta, const SeparableLattice& lambda,
                        const std::vector<RatVec>& shifts);

// B - A; vanishes (up to 1e-9) exactly for tight frames.
double tightness_defect(const BoxRegion& omega, const SeparableLattice& lambda,
                        const std::vector<RatVec>& shifts);

} // namespace subtile
