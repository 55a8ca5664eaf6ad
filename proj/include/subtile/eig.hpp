#pragma once

#include <complex>
#include <vector>

namespace subtile {
namespace eig {

using cplx = std::complex<double>;

// Dense row-major complex matrix; sizes here are tiny (fiber Grams) up to a
// few thousand (the brute-force frame operator).
struct CMat {
    int rows = 0;
    int cols = 0;
    std::vector<cplx> data;

    CMat() = default;
    CMat(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

    cplx& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const cplx& at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

// E * E^H, the k x k Gram of the rows of E.
CMat gram(const CMat& e);

// max_{i,j} |a_ij - conj(a_ji)|; zero for an exactly Hermitian matrix.
double hermitian_defect(const CMat& a);

double frobenius_norm(const CMat& a);

// Eigenvalues of a Hermitian matrix, ascending, by cyclic complex Jacobi
// rotations iterated until the off-diagonal mass drops to 1e-14 relative to
// the Frobenius norm. The input is symmetrized first; eigenvectors are not
// accumulated.
//
// The serial routine is the reference implementation; jacobi_eigenvalues
// applies the same rotation sequence but distributes each rotation's
// row/column update across threads once the matrix is large enough. Every
// scalar update is computed by the same expression in the same order, so the
// two paths agree bitwise.
std::vector<double> jacobi_eigenvalues_serial(CMat a);
std::vector<double> jacobi_eigenvalues(CMat a);

} // namespace eig
} // namespace subtile
