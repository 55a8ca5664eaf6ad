#include "subtile/eig.hpp"

#include <algorithm>
#include <cmath>

#include "subtile/errors.hpp"

namespace subtile {
namespace eig {

namespace {

constexpr double kOffDiagTol = 1e-14;
constexpr int kMaxSweeps = 64;
// Below this order the parallel path is pure overhead.
constexpr int kParallelThreshold = 256;

double offdiag_mass(const CMat& a) {
    double sum = 0.0;
    for (int i = 0; i < a.rows; ++i)
        for (int j = i + 1; j < a.cols; ++j)
            sum += std::norm(a.at(i, j));
    return std::sqrt(2.0 * sum);
}

// One two-sided rotation zeroing a(p,q). The rotation parameters come from
// the Hermitian 2x2 pivot block; the row/column update over k != p,q is a
// data-parallel loop.
template <bool Parallel>
void apply_rotation(CMat& a, int p, int q) {
    const cplx b = a.at(p, q);
    const double babs = std::abs(b);
    if (babs == 0.0) return;

    const double app = a.at(p, p).real();
    const double aqq = a.at(q, q).real();
    const double theta = (aqq - app) / (2.0 * babs);
    // Smaller-magnitude root of t^2 - 2*theta*t - 1, written in the form that
    // avoids the catastrophic cancellation of theta - sqrt(theta^2 + 1) when
    // the pivot is tiny against the diagonal separation.
    const double t =
        (theta >= 0.0 ? -1.0 : 1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double sigma = t * c;
    const cplx phase = b / babs;          // e^{i beta}
    const cplx s = sigma * std::conj(phase);

    const int n = a.rows;
#pragma omp parallel for schedule(static) if (Parallel)
    for (int k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const cplx akp = a.at(k, p);
        const cplx akq = a.at(k, q);
        const cplx nkp = c * akp + s * akq;
        const cplx nkq = -std::conj(s) * akp + c * akq;
        a.at(k, p) = nkp;
        a.at(k, q) = nkq;
        a.at(p, k) = std::conj(nkp);
        a.at(q, k) = std::conj(nkq);
    }

    const double shift = 2.0 * c * sigma * babs;
    a.at(p, p) = cplx(c * c * app + sigma * sigma * aqq + shift, 0.0);
    a.at(q, q) = cplx(sigma * sigma * app + c * c * aqq - shift, 0.0);
    a.at(p, q) = cplx(0.0, 0.0);
    a.at(q, p) = cplx(0.0, 0.0);
}

template <bool Parallel>
std::vector<double> jacobi_impl(CMat a) {
    if (a.rows != a.cols) throw Error("jacobi: matrix is not square");
    const int n = a.rows;
    if (n == 0) return {};

    // Work on the exact Hermitian part; round-off asymmetry in the input
    // would otherwise leak into the rotations.
    for (int i = 0; i < n; ++i) {
        a.at(i, i) = cplx(a.at(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const cplx h = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
            a.at(i, j) = h;
            a.at(j, i) = std::conj(h);
        }
    }

    const double scale = std::max(1.0, frobenius_norm(a));
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_mass(a) <= kOffDiagTol * scale) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                apply_rotation<Parallel>(a, p, q);
    }

    std::vector<double> ev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = a.at(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

} // namespace

CMat gram(const CMat& e) {
    CMat g(e.rows, e.rows);
    for (int i = 0; i < e.rows; ++i) {
        for (int j = 0; j <= i; ++j) {
            cplx sum(0.0, 0.0);
            for (int k = 0; k < e.cols; ++k)
                sum += e.at(i, k) * std::conj(e.at(j, k));
            g.at(i, j) = sum;
            g.at(j, i) = std::conj(sum);
        }
    }
    return g;
}

double hermitian_defect(const CMat& a) {
    double worst = 0.0;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            worst = std::max(worst, std::abs(a.at(i, j) - std::conj(a.at(j, i))));
    return worst;
}

double frobenius_norm(const CMat& a) {
    double sum = 0.0;
    for (const auto& v : a.data) sum += std::norm(v);
    return std::sqrt(sum);
}

std::vector<double> jacobi_eigenvalues_serial(CMat a) {
    return jacobi_impl<false>(std::move(a));
}

std::vector<double> jacobi_eigenvalues(CMat a) {
    if (a.rows >= kParallelThreshold) return jacobi_impl<true>(std::move(a));
    return jacobi_impl<false>(std::move(a));
}

} // namespace eig
} // namespace subtile
