#include "heatfk/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "heatfk/error.hpp"

namespace heatfk {

namespace {

void check_symmetric(const Matrix& A) {
    if (A.rows() != A.cols()) throw DomainError("eigendecompose needs a square matrix");
    const double scale = std::max(1.0, A.max_abs());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = i + 1; j < A.cols(); ++j)
            if (std::abs(A(i, j) - A(j, i)) > 1e-12 * scale)
                throw DomainError("eigendecompose needs a symmetric matrix");
}

// In-place cyclic Jacobi on the symmetric matrix a (only the full storage is
// kept consistent). If v is non-null, rotations are accumulated into it.
void jacobi_sweeps(Matrix& a, Matrix* v) {
    const std::size_t n = a.rows();
    if (n < 2) return;
    double frob = 0.0;
    for (double x : a.data()) frob += x * x;
    if (frob == 0.0) return;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off <= 1e-32 * frob) return;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double app = a(p, p), aqq = a(q, q);
                // Negligible against both diagonal entries after a few sweeps.
                if (sweep > 3 && std::abs(apq) < 1e-18 * std::min(std::abs(app), std::abs(aqq))) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                const double theta = (aqq - app) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p), arq = a(r, q);
                    const double nrp = arp - s * (arq + tau * arp);
                    const double nrq = arq + s * (arp - tau * arq);
                    a(r, p) = a(p, r) = nrp;
                    a(r, q) = a(q, r) = nrq;
                }
                if (v) {
                    for (std::size_t r = 0; r < n; ++r) {
                        const double vrp = (*v)(r, p), vrq = (*v)(r, q);
                        (*v)(r, p) = vrp - s * (vrq + tau * vrp);
                        (*v)(r, q) = vrq + s * (vrp - tau * vrq);
                    }
                }
            }
        }
    }
    throw PrecisionError("Jacobi iteration did not converge in 100 sweeps");
}

} // namespace

double EigenDecomposition::reconstruction_error(const Matrix& A) const {
    const std::size_t n = values.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += vectors(i, k) * values[k] * vectors(j, k);
            worst = std::max(worst, std::abs(s - A(i, j)));
        }
    }
    return worst;
}

double EigenDecomposition::orthonormality_error() const {
    const std::size_t n = values.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += vectors(k, i) * vectors(k, j);
            worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

EigenDecomposition eigendecompose(const Matrix& A) {
    check_symmetric(A);
    const std::size_t n = A.rows();
    Matrix a = A;
    // Work on the exactly symmetric average.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (A(i, j) + A(j, i));
    Matrix v = Matrix::identity(n);
    jacobi_sweeps(a, &v);

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = idx[k];
        out.values[k] = a(src, src);
        std::size_t best = 0;
        for (std::size_t r = 1; r < n; ++r)
            if (std::abs(v(r, src)) > std::abs(v(best, src)) * (1.0 + 1e-12)) best = r;
        const double sign = v(best, src) < 0 ? -1.0 : 1.0;
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = sign * v(r, src);
    }
    return out;
}

std::vector<double> eigenvalues(Matrix A) {
    check_symmetric(A);
    jacobi_sweeps(A, nullptr);
    std::vector<double> vals(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) vals[i] = A(i, i);
    std::sort(vals.begin(), vals.end());
    return vals;
}

double smallest_eigenvalue(const Matrix& A) {
    if (A.rows() == 0) throw DomainError("empty matrix has no eigenvalues");
    if (A.rows() == 1) return A(0, 0);
    Matrix a = A;
    jacobi_sweeps(a, nullptr);
    double best = a(0, 0);
    for (std::size_t i = 1; i < a.rows(); ++i) best = std::min(best, a(i, i));
    return best;
}

} // namespace heatfk
