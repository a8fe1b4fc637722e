#pragma once

#include <vector>

#include "heatfk/matrix.hpp"

namespace heatfk {

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column k belongs to values[k]

    double reconstruction_error(const Matrix& A) const;
    double orthonormality_error() const;
};

// Cyclic Jacobi rotations. Throws DomainError if A is not symmetric within
// 1e-12 (relative to max(1, max|A|)). Eigenvectors are sign-normalized so
// that their largest-magnitude entry (first one on ties) is positive.
EigenDecomposition eigendecompose(const Matrix& A);

// Same sweeps without accumulating eigenvectors.
std::vector<double> eigenvalues(Matrix A);
double smallest_eigenvalue(const Matrix& A);

} // namespace heatfk
