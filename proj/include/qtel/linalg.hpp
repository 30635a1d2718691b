// SPDX-License-Identifier: Apache-2.0
//
// Dense complex-matrix kernel used by the quantum layers: a small
// value-semantic matrix type, a cyclic Jacobi eigensolver for Hermitian
// matrices, Kronecker products and Frobenius distances. Dimensions are
// capped at 16 (up to four qubits), so everything favours robustness and
// determinism over speed.
#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "qtel/errors.hpp"

namespace qtel {

using Complex = std::complex<double>;

/// Square complex matrix, dimension 1..16, row-major storage.
class ComplexMatrix {
public:
    static constexpr int kMaxDim = 16;

    explicit ComplexMatrix(int dim);
    ComplexMatrix(int dim, std::vector<Complex> entries);

    static ComplexMatrix identity(int dim);
    /// Build from row lists; every row must have the same length as the
    /// number of rows.
    static ComplexMatrix from_rows(
        std::initializer_list<std::initializer_list<Complex>> rows);

    int dim() const { return dim_; }

    Complex& operator()(int i, int j) { return entries_[i * dim_ + j]; }
    const Complex& operator()(int i, int j) const { return entries_[i * dim_ + j]; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    /// max_{i,j} |m(i,j) - conj(m(j,i))|
    double hermiticity_deviation() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

private:
    int dim_;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);

/// Result of hermitian_eig. Eigenvalues are sorted descending (stable on
/// ties); column i of `eigenvectors` pairs with `eigenvalues[i]`. The global
/// phase of every column is fixed by making its largest-magnitude component
/// real and positive, so identical inputs give identical outputs.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    /// Reconstruct sum_i lambda_i v_i v_i^dagger.
    ComplexMatrix reconstruct() const;
};

/// Eigendecomposition of a Hermitian matrix via cyclic Jacobi rotations.
/// Converges when the off-diagonal Frobenius norm drops below 1e-12, or
/// after 100 sweeps. A matrix that is already diagonal is returned without
/// any rotation, so its sorted diagonal comes back exactly.
///
/// Throws NotHermitian when max |m - m^dagger| entry exceeds 1e-9.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

/// Kronecker product; entry ((i*db+k),(j*db+l)) = a(i,j)*b(k,l).
/// Throws DimensionOverflow when the result dimension would exceed 16.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// sqrt(sum_ij |a_ij - b_ij|^2). Throws DimensionMismatch.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

namespace tol {
/// Hermiticity precondition for hermitian_eig.
inline constexpr double kHermitian = 1e-9;
/// Jacobi convergence threshold on the off-diagonal Frobenius norm.
inline constexpr double kJacobiOffDiagonal = 1e-12;
/// Maximum Jacobi sweeps before giving up (never reached for dim <= 16).
inline constexpr int kJacobiMaxSweeps = 100;
/// Roundoff band: eigenvalues in [-kEigenvalueClamp, 0) are treated as 0
/// wherever a density-operator spectrum feeds an entropy.
inline constexpr double kEigenvalueClamp = 1e-10;
} // namespace tol

} // namespace qtel
