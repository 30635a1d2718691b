// SPDX-License-Identifier: Apache-2.0
#include "qtel/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qtel {

namespace {

void check_dim(int dim) {
    if (dim < 1 || dim > ComplexMatrix::kMaxDim) {
        throw DimensionOverflow("matrix dimension " + std::to_string(dim) +
                                " outside [1, " +
                                std::to_string(ComplexMatrix::kMaxDim) + "]");
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    check_dim(dim);
    entries_.assign(static_cast<std::size_t>(dim) * dim, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    check_dim(dim);
    if (entries_.size() != static_cast<std::size_t>(dim) * dim) {
        throw DimensionMismatch("entry count does not match dim*dim");
    }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
    const int n = static_cast<int>(rows.size());
    ComplexMatrix m(n);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) {
            throw DimensionMismatch("row " + std::to_string(i) +
                                    " has wrong length");
        }
        int j = 0;
        for (const Complex& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& v : entries_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_deviation() const {
    double dev = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            dev = std::max(dev,
                           std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return dev;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (other.dim_ != dim_) throw DimensionMismatch("operator+=: dim mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries_[k] += other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (other.dim_ != dim_) throw DimensionMismatch("operator-=: dim mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries_[k] -= other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (Complex& v : entries_) v *= scalar;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("operator*: dim mismatch");
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix m) {
    m *= scalar;
    return m;
}

ComplexMatrix EigenDecomposition::reconstruct() const {
    const int n = eigenvectors.dim();
    ComplexMatrix out(n);
    for (int k = 0; k < n; ++k) {
        const double lambda = eigenvalues[static_cast<std::size_t>(k)];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j) +=
                    lambda * eigenvectors(i, k) * std::conj(eigenvectors(j, k));
    }
    return out;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

} // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
    const double dev = m.hermiticity_deviation();
    if (dev > tol::kHermitian) {
        throw NotHermitian("hermiticity deviation " + std::to_string(dev) +
                           " exceeds 1e-9");
    }
    const int n = m.dim();

    // Work on the Hermitian average so asymmetric roundoff in the input
    // cannot bias the rotations; the diagonal is forced real.
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
        a(i, i) = Complex(a(i, i).real(), 0.0);
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    for (int sweep = 0; sweep < tol::kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) < tol::kJacobiOffDiagonal) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                const Complex phase = apq / r; // e^{i phi}
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // A <- J^dagger A J with the plane rotation
                //   J(p,p)=c, J(p,q)=s e^{i phi}, J(q,p)=-s e^{-i phi}, J(q,q)=c.
                for (int k = 0; k < n; ++k) { // column update: A <- A J
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(phase) * akq;
                    a(k, q) = s * phase * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) { // row update: A <- J^dagger A
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * std::conj(phase) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);
                for (int k = 0; k < n; ++k) { // V <- V J
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - s * std::conj(phase) * vkq;
                    v(k, q) = s * phase * vkp + c * vkq;
                }
            }
        }
    }

    // Sort descending; stable so degenerate eigenvalues keep diagonal order.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&a](int i, int j) {
        return a(i, i).real() > a(j, j).real();
    });

    EigenDecomposition out{std::vector<double>(static_cast<std::size_t>(n)),
                           ComplexMatrix(n)};
    for (int col = 0; col < n; ++col) {
        const int src = order[static_cast<std::size_t>(col)];
        out.eigenvalues[static_cast<std::size_t>(col)] = a(src, src).real();
        // Fix the global phase: largest-magnitude component real-positive.
        int kmax = 0;
        double best = -1.0;
        for (int k = 0; k < n; ++k) {
            const double mag = std::abs(v(k, src));
            if (mag > best) {
                best = mag;
                kmax = k;
            }
        }
        Complex ph(1.0, 0.0);
        if (best > 0.0) ph = std::conj(v(kmax, src)) / best;
        for (int k = 0; k < n; ++k) out.eigenvectors(k, col) = ph * v(k, src);
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim();
    const int db = b.dim();
    if (da * db > ComplexMatrix::kMaxDim) {
        throw DimensionOverflow("kron result dimension " +
                                std::to_string(da * db) + " exceeds 16");
    }
    ComplexMatrix out(da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l)
                    out(i * db + k, j * db + l) = a(i, j) * b(k, l);
    return out;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("frobenius_distance: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
    }
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) s += std::norm(a(i, j) - b(i, j));
    return std::sqrt(s);
}

} // namespace qtel
