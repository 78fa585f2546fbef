#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "bellkit/errors.hpp"

namespace bellkit {

using Complex = std::complex<double>;

/// Entrywise tolerance for structural checks (equality, hermiticity).
inline constexpr double kMatrixTolerance = 1e-12;

/// Tolerance for spectral quantities (eigenvalues, reconstruction residuals).
inline constexpr double kSpectralTolerance = 1e-10;

/// Dense square complex matrix, row-major. Entries are validated finite on
/// construction; dimensions stay small (the toolkit never exceeds 16).
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t dim() const { return dim_; }

    const Complex& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    Complex& operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }

    const std::vector<Complex>& entries() const { return entries_; }

private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, const ComplexMatrix& a);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Kronecker product; the left operand is the slow (first-subsystem) factor.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

Complex trace(const ComplexMatrix& a);

/// ab - ba.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tol = kMatrixTolerance);
bool is_hermitian(const ComplexMatrix& a, double tol = kMatrixTolerance);

double max_abs(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);

/// Eigenvalues ascending; vectors holds the matching eigenvectors as columns.
struct Eigensystem {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Cyclic Jacobi diagonalization with complex Givens rotations. Converges
/// when the off-diagonal Frobenius mass drops below 1e-14 relative to the
/// input's Frobenius norm; each eigenpair then satisfies
/// ||A v - lambda v|| <= 1e-10 * ||A||. Throws NotHermitianError for
/// non-Hermitian input.
Eigensystem hermitian_eigensystem(const ComplexMatrix& a);

/// Eigenvalues only, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

}  // namespace bellkit
