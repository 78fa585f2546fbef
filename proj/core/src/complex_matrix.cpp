#include "bellkit/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace bellkit {

namespace {

void require_finite(const std::vector<Complex>& entries) {
    for (const Complex& z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error("matrix entry is not finite");
        }
    }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(op) + ": dimension mismatch (" +
                             std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {
    if (dim == 0) throw DimensionError("matrix dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0) throw DimensionError("matrix dimension must be positive");
    if (entries_.size() != dim * dim) {
        throw DimensionError("entry count does not match dimension");
    }
    require_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t dim = rows.size();
    std::vector<Complex> entries;
    entries.reserve(dim * dim);
    for (const auto& row : rows) {
        if (row.size() != dim) throw DimensionError("from_rows: matrix must be square");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return ComplexMatrix(dim, std::move(entries));
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "add");
    ComplexMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "subtract");
    ComplexMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = -a(i, j);
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "multiply");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix operator*(Complex scalar, const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = scalar * a(i, j);
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = std::conj(a(j, i));
    return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return out;
}

Complex trace(const ComplexMatrix& a) {
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) sum += a(i, i);
    return sum;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "commutator");
    return a * b - b * a;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (std::abs(a(i, j) - b(i, j)) > tol) return false;
    return true;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
    return true;
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const Complex& z : a.entries()) m = std::max(m, std::abs(z));
    return m;
}

double frobenius_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (const Complex& z : a.entries()) sum += std::norm(z);
    return std::sqrt(sum);
}

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

}  // namespace

Eigensystem hermitian_eigensystem(const ComplexMatrix& input) {
    if (!is_hermitian(input)) {
        throw NotHermitianError("hermitian_eigensystem: input is not Hermitian");
    }
    const std::size_t n = input.dim();

    // Symmetrize exactly so rounding asymmetries below the tolerance
    // cannot bias the rotations.
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = frobenius_norm(a);
    const double target = 1e-14 * scale;
    const double entry_skip = target / static_cast<double>(n);
    constexpr int kMaxSweeps = 64;

    for (int sweep = 0; sweep < kMaxSweeps && offdiag_norm(a) > target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double absg = std::abs(apq);
                if (absg <= entry_skip) continue;

                const double alpha = a(p, p).real();
                const double beta = a(q, q).real();
                const Complex phase = apq / absg;

                // Rotation angle zeroing a(p,q): t solves t^2 - 2*tau*t - 1 = 0,
                // small-magnitude root for stability.
                const double tau = (alpha - beta) / (2.0 * absg);
                const double t = (tau >= 0.0)
                                     ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                const Complex w = s * phase;             // R(p,q) = s*e^{i phi}
                const Complex wbar = std::conj(w);

                // A <- R^dagger A R, applied as column then row updates.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - wbar * akq;
                    a(k, q) = w * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - w * aqk;
                    a(q, k) = wbar * apk + c * aqk;
                }
                a(p, q) = Complex{0.0, 0.0};
                a(q, p) = Complex{0.0, 0.0};
                a(p, p) = Complex{a(p, p).real(), 0.0};
                a(q, q) = Complex{a(q, q).real(), 0.0};

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - wbar * vkq;
                    v(k, q) = w * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    Eigensystem out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t col = 0; col < n; ++col) {
        out.values[col] = a(order[col], order[col]).real();
        for (std::size_t row = 0; row < n; ++row) out.vectors(row, col) = v(row, order[col]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
    return hermitian_eigensystem(a).values;
}

}  // namespace bellkit
