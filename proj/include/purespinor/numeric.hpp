// Copyright 2026 The purespinor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense complex linear algebra for the small (<= 16 dimensional) operators
// used throughout the library. Everything here is a pure function of its
// inputs.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "purespinor/error.hpp"

namespace purespinor {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Column vector with a fixed dimension.
template <class T>
class Vector {
   public:
    Vector() = default;
    explicit Vector(std::size_t dim) : entries_(dim, T{}) {
    }
    Vector(std::initializer_list<T> values) : entries_(values) {
    }
    explicit Vector(std::vector<T> values) : entries_(std::move(values)) {
    }

    std::size_t dim() const noexcept {
        return entries_.size();
    }
    T &operator[](std::size_t i) {
        return entries_[i];
    }
    const T &operator[](std::size_t i) const {
        return entries_[i];
    }
    std::span<T> entries() noexcept {
        return entries_;
    }
    std::span<const T> entries() const noexcept {
        return entries_;
    }
    auto begin() const noexcept {
        return entries_.begin();
    }
    auto end() const noexcept {
        return entries_.end();
    }

    Vector &operator+=(const Vector &other) {
        require_same_dim(other);
        for (std::size_t i = 0; i < dim(); ++i) entries_[i] += other.entries_[i];
        return *this;
    }
    Vector &operator-=(const Vector &other) {
        require_same_dim(other);
        for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= other.entries_[i];
        return *this;
    }
    Vector &operator*=(T scale) {
        for (auto &e : entries_) e *= scale;
        return *this;
    }
    friend Vector operator+(Vector a, const Vector &b) {
        return a += b;
    }
    friend Vector operator-(Vector a, const Vector &b) {
        return a -= b;
    }
    friend Vector operator*(T scale, Vector a) {
        return a *= scale;
    }
    friend Vector operator*(Vector a, T scale) {
        return a *= scale;
    }
    friend bool operator==(const Vector &, const Vector &) = default;

   private:
    void require_same_dim(const Vector &other) const {
        if (other.dim() != dim()) throw Error(Errc::dimension_mismatch, "vector sum");
    }

    std::vector<T> entries_;
};

/// Row-major dense matrix.
template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, T{}) {
    }
    /// Nested-list construction, one inner list per row.
    Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()), cols_(0) {
        if (rows_ > 0) cols_ = rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto &row : rows) {
            if (row.size() != cols_) throw Error(Errc::dimension_mismatch, "ragged matrix literal");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }
    static Matrix diagonal(std::span<const T> diag) {
        Matrix m(diag.size(), diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
        return m;
    }

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }
    T &operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }
    const T &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    std::span<const T> entries() const noexcept {
        return entries_;
    }

    Matrix &operator+=(const Matrix &other) {
        require_same_shape(other);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
        return *this;
    }
    Matrix &operator-=(const Matrix &other) {
        require_same_shape(other);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
        return *this;
    }
    Matrix &operator*=(T scale) {
        for (auto &e : entries_) e *= scale;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix &b) {
        return a += b;
    }
    friend Matrix operator-(Matrix a, const Matrix &b) {
        return a -= b;
    }
    friend Matrix operator-(Matrix a) {
        return a *= T{-1};
    }
    friend Matrix operator*(T scale, Matrix a) {
        return a *= scale;
    }
    friend Matrix operator*(Matrix a, T scale) {
        return a *= scale;
    }
    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        if (a.cols_ != b.rows_) throw Error(Errc::dimension_mismatch, "matrix product");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T aik = a(i, k);
                if (aik == T{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        }
        return out;
    }
    friend Vector<T> operator*(const Matrix &a, const Vector<T> &v) {
        if (a.cols_ != v.dim()) throw Error(Errc::dimension_mismatch, "matrix-vector product");
        Vector<T> out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            T acc{};
            for (std::size_t k = 0; k < a.cols_; ++k) acc += a(i, k) * v[k];
            out[i] = acc;
        }
        return out;
    }
    friend bool operator==(const Matrix &, const Matrix &) = default;

   private:
    void require_same_shape(const Matrix &other) const {
        if (other.rows_ != rows_ || other.cols_ != cols_) throw Error(Errc::dimension_mismatch, "matrix sum");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> entries_;
};

using ComplexMatrix = Matrix<Complex>;
using ComplexVector = Vector<Complex>;

/// Standard Kronecker product: (A (x) B)[i*rB + k, j*cB + l] = A[i,j] * B[k,l].
template <class T>
Matrix<T> kron(const Matrix<T> &a, const Matrix<T> &b) {
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

template <class T>
Vector<T> kron(const Vector<T> &a, const Vector<T> &b) {
    Vector<T> out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < b.dim(); ++k) out[i * b.dim() + k] = a[i] * b[k];
    return out;
}

inline ComplexMatrix adjoint(const ComplexMatrix &m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
    return out;
}

inline ComplexVector conj(const ComplexVector &v) {
    ComplexVector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = std::conj(v[i]);
    return out;
}

inline ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a * b - b * a;
}

inline ComplexMatrix anticommutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a * b + b * a;
}

inline double frobenius_norm(const ComplexMatrix &m) {
    double acc = 0;
    for (const auto &e : m.entries()) acc += std::norm(e);
    return std::sqrt(acc);
}

/// Largest entrywise modulus; the residual measure used by the verification reports.
inline double max_abs(const ComplexMatrix &m) {
    double out = 0;
    for (const auto &e : m.entries()) out = std::max(out, std::abs(e));
    return out;
}

inline double norm(const ComplexVector &v) {
    double acc = 0;
    for (const auto &e : v) acc += std::norm(e);
    return std::sqrt(acc);
}

/// <a|b> with the first argument conjugated.
inline Complex vdot(const ComplexVector &a, const ComplexVector &b) {
    if (a.dim() != b.dim()) throw Error(Errc::dimension_mismatch, "inner product");
    Complex acc{};
    for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

inline ComplexVector concat(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector out(a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.dim(); ++i) out[a.dim() + i] = b[i];
    return out;
}

inline ComplexVector slice(const ComplexVector &v, std::size_t offset, std::size_t count) {
    if (offset + count > v.dim()) throw Error(Errc::dimension_mismatch, "slice out of range");
    ComplexVector out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = v[offset + i];
    return out;
}

inline bool all_finite(const ComplexVector &v) {
    return std::all_of(v.begin(), v.end(), [](Complex z) { return is_finite(z); });
}

inline bool all_finite(const ComplexMatrix &m) {
    return std::all_of(m.entries().begin(), m.entries().end(), [](Complex z) { return is_finite(z); });
}

namespace detail {

/// Householder QR with column pivoting, A*P = Q*R, stopping once the trailing
/// block Frobenius norm drops to `cutoff`. Returns the numerical rank and the
/// accumulated unitary Q (rows(A) x rows(A)).
inline std::pair<std::size_t, ComplexMatrix> pivoted_qr_rank(ComplexMatrix a, double cutoff) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    ComplexMatrix q = ComplexMatrix::identity(m);
    std::size_t rank = 0;
    const std::size_t steps = std::min(m, n);
    for (std::size_t k = 0; k < steps; ++k) {
        double trailing = 0;
        std::size_t pivot = k;
        double pivot_norm = -1;
        for (std::size_t j = k; j < n; ++j) {
            double col = 0;
            for (std::size_t i = k; i < m; ++i) col += std::norm(a(i, j));
            trailing += col;
            if (col > pivot_norm) {
                pivot_norm = col;
                pivot = j;
            }
        }
        if (std::sqrt(trailing) <= cutoff) break;
        if (pivot != k)
            for (std::size_t i = 0; i < m; ++i) std::swap(a(i, k), a(i, pivot));

        // Reflector mapping a[k:, k] onto alpha * e_k.
        const double xnorm = std::sqrt(pivot_norm);
        const Complex x0 = a(k, k);
        const Complex phase = std::abs(x0) > 0 ? x0 / std::abs(x0) : Complex{1.0};
        const Complex alpha = -phase * xnorm;
        std::vector<Complex> v(m, Complex{});
        for (std::size_t i = k; i < m; ++i) v[i] = a(i, k);
        v[k] -= alpha;
        double vnorm2 = 0;
        for (std::size_t i = k; i < m; ++i) vnorm2 += std::norm(v[i]);
        ++rank;
        if (vnorm2 == 0) continue;
        // A <- (I - 2 v v^H / |v|^2) A
        for (std::size_t j = k; j < n; ++j) {
            Complex s{};
            for (std::size_t i = k; i < m; ++i) s += std::conj(v[i]) * a(i, j);
            s *= 2.0 / vnorm2;
            for (std::size_t i = k; i < m; ++i) a(i, j) -= s * v[i];
        }
        // Q <- Q (I - 2 v v^H / |v|^2)
        for (std::size_t r = 0; r < m; ++r) {
            Complex s{};
            for (std::size_t i = k; i < m; ++i) s += q(r, i) * v[i];
            s *= 2.0 / vnorm2;
            for (std::size_t i = k; i < m; ++i) q(r, i) -= s * std::conj(v[i]);
        }
    }
    return {rank, q};
}

}  // namespace detail

/// Orthonormal basis of {v : ||Mv|| <= tol * ||M||_F * ||v||}; empty at full column rank.
inline std::vector<ComplexVector> kernel_basis(const ComplexMatrix &m, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("kernel_basis: tol must be positive");
    if (!all_finite(m)) throw Error(Errc::non_finite, "kernel_basis");
    // null(M) is the orthogonal complement of range(M^H).
    auto [rank, q] = detail::pivoted_qr_rank(adjoint(m), tol * frobenius_norm(m));
    std::vector<ComplexVector> basis;
    for (std::size_t c = rank; c < m.cols(); ++c) {
        ComplexVector v(m.cols());
        for (std::size_t r = 0; r < m.cols(); ++r) v[r] = q(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::size_t rank(const ComplexMatrix &m, double tol) {
    return m.cols() - kernel_basis(m, tol).size();
}

/// Matrix exponential by scaling and squaring a truncated Taylor series.
inline ComplexMatrix expm(const ComplexMatrix &m) {
    if (!m.is_square()) throw Error(Errc::dimension_mismatch, "expm needs a square matrix");
    if (!all_finite(m)) throw Error(Errc::non_finite, "expm");
    const std::size_t n = m.rows();
    // Induced 1-norm.
    double norm1 = 0;
    for (std::size_t j = 0; j < n; ++j) {
        double col = 0;
        for (std::size_t i = 0; i < n; ++i) col += std::abs(m(i, j));
        norm1 = std::max(norm1, col);
    }
    int squarings = 0;
    if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
    const ComplexMatrix scaled = m * Complex{std::ldexp(1.0, -squarings)};

    // ||scaled|| <= 1/2, so 20 terms leave a remainder below 1e-25.
    ComplexMatrix result = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k <= 20; ++k) {
        term = term * scaled;
        term *= Complex{1.0 / k};
        result += term;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

/// Determinant by Gaussian elimination with partial pivoting.
inline Complex determinant(ComplexMatrix m) {
    if (!m.is_square()) throw Error(Errc::dimension_mismatch, "determinant needs a square matrix");
    const std::size_t n = m.rows();
    Complex det{1.0};
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
        if (m(p, k) == Complex{}) return Complex{};
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

/// Seeded complex vector with independent standard-normal real and imaginary
/// parts (unnormalized). Redraws in the measure-zero event of an all-zero draw.
inline ComplexVector random_state(std::size_t dim, std::uint64_t seed) {
    if (dim == 0) throw std::invalid_argument("random_state: dim must be >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexVector v(dim);
    do {
        for (std::size_t i = 0; i < dim; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            v[i] = Complex{re, im};
        }
    } while (norm(v) == 0.0);
    return v;
}

inline ComplexVector normalized(const ComplexVector &v) {
    const double n = norm(v);
    if (n == 0) throw Error(Errc::zero_state, "cannot normalize");
    return v * Complex{1.0 / n};
}

}  // namespace purespinor
