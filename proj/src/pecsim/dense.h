// Copyright 2026 The pecsim Authors
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

#ifndef PECSIM_DENSE_H
#define PECSIM_DENSE_H

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pecsim {

using complex = std::complex<double>;

/// Small row-major dense matrix.
template <typename T>
class DenseMatrix {
   public:
    DenseMatrix() = default;
    DenseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    }
    DenseMatrix(size_t rows, size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) {
            throw std::invalid_argument("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                                        std::to_string(rows * cols));
        }
    }

    static DenseMatrix identity(size_t n) {
        DenseMatrix out(n, n);
        for (size_t k = 0; k < n; k++) {
            out(k, k) = T{1};
        }
        return out;
    }

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    T &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const T &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    std::span<T> row(size_t r) {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<const T> row(size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    const std::vector<T> &data() const {
        return data_;
    }

    DenseMatrix transpose() const {
        DenseMatrix out(cols_, rows_);
        for (size_t r = 0; r < rows_; r++) {
            for (size_t c = 0; c < cols_; c++) {
                out(c, r) = (*this)(r, c);
            }
        }
        return out;
    }

    DenseMatrix operator*(const DenseMatrix &other) const {
        if (cols_ != other.rows_) {
            throw std::invalid_argument("matrix product dimension mismatch");
        }
        DenseMatrix out(rows_, other.cols_);
        for (size_t r = 0; r < rows_; r++) {
            for (size_t k = 0; k < cols_; k++) {
                T a = (*this)(r, k);
                if (a == T{}) {
                    continue;
                }
                for (size_t c = 0; c < other.cols_; c++) {
                    out(r, c) += a * other(k, c);
                }
            }
        }
        return out;
    }

    DenseMatrix operator+(const DenseMatrix &other) const {
        check_same_shape(other);
        DenseMatrix out = *this;
        for (size_t k = 0; k < data_.size(); k++) {
            out.data_[k] += other.data_[k];
        }
        return out;
    }

    DenseMatrix operator-(const DenseMatrix &other) const {
        check_same_shape(other);
        DenseMatrix out = *this;
        for (size_t k = 0; k < data_.size(); k++) {
            out.data_[k] -= other.data_[k];
        }
        return out;
    }

    DenseMatrix operator*(T scale) const {
        DenseMatrix out = *this;
        for (auto &e : out.data_) {
            e *= scale;
        }
        return out;
    }

    bool operator==(const DenseMatrix &other) const = default;

   private:
    void check_same_shape(const DenseMatrix &other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw std::invalid_argument("matrix shape mismatch");
        }
    }

    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> data_;
};

using Matrix = DenseMatrix<double>;
using CMatrix = DenseMatrix<complex>;

/// Frobenius norm sqrt(Tr A^dagger A).
double frobenius_norm(const Matrix &m);
double frobenius_norm(const CMatrix &m);

CMatrix adjoint(const CMatrix &m);
complex trace(const CMatrix &m);

/// Largest |m - m^dagger| entry.
double hermiticity_error(const CMatrix &m);

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// Runs cyclic Jacobi rotations on the real symmetric embedding [[Re, -Im], [Im, Re]],
/// whose spectrum is the Hermitian spectrum with every eigenvalue doubled.
std::vector<double> hermitian_eigenvalues(const CMatrix &m, double tol = 1e-12);

/// Eigenvalues of a real symmetric matrix in ascending order (cyclic Jacobi).
std::vector<double> symmetric_eigenvalues(Matrix a, double tol = 1e-12);

/// Inverse by Gauss-Jordan elimination with partial pivoting.
/// Throws SingularMatrix when the best available pivot is below `pivot_tol`.
Matrix invert_matrix(const Matrix &m, double pivot_tol = 1e-12);

/// Solves m x = b with partial pivoting.
std::vector<double> solve_linear(const Matrix &m, std::span<const double> b, double pivot_tol = 1e-12);

}  // namespace pecsim

#endif
