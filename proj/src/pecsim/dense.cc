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

#include "pecsim/dense.h"

#include <algorithm>
#include <cmath>

#include "pecsim/errors.h"

namespace pecsim {

double frobenius_norm(const Matrix &m) {
    double t = 0;
    for (double e : m.data()) {
        t += e * e;
    }
    return std::sqrt(t);
}

double frobenius_norm(const CMatrix &m) {
    double t = 0;
    for (const complex &e : m.data()) {
        t += std::norm(e);
    }
    return std::sqrt(t);
}

CMatrix adjoint(const CMatrix &m) {
    CMatrix out(m.cols(), m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out(c, r) = std::conj(m(r, c));
        }
    }
    return out;
}

complex trace(const CMatrix &m) {
    complex t = 0;
    for (size_t k = 0; k < std::min(m.rows(), m.cols()); k++) {
        t += m(k, k);
    }
    return t;
}

double hermiticity_error(const CMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("hermiticity check needs a square matrix");
    }
    double worst = 0;
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = r; c < m.cols(); c++) {
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return worst;
}

std::vector<double> symmetric_eigenvalues(Matrix a, double tol) {
    const size_t n = a.rows();
    if (n != a.cols()) {
        throw std::invalid_argument("eigenvalues need a square matrix");
    }
    const double scale = std::max(1.0, frobenius_norm(a));
    for (int sweep = 0; sweep < 100; sweep++) {
        double off = 0;
        for (size_t p = 0; p < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                off += a(p, q) * a(p, q);
            }
        }
        if (std::sqrt(off) < tol * scale) {
            break;
        }
        for (size_t p = 0; p < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                double apq = a(p, q);
                if (apq == 0) {
                    continue;
                }
                double theta = (a(q, q) - a(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (size_t k = 0; k < n; k++) {
                    double akp = a(k, p);
                    double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (size_t k = 0; k < n; k++) {
                    double apk = a(p, k);
                    double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> out(n);
    for (size_t k = 0; k < n; k++) {
        out[k] = a(k, k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix &m, double tol) {
    const size_t n = m.rows();
    if (n != m.cols()) {
        throw std::invalid_argument("eigenvalues need a square matrix");
    }
    Matrix embed(2 * n, 2 * n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            double re = m(r, c).real();
            double im = m(r, c).imag();
            embed(r, c) = re;
            embed(r + n, c + n) = re;
            embed(r, c + n) = -im;
            embed(r + n, c) = im;
        }
    }
    auto doubled = symmetric_eigenvalues(std::move(embed), tol);
    std::vector<double> out(n);
    for (size_t k = 0; k < n; k++) {
        out[k] = 0.5 * (doubled[2 * k] + doubled[2 * k + 1]);
    }
    return out;
}

namespace {

// Gauss-Jordan on [m | rhs] in place; rhs ends up holding m^-1 rhs.
void gauss_jordan(Matrix &m, Matrix &rhs, double pivot_tol) {
    const size_t n = m.rows();
    if (n != m.cols() || rhs.rows() != n) {
        throw std::invalid_argument("elimination needs a square system");
    }
    for (size_t col = 0; col < n; col++) {
        size_t best = col;
        for (size_t r = col + 1; r < n; r++) {
            if (std::abs(m(r, col)) > std::abs(m(best, col))) {
                best = r;
            }
        }
        if (!(std::abs(m(best, col)) >= pivot_tol)) {
            throw SingularMatrix(col);
        }
        if (best != col) {
            std::swap_ranges(m.row(col).begin(), m.row(col).end(), m.row(best).begin());
            std::swap_ranges(rhs.row(col).begin(), rhs.row(col).end(), rhs.row(best).begin());
        }
        double inv = 1 / m(col, col);
        for (auto &e : m.row(col)) {
            e *= inv;
        }
        for (auto &e : rhs.row(col)) {
            e *= inv;
        }
        for (size_t r = 0; r < n; r++) {
            double f = m(r, col);
            if (r == col || f == 0) {
                continue;
            }
            for (size_t c = 0; c < n; c++) {
                m(r, c) -= f * m(col, c);
            }
            for (size_t c = 0; c < rhs.cols(); c++) {
                rhs(r, c) -= f * rhs(col, c);
            }
        }
    }
}

}  // namespace

Matrix invert_matrix(const Matrix &m, double pivot_tol) {
    Matrix work = m;
    Matrix out = Matrix::identity(m.rows());
    gauss_jordan(work, out, pivot_tol);
    return out;
}

std::vector<double> solve_linear(const Matrix &m, std::span<const double> b, double pivot_tol) {
    Matrix work = m;
    Matrix rhs(b.size(), 1, std::vector<double>(b.begin(), b.end()));
    gauss_jordan(work, rhs, pivot_tol);
    return rhs.data();
}

}  // namespace pecsim
