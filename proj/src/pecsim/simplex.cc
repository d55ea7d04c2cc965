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

#include "pecsim/simplex.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pecsim {

namespace {

class Tableau {
   public:
    // Rows 0..m-1 hold constraints; the last row holds reduced costs, and the last
    // column the right-hand side (the objective row stores -objective there).
    Tableau(size_t m, size_t cols) : m_(m), cols_(cols), t_(m + 1, cols + 1), basis_(m) {
    }

    double &at(size_t r, size_t c) {
        return t_(r, c);
    }
    double &rhs(size_t r) {
        return t_(r, cols_);
    }
    double &cost(size_t c) {
        return t_(m_, c);
    }
    size_t rows() const {
        return m_;
    }
    size_t cols() const {
        return cols_;
    }
    std::vector<size_t> &basis() {
        return basis_;
    }

    void pivot(size_t pr, size_t pc) {
        double inv = 1 / t_(pr, pc);
        for (size_t c = 0; c <= cols_; c++) {
            t_(pr, c) *= inv;
        }
        t_(pr, pc) = 1;
        for (size_t r = 0; r <= m_; r++) {
            if (r == pr) {
                continue;
            }
            double f = t_(r, pc);
            if (f == 0) {
                continue;
            }
            for (size_t c = 0; c <= cols_; c++) {
                t_(r, c) -= f * t_(pr, c);
            }
            t_(r, pc) = 0;
        }
        basis_[pr] = pc;
    }

    // Bland's rule over columns [0, limit). Returns false when optimal.
    bool step(size_t limit, double tol) {
        size_t enter = limit;
        for (size_t c = 0; c < limit; c++) {
            if (cost(c) < -tol) {
                enter = c;
                break;
            }
        }
        if (enter == limit) {
            return false;
        }
        size_t leave = m_;
        double best = std::numeric_limits<double>::infinity();
        for (size_t r = 0; r < m_; r++) {
            double a = t_(r, enter);
            if (a > tol) {
                double ratio = rhs(r) / a;
                if (ratio < best - 1e-15 ||
                    (std::abs(ratio - best) <= 1e-15 && leave < m_ && basis_[r] < basis_[leave])) {
                    best = ratio;
                    leave = r;
                }
            }
        }
        if (leave == m_) {
            throw std::logic_error("simplex: unbounded direction with non-negative costs");
        }
        pivot(leave, enter);
        return true;
    }

    void drop_row(size_t r) {
        Matrix next(m_, cols_ + 1);
        for (size_t i = 0, o = 0; i <= m_; i++) {
            if (i == r) {
                continue;
            }
            for (size_t c = 0; c <= cols_; c++) {
                next(o, c) = t_(i, c);
            }
            o++;
        }
        t_ = std::move(next);
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        m_--;
    }

   private:
    size_t m_;
    size_t cols_;
    Matrix t_;
    std::vector<size_t> basis_;
};

}  // namespace

SimplexResult simplex_minimize(const Matrix &a, std::span<const double> b, std::span<const double> c, double pivot_tol) {
    const size_t m = a.rows();
    const size_t n = a.cols();
    if (b.size() != m || c.size() != n) {
        throw std::invalid_argument("simplex: dimension mismatch");
    }
    for (double ci : c) {
        if (ci < 0) {
            throw std::invalid_argument("simplex: costs must be non-negative");
        }
    }

    // Structural columns [0, n), artificial columns [n, n + m).
    Tableau tab(m, n + m);
    for (size_t r = 0; r < m; r++) {
        double sign = b[r] < 0 ? -1.0 : 1.0;
        for (size_t j = 0; j < n; j++) {
            tab.at(r, j) = sign * a(r, j);
        }
        tab.at(r, n + r) = 1;
        tab.rhs(r) = sign * b[r];
        tab.basis()[r] = n + r;
    }

    // Phase 1: minimize the sum of artificials.
    for (size_t j = 0; j < n; j++) {
        double s = 0;
        for (size_t r = 0; r < m; r++) {
            s += tab.at(r, j);
        }
        tab.cost(j) = -s;
    }
    double bsum = 0;
    for (size_t r = 0; r < m; r++) {
        bsum += tab.rhs(r);
    }
    tab.cost(n + m) = -bsum;

    SimplexResult result;
    while (tab.step(n + m, pivot_tol)) {
        result.iterations++;
    }
    double infeasibility = -tab.cost(n + m);
    double scale = 1;
    for (double bi : b) {
        scale = std::max(scale, std::abs(bi));
    }
    if (infeasibility > 1e-8 * scale) {
        result.feasible = false;
        return result;
    }

    // Pivot remaining artificials out of the basis, or drop their (redundant) rows.
    for (size_t r = 0; r < tab.rows();) {
        if (tab.basis()[r] < n) {
            r++;
            continue;
        }
        size_t col = n;
        for (size_t j = 0; j < n; j++) {
            if (std::abs(tab.at(r, j)) > pivot_tol) {
                col = j;
                break;
            }
        }
        if (col == n) {
            tab.drop_row(r);
            continue;
        }
        tab.pivot(r, col);
        result.iterations++;
        r++;
    }

    // Phase 2 with the real costs; artificial columns never re-enter.
    for (size_t j = 0; j <= n + m; j++) {
        tab.cost(j) = j < n ? c[j] : 0.0;
    }
    for (size_t r = 0; r < tab.rows(); r++) {
        size_t bj = tab.basis()[r];
        double cb = c[bj];
        if (cb == 0) {
            continue;
        }
        for (size_t j = 0; j <= n + m; j++) {
            tab.cost(j) -= cb * tab.at(r, j);
        }
    }
    while (tab.step(n, pivot_tol)) {
        result.iterations++;
    }

    result.feasible = true;
    result.x.assign(n, 0.0);
    for (size_t r = 0; r < tab.rows(); r++) {
        result.x[tab.basis()[r]] = std::max(0.0, tab.rhs(r));
    }
    result.objective = 0;
    for (size_t j = 0; j < n; j++) {
        result.objective += c[j] * result.x[j];
    }
    return result;
}

}  // namespace pecsim
