// Copyright 2026 The qsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsim/errors.hpp"
#include "qsim/parallel.hpp"

namespace qsim {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), re_(rows * cols, 0.0), im_(rows * cols, 0.0) {
    if (rows == 0 || cols == 0) {
        throw ArgumentError("matrix dimensions must be positive");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.re(i, i) = 1.0;
    }
    return m;
}

namespace {

// Row range [row_begin, row_end) of c = a * b. Each output entry accumulates
// its k-terms in ascending order, so results do not depend on how rows are
// split across workers.
void matmul_rows(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& c,
                 std::size_t row_begin, std::size_t row_end) {
    const std::size_t inner = a.cols();
    const std::size_t cols_b = b.cols();
    const double* are = a.re_data();
    const double* aim = a.im_data();
    for (std::size_t i = row_begin; i < row_end; ++i) {
        double* __restrict cre = c.re_data() + i * cols_b;
        double* __restrict cim = c.im_data() + i * cols_b;
        std::fill(cre, cre + cols_b, 0.0);
        std::fill(cim, cim + cols_b, 0.0);
        for (std::size_t k = 0; k < inner; ++k) {
            const double ar = are[i * inner + k];
            const double ai = aim[i * inner + k];
            const double* __restrict bre = b.re_data() + k * cols_b;
            const double* __restrict bim = b.im_data() + k * cols_b;
            for (std::size_t j = 0; j < cols_b; ++j) {
                cre[j] += ar * bre[j] - ai * bim[j];
                cim[j] += ar * bim[j] + ai * bre[j];
            }
        }
    }
}

} // namespace

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b, ExecMode mode) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    ComplexMatrix c(a.rows(), b.cols());
    if (mode == ExecMode::Parallel) {
        parallel_for_rows(a.rows(), [&](std::size_t begin, std::size_t end) {
            matmul_rows(a, b, c, begin, end);
        });
    } else {
        matmul_rows(a, b, c, 0, a.rows());
    }
    return c;
}

ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& v) {
    if (a.cols() != v.size()) {
        throw ShapeError("matvec: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times vector of length " +
                         std::to_string(v.size()));
    }
    ComplexVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double sum_re = 0.0;
        double sum_im = 0.0;
        for (std::size_t k = 0; k < a.cols(); ++k) {
            sum_re += a.re(i, k) * v.re[k] - a.im(i, k) * v.im[k];
            sum_im += a.re(i, k) * v.im[k] + a.im(i, k) * v.re[k];
        }
        out.re[i] = sum_re;
        out.im[i] = sum_im;
    }
    return out;
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia) {
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const double ar = a.re(ia, ja);
            const double ai = a.im(ia, ja);
            if (ar == 0.0 && ai == 0.0) {
                continue;
            }
            for (std::size_t ib = 0; ib < b.rows(); ++ib) {
                const std::size_t row = ia * b.rows() + ib;
                for (std::size_t jb = 0; jb < b.cols(); ++jb) {
                    const std::size_t col = ja * b.cols() + jb;
                    c.re(row, col) = ar * b.re(ib, jb) - ai * b.im(ib, jb);
                    c.im(row, col) = ar * b.im(ib, jb) + ai * b.re(ib, jb);
                }
            }
        }
    }
    return c;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
    if (a.rows() != a.cols()) {
        throw ShapeError("is_unitary: matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
    }
    const std::size_t n = a.rows();
    // Entry (i, j) of a^dagger * a is sum_k conj(a(k, i)) * a(k, j).
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double sum_re = 0.0;
            double sum_im = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                sum_re += a.re(k, i) * a.re(k, j) + a.im(k, i) * a.im(k, j);
                sum_im += a.re(k, i) * a.im(k, j) - a.im(k, i) * a.re(k, j);
            }
            if (i == j) {
                sum_re -= 1.0;
            }
            if (std::abs(sum_re) > tol || std::abs(sum_im) > tol) {
                return false;
            }
        }
    }
    return true;
}

double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("max_entry_diff: dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            worst = std::max(worst, std::hypot(a.re(i, j) - b.re(i, j),
                                               a.im(i, j) - b.im(i, j)));
        }
    }
    return worst;
}

double max_entry_diff(const ComplexVector& a, const ComplexVector& b) {
    if (a.size() != b.size()) {
        throw ShapeError("max_entry_diff: length mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::hypot(a.re[i] - b.re[i], a.im[i] - b.im[i]));
    }
    return worst;
}

} // namespace qsim
