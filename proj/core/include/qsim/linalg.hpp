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

#pragma once

#include <cstddef>
#include <vector>

namespace qsim {

/// Execution mode for the dense kernels. Parallel mode fans the output rows
/// out over a worker pool and is bit-identical to serial mode: every output
/// element is computed by exactly one worker in the same operation order.
enum class ExecMode { Serial, Parallel };

/// Dense complex vector stored as two flat arrays of doubles (real parts and
/// imaginary parts).
struct ComplexVector {
    std::vector<double> re;
    std::vector<double> im;

    ComplexVector() = default;
    explicit ComplexVector(std::size_t n) : re(n, 0.0), im(n, 0.0) {}

    std::size_t size() const { return re.size(); }
};

/// Dense complex matrix in row-major order, stored as two flat arrays of
/// doubles (real parts and imaginary parts). Entry (i, j) lives at flat index
/// i * cols + j in both arrays.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    /// n-by-n identity.
    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double re(std::size_t i, std::size_t j) const { return re_[i * cols_ + j]; }
    double im(std::size_t i, std::size_t j) const { return im_[i * cols_ + j]; }
    double& re(std::size_t i, std::size_t j) { return re_[i * cols_ + j]; }
    double& im(std::size_t i, std::size_t j) { return im_[i * cols_ + j]; }

    const double* re_data() const { return re_.data(); }
    const double* im_data() const { return im_.data(); }
    double* re_data() { return re_.data(); }
    double* im_data() { return im_.data(); }

    bool operator==(const ComplexMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> re_;
    std::vector<double> im_;
};

/// Complex matrix product a * b. Throws ShapeError unless a.cols == b.rows.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b,
                     ExecMode mode = ExecMode::Serial);

/// Complex matrix-vector product a * v. Throws ShapeError unless
/// a.cols == v.size().
ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& v);

/// Kronecker product: block (i, j) of the result equals a(i, j) * b.
ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

/// True iff the max-entry magnitude of (a^dagger * a - I) is at most tol.
/// Throws ShapeError for non-square input.
bool is_unitary(const ComplexMatrix& a, double tol);

/// Largest entrywise magnitude of a - b. Throws ShapeError on dimension
/// mismatch.
double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_entry_diff(const ComplexVector& a, const ComplexVector& b);

} // namespace qsim
