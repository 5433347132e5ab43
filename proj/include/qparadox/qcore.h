// Copyright 2026 The qparadox Authors
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

#ifndef QPARADOX_QCORE_H
#define QPARADOX_QCORE_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qparadox {

using Complex = std::complex<double>;

/// Largest supported register. Matrices are capped at 2^10 x 2^10.
inline constexpr std::size_t kMaxQubits = 10;
inline constexpr std::size_t kMaxDim = std::size_t{1} << kMaxQubits;

/// Tolerance for algebraic identities.
inline constexpr double kIdentityTol = 1e-12;
/// Tolerance for validity checks (normalization, Hermiticity, trace).
inline constexpr double kValidityTol = 1e-10;

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ValidityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SizeLimitError : std::length_error {
    using std::length_error::length_error;
};
/// Caller-supplied parameter out of its documented range.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsupportedDimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major complex matrix. Entries are always finite.
class CMatrix {
   public:
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    /// Row-major literal, e.g. CMatrix({{1, 0}, {0, 1}}).
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(std::size_t dim);
    static CMatrix zeros(std::size_t rows, std::size_t cols) {
        return CMatrix(rows, cols);
    }

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    const Complex &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    /// Checked write; rejects non-finite values.
    void set(std::size_t r, std::size_t c, Complex value);

    std::span<const Complex> entries() const {
        return entries_;
    }

    bool operator==(const CMatrix &other) const = default;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

/// Dense complex column vector. Entries are always finite.
class CVector {
   public:
    explicit CVector(std::size_t dim);
    explicit CVector(std::vector<Complex> entries);
    CVector(std::initializer_list<Complex> entries);

    std::size_t dim() const {
        return entries_.size();
    }
    const Complex &operator[](std::size_t i) const {
        return entries_[i];
    }
    void set(std::size_t i, Complex value);

    std::span<const Complex> entries() const {
        return entries_;
    }

    bool operator==(const CVector &other) const = default;

   private:
    std::vector<Complex> entries_;
};

enum class Subsystem { A, B };

/// Tensor product. Entry (i*b.rows+k, j*b.cols+l) is a(i,j)*b(k,l).
CMatrix kron(const CMatrix &a, const CMatrix &b);
CVector kron(const CVector &a, const CVector &b);

/// Matrix-vector product.
CVector apply(const CMatrix &u, const CVector &v);
CMatrix matmul(const CMatrix &a, const CMatrix &b);
/// Conjugate transpose.
CMatrix dagger(const CMatrix &m);
CMatrix transpose(const CMatrix &m);
CMatrix operator+(const CMatrix &a, const CMatrix &b);
CMatrix operator-(const CMatrix &a, const CMatrix &b);
CMatrix operator*(Complex s, const CMatrix &m);
CVector operator+(const CVector &a, const CVector &b);
CVector operator-(const CVector &a, const CVector &b);
CVector operator*(Complex s, const CVector &v);

/// v w^dagger.
CMatrix outer_product(const CVector &v, const CVector &w);
/// <a|b>, conjugating the left argument.
Complex inner(const CVector &a, const CVector &b);
double norm2(const CVector &v);
Complex trace(const CMatrix &m);

double max_abs_diff(const CMatrix &a, const CMatrix &b);
double max_abs_diff(const CVector &a, const CVector &b);
/// ||m^dagger m - I||_max. Throws ShapeError for non-square input.
double unitarity_defect(const CMatrix &m);
/// ||m - m^dagger||_max.
double hermiticity_defect(const CMatrix &m);

/// Reduced density matrix of a bipartite (dA x dB) state, keeping `keep`.
/// Validates shape, Hermiticity and unit trace at kValidityTol.
CMatrix partial_trace(const CMatrix &rho, Subsystem keep, std::size_t dim_a, std::size_t dim_b);

/// Tr(rho^2).
double purity(const CMatrix &rho);

/// Half the sum of absolute eigenvalues of rho - sigma, 2x2 only.
double trace_distance_2x2(const CMatrix &rho, const CMatrix &sigma);

}  // namespace qparadox

#endif
