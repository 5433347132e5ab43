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

#include "qparadox/qcore.h"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qparadox {

namespace {

bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void require_finite(std::span<const Complex> entries) {
    for (const auto &z : entries) {
        if (!is_finite(z)) {
            throw ValidityError("non-finite entry");
        }
    }
}

std::string dims(std::size_t r, std::size_t c) {
    return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw ShapeError("matrix dimensions must be positive");
    }
    if (rows > kMaxDim || cols > kMaxDim) {
        throw SizeLimitError("matrix " + dims(rows, cols) + " exceeds " + std::to_string(kMaxDim));
    }
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries) : CMatrix(rows, cols) {
    if (entries.size() != rows * cols) {
        throw ShapeError("expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(entries.size()));
    }
    require_finite(entries);
    entries_ = std::move(entries);
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : CMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
    std::size_t r = 0;
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw ShapeError("ragged matrix literal");
        }
        std::copy(row.begin(), row.end(), entries_.begin() + r * cols_);
        ++r;
    }
    require_finite(entries_);
}

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim, dim);
    for (std::size_t k = 0; k < dim; k++) {
        m.entries_[k * dim + k] = 1.0;
    }
    return m;
}

void CMatrix::set(std::size_t r, std::size_t c, Complex value) {
    if (r >= rows_ || c >= cols_) {
        throw ShapeError("index (" + std::to_string(r) + "," + std::to_string(c) + ") outside " + dims(rows_, cols_));
    }
    if (!is_finite(value)) {
        throw ValidityError("non-finite entry");
    }
    entries_[r * cols_ + c] = value;
}

CVector::CVector(std::size_t dim) : entries_(dim) {
    if (dim == 0) {
        throw ShapeError("vector dimension must be positive");
    }
    if (dim > kMaxDim) {
        throw SizeLimitError("vector of dimension " + std::to_string(dim) + " exceeds " + std::to_string(kMaxDim));
    }
}

CVector::CVector(std::vector<Complex> entries) : CVector(entries.size()) {
    require_finite(entries);
    entries_ = std::move(entries);
}

CVector::CVector(std::initializer_list<Complex> entries) : CVector(std::vector<Complex>(entries)) {
}

void CVector::set(std::size_t i, Complex value) {
    if (i >= entries_.size()) {
        throw ShapeError("index " + std::to_string(i) + " outside vector of dimension " + std::to_string(dim()));
    }
    if (!is_finite(value)) {
        throw ValidityError("non-finite entry");
    }
    entries_[i] = value;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    std::size_t rows = a.rows() * b.rows();
    std::size_t cols = a.cols() * b.cols();
    if (rows > kMaxDim || cols > kMaxDim) {
        throw SizeLimitError("kron result " + dims(rows, cols) + " exceeds " + std::to_string(kMaxDim));
    }
    std::vector<Complex> out(rows * cols);
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < a.cols(); j++) {
            Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); k++) {
                for (std::size_t l = 0; l < b.cols(); l++) {
                    out[(i * b.rows() + k) * cols + (j * b.cols() + l)] = aij * b(k, l);
                }
            }
        }
    }
    return CMatrix(rows, cols, std::move(out));
}

CVector kron(const CVector &a, const CVector &b) {
    std::size_t dim = a.dim() * b.dim();
    if (dim > kMaxDim) {
        throw SizeLimitError("kron result of dimension " + std::to_string(dim) + " exceeds " + std::to_string(kMaxDim));
    }
    std::vector<Complex> out(dim);
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t k = 0; k < b.dim(); k++) {
            out[i * b.dim() + k] = a[i] * b[k];
        }
    }
    return CVector(std::move(out));
}

CVector apply(const CMatrix &u, const CVector &v) {
    if (u.cols() != v.dim()) {
        throw ShapeError("cannot apply " + dims(u.rows(), u.cols()) + " matrix to vector of dimension " +
                         std::to_string(v.dim()));
    }
    std::vector<Complex> out(u.rows());
    for (std::size_t r = 0; r < u.rows(); r++) {
        Complex acc = 0;
        for (std::size_t c = 0; c < u.cols(); c++) {
            acc += u(r, c) * v[c];
        }
        out[r] = acc;
    }
    return CVector(std::move(out));
}

CMatrix matmul(const CMatrix &a, const CMatrix &b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("cannot multiply " + dims(a.rows(), a.cols()) + " by " + dims(b.rows(), b.cols()));
    }
    std::vector<Complex> out(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t k = 0; k < a.cols(); k++) {
            Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); j++) {
                out[i * b.cols() + j] += aik * b(k, j);
            }
        }
    }
    return CMatrix(a.rows(), b.cols(), std::move(out));
}

CMatrix dagger(const CMatrix &m) {
    std::vector<Complex> out(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            out[c * m.rows() + r] = std::conj(m(r, c));
        }
    }
    return CMatrix(m.cols(), m.rows(), std::move(out));
}

CMatrix transpose(const CMatrix &m) {
    std::vector<Complex> out(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            out[c * m.rows() + r] = m(r, c);
        }
    }
    return CMatrix(m.cols(), m.rows(), std::move(out));
}

namespace {

template <typename Op>
CMatrix zip(const CMatrix &a, const CMatrix &b, Op op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("mismatched shapes " + dims(a.rows(), a.cols()) + " and " + dims(b.rows(), b.cols()));
    }
    std::vector<Complex> out(a.rows() * a.cols());
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < out.size(); k++) {
        out[k] = op(ea[k], eb[k]);
    }
    return CMatrix(a.rows(), a.cols(), std::move(out));
}

template <typename Op>
CVector zip(const CVector &a, const CVector &b, Op op) {
    if (a.dim() != b.dim()) {
        throw ShapeError("mismatched dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    }
    std::vector<Complex> out(a.dim());
    for (std::size_t k = 0; k < out.size(); k++) {
        out[k] = op(a[k], b[k]);
    }
    return CVector(std::move(out));
}

}  // namespace

CMatrix operator+(const CMatrix &a, const CMatrix &b) {
    return zip(a, b, std::plus<>{});
}

CMatrix operator-(const CMatrix &a, const CMatrix &b) {
    return zip(a, b, std::minus<>{});
}

CMatrix operator*(Complex s, const CMatrix &m) {
    std::vector<Complex> out(m.entries().begin(), m.entries().end());
    for (auto &z : out) {
        z *= s;
    }
    return CMatrix(m.rows(), m.cols(), std::move(out));
}

CVector operator+(const CVector &a, const CVector &b) {
    return zip(a, b, std::plus<>{});
}

CVector operator-(const CVector &a, const CVector &b) {
    return zip(a, b, std::minus<>{});
}

CVector operator*(Complex s, const CVector &v) {
    std::vector<Complex> out(v.entries().begin(), v.entries().end());
    for (auto &z : out) {
        z *= s;
    }
    return CVector(std::move(out));
}

CMatrix outer_product(const CVector &v, const CVector &w) {
    std::vector<Complex> out(v.dim() * w.dim());
    for (std::size_t r = 0; r < v.dim(); r++) {
        for (std::size_t c = 0; c < w.dim(); c++) {
            out[r * w.dim() + c] = v[r] * std::conj(w[c]);
        }
    }
    return CMatrix(v.dim(), w.dim(), std::move(out));
}

Complex inner(const CVector &a, const CVector &b) {
    if (a.dim() != b.dim()) {
        throw ShapeError("mismatched dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    }
    Complex acc = 0;
    for (std::size_t k = 0; k < a.dim(); k++) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

double norm2(const CVector &v) {
    double acc = 0;
    for (const auto &z : v.entries()) {
        acc += std::norm(z);
    }
    return std::sqrt(acc);
}

Complex trace(const CMatrix &m) {
    if (!m.is_square()) {
        throw ShapeError("trace of non-square " + dims(m.rows(), m.cols()) + " matrix");
    }
    Complex acc = 0;
    for (std::size_t k = 0; k < m.rows(); k++) {
        acc += m(k, k);
    }
    return acc;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("mismatched shapes " + dims(a.rows(), a.cols()) + " and " + dims(b.rows(), b.cols()));
    }
    double worst = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); k++) {
        worst = std::max(worst, std::abs(ea[k] - eb[k]));
    }
    return worst;
}

double max_abs_diff(const CVector &a, const CVector &b) {
    if (a.dim() != b.dim()) {
        throw ShapeError("mismatched dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    }
    double worst = 0;
    for (std::size_t k = 0; k < a.dim(); k++) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

double unitarity_defect(const CMatrix &m) {
    if (!m.is_square()) {
        throw ShapeError("unitarity of non-square " + dims(m.rows(), m.cols()) + " matrix");
    }
    return max_abs_diff(matmul(dagger(m), m), CMatrix::identity(m.rows()));
}

double hermiticity_defect(const CMatrix &m) {
    if (!m.is_square()) {
        throw ShapeError("hermiticity of non-square " + dims(m.rows(), m.cols()) + " matrix");
    }
    double worst = 0;
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = r; c < m.cols(); c++) {
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return worst;
}

CMatrix partial_trace(const CMatrix &rho, Subsystem keep, std::size_t dim_a, std::size_t dim_b) {
    if (dim_a == 0 || dim_b == 0 || !rho.is_square() || rho.rows() != dim_a * dim_b) {
        throw ShapeError("partial trace expects a square " + std::to_string(dim_a * dim_b) + "-dimensional matrix, got " +
                         dims(rho.rows(), rho.cols()));
    }
    if (hermiticity_defect(rho) > kValidityTol) {
        throw ValidityError("partial trace input is not Hermitian");
    }
    if (std::abs(trace(rho) - 1.0) > kValidityTol) {
        throw ValidityError("partial trace input does not have unit trace");
    }

    // Joint index of (a, b) is a * dim_b + b.
    if (keep == Subsystem::A) {
        std::vector<Complex> out(dim_a * dim_a);
        for (std::size_t i = 0; i < dim_a; i++) {
            for (std::size_t j = 0; j < dim_a; j++) {
                Complex acc = 0;
                for (std::size_t k = 0; k < dim_b; k++) {
                    acc += rho(i * dim_b + k, j * dim_b + k);
                }
                out[i * dim_a + j] = acc;
            }
        }
        return CMatrix(dim_a, dim_a, std::move(out));
    }
    std::vector<Complex> out(dim_b * dim_b);
    for (std::size_t i = 0; i < dim_b; i++) {
        for (std::size_t j = 0; j < dim_b; j++) {
            Complex acc = 0;
            for (std::size_t k = 0; k < dim_a; k++) {
                acc += rho(k * dim_b + i, k * dim_b + j);
            }
            out[i * dim_b + j] = acc;
        }
    }
    return CMatrix(dim_b, dim_b, std::move(out));
}

double purity(const CMatrix &rho) {
    if (!rho.is_square()) {
        throw ShapeError("purity of non-square " + dims(rho.rows(), rho.cols()) + " matrix");
    }
    // Tr(rho rho) without forming the product.
    Complex acc = 0;
    for (std::size_t r = 0; r < rho.rows(); r++) {
        for (std::size_t c = 0; c < rho.cols(); c++) {
            acc += rho(r, c) * rho(c, r);
        }
    }
    return acc.real();
}

double trace_distance_2x2(const CMatrix &rho, const CMatrix &sigma) {
    for (const auto *m : {&rho, &sigma}) {
        if (m->rows() != 2 || m->cols() != 2) {
            throw UnsupportedDimensionError("trace distance is only implemented for 2x2 matrices, got " +
                                            dims(m->rows(), m->cols()));
        }
    }
    CMatrix d = rho - sigma;
    double a = d(0, 0).real();
    double c = d(1, 1).real();
    // Average the two off-diagonal entries so tiny Hermiticity errors cancel.
    Complex b = 0.5 * (d(0, 1) + std::conj(d(1, 0)));
    double mean = 0.5 * (a + c);
    double radius = 0.5 * std::sqrt((a - c) * (a - c) + 4 * std::norm(b));
    double lo = mean - radius;
    double hi = mean + radius;
    return 0.5 * (std::abs(lo) + std::abs(hi));
}

}  // namespace qparadox
