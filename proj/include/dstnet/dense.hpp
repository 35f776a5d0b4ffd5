// Copyright 2026 The dstnet Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace dstnet {

using cplx = std::complex<double>;

/// Row-major dense complex matrix. This is the deliberately simple storage
/// used by the reference transforms and every oracle computation; nothing in
/// here tries to be fast.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cplx> entries;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    cplx& operator()(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    bool square() const { return rows == cols; }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    bool operator==(const DenseMatrix&) const = default;
};

inline DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix product: inner dimensions differ");
    DenseMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

inline DenseMatrix transpose(const DenseMatrix& m) {
    DenseMatrix t(m.cols, m.rows);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) t(c, r) = m(r, c);
    return t;
}

inline DenseMatrix adjoint(const DenseMatrix& m) {
    DenseMatrix t(m.cols, m.rows);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) t(c, r) = std::conj(m(r, c));
    return t;
}

inline DenseMatrix direct_sum(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix s(a.rows + b.rows, a.cols + b.cols);
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t c = 0; c < a.cols; ++c) s(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows; ++r)
        for (std::size_t c = 0; c < b.cols; ++c) s(a.rows + r, a.cols + c) = b(r, c);
    return s;
}

inline DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix k(a.rows * b.rows, a.cols * b.cols);
    for (std::size_t ra = 0; ra < a.rows; ++ra)
        for (std::size_t ca = 0; ca < a.cols; ++ca) {
            const cplx v = a(ra, ca);
            if (v == cplx{}) continue;
            for (std::size_t rb = 0; rb < b.rows; ++rb)
                for (std::size_t cb = 0; cb < b.cols; ++cb)
                    k(ra * b.rows + rb, ca * b.cols + cb) = v * b(rb, cb);
        }
    return k;
}

inline double max_abs(const DenseMatrix& m) {
    double d = 0.0;
    for (const cplx& e : m.entries) d = std::max(d, std::abs(e));
    return d;
}

inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("max_abs_diff: shapes differ");
    double d = 0.0;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        d = std::max(d, std::abs(a.entries[i] - b.entries[i]));
    return d;
}

/// max |M M^dagger - I|; zero for a perfectly unitary matrix.
inline double unitarity_defect(const DenseMatrix& m) {
    if (!m.square()) throw std::invalid_argument("unitarity_defect: matrix not square");
    return max_abs_diff(m * adjoint(m), DenseMatrix::identity(m.rows));
}

namespace detail {

inline void require_positive_size(std::size_t n, const char* what) {
    if (n == 0) throw std::invalid_argument(std::string(what) + ": size must be positive");
}

// sin(num * pi / den) with the integer numerator reduced mod 2*den first, so
// the libm argument stays below 2*pi regardless of the matrix size.
inline double sin_pi_ratio(std::int64_t num, std::int64_t den) {
    num %= 2 * den;
    if (num < 0) num += 2 * den;
    return std::sin(static_cast<double>(num) * std::numbers::pi / static_cast<double>(den));
}

inline cplx unit_phase(std::int64_t num, std::int64_t den) {
    // exp(-2 pi i num/den), num reduced mod den
    num %= den;
    const double theta = -2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(theta), std::sin(theta)};
}

}  // namespace detail

/// entry(a,b) = exp(-2 pi i a b / n)
inline DenseMatrix dft_matrix(std::size_t n) {
    detail::require_positive_size(n, "dft_matrix");
    DenseMatrix m(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            m(a, b) = detail::unit_phase(static_cast<std::int64_t>(a * b), static_cast<std::int64_t>(n));
    return m;
}

/// entry(a,b) = sin((a+1)(b+1) pi / (n+1))
inline DenseMatrix dst1_matrix(std::size_t n) {
    detail::require_positive_size(n, "dst1_matrix");
    DenseMatrix m(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            m(a, b) = detail::sin_pi_ratio(static_cast<std::int64_t>((a + 1) * (b + 1)),
                                           static_cast<std::int64_t>(n + 1));
    return m;
}

/// entry(a,b) = sin((a+1/2)(b+1) pi / n)
inline DenseMatrix dst3_matrix(std::size_t n) {
    detail::require_positive_size(n, "dst3_matrix");
    DenseMatrix m(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            m(a, b) = detail::sin_pi_ratio(static_cast<std::int64_t>((2 * a + 1) * (b + 1)),
                                           static_cast<std::int64_t>(2 * n));
    return m;
}

/// Orthogonal rescaling sqrt(2/(n+1)) * DST-I_n; symmetric and involutive.
inline DenseMatrix orthonormal_dst1(std::size_t n) {
    DenseMatrix m = dst1_matrix(n);
    const double s = std::sqrt(2.0 / static_cast<double>(n + 1));
    for (cplx& e : m.entries) e *= s;
    return m;
}

/// Orthogonal rescaling sqrt(2/n) * DST-III_n with the last column scaled by
/// an extra 1/sqrt(2).
inline DenseMatrix orthonormal_dst3(std::size_t n) {
    DenseMatrix m = dst3_matrix(n);
    const double s = std::sqrt(2.0 / static_cast<double>(n));
    const double last = std::numbers::sqrt2 / 2.0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            m(a, b) *= s;
            if (b + 1 == n) m(a, b) *= last;
        }
    }
    return m;
}

/// Unitary rescaling DFT_n / sqrt(n).
inline DenseMatrix orthonormal_dft(std::size_t n) {
    DenseMatrix m = dft_matrix(n);
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (cplx& e : m.entries) e *= s;
    return m;
}

}  // namespace dstnet
