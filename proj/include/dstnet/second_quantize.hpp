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

#include <bit>
#include <cstdint>
#include <vector>

#include "dstnet/dense.hpp"

namespace dstnet {

// Occupation-number convention used everywhere in this library: the
// occupation of mode a is bit (n-1-a) of the basis index, i.e. mode 0 is the
// most significant bit. For n = 2 the basis order is |00>, |01>, |10>, |11>.

inline bool mode_occupied(std::uint64_t index, std::size_t n, std::size_t mode) {
    if (mode >= n) throw std::out_of_range("mode_occupied: mode index out of range");
    return (index >> (n - 1 - mode)) & 1u;
}

/// Occupied modes of a basis index, in ascending mode order.
inline std::vector<std::uint32_t> occupied_modes(std::uint64_t index, std::size_t n) {
    std::vector<std::uint32_t> modes;
    for (std::size_t a = 0; a < n; ++a)
        if ((index >> (n - 1 - a)) & 1u) modes.push_back(static_cast<std::uint32_t>(a));
    return modes;
}

/// Determinant of a square matrix: closed-form expansion up to 3x3, LU with
/// partial pivoting beyond that.
inline cplx determinant(DenseMatrix a) {
    if (!a.square()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t p = a.rows;
    if (p == 0) return 1.0;
    if (p == 1) return a(0, 0);
    if (p == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    if (p == 3) {
        return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
               a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
               a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    }
    cplx det = 1.0;
    for (std::size_t k = 0; k < p; ++k) {
        std::size_t pivot = k;
        double best = std::abs(a(k, k));
        for (std::size_t r = k + 1; r < p; ++r) {
            const double cand = std::abs(a(r, k));
            if (cand > best) {
                best = cand;
                pivot = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != k) {
            for (std::size_t c = k; c < p; ++c) std::swap(a(k, c), a(pivot, c));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t r = k + 1; r < p; ++r) {
            const cplx f = a(r, k) / a(k, k);
            if (f == cplx{}) continue;
            for (std::size_t c = k + 1; c < p; ++c) a(r, c) -= f * a(k, c);
        }
    }
    return det;
}

/// Dense-oracle ceiling: the output has 4^n entries.
inline constexpr std::size_t kSecondQuantizeMaxModes = 14;

/// Lifts an n x n single-particle matrix U to the 2^n-dimensional fermionic
/// occupation basis. Matrix element (l, k) vanishes unless l and k carry the
/// same particle number; otherwise it is the determinant of the submatrix of
/// U on rows L (occupied modes of l, ascending) and columns K (occupied modes
/// of k, ascending). The vacuum-to-vacuum element is 1.
inline DenseMatrix second_quantize_dense(const DenseMatrix& u) {
    if (!u.square()) throw std::invalid_argument("second_quantize_dense: matrix not square");
    const std::size_t n = u.rows;
    if (n > kSecondQuantizeMaxModes)
        throw std::invalid_argument("second_quantize_dense: size guard exceeded (n <= 14)");
    const std::size_t dim = std::size_t{1} << n;

    std::vector<std::vector<std::uint32_t>> occ(dim);
    for (std::size_t x = 0; x < dim; ++x) occ[x] = occupied_modes(x, n);

    DenseMatrix gamma(dim, dim);
    for (std::size_t l = 0; l < dim; ++l) {
        const auto& rows = occ[l];
        for (std::size_t k = 0; k < dim; ++k) {
            const auto& cols = occ[k];
            if (rows.size() != cols.size()) continue;
            const std::size_t p = rows.size();
            if (p == 0) {
                gamma(l, k) = 1.0;
                continue;
            }
            DenseMatrix sub(p, p);
            for (std::size_t r = 0; r < p; ++r)
                for (std::size_t c = 0; c < p; ++c) sub(r, c) = u(rows[r], cols[c]);
            gamma(l, k) = determinant(std::move(sub));
        }
    }
    return gamma;
}

}  // namespace dstnet
