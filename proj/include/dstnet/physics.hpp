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
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "dstnet/dense.hpp"
#include "dstnet/exec.hpp"
#include "dstnet/fock.hpp"
#include "dstnet/planner.hpp"
#include "dstnet/second_quantize.hpp"

namespace dstnet {

// Application demo: the open-chain hopping Hamiltonian is diagonalized by
// the first-kind sine transform, at the single-particle level and — through
// second quantization — on the full Fock space.

/// Open chain of n sites with hopping amplitude t: tridiagonal, zero
/// diagonal, t on both off-diagonals.
struct HoppingHamiltonian {
    std::size_t n = 0;
    double t = 1.0;
    DenseMatrix matrix;
};

inline HoppingHamiltonian hopping_hamiltonian(std::size_t n, double t = 1.0) {
    detail::require_positive_size(n, "hopping_hamiltonian");
    HoppingHamiltonian h;
    h.n = n;
    h.t = t;
    h.matrix = DenseMatrix(n, n);
    for (std::size_t a = 0; a + 1 < n; ++a) {
        h.matrix(a, a + 1) = t;
        h.matrix(a + 1, a) = t;
    }
    return h;
}

/// Single-particle eigenvalues 2t cos((b+1) pi / (n+1)) in transform column
/// order b = 0..n-1 (descending cosine), preserving the mode-label
/// correspondence. Requires the open-chain family size n = 2^k - 1.
inline std::vector<double> spectrum_via_dst(std::size_t n, double t = 1.0) {
    if (n < 1 || !std::has_single_bit(static_cast<std::uint64_t>(n) + 1))
        throw std::invalid_argument("spectrum_via_dst: size must be 2^k - 1");
    std::vector<double> lam(n);
    for (std::size_t b = 0; b < n; ++b)
        lam[b] = 2.0 * t *
                 std::cos(static_cast<double>(b + 1) * std::numbers::pi /
                          static_cast<double>(n + 1));
    return lam;
}

struct SpectrumResidual {
    double max_offdiag = 0.0;
    double max_diag_deviation = 0.0;
};

/// Conjugates the hopping matrix by a first-kind sine plan using the fast
/// path (apply_inverse . H . apply per column, an exact transpose
/// conjugation for orthogonal plans) and reports how far the result is from
/// the predicted diagonal.
inline SpectrumResidual single_particle_residual(const Plan& plan, double t = 1.0) {
    if (plan.kind != TransformKind::dst1)
        throw std::invalid_argument("single_particle_residual: plan must be of the dst1 kind");
    const std::size_t n = plan.n;
    const std::vector<double> lam = spectrum_via_dst(n, t);
    SpectrumResidual r;
    std::vector<double> e(n, 0.0);
    for (std::size_t d = 0; d < n; ++d) {
        e.assign(n, 0.0);
        e[d] = 1.0;
        // Qualified calls: an unqualified `apply` with std::vector arguments
        // can pull std::apply into the overload set via ADL.
        std::vector<double> v = dstnet::apply(plan, std::move(e));
        std::vector<double> w(n, 0.0);
        for (std::size_t a = 0; a < n; ++a) {
            double acc = 0.0;
            if (a > 0) acc += t * v[a - 1];
            if (a + 1 < n) acc += t * v[a + 1];
            w[a] = acc;
        }
        std::vector<double> col = dstnet::apply_inverse(plan, std::move(w));
        for (std::size_t c = 0; c < n; ++c) {
            if (c == d)
                r.max_diag_deviation = std::max(r.max_diag_deviation, std::abs(col[c] - lam[d]));
            else
                r.max_offdiag = std::max(r.max_offdiag, std::abs(col[c]));
        }
    }
    return r;
}

/// Many-body hopping operator sum_a t (c^dag_a c_{a+1} + h.c.) as a dense
/// 2^n matrix in the occupation basis. Adjacent hops carry no exchange
/// string sign, which is why only the nearest-neighbor chain is offered.
inline DenseMatrix many_body_hopping(std::size_t n, double t = 1.0) {
    detail::require_positive_size(n, "many_body_hopping");
    if (n > kSecondQuantizeMaxModes)
        throw std::invalid_argument("many_body_hopping: size guard exceeded (n <= 14)");
    const std::size_t dim = std::size_t{1} << n;
    DenseMatrix h(dim, dim);
    for (std::size_t x = 0; x < dim; ++x) {
        for (std::size_t a = 0; a + 1 < n; ++a) {
            const std::uint64_t bit_a = std::uint64_t{1} << (n - 1 - a);
            const std::uint64_t bit_b = bit_a >> 1;  // mode a+1
            const bool occ_a = (x & bit_a) != 0;
            const bool occ_b = (x & bit_b) != 0;
            if (occ_a == occ_b) continue;
            const std::size_t y = x ^ bit_a ^ bit_b;
            h(y, x) += t;
        }
    }
    return h;
}

struct ManyBodyReport {
    std::size_t n = 0;
    double t = 1.0;
    /// Largest off-diagonal magnitude of the conjugated many-body operator.
    double max_offdiag = 0.0;
    /// Largest deviation of its diagonal from the occupation-weighted
    /// eigenvalue sums.
    double max_diag_deviation = 0.0;
    /// Sum of the negative single-particle eigenvalues (filling all
    /// negative-energy modes).
    double ground_energy = 0.0;
    /// Smallest diagonal entry of the conjugated operator.
    double min_diagonal = 0.0;
    bool diagonal_ok = false;
};

inline constexpr double kManyBodyDiagonalTolerance = 1e-9;

/// Builds the many-body chain Hamiltonian, conjugates it by the circuit
/// operator of the matching first-kind sine plan, and certifies that the
/// result is diagonal with entries sum_b k_b * 2t cos((b+1) pi / (n+1)).
inline ManyBodyReport verify_many_body_diagonalization(std::size_t n, double t = 1.0) {
    if (n < 1 || !std::has_single_bit(static_cast<std::uint64_t>(n) + 1))
        throw std::invalid_argument("verify_many_body_diagonalization: size must be 2^k - 1");
    if (n > 10)
        throw std::invalid_argument("verify_many_body_diagonalization: size guard exceeded (n <= 10)");
    const unsigned k = static_cast<unsigned>(std::countr_zero(static_cast<std::uint64_t>(n) + 1));
    const Plan plan = plan_dst1(k);
    const DenseMatrix gamma = circuit_operator(plan);
    const DenseMatrix h = many_body_hopping(n, t);
    const DenseMatrix conj = transpose(gamma) * h * gamma;
    const std::vector<double> lam = spectrum_via_dst(n, t);

    ManyBodyReport rep;
    rep.n = n;
    rep.t = t;
    const std::size_t dim = std::size_t{1} << n;
    for (std::size_t x = 0; x < dim; ++x) {
        double expected = 0.0;
        for (std::size_t b = 0; b < n; ++b)
            if ((x >> (n - 1 - b)) & 1u) expected += lam[b];
        for (std::size_t y = 0; y < dim; ++y) {
            const double mag = std::abs(conj(y, x));
            if (y == x)
                rep.max_diag_deviation =
                    std::max(rep.max_diag_deviation, std::abs(conj(x, x).real() - expected));
            else
                rep.max_offdiag = std::max(rep.max_offdiag, mag);
        }
        const double diag = conj(x, x).real();
        if (x == 0 || diag < rep.min_diagonal) rep.min_diagonal = diag;
    }
    for (double l : lam)
        if (l < 0.0) rep.ground_energy += l;
    rep.diagonal_ok = rep.max_offdiag < kManyBodyDiagonalTolerance &&
                      rep.max_diag_deviation < kManyBodyDiagonalTolerance;
    return rep;
}

}  // namespace dstnet
