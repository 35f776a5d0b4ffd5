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
#include <numeric>
#include <vector>

#include "dstnet/gate.hpp"
#include "dstnet/planner.hpp"
#include "dstnet/second_quantize.hpp"

namespace dstnet {

// Exact fermionic statevector simulator over 2^n amplitudes. The occupation
// convention matches second_quantize.hpp: mode 0 is the most significant bit
// of the basis index.

inline constexpr std::size_t kFockMaxModes = 24;
inline constexpr std::size_t kCircuitOperatorMaxModes = 12;

struct FockState {
    std::size_t n = 0;
    std::vector<cplx> amp;

    static FockState vacuum(std::size_t n) {
        FockState s;
        s.n = n;
        s.amp.assign(std::size_t{1} << n, cplx{});
        s.amp[0] = 1.0;
        return s;
    }

    static FockState basis(std::size_t n, std::uint64_t index) {
        if (index >= (std::uint64_t{1} << n))
            throw std::out_of_range("FockState::basis: index out of range");
        FockState s;
        s.n = n;
        s.amp.assign(std::size_t{1} << n, cplx{});
        s.amp[index] = 1.0;
        return s;
    }
};

namespace detail {

inline void check_fock_mode(const FockState& s, std::uint64_t mode, const char* what) {
    if (mode >= s.n) throw std::out_of_range(std::string(what) + ": mode index out of range");
}

inline void check_perm_map(const std::vector<std::uint32_t>& pi, const char* what) {
    std::vector<bool> seen(pi.size(), false);
    for (std::uint32_t image : pi) {
        if (image >= pi.size() || seen[image])
            throw std::invalid_argument(std::string(what) + ": map is not a permutation");
        seen[image] = true;
    }
}

}  // namespace detail

/// Second-quantized action of a 2x2 matrix on the mode pair (i, j), i < j.
/// The singly occupied sector mixes through u with the exchange string sign
/// (-1)^t on the hopping terms, t = number of occupied modes strictly
/// between i and j; the doubly occupied amplitude picks up det u; the empty
/// sector is untouched.
inline void apply_two_mode(FockState& s, std::uint32_t i, std::uint32_t j, const Mat2& u) {
    detail::check_fock_mode(s, i, "apply_two_mode");
    detail::check_fock_mode(s, j, "apply_two_mode");
    if (i == j) throw std::invalid_argument("apply_two_mode: modes must form a pair (i < j)");
    if (i > j) throw std::invalid_argument("apply_two_mode: requires i < j");
    const std::size_t n = s.n;
    const std::uint64_t dim = std::uint64_t{1} << n;
    const std::uint64_t bit_i = std::uint64_t{1} << (n - 1 - i);
    const std::uint64_t bit_j = std::uint64_t{1} << (n - 1 - j);
    const std::uint64_t between = j - i - 1;
    const std::uint64_t mask = ((std::uint64_t{1} << between) - 1) << (n - j);
    const cplx det = det2(u);
    for (std::uint64_t b = 0; b < dim; ++b) {
        const bool occ_i = (b & bit_i) != 0;
        const bool occ_j = (b & bit_j) != 0;
        if (occ_i && occ_j) {
            s.amp[b] *= det;
        } else if (occ_i && !occ_j) {
            const std::uint64_t partner = b ^ bit_i ^ bit_j;  // the (0, 1) configuration
            const double sign = (std::popcount(b & mask) & 1) ? -1.0 : 1.0;
            const cplx x = s.amp[b], y = s.amp[partner];
            s.amp[b] = u[0] * x + sign * u[1] * y;
            s.amp[partner] = sign * u[2] * x + u[3] * y;
        }
    }
}

/// Multiplies every amplitude whose mode i is occupied by alpha.
inline void apply_scalar(FockState& s, std::uint32_t i, cplx alpha) {
    detail::check_fock_mode(s, i, "apply_scalar");
    const std::uint64_t dim = std::uint64_t{1} << s.n;
    const std::uint64_t bit_i = std::uint64_t{1} << (s.n - 1 - i);
    for (std::uint64_t b = 0; b < dim; ++b)
        if (b & bit_i) s.amp[b] *= alpha;
}

/// Relocates occupations along the full-length image map pi and multiplies
/// each basis amplitude by the parity of pi restricted to its occupied
/// modes (the determinant of the occupied permutation submatrix).
inline void apply_perm(FockState& s, const std::vector<std::uint32_t>& pi) {
    if (pi.size() != s.n) throw std::invalid_argument("apply_perm: map length must equal mode count");
    detail::check_perm_map(pi, "apply_perm");
    const std::size_t n = s.n;
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<cplx> out(dim, cplx{});
    std::vector<std::uint32_t> images;
    images.reserve(n);
    for (std::uint64_t b = 0; b < dim; ++b) {
        const cplx a = s.amp[b];
        if (a == cplx{}) continue;
        images.clear();
        std::uint64_t target = 0;
        for (std::size_t mode = 0; mode < n; ++mode) {
            if ((b >> (n - 1 - mode)) & 1u) {
                images.push_back(pi[mode]);
                target |= std::uint64_t{1} << (n - 1 - pi[mode]);
            }
        }
        std::uint64_t inversions = 0;
        for (std::size_t x = 0; x < images.size(); ++x)
            for (std::size_t y = x + 1; y < images.size(); ++y)
                if (images[x] > images[y]) ++inversions;
        out[target] = ((inversions & 1) ? -1.0 : 1.0) * a;
    }
    s.amp.swap(out);
}

/// Applies the second quantization of every gate of the plan, in order.
inline void apply_plan_fock(FockState& s, const Plan& plan) {
    if (plan.n > kFockMaxModes)
        throw std::invalid_argument("apply_plan_fock: size guard exceeded (n <= 24)");
    if (s.n != plan.n)
        throw std::invalid_argument("apply_plan_fock: state mode count does not match plan size");
    for (const Gate& g : plan.gates) {
        if (const auto* two = std::get_if<TwoModeGate>(&g)) {
            apply_two_mode(s, two->i, two->j, two->u);
        } else if (const auto* sc = std::get_if<ScalarGate>(&g)) {
            apply_scalar(s, sc->mode, sc->value);
        } else {
            apply_perm(s, std::get<PermGate>(g).full_map(plan.n));
        }
    }
}

/// Materializes the full 2^n x 2^n operator of a plan by applying it to
/// every occupation basis state.
inline DenseMatrix circuit_operator(const Plan& plan) {
    if (plan.n > kCircuitOperatorMaxModes)
        throw std::invalid_argument("circuit_operator: size guard exceeded (n <= 12)");
    const std::size_t dim = std::size_t{1} << plan.n;
    DenseMatrix out(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        FockState s = FockState::basis(plan.n, k);
        apply_plan_fock(s, plan);
        for (std::size_t l = 0; l < dim; ++l) out(l, k) = s.amp[l];
    }
    return out;
}

/// Lowers a permutation to adjacent transpositions: returns positions p
/// meaning "swap components p and p+1", to be applied left-to-right. The
/// sequence realizes pi exactly (scatter semantics) and has length equal to
/// the inversion count of pi, at most n(n-1)/2.
inline std::vector<std::uint32_t> swap_network(const std::vector<std::uint32_t>& pi) {
    detail::check_perm_map(pi, "swap_network");
    const std::size_t n = pi.size();
    std::vector<std::uint32_t> at(n);  // at[p] = component currently at position p
    std::iota(at.begin(), at.end(), 0u);
    std::vector<std::uint32_t> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            if (pi[at[p]] > pi[at[p + 1]]) {
                std::swap(at[p], at[p + 1]);
                swaps.push_back(static_cast<std::uint32_t>(p));
                moved = true;
            }
        }
    }
    return swaps;
}

}  // namespace dstnet
