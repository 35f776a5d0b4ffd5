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
#include "dstnet/gate.hpp"

namespace dstnet {

/// Largest supported recursion level. A level-20 DST-I plan already holds
/// ~23M gates (~2.3 GB); larger levels fail loudly instead of exhausting
/// memory.
inline constexpr unsigned kMaxPlanLevel = 20;

/// compose_dense materializes an n x n complex matrix; keep it desk-scale.
inline constexpr std::size_t kComposeDenseMaxSize = 4096;

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

/// Odd-size sort-by-parity permutation: component b moves to component
/// 2b mod n. Equivalently, row a of the permutation matrix has its 1 in
/// column a(n+1)/2 mod n.
inline PermGate perm_Lbar(std::size_t n) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("perm_Lbar: size must be odd");
    PermGate g;
    g.map.resize(n);
    for (std::size_t b = 0; b < n; ++b) g.map[b] = static_cast<std::uint32_t>((2 * b) % n);
    return g;
}

/// Even-size variant: the odd-size permutation on the first n-1 components,
/// with the last component fixed.
inline PermGate perm_L(std::size_t n) {
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("perm_L: size must be even");
    PermGate g;
    g.map.resize(n);
    for (std::size_t b = 0; b + 1 < n; ++b) g.map[b] = static_cast<std::uint32_t>((2 * b) % (n - 1));
    g.map[n - 1] = static_cast<std::uint32_t>(n - 1);
    return g;
}

/// perm_L followed by a swap within every second adjacent pair
/// (components 2,3 and 6,7 and ...).
inline PermGate perm_K(std::size_t n) {
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("perm_K: size must be even");
    PermGate g = perm_L(n);
    for (std::uint32_t& v : g.map)
        if ((v / 2) % 2 == 1) v ^= 1u;
    return g;
}

namespace detail {

// Canonicalizes a window-local image map, shifts it to `offset`, and appends
// it; identity permutations produce no gate at all.
inline void push_perm(std::vector<Gate>& out, std::uint32_t offset,
                      const std::vector<std::uint32_t>& local_map) {
    auto g = PermGate::from_full(local_map);
    if (!g) return;
    g->offset += offset;
    out.push_back(std::move(*g));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Block builders
// ---------------------------------------------------------------------------

/// Front block of the odd-size sine recursion (total size 2m-1): a reversal
/// of the upper window [m, 2m-1), then m-1 butterflies coupling (l, m+l) for
/// l = 0..m-2. Component m-1 is untouched.
inline std::vector<Gate> build_mhat(std::size_t m, std::uint32_t offset = 0) {
    if (m < 2) throw std::invalid_argument("build_mhat: requires m >= 2");
    std::vector<Gate> out;
    std::vector<std::uint32_t> rev(m - 1);
    for (std::size_t t = 0; t + 1 < m; ++t) rev[t] = static_cast<std::uint32_t>(m - 2 - t);
    detail::push_perm(out, offset + static_cast<std::uint32_t>(m), rev);
    for (std::size_t l = 0; l + 1 < m; ++l)
        out.push_back(fhat_gate(offset + static_cast<std::uint32_t>(l),
                                offset + static_cast<std::uint32_t>(m + l)));
    return out;
}

/// Front block of the even-size sine recursion (total size 2m): one
/// Rot(-m, 2m) gate (angle -pi/8) on the pair (m/2-1, 3m/2-1), then
/// m/2-1 pi/4 rotations on the pairs (m/2-1+l, 3m/2-1-l), l = 1..m/2-1.
inline std::vector<Gate> build_nhat(std::size_t m, std::uint32_t offset = 0) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("build_nhat: requires even m >= 2");
    std::vector<Gate> out;
    const std::uint32_t h = static_cast<std::uint32_t>(m / 2);
    out.push_back(rot_gate(-static_cast<std::int32_t>(m), static_cast<std::uint32_t>(2 * m),
                           offset + h - 1, offset + 3 * h - 1));
    for (std::uint32_t l = 1; l < h; ++l)
        out.push_back(ghat_gate(offset + h - 1 + l, offset + 3 * h - 1 - l));
    return out;
}

/// Half-size rotation cascade: Rot(sign*l, m) on the pairs (l-1, m-1-l),
/// l = 1..m/2-1. Components m/2-1 and m-1 are untouched.
inline std::vector<Gate> build_qhat(std::size_t m, int sign, std::uint32_t offset = 0) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("build_qhat: requires even m >= 2");
    if (sign != 1 && sign != -1) throw std::invalid_argument("build_qhat: sign must be +1 or -1");
    std::vector<Gate> out;
    for (std::uint32_t l = 1; l < m / 2; ++l)
        out.push_back(rot_gate(sign * static_cast<std::int32_t>(l), static_cast<std::uint32_t>(m),
                               offset + l - 1, offset + static_cast<std::uint32_t>(m) - 1 - l));
    return out;
}

// ---------------------------------------------------------------------------
// Recursive plan builders
// ---------------------------------------------------------------------------

namespace detail {

// Exact gate counts of the emitters below, used to reserve the gate vector in
// one shot (level-20 plans must not reallocate-and-double their way to 2x
// peak memory).

inline std::size_t count_gates_dft(std::size_t n) {
    if (n <= 1) return 0;
    const std::size_t m = n / 2;
    return m + (m - 1) + 2 * count_gates_dft(m) + (n >= 4 ? 1 : 0);
}

inline std::size_t count_gates_dst3(std::size_t n) {
    if (n <= 1) return 0;
    if (n == 2) return 1;
    const std::size_t m = n / 2, h = m / 2;
    return (1 + (h - 1)) + m + 2 * (h - 1) + 2 * count_gates_dst3(m) + 1;
}

inline std::size_t count_gates_dst1(std::size_t n) {
    if (n <= 1) return 0;
    const std::size_t m = (n + 1) / 2;
    return (m >= 3 ? 1 : 0) + (m - 1) + count_gates_dst3(m) + count_gates_dst1(m - 1) + 1;
}

inline void append(std::vector<Gate>& out, std::vector<Gate>&& extra) {
    for (Gate& g : extra) out.push_back(std::move(g));
}

inline void emit_dft(std::vector<Gate>& out, std::uint32_t offset, std::size_t n) {
    if (n <= 1) return;
    const std::size_t m = n / 2;
    for (std::size_t l = 0; l < m; ++l)
        out.push_back(fhat_gate(offset + static_cast<std::uint32_t>(l),
                                offset + static_cast<std::uint32_t>(m + l)));
    // Twiddles on the upper half; the l = 0 twiddle is 1 and omitted.
    for (std::size_t l = 1; l < m; ++l)
        out.push_back(scalar_gate(offset + static_cast<std::uint32_t>(m + l),
                                  unit_phase(static_cast<std::int64_t>(l),
                                             static_cast<std::int64_t>(n))));
    emit_dft(out, offset, m);
    emit_dft(out, offset + static_cast<std::uint32_t>(m), m);
    push_perm(out, offset, perm_L(n).map);
}

inline void emit_dst3(std::vector<Gate>& out, std::uint32_t offset, std::size_t n) {
    if (n <= 1) return;
    if (n == 2) {
        out.push_back(fhat_gate(offset, offset + 1));
        return;
    }
    const std::size_t m = n / 2;
    append(out, build_nhat(m, offset));
    for (std::size_t l = 0; l < m; ++l)
        out.push_back(fhat_gate(offset + static_cast<std::uint32_t>(l),
                                offset + static_cast<std::uint32_t>(m + l)));
    append(out, build_qhat(m, -1, offset));
    append(out, build_qhat(m, +1, offset + static_cast<std::uint32_t>(m)));
    emit_dst3(out, offset, m);
    emit_dst3(out, offset + static_cast<std::uint32_t>(m), m);
    push_perm(out, offset, perm_K(n).map);
}

inline void emit_dst1(std::vector<Gate>& out, std::uint32_t offset, std::size_t n) {
    if (n <= 1) return;
    const std::size_t m = (n + 1) / 2;
    append(out, build_mhat(m, offset));
    emit_dst3(out, offset, m);
    emit_dst1(out, offset + static_cast<std::uint32_t>(m), m - 1);
    push_perm(out, offset, perm_Lbar(n).map);
}

inline void check_level(unsigned k, const char* what) {
    if (k < 1) throw std::invalid_argument(std::string(what) + ": level must be >= 1");
    if (k > kMaxPlanLevel)
        throw std::invalid_argument(std::string(what) + ": level exceeds supported maximum " +
                                    std::to_string(kMaxPlanLevel) + " (memory guard)");
}

}  // namespace detail

/// Fully orthogonal plan for the unitary size-2^k Fourier transform:
/// butterflies, unit-modulus scalar twiddles, and sort-by-parity
/// permutations.
inline Plan plan_dft(unsigned k) {
    detail::check_level(k, "plan_dft");
    Plan p;
    p.kind = TransformKind::dft;
    p.n = std::size_t{1} << k;
    p.gates.reserve(detail::count_gates_dft(p.n));
    detail::emit_dft(p.gates, 0, p.n);
    return p;
}

/// Fully orthogonal plan for the size-(2^k - 1) orthonormal sine transform
/// of the first kind. Level 1 is the 1x1 identity: an empty gate list.
inline Plan plan_dst1(unsigned k) {
    detail::check_level(k, "plan_dst1");
    Plan p;
    p.kind = TransformKind::dst1;
    p.n = (std::size_t{1} << k) - 1;
    p.gates.reserve(detail::count_gates_dst1(p.n));
    detail::emit_dst1(p.gates, 0, p.n);
    return p;
}

/// Fully orthogonal plan for the size-2^k orthonormal sine transform of the
/// third kind. Level 1 is the single butterfly.
inline Plan plan_dst3(unsigned k) {
    detail::check_level(k, "plan_dst3");
    Plan p;
    p.kind = TransformKind::dst3;
    p.n = std::size_t{1} << k;
    p.gates.reserve(detail::count_gates_dst3(p.n));
    detail::emit_dst3(p.gates, 0, p.n);
    return p;
}

// ---------------------------------------------------------------------------
// Census and closed-form complexity
// ---------------------------------------------------------------------------

namespace detail {

/// Number of inversions of a sequence (merge-sort pass), i.e. the minimal
/// number of adjacent transpositions realizing it.
inline std::uint64_t count_inversions(std::vector<std::uint32_t> v) {
    std::uint64_t inv = 0;
    std::vector<std::uint32_t> buf(v.size());
    for (std::size_t width = 1; width < v.size(); width *= 2) {
        for (std::size_t lo = 0; lo + width < v.size(); lo += 2 * width) {
            const std::size_t mid = lo + width;
            const std::size_t hi = std::min(lo + 2 * width, v.size());
            std::size_t i = lo, j = mid, o = lo;
            while (i < mid && j < hi) {
                if (v[i] <= v[j]) {
                    buf[o++] = v[i++];
                } else {
                    buf[o++] = v[j++];
                    inv += mid - i;
                }
            }
            while (i < mid) buf[o++] = v[i++];
            while (j < hi) buf[o++] = v[j++];
            for (std::size_t t = lo; t < hi; ++t) v[t] = buf[t];
        }
    }
    return inv;
}

}  // namespace detail

/// Per-kind gate counts of a plan. "Elementary" excludes permutations, which
/// are free relabelings at the single-particle level; swap_total is the cost
/// of lowering every permutation to adjacent transpositions (its inversion
/// count, which a bubble network attains).
struct GateCensus {
    std::uint64_t fhat = 0;
    std::uint64_t ghat = 0;
    std::uint64_t rot = 0;
    std::uint64_t custom = 0;  // never present in emitted plans
    std::uint64_t scalar = 0;
    std::uint64_t perm = 0;
    std::uint64_t swap_total = 0;

    std::uint64_t elementary() const { return fhat + ghat + rot + custom + scalar; }

    bool operator==(const GateCensus&) const = default;
};

inline GateCensus gate_census(const Plan& plan) {
    GateCensus c;
    for (const Gate& g : plan.gates) {
        if (const auto* two = std::get_if<TwoModeGate>(&g)) {
            switch (two->name) {
                case TwoModeName::fhat: ++c.fhat; break;
                case TwoModeName::ghat: ++c.ghat; break;
                case TwoModeName::rot: ++c.rot; break;
                case TwoModeName::custom: ++c.custom; break;
            }
        } else if (std::holds_alternative<ScalarGate>(g)) {
            ++c.scalar;
        } else {
            const auto& p = std::get<PermGate>(g);
            ++c.perm;
            c.swap_total += detail::count_inversions(p.map);
        }
    }
    return c;
}

/// Closed-form elementary count for the first-kind sine plan of size
/// n = 2^k - 1: (5nk - 13n + 9k - 1) / 4.
inline std::uint64_t closed_form_c1(std::uint64_t n) {
    if (n < 1 || !std::has_single_bit(n + 1))
        throw std::invalid_argument("closed_form_c1: size must be 2^k - 1");
    const std::int64_t k = std::countr_zero(n + 1);
    const std::int64_t sn = static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>((5 * sn * k - 13 * sn + 9 * k - 1) / 4);
}

/// Closed-form elementary count for the third-kind sine plan of size
/// n = 2^k: (5nk - 7n + 8) / 4.
inline std::uint64_t closed_form_c3(std::uint64_t n) {
    if (n < 2 || !std::has_single_bit(n))
        throw std::invalid_argument("closed_form_c3: size must be 2^k");
    const std::int64_t k = std::countr_zero(n);
    const std::int64_t sn = static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>((5 * sn * k - 7 * sn + 8) / 4);
}

// ---------------------------------------------------------------------------
// Dense composition
// ---------------------------------------------------------------------------

/// Multiplies out a plan into its dense n x n matrix, embedding each gate at
/// its mode indices, in application order (first gate = rightmost factor).
inline DenseMatrix compose_dense(const Plan& plan) {
    const std::size_t n = plan.n;
    if (n > kComposeDenseMaxSize)
        throw std::invalid_argument("compose_dense: size guard exceeded (n <= 4096)");
    DenseMatrix mat = DenseMatrix::identity(n);
    std::vector<cplx> scratch;
    for (const Gate& g : plan.gates) {
        if (const auto* two = std::get_if<TwoModeGate>(&g)) {
            if (two->j >= n) throw std::out_of_range("compose_dense: gate mode out of range");
            const std::size_t i = two->i, j = two->j;
            for (std::size_t c = 0; c < n; ++c) {
                const cplx vi = mat(i, c), vj = mat(j, c);
                mat(i, c) = two->u[0] * vi + two->u[1] * vj;
                mat(j, c) = two->u[2] * vi + two->u[3] * vj;
            }
        } else if (const auto* sc = std::get_if<ScalarGate>(&g)) {
            if (sc->mode >= n) throw std::out_of_range("compose_dense: gate mode out of range");
            for (std::size_t c = 0; c < n; ++c) mat(sc->mode, c) *= sc->value;
        } else {
            const auto& p = std::get<PermGate>(g);
            const std::size_t w = p.map.size();
            if (p.offset + w > n) throw std::out_of_range("compose_dense: perm window out of range");
            scratch.assign(w * n, cplx{});
            for (std::size_t t = 0; t < w; ++t)
                for (std::size_t c = 0; c < n; ++c) scratch[t * n + c] = mat(p.offset + t, c);
            for (std::size_t t = 0; t < w; ++t) {
                const std::size_t dst = p.offset + p.map[t];
                for (std::size_t c = 0; c < n; ++c) mat(dst, c) = scratch[t * n + c];
            }
        }
    }
    return mat;
}

}  // namespace dstnet
