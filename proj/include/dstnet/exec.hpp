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

#include <vector>

#include "dstnet/gate.hpp"

namespace dstnet {

// Fast single-particle execution: applies a plan gate-by-gate to a length-n
// vector. Each two-mode gate touches two entries, each scalar one entry, and
// each permutation moves its window through a scratch buffer reused across
// gates, so the total cost is O(#gates) = O(n log n).
//
// Both a complex path and a real fast path are provided; the real path is
// valid for the sine-transform kinds, whose plans are entirely real.

namespace detail {

inline cplx narrow_gate_entry(const cplx& c, const cplx*) { return c; }
inline double narrow_gate_entry(const cplx& c, const double*) { return c.real(); }

inline cplx conj_entry(const cplx& c, const cplx*) { return std::conj(c); }
inline double conj_entry(const cplx& c, const double*) { return c.real(); }

template <typename T>
inline void run_gates_forward(const std::vector<Gate>& gates, std::vector<T>& v,
                              std::vector<T>& scratch) {
    constexpr const T* tag = nullptr;
    const std::size_t n = v.size();
    for (const Gate& g : gates) {
        if (const auto* two = std::get_if<TwoModeGate>(&g)) {
            if (two->j >= n) throw std::out_of_range("apply: gate mode out of range");
            const T vi = v[two->i], vj = v[two->j];
            v[two->i] = narrow_gate_entry(two->u[0], tag) * vi + narrow_gate_entry(two->u[1], tag) * vj;
            v[two->j] = narrow_gate_entry(two->u[2], tag) * vi + narrow_gate_entry(two->u[3], tag) * vj;
        } else if (const auto* sc = std::get_if<ScalarGate>(&g)) {
            if (sc->mode >= n) throw std::out_of_range("apply: gate mode out of range");
            v[sc->mode] *= narrow_gate_entry(sc->value, tag);
        } else {
            const auto& p = std::get<PermGate>(g);
            const std::size_t w = p.map.size();
            if (p.offset + w > n) throw std::out_of_range("apply: perm window out of range");
            if (scratch.size() < w) scratch.resize(w);
            for (std::size_t t = 0; t < w; ++t) scratch[t] = v[p.offset + t];
            for (std::size_t t = 0; t < w; ++t) v[p.offset + p.map[t]] = scratch[t];
        }
    }
}

template <typename T>
inline void run_gates_inverse(const std::vector<Gate>& gates, std::vector<T>& v,
                              std::vector<T>& scratch) {
    constexpr const T* tag = nullptr;
    const std::size_t n = v.size();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        if (const auto* two = std::get_if<TwoModeGate>(&*it)) {
            if (two->j >= n) throw std::out_of_range("apply_inverse: gate mode out of range");
            // Conjugate transpose of the 2x2 block.
            const T vi = v[two->i], vj = v[two->j];
            v[two->i] = conj_entry(two->u[0], tag) * vi + conj_entry(two->u[2], tag) * vj;
            v[two->j] = conj_entry(two->u[1], tag) * vi + conj_entry(two->u[3], tag) * vj;
        } else if (const auto* sc = std::get_if<ScalarGate>(&*it)) {
            if (sc->mode >= n) throw std::out_of_range("apply_inverse: gate mode out of range");
            v[sc->mode] *= conj_entry(sc->value, tag);
        } else {
            const auto& p = std::get<PermGate>(*it);
            const std::size_t w = p.map.size();
            if (p.offset + w > n) throw std::out_of_range("apply_inverse: perm window out of range");
            if (scratch.size() < w) scratch.resize(w);
            for (std::size_t t = 0; t < w; ++t) scratch[t] = v[p.offset + t];
            for (std::size_t t = 0; t < w; ++t) v[p.offset + t] = scratch[p.map[t]];
        }
    }
}

inline void check_apply_shape(const Plan& plan, std::size_t len, const char* what) {
    if (len != plan.n)
        throw std::invalid_argument(std::string(what) + ": vector length does not match plan size");
}

inline void check_real_kind(const Plan& plan, const char* what) {
    if (plan.kind == TransformKind::dft)
        throw std::invalid_argument(std::string(what) +
                                    ": real fast path requires a real-valued (sine-kind) plan");
}

}  // namespace detail

inline std::vector<cplx> apply(const Plan& plan, std::vector<cplx> v) {
    detail::check_apply_shape(plan, v.size(), "apply");
    std::vector<cplx> scratch;
    detail::run_gates_forward(plan.gates, v, scratch);
    return v;
}

/// Applies the exact inverse: each gate's conjugate transpose, in reverse
/// order. For real orthogonal plans this is the plain transpose.
inline std::vector<cplx> apply_inverse(const Plan& plan, std::vector<cplx> v) {
    detail::check_apply_shape(plan, v.size(), "apply_inverse");
    std::vector<cplx> scratch;
    detail::run_gates_inverse(plan.gates, v, scratch);
    return v;
}

inline std::vector<double> apply(const Plan& plan, std::vector<double> v) {
    detail::check_apply_shape(plan, v.size(), "apply");
    detail::check_real_kind(plan, "apply");
    std::vector<double> scratch;
    detail::run_gates_forward(plan.gates, v, scratch);
    return v;
}

inline std::vector<double> apply_inverse(const Plan& plan, std::vector<double> v) {
    detail::check_apply_shape(plan, v.size(), "apply_inverse");
    detail::check_real_kind(plan, "apply_inverse");
    std::vector<double> scratch;
    detail::run_gates_inverse(plan.gates, v, scratch);
    return v;
}

}  // namespace dstnet
