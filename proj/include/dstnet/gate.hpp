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

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dstnet/dense.hpp"

namespace dstnet {

enum class TransformKind { dst1, dst3, dft };

inline std::string to_string(TransformKind k) {
    switch (k) {
        case TransformKind::dst1: return "dst1";
        case TransformKind::dst3: return "dst3";
        case TransformKind::dft: return "dft";
    }
    throw std::invalid_argument("to_string: unknown transform kind");
}

inline std::optional<TransformKind> transform_kind_from_string(std::string_view s) {
    if (s == "dst1") return TransformKind::dst1;
    if (s == "dst3") return TransformKind::dst3;
    if (s == "dft") return TransformKind::dft;
    return std::nullopt;
}

/// Correctly rounded double for 1/sqrt(2).
inline constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

/// Row-major 2x2 complex matrix: {u00, u01, u10, u11}.
using Mat2 = std::array<cplx, 4>;

inline cplx det2(const Mat2& u) { return u[0] * u[3] - u[1] * u[2]; }

/// The named members of the 2x2 alphabet. `custom` marks a matrix that was
/// supplied directly (e.g. read back from a serialized plan).
enum class TwoModeName : std::uint8_t { fhat, ghat, rot, custom };

inline std::string to_string(TwoModeName n) {
    switch (n) {
        case TwoModeName::fhat: return "fhat";
        case TwoModeName::ghat: return "ghat";
        case TwoModeName::rot: return "rot";
        case TwoModeName::custom: return "custom";
    }
    throw std::invalid_argument("to_string: unknown two-mode gate name");
}

// (1/sqrt2) [[1, 1], [1, -1]] -- the orthogonal butterfly.
inline Mat2 fhat_matrix() {
    return {cplx{kInvSqrt2}, cplx{kInvSqrt2}, cplx{kInvSqrt2}, cplx{-kInvSqrt2}};
}

// (1/sqrt2) [[1, 1], [-1, 1]] -- a rotation by pi/4.
inline Mat2 ghat_matrix() {
    return {cplx{kInvSqrt2}, cplx{kInvSqrt2}, cplx{-kInvSqrt2}, cplx{kInvSqrt2}};
}

/// Plane rotation by theta = num * pi / (4 * den):
/// [[cos, -sin], [sin, cos]].
inline Mat2 rot_matrix(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("rot_matrix: denominator must be positive");
    const double theta =
        static_cast<double>(num) * std::numbers::pi / (4.0 * static_cast<double>(den));
    const double c = std::cos(theta), s = std::sin(theta);
    return {cplx{c}, cplx{-s}, cplx{s}, cplx{c}};
}

inline Mat2 swap2_matrix() { return {cplx{0.0}, cplx{1.0}, cplx{1.0}, cplx{0.0}}; }

/// A 2x2 unitary acting on the component pair (i, j), i < j, with i as the
/// first row/column of `u` and j as the second.
struct TwoModeGate {
    Mat2 u{};
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    TwoModeName name = TwoModeName::custom;
    // Exact angle bookkeeping for `rot`: theta = rot_num * pi / (4 * rot_den).
    std::int32_t rot_num = 0;
    std::uint32_t rot_den = 1;

    // Gate identity is the acting data; the angle fields are derivation
    // metadata that serialized plans do not carry.
    bool operator==(const TwoModeGate& o) const {
        return u == o.u && i == o.i && j == o.j && name == o.name;
    }
};

/// Multiplies one component by a unit scalar.
struct ScalarGate {
    cplx value{1.0, 0.0};
    std::uint32_t mode = 0;

    bool operator==(const ScalarGate&) const = default;
};

/// A permutation acting on the contiguous window [offset, offset + map.size())
/// and fixing everything outside it. Scatter semantics within the window:
/// component offset+p moves to component offset+map[p].
///
/// Storing only the moved window keeps plans for large sizes linear in the
/// number of arithmetic gates instead of quadratic.
struct PermGate {
    std::uint32_t offset = 0;
    std::vector<std::uint32_t> map;

    bool operator==(const PermGate&) const = default;

    /// Canonical form of a full-length image array: fixed points are trimmed
    /// off both ends, and an identity permutation collapses to nullopt.
    static std::optional<PermGate> from_full(const std::vector<std::uint32_t>& full) {
        std::size_t lo = 0, hi = full.size();
        while (lo < hi && full[lo] == lo) ++lo;
        while (hi > lo && full[hi - 1] == hi - 1) --hi;
        if (lo == hi) return std::nullopt;
        PermGate g;
        g.offset = static_cast<std::uint32_t>(lo);
        g.map.reserve(hi - lo);
        for (std::size_t p = lo; p < hi; ++p) {
            if (full[p] < lo || full[p] >= hi)
                throw std::invalid_argument("PermGate::from_full: not a permutation");
            g.map.push_back(static_cast<std::uint32_t>(full[p] - lo));
        }
        return g;
    }

    /// Expands back to an image array over all n components.
    std::vector<std::uint32_t> full_map(std::size_t n) const {
        if (offset + map.size() > n)
            throw std::invalid_argument("PermGate::full_map: window exceeds size");
        std::vector<std::uint32_t> full(n);
        for (std::size_t p = 0; p < n; ++p) full[p] = static_cast<std::uint32_t>(p);
        for (std::size_t p = 0; p < map.size(); ++p) full[offset + p] = offset + map[p];
        return full;
    }
};

using Gate = std::variant<TwoModeGate, ScalarGate, PermGate>;

inline TwoModeGate make_two_mode(Mat2 u, std::uint32_t i, std::uint32_t j,
                                 TwoModeName name = TwoModeName::custom) {
    if (i >= j) throw std::invalid_argument("two-mode gate: requires i < j");
    TwoModeGate g;
    g.u = u;
    g.i = i;
    g.j = j;
    g.name = name;
    return g;
}

inline TwoModeGate fhat_gate(std::uint32_t i, std::uint32_t j) {
    return make_two_mode(fhat_matrix(), i, j, TwoModeName::fhat);
}

inline TwoModeGate ghat_gate(std::uint32_t i, std::uint32_t j) {
    return make_two_mode(ghat_matrix(), i, j, TwoModeName::ghat);
}

inline TwoModeGate rot_gate(std::int32_t num, std::uint32_t den, std::uint32_t i, std::uint32_t j) {
    TwoModeGate g = make_two_mode(rot_matrix(num, den), i, j, TwoModeName::rot);
    g.rot_num = num;
    g.rot_den = den;
    return g;
}

inline ScalarGate scalar_gate(std::uint32_t mode, cplx value) {
    ScalarGate g;
    g.value = value;
    g.mode = mode;
    return g;
}

/// An ordered gate sequence realizing an n x n transform. Gates apply
/// first-to-last: the dense operator is gates.back() * ... * gates.front().
struct Plan {
    std::size_t n = 0;
    TransformKind kind = TransformKind::dst1;
    std::vector<Gate> gates;
};

}  // namespace dstnet
