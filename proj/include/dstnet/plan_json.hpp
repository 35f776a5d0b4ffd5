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

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "dstnet/gate.hpp"

namespace dstnet {

// Plan file format, version 1. A single JSON document:
//
//   {
//     "version": 1,
//     "kind": "dst1" | "dst3" | "dft",
//     "n": <size>,
//     "gates": [ ... ]
//   }
//
// with gates listed in application order (first applied first) and exactly
// three record shapes:
//
//   {"type":"two_mode","i":0,"j":4,"name":"fhat","matrix":[[re,im],x4 row-major]}
//   {"type":"scalar","i":3,"value":[re,im]}
//   {"type":"perm","map":[...full-length image array...]}
//
// Gate records are written one per line, so large plans stream without
// building a document object for the whole file; doubles use the shortest
// representation that round-trips exactly.

namespace detail {

inline nlohmann::ordered_json pair_of(const cplx& c) {
    return nlohmann::ordered_json::array({c.real(), c.imag()});
}

inline nlohmann::ordered_json gate_record(const Gate& g, std::size_t n) {
    nlohmann::ordered_json rec;
    if (const auto* two = std::get_if<TwoModeGate>(&g)) {
        rec["type"] = "two_mode";
        rec["i"] = two->i;
        rec["j"] = two->j;
        rec["name"] = to_string(two->name);
        rec["matrix"] = nlohmann::ordered_json::array(
            {pair_of(two->u[0]), pair_of(two->u[1]), pair_of(two->u[2]), pair_of(two->u[3])});
    } else if (const auto* sc = std::get_if<ScalarGate>(&g)) {
        rec["type"] = "scalar";
        rec["i"] = sc->mode;
        rec["value"] = pair_of(sc->value);
    } else {
        rec["type"] = "perm";
        rec["map"] = std::get<PermGate>(g).full_map(n);
    }
    return rec;
}

inline double json_number(const nlohmann::json& j, const char* what) {
    if (!j.is_number()) throw std::runtime_error(std::string("plan file: ") + what + " must be a number");
    return j.get<double>();
}

inline cplx parse_pair(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw std::runtime_error(std::string("plan file: ") + what + " must be a [re, im] pair");
    return {json_number(j[0], what), json_number(j[1], what)};
}

inline std::uint32_t parse_index(const nlohmann::json& j, std::size_t n, const char* what) {
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() >= n)
        throw std::runtime_error(std::string("plan file: ") + what + " out of range");
    return j.get<std::uint32_t>();
}

}  // namespace detail

inline void write_plan_json(std::ostream& os, const Plan& plan) {
    os << "{\n  \"version\": 1,\n  \"kind\": \"" << to_string(plan.kind) << "\",\n  \"n\": "
       << plan.n << ",\n  \"gates\": [";
    bool first = true;
    for (const Gate& g : plan.gates) {
        os << (first ? "\n    " : ",\n    ") << detail::gate_record(g, plan.n).dump();
        first = false;
    }
    if (!first) os << "\n  ";
    os << "]\n}\n";
}

inline std::string plan_to_json(const Plan& plan) {
    std::ostringstream os;
    write_plan_json(os, plan);
    return os.str();
}

/// Parses a version-1 plan document. Structural problems (wrong shapes, out
/// of range indices, malformed permutations) throw; numerical properties of
/// the gate matrices are the producer's responsibility and are checked by
/// the verification paths, not here. Permutation records are re-canonicalized
/// to their moved window, so parse(serialize(plan)) reproduces emitted plans
/// gate-for-gate.
inline Plan parse_plan_json(const std::string& text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.is_object()) throw std::runtime_error("plan file: top level must be an object");
    if (!doc.contains("version") || doc["version"] != 1)
        throw std::runtime_error("plan file: unsupported or missing version (expected 1)");
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw std::runtime_error("plan file: missing kind");
    const auto kind = transform_kind_from_string(doc["kind"].get<std::string>());
    if (!kind) throw std::runtime_error("plan file: unknown kind");
    if (!doc.contains("n") || !doc["n"].is_number_unsigned() || doc["n"].get<std::uint64_t>() < 1)
        throw std::runtime_error("plan file: missing or invalid size");
    if (!doc.contains("gates") || !doc["gates"].is_array())
        throw std::runtime_error("plan file: missing gates array");

    Plan plan;
    plan.kind = *kind;
    plan.n = doc["n"].get<std::size_t>();
    plan.gates.reserve(doc["gates"].size());
    for (const auto& rec : doc["gates"]) {
        if (!rec.is_object() || !rec.contains("type") || !rec["type"].is_string())
            throw std::runtime_error("plan file: gate record missing type");
        const std::string type = rec["type"].get<std::string>();
        if (type == "two_mode") {
            if (!rec.contains("i") || !rec.contains("j") || !rec.contains("name") ||
                !rec.contains("matrix"))
                throw std::runtime_error("plan file: incomplete two_mode record");
            const std::uint32_t i = detail::parse_index(rec["i"], plan.n, "two_mode i");
            const std::uint32_t j = detail::parse_index(rec["j"], plan.n, "two_mode j");
            if (i >= j) throw std::runtime_error("plan file: two_mode record requires i < j");
            if (!rec["name"].is_string())
                throw std::runtime_error("plan file: two_mode name must be a string");
            const std::string name = rec["name"].get<std::string>();
            TwoModeName tag;
            if (name == "fhat") tag = TwoModeName::fhat;
            else if (name == "ghat") tag = TwoModeName::ghat;
            else if (name == "rot") tag = TwoModeName::rot;
            else if (name == "custom") tag = TwoModeName::custom;
            else throw std::runtime_error("plan file: unknown two_mode name '" + name + "'");
            const auto& mat = rec["matrix"];
            if (!mat.is_array() || mat.size() != 4)
                throw std::runtime_error("plan file: two_mode matrix must have 4 entries");
            Mat2 u;
            for (std::size_t e = 0; e < 4; ++e) u[e] = detail::parse_pair(mat[e], "matrix entry");
            plan.gates.push_back(make_two_mode(u, i, j, tag));
        } else if (type == "scalar") {
            if (!rec.contains("i") || !rec.contains("value"))
                throw std::runtime_error("plan file: incomplete scalar record");
            const std::uint32_t i = detail::parse_index(rec["i"], plan.n, "scalar i");
            plan.gates.push_back(scalar_gate(i, detail::parse_pair(rec["value"], "scalar value")));
        } else if (type == "perm") {
            if (!rec.contains("map") || !rec["map"].is_array() || rec["map"].size() != plan.n)
                throw std::runtime_error("plan file: perm map must be a full-length array");
            std::vector<std::uint32_t> full;
            full.reserve(plan.n);
            std::vector<bool> seen(plan.n, false);
            for (const auto& e : rec["map"]) {
                const std::uint32_t image = detail::parse_index(e, plan.n, "perm image");
                if (seen[image]) throw std::runtime_error("plan file: perm map is not a permutation");
                seen[image] = true;
                full.push_back(image);
            }
            auto g = PermGate::from_full(full);
            if (g) plan.gates.push_back(std::move(*g));
        } else {
            throw std::runtime_error("plan file: unknown gate type '" + type + "'");
        }
    }
    return plan;
}

inline Plan parse_plan_json(std::istream& is) {
    std::ostringstream buffer;
    buffer << is.rdbuf();
    return parse_plan_json(buffer.str());
}

}  // namespace dstnet
