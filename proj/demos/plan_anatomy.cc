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

// Prints the gate list of a small third-kind sine plan, then the census
// table for the first few levels of every transform family. A useful first
// look at what a plan actually contains.

#include <cstdio>
#include <variant>

#include "dstnet/dstnet.hpp"

namespace {

void print_gate(std::size_t index, const dstnet::Gate& gate) {
    std::printf("  %2zu  ", index);
    if (const auto* two = std::get_if<dstnet::TwoModeGate>(&gate)) {
        std::printf("%-5s on modes (%u, %u)", dstnet::to_string(two->name).c_str(), two->i,
                    two->j);
        if (two->name == dstnet::TwoModeName::rot)
            std::printf("  angle %d pi / %u", two->rot_num, 4 * two->rot_den);
    } else if (const auto* scalar = std::get_if<dstnet::ScalarGate>(&gate)) {
        std::printf("scalar %+.3f%+.3fi on mode %u", scalar->value.real(),
                    scalar->value.imag(), scalar->mode);
    } else {
        const auto& perm = std::get<dstnet::PermGate>(gate);
        std::printf("perm  window [%u, %zu):", perm.offset, perm.offset + perm.map.size());
        for (std::uint32_t image : perm.map) std::printf(" %u", perm.offset + image);
    }
    std::printf("\n");
}

}  // namespace

int main() {
    const dstnet::Plan plan = dstnet::plan_dst3(3);
    std::printf("third-kind sine plan at level 3 (n = %zu), applied top to bottom:\n", plan.n);
    for (std::size_t g = 0; g < plan.gates.size(); ++g) print_gate(g, plan.gates[g]);

    std::printf("\ncensus per level (elementary = butterflies + rotations + scalars):\n");
    std::printf("%-5s %-6s %-9s %-6s %-6s %-6s %-8s %-11s %s\n", "kind", "level", "n", "fhat",
                "ghat", "rot", "scalar", "elementary", "closed form");
    for (unsigned k = 1; k <= 6; ++k) {
        const dstnet::Plan p1 = dstnet::plan_dst1(k);
        const dstnet::Plan p3 = dstnet::plan_dst3(k);
        const dstnet::Plan pf = dstnet::plan_dft(k);
        const dstnet::GateCensus c1 = dstnet::gate_census(p1);
        const dstnet::GateCensus c3 = dstnet::gate_census(p3);
        const dstnet::GateCensus cf = dstnet::gate_census(pf);
        std::printf("%-5s %-6u %-9zu %-6zu %-6zu %-6zu %-8zu %-11zu %zu\n", "dst1", k, p1.n,
                    c1.fhat, c1.ghat, c1.rot, c1.scalar, c1.elementary(),
                    dstnet::closed_form_c1(p1.n));
        std::printf("%-5s %-6u %-9zu %-6zu %-6zu %-6zu %-8zu %-11zu %zu\n", "dst3", k, p3.n,
                    c3.fhat, c3.ghat, c3.rot, c3.scalar, c3.elementary(),
                    dstnet::closed_form_c3(p3.n));
        std::printf("%-5s %-6u %-9zu %-6zu %-6zu %-6zu %-8zu %-11zu %s\n", "dft", k, pf.n,
                    cf.fhat, cf.ghat, cf.rot, cf.scalar, cf.elementary(), "-");
    }
    return 0;
}
