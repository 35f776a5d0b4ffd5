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

// Acceptance gate for the library: nine end-to-end checks covering dense
// oracle equivalence, closed-form gate counts, second quantization,
// fermionic signs, functoriality, large-size involution, free-fermion
// diagonalization, throughput, and swap-lowering growth. Each check prints
// one [PASS]/[FAIL] line; the exit code is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dstnet/dstnet.hpp"

#include "../test_util.hpp"

namespace {

using dstnet::DenseMatrix;
using dstnet::FockState;
using dstnet::Plan;
using dstnet::TransformKind;

int g_failures = 0;

void report(int index, const char* title, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s: %s\n", pass ? "PASS" : "FAIL", index, title, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

double l2_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

DenseMatrix reference_dense(TransformKind kind, std::size_t n) {
    switch (kind) {
        case TransformKind::dst1: return dstnet::orthonormal_dst1(n);
        case TransformKind::dst3: return dstnet::orthonormal_dst3(n);
        case TransformKind::dft: return dstnet::orthonormal_dft(n);
    }
    throw std::logic_error("reference_dense: unknown kind");
}

Plan build(TransformKind kind, unsigned level) {
    switch (kind) {
        case TransformKind::dst1: return dstnet::plan_dst1(level);
        case TransformKind::dst3: return dstnet::plan_dst3(level);
        case TransformKind::dft: return dstnet::plan_dft(level);
    }
    throw std::logic_error("build: unknown kind");
}

// 1. Every plan composes to the orthonormal reference matrix.
void criterion_dense_equivalence() {
    double worst = 0.0;
    for (unsigned k = 1; k <= 10; ++k) {
        for (TransformKind kind :
             {TransformKind::dst1, TransformKind::dst3, TransformKind::dft}) {
            const Plan plan = build(kind, k);
            worst = std::max(
                worst, dstnet::max_abs_diff(dstnet::compose_dense(plan),
                                            reference_dense(kind, plan.n)));
        }
    }
    report(1, "plans compose to the orthonormal transforms", worst < 1e-10,
           fmt("max deviation %.2e over dst1/dst3/dft at levels 1..10 (tolerance 1e-10)",
               worst));
}

// 2. Measured gate counts equal the closed forms, with pinned anchors.
void criterion_gate_counts() {
    bool exact = true;
    for (unsigned k = 1; k <= 12; ++k) {
        const Plan p1 = dstnet::plan_dst1(k);
        const Plan p3 = dstnet::plan_dst3(k);
        exact = exact &&
                dstnet::gate_census(p1).elementary() == dstnet::closed_form_c1(p1.n) &&
                dstnet::gate_census(p3).elementary() == dstnet::closed_form_c3(p3.n);
    }
    const bool anchors = dstnet::closed_form_c1(1) == 0 && dstnet::closed_form_c3(2) == 1 &&
                         dstnet::closed_form_c1(7) == 10 && dstnet::closed_form_c3(8) == 18 &&
                         dstnet::closed_form_c1(31) == 104;
    report(2, "gate census matches the closed-form counts", exact && anchors,
           "exact at levels 1..12; anchors C1(1)=0, C3(2)=1, C1(7)=10, C3(8)=18, C1(31)=104; "
           "the per-level count of pi/4 rotations is m/2-1, pinned by the 5-gate size-4 "
           "third-kind plan");
}

// 3. The lifted circuit operator equals the Slater-determinant oracle.
void criterion_fock_oracle() {
    double worst = 0.0;
    const std::pair<TransformKind, unsigned> cases[] = {
        {TransformKind::dst1, 2}, {TransformKind::dst1, 3},
        {TransformKind::dft, 2},  {TransformKind::dft, 3}};
    for (const auto& [kind, k] : cases) {
        const Plan plan = build(kind, k);
        worst = std::max(worst, dstnet::max_abs_diff(
                                    dstnet::circuit_operator(plan),
                                    dstnet::second_quantize_dense(
                                        reference_dense(kind, plan.n))));
    }
    report(3, "second-quantized plans match the determinant oracle", worst < 1e-10,
           fmt("max deviation %.2e over dst1 n=3,7 and dft n=4,8 (tolerance 1e-10)", worst));
}

// 4. Fermionic exchange signs, including exact swap-network lowering.
void criterion_fermionic_signs() {
    // Mode swap on a doubly occupied pair flips the sign.
    FockState pair = FockState::basis(2, 0b11);
    dstnet::apply_two_mode(pair, 0, 1, dstnet::swap2_matrix());
    const bool adjacent = pair.amp[0b11] == dstnet::cplx{-1.0, 0.0};

    // A swap across one intervening occupied mode also contributes -1.
    FockState three = FockState::basis(3, 0b110);
    dstnet::apply_two_mode(three, 0, 2, dstnet::swap2_matrix());
    const bool string_sign = three.amp[0b011] == dstnet::cplx{-1.0, 0.0};

    // Lowering a permutation to adjacent swaps reproduces its action
    // bit-exactly on random states.
    std::mt19937 rng(411);
    int cases = 0;
    double worst = 0.0;
    for (std::size_t n = 2; n <= 8; ++n) {
        for (int trial = 0; trial < 3; ++trial, ++cases) {
            std::vector<std::uint32_t> pi(n);
            std::iota(pi.begin(), pi.end(), 0u);
            std::shuffle(pi.begin(), pi.end(), rng);

            FockState direct;
            direct.n = n;
            direct.amp = dstnet_test::random_complex_vector(rng, std::size_t{1} << n);
            FockState lowered = direct;

            dstnet::apply_perm(direct, pi);
            for (std::uint32_t p : dstnet::swap_network(pi))
                dstnet::apply_two_mode(lowered, p, p + 1, dstnet::swap2_matrix());
            worst = std::max(worst,
                             dstnet_test::max_abs_diff_vec(direct.amp, lowered.amp));
        }
    }
    report(4, "fermionic exchange signs", adjacent && string_sign && worst == 0.0,
           fmt("swap on |11> gives -1; swap across an occupied mode gives -1; swap networks "
               "match direct permutation action bit-exactly on %d random states, n <= 8",
               cases));
}

// 5. Second quantization respects products and direct sums.
void criterion_functoriality() {
    std::mt19937 rng(20260823);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        const DenseMatrix a = dstnet_test::random_orthogonal(rng, n);
        const DenseMatrix b = dstnet_test::random_orthogonal(rng, n);
        worst = std::max(worst, dstnet::max_abs_diff(
                                    dstnet::second_quantize_dense(a * b),
                                    dstnet::second_quantize_dense(a) *
                                        dstnet::second_quantize_dense(b)));

        const std::size_t n1 = 1 + rng() % 5;
        const std::size_t n2 = 1 + rng() % (6 - n1);
        const DenseMatrix c = dstnet_test::random_orthogonal(rng, n1);
        const DenseMatrix d = dstnet_test::random_orthogonal(rng, n2);
        worst = std::max(worst, dstnet::max_abs_diff(
                                    dstnet::second_quantize_dense(dstnet::direct_sum(c, d)),
                                    dstnet::kron(dstnet::second_quantize_dense(c),
                                                 dstnet::second_quantize_dense(d))));
    }
    report(5, "second quantization is functorial", worst < 1e-10,
           fmt("product and direct-sum identities on 100 random orthogonal pairs, n <= 6; "
               "max deviation %.2e (tolerance 1e-10)",
               worst));
}

// 6. The first-kind sine plan is an involutive isometry at large sizes.
void criterion_involution() {
    std::mt19937 rng(615);
    double worst_round_trip = 0.0;
    double worst_norm_drift = 0.0;
    for (unsigned k : {2u, 4u, 6u, 8u, 10u, 12u, 14u, 15u}) {
        const Plan plan = dstnet::plan_dst1(k);
        const std::vector<double> x = dstnet_test::random_real_vector(rng, plan.n);
        const std::vector<double> y = dstnet::apply(plan, x);
        worst_norm_drift = std::max(
            worst_norm_drift, std::abs(l2_norm(y) - l2_norm(x)) / l2_norm(x));
        const std::vector<double> z = dstnet::apply(plan, y);
        worst_round_trip = std::max(worst_round_trip,
                                    dstnet_test::max_abs_diff_vec(z, x));
    }
    report(6, "first-kind sine plans are involutive isometries",
           worst_round_trip < 1e-10 && worst_norm_drift < 1e-10,
           fmt("double application returns the input to %.2e and norms drift by %.2e "
               "for n up to 32767 (tolerance 1e-10)",
               worst_round_trip, worst_norm_drift));
}

// 7. The sine plan diagonalizes the open hopping chain, one particle and many.
void criterion_diagonalization() {
    double worst_offdiag = 0.0;
    double worst_diag = 0.0;
    for (unsigned k = 1; k <= 6; ++k) {
        const Plan plan = dstnet::plan_dst1(k);
        const std::size_t n = plan.n;
        const DenseMatrix v = dstnet::compose_dense(plan);
        const DenseMatrix conj =
            dstnet::transpose(v) * dstnet::hopping_hamiltonian(n).matrix * v;
        const std::vector<double> lam = dstnet::spectrum_via_dst(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (r == c)
                    worst_diag = std::max(worst_diag, std::abs(conj(r, r).real() - lam[r]));
                else
                    worst_offdiag = std::max(worst_offdiag, std::abs(conj(r, c)));
            }
        }
    }
    const dstnet::ManyBodyReport rep = dstnet::verify_many_body_diagonalization(7);
    const bool pass = worst_offdiag < 1e-12 && worst_diag < 1e-12 && rep.diagonal_ok &&
                      std::abs(rep.min_diagonal - rep.ground_energy) < 1e-9;
    report(7, "sine plans diagonalize the open hopping chain", pass,
           fmt("single-particle residuals %.2e off-diagonal, %.2e diagonal for n <= 63 "
               "(tolerance 1e-12); many-body n=7 off-diagonal %.2e, diagonal %.2e "
               "(tolerance 1e-9), ground energy %.6f",
               worst_offdiag, worst_diag, rep.max_offdiag, rep.max_diag_deviation,
               rep.ground_energy));
}

// 8. Throughput at a million-point size, and the leading-order count.
void criterion_performance() {
    std::mt19937 rng(820);
    static volatile double sink = 0.0;  // keeps the timed applies observable
    const auto time_apply = [](const Plan& plan, const std::vector<double>& x) {
        double best = 1e300;
        for (int run = 0; run < 3; ++run) {
            const auto start = std::chrono::steady_clock::now();
            const std::vector<double> y = dstnet::apply(plan, x);
            const auto stop = std::chrono::steady_clock::now();
            best = std::min(best, std::chrono::duration<double>(stop - start).count());
            sink = sink + y[0];
        }
        return best;
    };

    double t17 = 0.0;
    {
        const Plan plan = dstnet::plan_dst1(17);
        t17 = time_apply(plan, dstnet_test::random_real_vector(rng, plan.n));
    }

    double t20 = 0.0;
    bool census_exact = false;
    double excess_per_site = 0.0;
    std::size_t n20 = 0;
    {
        const Plan plan = dstnet::plan_dst1(20);
        n20 = plan.n;
        const std::size_t elementary = dstnet::gate_census(plan).elementary();
        census_exact = elementary == dstnet::closed_form_c1(plan.n);
        excess_per_site = std::abs(static_cast<double>(elementary) -
                                   1.25 * static_cast<double>(plan.n) * 20.0) /
                          static_cast<double>(plan.n);
        t20 = time_apply(plan, dstnet_test::random_real_vector(rng, plan.n));
    }

    const bool pass = t20 < 5.0 && census_exact && excess_per_site <= 4.0;
    report(8, "million-point throughput and leading-order count", pass,
           fmt("apply at n=%zu took %.3f s (limit 5.0; level 17 took %.3f s); elementary "
               "count equals the closed form and sits %.3f per site below 1.25 n log2(n+1) "
               "(limit 4)",
               n20, t20, t17, excess_per_site));
}

// 9. Lowering every permutation to adjacent swaps costs O(n^2) swaps.
void criterion_swap_scale() {
    const std::size_t expected[] = {12, 73, 354, 1555, 6516, 26677};
    bool totals_ok = true;
    std::vector<double> log_n, log_s;
    std::size_t s_255 = 0;
    for (unsigned k = 3; k <= 8; ++k) {
        const Plan plan = dstnet::plan_dst1(k);
        const std::size_t census_total = dstnet::gate_census(plan).swap_total;
        std::size_t network_total = 0;
        for (const dstnet::Gate& g : plan.gates)
            if (const auto* perm = std::get_if<dstnet::PermGate>(&g))
                network_total += dstnet::swap_network(perm->full_map(plan.n)).size();
        totals_ok = totals_ok && census_total == expected[k - 3] &&
                    network_total == census_total;
        log_n.push_back(std::log(static_cast<double>(plan.n)));
        log_s.push_back(std::log(static_cast<double>(census_total)));
        if (k == 8) s_255 = census_total;
    }

    const std::size_t m = log_n.size();
    const double mean_x = std::accumulate(log_n.begin(), log_n.end(), 0.0) / m;
    const double mean_y = std::accumulate(log_s.begin(), log_s.end(), 0.0) / m;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxy += (log_n[i] - mean_x) * (log_s[i] - mean_y);
        sxx += (log_n[i] - mean_x) * (log_n[i] - mean_x);
    }
    const double slope = sxy / sxx;
    const double prefactor = std::exp(mean_y - slope * mean_x);

    const bool pass = totals_ok && slope >= 1.8 && slope <= 2.2;
    report(9, "swap lowering grows quadratically", pass,
           fmt("totals 12/73/354/1555/6516/26677 for n=7..255 match census and lowered "
               "networks; fitted s ~ %.2f n^%.2f with exponent required in 2.0 +/- 0.2; "
               "s(255)/255^2 = %.3f reported for comparison with the ~7/6 asymptotic "
               "estimate (not asserted)",
               prefactor, slope, static_cast<double>(s_255) / (255.0 * 255.0)));
}

}  // namespace

int main() {
    criterion_dense_equivalence();
    criterion_gate_counts();
    criterion_fock_oracle();
    criterion_fermionic_signs();
    criterion_functoriality();
    criterion_involution();
    criterion_diagonalization();
    criterion_performance();
    criterion_swap_scale();
    std::printf("%d of 9 criteria passed\n", 9 - g_failures);
    return g_failures;
}
