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

// Tests for the free-fermion chain: closed-form spectrum, single-particle
// diagonalization through the sine plan, and the exact many-body check. An
// independent dense eigensolver (Eigen) serves as the numerical oracle.

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "gtest/gtest.h"

#include "dstnet/dense.hpp"
#include "dstnet/fock.hpp"
#include "dstnet/physics.hpp"
#include "dstnet/planner.hpp"

namespace {

using dstnet::DenseMatrix;

Eigen::MatrixXd to_eigen_real(const DenseMatrix& m) {
    Eigen::MatrixXd out(m.rows, m.cols);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) out(r, c) = m(r, c).real();
    return out;
}

TEST(Hamiltonian, TridiagonalStructure) {
    const dstnet::HoppingHamiltonian h = dstnet::hopping_hamiltonian(4, 2.0);
    EXPECT_EQ(h.n, 4u);
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
            const double want = (a + 1 == b || b + 1 == a) ? 2.0 : 0.0;
            EXPECT_EQ(h.matrix(a, b), dstnet::cplx(want)) << a << "," << b;
        }
    }
    EXPECT_THROW(dstnet::hopping_hamiltonian(0), std::invalid_argument);
}

TEST(Spectrum, ClosedFormValues) {
    const std::vector<double> lam = dstnet::spectrum_via_dst(3);
    ASSERT_EQ(lam.size(), 3u);
    EXPECT_NEAR(lam[0], std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(lam[1], 0.0, 1e-12);
    EXPECT_NEAR(lam[2], -std::sqrt(2.0), 1e-12);

    const std::vector<double> one = dstnet::spectrum_via_dst(1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_NEAR(one[0], 0.0, 1e-12);
}

TEST(Spectrum, ColumnOrderIsDescendingAndSymmetric) {
    const std::vector<double> lam = dstnet::spectrum_via_dst(31);
    for (std::size_t b = 0; b + 1 < lam.size(); ++b) EXPECT_GT(lam[b], lam[b + 1]);
    for (std::size_t b = 0; b < lam.size(); ++b)
        EXPECT_NEAR(lam[b], -lam[lam.size() - 1 - b], 1e-12);
}

TEST(Spectrum, HoppingScaleIsLinear) {
    const std::vector<double> unit = dstnet::spectrum_via_dst(7, 1.0);
    const std::vector<double> half = dstnet::spectrum_via_dst(7, 0.5);
    for (std::size_t b = 0; b < 7; ++b) EXPECT_NEAR(half[b], 0.5 * unit[b], 1e-12);
}

TEST(Spectrum, FamilyGuard) {
    EXPECT_THROW(dstnet::spectrum_via_dst(4), std::invalid_argument);
    EXPECT_THROW(dstnet::spectrum_via_dst(0), std::invalid_argument);
}

TEST(Spectrum, AgreesWithEigenSolver) {
    for (std::size_t n : {3u, 7u, 15u, 31u, 63u}) {
        const Eigen::MatrixXd h = to_eigen_real(dstnet::hopping_hamiltonian(n).matrix);
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
        ASSERT_EQ(solver.info(), Eigen::Success);
        std::vector<double> ours = dstnet::spectrum_via_dst(n);
        std::sort(ours.begin(), ours.end());  // Eigen returns ascending order
        for (std::size_t b = 0; b < n; ++b)
            EXPECT_NEAR(ours[b], solver.eigenvalues()(static_cast<Eigen::Index>(b)), 1e-10)
                << "n=" << n << " b=" << b;
    }
}

TEST(Diagonalization, DenseConjugationIsDiagonal) {
    for (std::size_t n : {3u, 7u, 15u}) {
        const DenseMatrix v = dstnet::orthonormal_dst1(n);
        const DenseMatrix h = dstnet::hopping_hamiltonian(n).matrix;
        const DenseMatrix conj = dstnet::transpose(v) * h * v;
        const std::vector<double> lam = dstnet::spectrum_via_dst(n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b)
                    EXPECT_NEAR(conj(a, b).real(), lam[a], 1e-12) << "n=" << n;
                else
                    EXPECT_LT(std::abs(conj(a, b)), 1e-12) << "n=" << n;
            }
        }
    }
}

TEST(Diagonalization, FastPathResidual) {
    for (unsigned k : {1u, 2u, 3u, 6u}) {
        const dstnet::SpectrumResidual r = dstnet::single_particle_residual(dstnet::plan_dst1(k));
        EXPECT_LT(r.max_offdiag, 1e-12) << "k=" << k;
        EXPECT_LT(r.max_diag_deviation, 1e-10) << "k=" << k;
    }
    EXPECT_THROW(dstnet::single_particle_residual(dstnet::plan_dst3(2)), std::invalid_argument);
}

TEST(ManyBody, HoppingMatrixSmallest) {
    // n = 2 over |00>, |01>, |10>, |11>: the only hop couples |01> and |10>.
    const DenseMatrix h = dstnet::many_body_hopping(2, 1.0);
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) {
            const double want = ((x == 1 && y == 2) || (x == 2 && y == 1)) ? 1.0 : 0.0;
            EXPECT_EQ(h(y, x), dstnet::cplx(want)) << y << "," << x;
        }
}

TEST(ManyBody, AdjacentHopsCarryNoStringSign) {
    const DenseMatrix h = dstnet::many_body_hopping(3, 1.0);
    // |110> <-> |101> moves a particle between modes 1 and 2 with mode 0
    // occupied; adjacency means no exchange string crosses the hop.
    EXPECT_EQ(h(5, 6), dstnet::cplx(1.0));
    EXPECT_EQ(h(6, 5), dstnet::cplx(1.0));
    // Particle number is conserved: no coupling between sectors.
    EXPECT_EQ(h(0, 6), dstnet::cplx(0.0));
    EXPECT_EQ(h(7, 6), dstnet::cplx(0.0));
    EXPECT_THROW(dstnet::many_body_hopping(15), std::invalid_argument);
}

TEST(ManyBody, ConjugationDiagonalizes) {
    for (std::size_t n : {1u, 3u, 7u}) {
        const dstnet::ManyBodyReport rep = dstnet::verify_many_body_diagonalization(n);
        EXPECT_TRUE(rep.diagonal_ok) << "n=" << n;
        EXPECT_LT(rep.max_offdiag, 1e-9) << "n=" << n;
        EXPECT_LT(rep.max_diag_deviation, 1e-9) << "n=" << n;
        // Filling every negative mode minimizes the diagonal.
        EXPECT_NEAR(rep.min_diagonal, rep.ground_energy, 1e-9) << "n=" << n;
    }
    EXPECT_THROW(dstnet::verify_many_body_diagonalization(4), std::invalid_argument);
    EXPECT_THROW(dstnet::verify_many_body_diagonalization(15), std::invalid_argument);
}

TEST(ManyBody, VacuumAndFilledDiagonalEntries) {
    // Direct check of the conjugated operator's extreme diagonal entries:
    // the vacuum sees energy 0, and the completely filled chain sums every
    // eigenvalue, which cancels to 0 by spectrum symmetry.
    const dstnet::Plan plan = dstnet::plan_dst1(2);
    const DenseMatrix gamma = dstnet::circuit_operator(plan);
    const DenseMatrix conj =
        dstnet::transpose(gamma) * dstnet::many_body_hopping(3) * gamma;
    EXPECT_NEAR(conj(0, 0).real(), 0.0, 1e-12);
    EXPECT_NEAR(conj(7, 7).real(), 0.0, 1e-12);
    // A single particle in mode 0 carries the largest eigenvalue sqrt(2).
    EXPECT_NEAR(conj(4, 4).real(), std::sqrt(2.0), 1e-12);
}

TEST(ManyBody, GroundEnergyMatchesEigenSolver) {
    const dstnet::ManyBodyReport rep = dstnet::verify_many_body_diagonalization(7);
    const Eigen::MatrixXd h = to_eigen_real(dstnet::many_body_hopping(7));
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    ASSERT_EQ(solver.info(), Eigen::Success);
    EXPECT_NEAR(solver.eigenvalues()(0), rep.ground_energy, 1e-9);
}

TEST(ManyBody, FullSpectrumMatchesEigenSolver) {
    // The diagonal of the conjugated operator, as a multiset, is the complete
    // many-body spectrum: compare all 2^n values against the eigensolver.
    const std::size_t n = 7;
    const dstnet::Plan plan = dstnet::plan_dst1(3);
    const DenseMatrix gamma = dstnet::circuit_operator(plan);
    const DenseMatrix conj = dstnet::transpose(gamma) * dstnet::many_body_hopping(n) * gamma;
    std::vector<double> diag;
    for (std::size_t x = 0; x < conj.rows; ++x) diag.push_back(conj(x, x).real());
    std::sort(diag.begin(), diag.end());

    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        to_eigen_real(dstnet::many_body_hopping(n)));
    ASSERT_EQ(solver.info(), Eigen::Success);
    for (std::size_t x = 0; x < diag.size(); ++x)
        EXPECT_NEAR(diag[x], solver.eigenvalues()(static_cast<Eigen::Index>(x)), 1e-9)
            << "x=" << x;
}

}  // namespace
