// Copyright 2026 The purespinor Authors
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

#include <gtest/gtest.h>

#include <numbers>

#include "test_util.hpp"

using namespace purespinor;
using testutil::from_lib;
using testutil::to_lib;

TEST(kron, identity_blocks) {
    EXPECT_EQ(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
}

TEST(kron, index_formula) {
    oracle::Sampler s(1);
    const ComplexMatrix a = testutil::random_matrix(s, 2, 3);
    const ComplexMatrix b = testutil::random_matrix(s, 3, 2);
    const ComplexMatrix k = kron(a, b);
    ASSERT_EQ(k.rows(), 6u);
    ASSERT_EQ(k.cols(), 6u);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t p = 0; p < 3; ++p)
                for (std::size_t q = 0; q < 2; ++q) EXPECT_EQ(k(i * 3 + p, j * 2 + q), a(i, j) * b(p, q));
}

TEST(kron, pauli_products_match_printed_cl5_matrices) {
    const Complex i = kI;
    const ComplexMatrix s2s2{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}};
    const ComplexMatrix s3s2{{0, -i, 0, 0}, {i, 0, 0, 0}, {0, 0, 0, i}, {0, 0, -i, 0}};
    EXPECT_EQ(kron(to_lib(oracle::sigma(2)), to_lib(oracle::sigma(2))), s2s2);
    EXPECT_EQ(kron(to_lib(oracle::sigma(3)), to_lib(oracle::sigma(2))), s3s2);
}

namespace {

// Entries from {0, +-1, +-i, +-1/2}, where every product is exact.
ComplexMatrix exact_matrix(oracle::Sampler &s, std::size_t r, std::size_t c) {
    const std::array<Complex, 7> pool = {0.0, 1.0, -1.0, kI, -kI, 0.5, -0.5};
    ComplexMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = pool[static_cast<std::size_t>(s.uniform(0, 7)) % 7];
    return m;
}

}  // namespace

TEST(kron, associative_exactly_on_exact_entries) {
    oracle::Sampler s(2);
    for (int t = 0; t < 20; ++t) {
        const ComplexMatrix a = exact_matrix(s, 2, 2);
        const ComplexMatrix b = exact_matrix(s, 2, 3);
        const ComplexMatrix c = exact_matrix(s, 3, 2);
        EXPECT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
    }
}

TEST(kron, associative_to_rounding_on_random_entries) {
    oracle::Sampler s(12);
    for (int t = 0; t < 20; ++t) {
        const ComplexMatrix a = testutil::random_matrix(s, 2, 2);
        const ComplexMatrix b = testutil::random_matrix(s, 2, 3);
        const ComplexMatrix c = testutil::random_matrix(s, 3, 2);
        EXPECT_LE(testutil::max_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-14);
    }
}

TEST(kernel_basis, zero_map_is_everything) {
    EXPECT_EQ(kernel_basis(ComplexMatrix(3, 3), 1e-12).size(), 3u);
}

TEST(kernel_basis, full_rank_is_empty) {
    EXPECT_TRUE(kernel_basis(ComplexMatrix::identity(4), 1e-12).empty());
}

TEST(kernel_basis, dirac_weyl_spinor_has_two_dim_kernel) {
    // Columns gamma_mu psi for psi = (1,0,0,0).
    oracle::Mat cols = oracle::zeros(4, 4);
    const oracle::Vec psi{1.0, 0.0, 0.0, 0.0};
    for (int mu = 0; mu < 4; ++mu) {
        const oracle::Vec g = oracle::apply(oracle::gamma(mu), psi);
        for (int r = 0; r < 4; ++r) cols[r][mu] = g[r];
    }
    EXPECT_EQ(4 - oracle::rank(cols, 1e-12), 2u);
    EXPECT_EQ(kernel_basis(to_lib(cols), 1e-12).size(), 2u);
}

TEST(kernel_basis, vectors_are_orthonormal_and_annihilated) {
    oracle::Sampler s(3);
    for (int t = 0; t < 50; ++t) {
        // rank-deficient 6x5 product of 6x3 and 3x5 factors.
        const ComplexMatrix m = testutil::random_matrix(s, 6, 3) * testutil::random_matrix(s, 3, 5);
        const double tol = 1e-10;
        const auto basis = kernel_basis(m, tol);
        ASSERT_EQ(basis.size(), 2u);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            EXPECT_LE(norm(m * basis[i]), tol * frobenius_norm(m) * norm(basis[i]));
            for (std::size_t j = 0; j < basis.size(); ++j)
                EXPECT_NEAR(std::abs(vdot(basis[i], basis[j])), i == j ? 1.0 : 0.0, 1e-12);
        }
    }
}

TEST(kernel_basis, rank_plus_nullity_matches_oracle) {
    oracle::Sampler s(4);
    for (std::size_t r = 1; r <= 5; ++r) {
        const ComplexMatrix m = testutil::random_matrix(s, 5, r) * testutil::random_matrix(s, r, 6);
        EXPECT_EQ(rank(m, 1e-10) + kernel_basis(m, 1e-10).size(), 6u);
        EXPECT_EQ(rank(m, 1e-10), oracle::rank(from_lib(m), 1e-10));
    }
}

TEST(kernel_basis, rejects_non_finite) {
    ComplexMatrix m = ComplexMatrix::identity(2);
    m(0, 1) = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(kernel_basis(m, 1e-10), Error);
}

TEST(expm, zero_is_identity) {
    EXPECT_EQ(expm(ComplexMatrix(4, 4)), ComplexMatrix::identity(4));
}

TEST(expm, pauli_rotation_closed_form) {
    // exp(i t s1) = cos t I + i sin t s1
    const ComplexMatrix s1 = to_lib(oracle::sigma(1));
    const ComplexMatrix e = expm(Complex{0.0, std::numbers::pi / 2} * s1);
    EXPECT_LE(testutil::max_diff(e, kI * s1), 1e-14);
    for (double t : {0.3, 1.7, 4.9}) {
        const ComplexMatrix want = Complex{std::cos(t)} * ComplexMatrix::identity(2) + Complex{0, std::sin(t)} * s1;
        EXPECT_LE(testutil::max_diff(expm(Complex{0.0, t} * s1), want), 1e-13);
    }
}

TEST(expm, diagonal) {
    const ComplexMatrix d{{Complex{0.7, -1.2}, 0.0}, {0.0, Complex{-2.5, 3.0}}};
    const ComplexMatrix e = expm(d);
    EXPECT_LE(std::abs(e(0, 0) - std::exp(Complex{0.7, -1.2})), 1e-13);
    EXPECT_LE(std::abs(e(1, 1) - std::exp(Complex{-2.5, 3.0})), 1e-13);
    EXPECT_EQ(e(0, 1), Complex{});
}

TEST(expm, agrees_with_unscaled_taylor_oracle) {
    oracle::Sampler s(5);
    for (int t = 0; t < 20; ++t) {
        ComplexMatrix a = testutil::random_matrix(s, 4, 4);
        a *= Complex{5.0 / frobenius_norm(a)};
        const ComplexMatrix want = to_lib(oracle::expm_taylor(from_lib(a)));
        EXPECT_LE(testutil::max_diff(expm(a), want), 1e-12 * std::max(1.0, max_abs(want)));
    }
}

TEST(expm, inverse_property) {
    oracle::Sampler s(6);
    for (int t = 0; t < 50; ++t) {
        ComplexMatrix a = testutil::random_matrix(s, 4, 4);
        a *= Complex{s.uniform(0.0, 5.0) / frobenius_norm(a)};
        EXPECT_LE(testutil::max_diff(expm(a) * expm(-a), ComplexMatrix::identity(4)), 1e-10);
    }
}

TEST(random_state, deterministic) {
    EXPECT_EQ(random_state(4, 7), random_state(4, 7));
    EXPECT_NE(random_state(4, 7), random_state(4, 8));
}

TEST(random_state, shape_and_nonzero) {
    EXPECT_EQ(random_state(8, 0).dim(), 8u);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) EXPECT_GT(norm(random_state(2, seed)), 0.0);
    EXPECT_THROW(random_state(0, 1), std::invalid_argument);
}

TEST(random_state, standard_normal_moments) {
    double sum = 0;
    double sum2 = 0;
    std::size_t count = 0;
    for (std::uint64_t seed = 0; seed < 2000; ++seed)
        for (Complex z : random_state(4, seed)) {
            for (double x : {z.real(), z.imag()}) {
                sum += x;
                sum2 += x * x;
                ++count;
            }
        }
    EXPECT_NEAR(sum / count, 0.0, 0.05);
    EXPECT_NEAR(sum2 / count, 1.0, 0.05);
}

TEST(determinant, matches_diagonal_product) {
    const ComplexMatrix d{{2.0, 1.0, 0.0}, {0.0, kI, 5.0}, {0.0, 0.0, -3.0}};
    EXPECT_LE(std::abs(determinant(d) - Complex{0, -6}), 1e-14);
    EXPECT_EQ(determinant(ComplexMatrix(2, 2)), Complex{});
}

TEST(matrix, shape_errors) {
    EXPECT_THROW(ComplexMatrix(2, 3) * ComplexMatrix(2, 3), Error);
    EXPECT_THROW(expm(ComplexMatrix(2, 3)), Error);
    EXPECT_THROW((ComplexMatrix{{1.0, 2.0}, {3.0}}), Error);
}
