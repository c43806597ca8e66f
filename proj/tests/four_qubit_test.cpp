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

#include <bit>

#include "test_util.hpp"

using namespace purespinor;

namespace {

OmegaState random_omega(oracle::Sampler &s, bool normalize) {
    const auto a = s.amplitudes<8>(normalize);
    return OmegaState(std::array<Complex, 8>(a));
}

ComplexVector u_perp(const ComplexVector &u) {
    return ComplexVector{-std::conj(u[1]), std::conj(u[0])};
}

}  // namespace

TEST(omega_state, validation) {
    EXPECT_THROW(OmegaState(std::array<Complex, 8>{}), Error);
    std::array<Complex, 8> bad{};
    bad[2] = std::numeric_limits<double>::infinity();
    EXPECT_THROW(OmegaState{bad}, Error);
    EXPECT_THROW(OmegaState(ComplexVector(7)), Error);
}

TEST(expand16, lands_on_even_parity_kets) {
    oracle::Sampler s(1);
    const OmegaState o = random_omega(s, false);
    const ComplexVector v = expand16(o);
    std::size_t k = 0;
    for (unsigned idx = 0; idx < 16; ++idx) {
        if (std::popcount(idx) % 2 == 0)
            EXPECT_EQ(v[idx], o.amps[k++]) << idx;
        else
            EXPECT_EQ(v[idx], Complex{}) << idx;
    }
    EXPECT_EQ(k, 8u);
}

TEST(z_coords, basis_state) {
    std::array<Complex, 8> a{};
    a[0] = 1.0;
    EXPECT_EQ(z_coords(OmegaState(a)).coords, (std::vector<double>{1, 0, 0, 1, 0, 0, 0, 0}));
}

TEST(z_coords, norm_slot_and_alternating_z3) {
    oracle::Sampler s(2);
    for (int t = 0; t < 200; ++t) {
        const OmegaState o = random_omega(s, false);
        const CoordinateVector z = z_coords(o);
        double n = 0;
        double alt = 0;
        for (std::size_t k = 1; k <= 8; ++k) {
            n += std::norm(o.a(k));
            alt += (k % 2 == 1 ? 1.0 : -1.0) * std::norm(o.a(k));
        }
        EXPECT_NEAR(z[0], n, 1e-12 * n);
        EXPECT_NEAR(z[3], alt, 1e-12 * n);
    }
}

TEST(z_coords, mixing_pairs_carry_m1_and_m2) {
    oracle::Sampler s(3);
    for (int t = 0; t < 500; ++t) {
        const OmegaState o = random_omega(s, true);
        const CoordinateVector z = z_coords(o);
        EXPECT_NEAR(std::hypot(z[4], z[5]), m1(o), 1e-12);
        EXPECT_NEAR(std::hypot(z[6], z[7]), m2(o), 1e-12);
    }
}

TEST(z_coords, first_mixing_pair_is_two_qubit_concurrence_on_a1_to_a4) {
    // With only a1..a4 populated the second mixing pair vanishes and the
    // first one measures the concurrence of (a1, a2, a3, a4).
    oracle::Sampler s(4);
    for (int t = 0; t < 200; ++t) {
        const auto a = s.amplitudes<4>(true);
        const OmegaState o(std::array<Complex, 8>{a[0], a[1], a[2], a[3], 0.0, 0.0, 0.0, 0.0});
        const CoordinateVector z = z_coords(o);
        EXPECT_NEAR(std::hypot(z[4], z[5]), oracle::spin_flip_concurrence(a), 1e-12);
        EXPECT_EQ(z[6], 0.0);
        EXPECT_EQ(z[7], 0.0);
    }
}

TEST(z_coords, sphere_fails_for_a1_a6_superposition) {
    // a1 = a6 = 1/sqrt(2): Z2 picks up conj(a6) conj(a5) = 0 and nothing else,
    // yet Z3 = 1/2 - 1/2 = 0 and all mixing channels vanish, so the sum of
    // squares is 0 against Z0^2 = 1. The identity does not hold for general
    // eight-amplitude states; this pins the current behavior.
    const double h = 1 / std::sqrt(2.0);
    const OmegaState o(std::array<Complex, 8>{h, 0.0, 0.0, 0.0, 0.0, h, 0.0, 0.0});
    const CoordinateVector z = z_coords(o);
    double spatial = 0;
    for (std::size_t k = 1; k < 8; ++k) spatial += z[k] * z[k];
    EXPECT_NEAR(z[0], 1.0, 1e-15);
    EXPECT_NEAR(spatial, 0.0, 1e-15);
    EXPECT_NEAR(z_sphere_residual(o), 1.0, 1e-15);
}

TEST(measures, worked_examples) {
    std::array<Complex, 8> a{};
    a[0] = 1.0;
    a[7] = 1.0;
    EXPECT_EQ(m2(OmegaState(a)), 2.0);
    EXPECT_EQ(m1(OmegaState(a)), 0.0);
}

TEST(gabcd, amplitude_layout) {
    const OmegaState o = gabcd(1.0, 0.0, 0.0, 1.0);
    EXPECT_EQ(o.amps, (std::array<Complex, 8>{1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0}));
    EXPECT_EQ(m2(o), 2.0);
}

TEST(gabcd, m2_is_concurrence_and_m1_vanishes) {
    oracle::Sampler s(5);
    for (int t = 0; t < 2000; ++t) {
        const auto a = s.amplitudes<4>(true);
        const OmegaState o = gabcd(a[0], a[1], a[2], a[3]);
        EXPECT_NEAR(o.norm2(), 1.0, 1e-12);
        EXPECT_NEAR(m2(o), oracle::spin_flip_concurrence(a), 1e-12);
        EXPECT_LE(m1(o), 1e-15);
    }
}

TEST(m1_bound, holds_on_random_states) {
    oracle::Sampler s(6);
    for (int t = 0; t < 2000; ++t) {
        const FourQubitMeasures m = m1_bound(random_omega(s, true));
        EXPECT_TRUE(m.bound_holds);
        EXPECT_LE(m.M1, m.M1_first + m.M1_second + 1e-12);
    }
}

TEST(m1_bound, equality_and_strict_cases) {
    const OmegaState eq(std::array<Complex, 8>{0.5, 0.0, 0.0, 0.5, 0.5, 0.0, 0.0, -0.5});
    const FourQubitMeasures e = m1_bound(eq);
    EXPECT_DOUBLE_EQ(e.M1, 1.0);
    EXPECT_DOUBLE_EQ(e.bound_M1, 1.0);
    EXPECT_TRUE(e.bound_holds);

    const OmegaState strict(std::array<Complex, 8>{0.5, 0.0, 0.0, 0.5, 0.5, 0.0, 0.0, 0.5});
    const FourQubitMeasures st = m1_bound(strict);
    EXPECT_EQ(st.M1, 0.0);
    EXPECT_DOUBLE_EQ(st.bound_M1, 1.0);
    EXPECT_TRUE(st.bound_holds);
}

TEST(direct_sum8, example_and_nullity_of_pure_pairs) {
    const ComplexVector e0{1.0, 0.0, 0.0, 0.0};
    const DirectSum8 ds = direct_sum_coords8(e0, e0);
    EXPECT_EQ(ds.z.size(), 8u);
    EXPECT_EQ(null_norm(ds.z), 0.0);

    oracle::Sampler s(7);
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const ComplexVector psi = random_state(4, seed);
        for (Complex lambda : {s.complex(), Complex{1e-6}}) {
            const DirectSum8 d = direct_sum_coords8(psi, lambda * psi);
            EXPECT_LE(std::abs(null_norm(d.z)), 1e-10 * d.z.euclidean_norm2());
        }
    }
}

TEST(direct_sum8, rejects_zero_halves) {
    EXPECT_THROW(direct_sum_coords8(random_state(4, 1), ComplexVector(4)), Error);
    EXPECT_THROW(direct_sum_coords8(ComplexVector{1.0, 0.0}, random_state(4, 1)), Error);
}

TEST(coupled_system8, block_residuals_vanish_for_pure_pairs) {
    oracle::Sampler s(8);
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const ComplexVector psi = random_state(4, seed);
        const Mix8Report r = coupled_system8(psi, s.complex() * psi);
        for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_LE(r.residuals[k], 1e-10) << k;
            EXPECT_NEAR(r.phase_residuals[k], r.residuals[k], 1e-12) << k;
        }
        EXPECT_LE(r.pencil_residual, 1e-10);
    }
}

TEST(coupled_system8, polar_forms) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Mix8Report r = coupled_system8(random_state(4, 2 * seed), random_state(4, 2 * seed + 1));
        const Complex p1 = std::polar(r.M1, r.omega1 / 2);
        const Complex p2 = std::polar(r.M2, r.omega2 / 2);
        EXPECT_NEAR(p1.real(), r.z[5], 1e-12 * std::abs(r.z[0]));
        EXPECT_NEAR(p1.imag(), r.z[4], 1e-12 * std::abs(r.z[0]));
        EXPECT_NEAR(p2.real(), r.z[7], 1e-12 * std::abs(r.z[0]));
        EXPECT_NEAR(p2.imag(), r.z[6], 1e-12 * std::abs(r.z[0]));
        EXPECT_GT(std::max(r.M1, r.M2), 0.0);
    }
}

TEST(coupled_system8, generic_pairs_are_not_null) {
    // For unrelated Psi and Phi the eight-component vector has a nonzero
    // quadratic form, so the block equations cannot all hold. Recorded as
    // the current behavior.
    std::size_t non_null = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Mix8Report r = coupled_system8(random_state(4, 2 * seed), random_state(4, 2 * seed + 1));
        if (std::abs(null_norm(r.z)) > 1e-6 * r.z.euclidean_norm2()) ++non_null;
    }
    EXPECT_GT(non_null, 150u);
}

TEST(coupled_system8, orthogonal_halves_decouple) {
    oracle::Sampler s(9);
    for (int t = 0; t < 300; ++t) {
        const auto uu = s.amplitudes<2>(true);
        const ComplexVector u{uu[0], uu[1]};
        const ComplexVector w = u_perp(u);
        const Complex beta = s.complex();
        const Complex gamma = s.complex();
        const Complex delta = s.complex();
        const ComplexVector psi = concat(u, beta * w);
        const ComplexVector phi = concat(gamma * u, delta * w);
        const Mix8Report r = coupled_system8(psi, phi);
        EXPECT_LE(r.M1, 1e-12);
        EXPECT_LE(r.M2, 1e-12);
        EXPECT_TRUE(r.decoupled);
        for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_LE(r.residuals[k], 1e-10) << k;
            EXPECT_LE(r.reduced_residuals[k], 1e-10) << k;
            EXPECT_LE(r.weyl_residuals[k], 1e-10) << k;
        }
    }
}

TEST(j_convention, search_reproduces_frozen_choice) {
    const JSearchResult r = search_j_convention();
    const JConvention f = frozen_j_convention();
    EXPECT_EQ(r.convention.sign, f.sign);
    EXPECT_EQ(r.convention.conj, f.conj);
    EXPECT_EQ(r.convention.perm, f.perm);
    EXPECT_EQ(r.score, 5u);
    EXPECT_EQ(r.matched, (std::array<bool, 8>{true, true, false, true, true, false, true, false}));
    EXPECT_EQ(j_channel_matches(f), r.matched);
}

TEST(j_convention, matched_channels_agree_numerically) {
    const JRepresentationReport rep = j_representation_check(1e-10, 200, 3);
    const auto matched = j_channel_matches(frozen_j_convention());
    for (std::size_t k = 0; k < 8; ++k) {
        if (matched[k])
            EXPECT_LE(rep.channel_deviation[k], 1e-12) << k;
        else
            EXPECT_GT(rep.channel_deviation[k], 1e-3) << k;
    }
    EXPECT_EQ(rep.clifford_residual, 0.0);
    EXPECT_FALSE(rep.pass);
}

TEST(j_convention, tilde_places_amplitudes) {
    std::array<Complex, 8> a{};
    for (std::size_t k = 0; k < 8; ++k) a[k] = Complex{double(k + 1), 1.0};
    const JConvention f = frozen_j_convention();
    const ComplexVector t = j_tilde(OmegaState(a), f);
    for (std::size_t k = 0; k < 8; ++k) EXPECT_EQ(t[f.perm[k]], f.conj[k] ? std::conj(a[k]) : a[k]);
}
