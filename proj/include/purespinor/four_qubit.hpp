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

// Restricted (even-parity) four-qubit states: Z coordinates, the two mixing
// measures M1/M2, the G_abcd family, the 8-dimensional direct-sum Cartan
// system, and the search for a Cl(7) realization of the coordinates.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>

#include "purespinor/qubit_geometry.hpp"

namespace purespinor {

/// Binary basis indices of a1..a8 in the 16-dim four-qubit space.
inline constexpr std::array<std::size_t, 8> kEvenParityIndices = {0, 3, 5, 6, 9, 10, 12, 15};

/// Amplitudes a1..a8 (stored 0-based) on the even-parity kets.
struct OmegaState {
    std::array<Complex, 8> amps{};

    OmegaState() = default;
    explicit OmegaState(const std::array<Complex, 8> &a) : amps(a) {
        for (Complex z : amps)
            if (!is_finite(z)) throw Error(Errc::non_finite, "four-qubit amplitudes");
        if (norm2() == 0) throw Error(Errc::zero_state, "four-qubit state");
    }
    explicit OmegaState(const ComplexVector &v) : OmegaState(to_array(v)) {
    }

    /// a_k with the 1-based label used in formulas.
    Complex a(std::size_t k) const {
        return amps[k - 1];
    }
    double norm2() const {
        double acc = 0;
        for (Complex z : amps) acc += std::norm(z);
        return acc;
    }
    ComplexVector vec() const {
        return ComplexVector(std::vector<Complex>(amps.begin(), amps.end()));
    }

   private:
    static std::array<Complex, 8> to_array(const ComplexVector &v) {
        if (v.dim() != 8) throw Error(Errc::dimension_mismatch, "four-qubit state needs 8 amplitudes");
        std::array<Complex, 8> out{};
        std::copy(v.begin(), v.end(), out.begin());
        return out;
    }
};

inline ComplexVector expand16(const OmegaState &o) {
    ComplexVector out(16);
    for (std::size_t k = 0; k < 8; ++k) out[kEvenParityIndices[k]] = o.amps[k];
    return out;
}

namespace detail {

inline Complex z_w(const OmegaState &o) {
    return o.a(2) * o.a(1) + std::conj(o.a(3)) * std::conj(o.a(4)) + std::conj(o.a(6)) * std::conj(o.a(5)) +
           o.a(7) * o.a(8);
}
inline Complex z_q(const OmegaState &o) {
    return -o.a(1) * o.a(4) + o.a(2) * o.a(3) + o.a(8) * o.a(5) - o.a(7) * o.a(6);
}
inline Complex z_p(const OmegaState &o) {
    return -o.a(8) * o.a(1) + o.a(7) * o.a(2) + o.a(6) * o.a(3) - o.a(5) * o.a(4);
}

}  // namespace detail

/// Z0..Z7 from the explicit component formulas.
inline CoordinateVector z_coords(const OmegaState &o) {
    const Complex w = detail::z_w(o);
    const Complex q = detail::z_q(o);
    const Complex p = detail::z_p(o);
    double z3 = 0;
    for (std::size_t k = 0; k < 8; ++k) z3 += (k % 2 == 0 ? 1.0 : -1.0) * std::norm(o.amps[k]);
    return CoordinateVector({o.norm2(), 2 * w.real(), 2 * w.imag(), z3, 2 * q.real(), 2 * q.imag(), 2 * p.real(),
                             2 * p.imag()},
                            std::vector<int>{-1, 1, 1, 1, 1, 1, 1, 1});
}

/// |sum_{k>=1} Z_k^2 - Z0^2| / Z0^2.
inline double z_sphere_residual(const OmegaState &o) {
    const CoordinateVector z = z_coords(o);
    return std::abs(null_norm(z)) / (z[0] * z[0]);
}

inline double m1(const OmegaState &o) {
    return 2 * std::abs(o.a(1) * o.a(4) - o.a(2) * o.a(3) - o.a(8) * o.a(5) + o.a(7) * o.a(6));
}

inline double m2(const OmegaState &o) {
    return 2 * std::abs(o.a(8) * o.a(1) - o.a(7) * o.a(2) - o.a(6) * o.a(3) + o.a(5) * o.a(4));
}

/// Symmetric even-parity family built from one pair of two-qubit amplitudes.
inline OmegaState gabcd(Complex a, Complex b, Complex c, Complex d) {
    const Complex s = 0.5 * (a + d);
    const Complex t = 0.5 * (a - d);
    const Complex u = 0.5 * (b + c);
    const Complex v = 0.5 * (b - c);
    return OmegaState(std::array<Complex, 8>{s, t, u, v, v, u, t, s});
}

struct FourQubitMeasures {
    double M1 = 0;
    double M2 = 0;
    /// 2|a1 a4 - a2 a3| and 2|a8 a5 - a7 a6|.
    double M1_first = 0;
    double M1_second = 0;
    double bound_M1 = 0;
    bool bound_holds = false;
};

inline FourQubitMeasures m1_bound(const OmegaState &o, double tol = 1e-10) {
    FourQubitMeasures m;
    m.M1 = m1(o);
    m.M2 = m2(o);
    m.M1_first = 2 * std::abs(o.a(1) * o.a(4) - o.a(2) * o.a(3));
    m.M1_second = 2 * std::abs(o.a(8) * o.a(5) - o.a(7) * o.a(6));
    m.bound_M1 = m.M1_first + m.M1_second;
    m.bound_holds = m.M1 <= m.bound_M1 + tol;
    return m;
}

struct DirectSum8 {
    SpinorState omega;
    CoordinateVector z;
};

/// Omega = Psi (+) Phi under the 8-dim set, with Z6 = i Omegabar Omega and Z7 = Omegabar G7 Omega.
inline DirectSum8 direct_sum_coords8(const ComplexVector &psi, const ComplexVector &phi, double tol = 1e-10) {
    if (psi.dim() != 4 || phi.dim() != 4)
        throw Error(Errc::dimension_mismatch, "direct_sum_coords8 takes two 4-component spinors");
    if (norm(psi) == 0 || norm(phi) == 0) throw Error(Errc::zero_state, "direct_sum_coords8");
    Embedding e = embed(psi, phi, SetName::GAMMA8, tol);
    return {std::move(e.psi), std::move(e.x)};
}

struct Mix8Report {
    double M1 = 0;
    double omega1 = 0;
    double M2 = 0;
    double omega2 = 0;
    /// Four 2x2 block equations (rows psiA, psiB, phiC, phiD), relative to |Omega|^3.
    std::array<double, 4> residuals{};
    /// Same after the phase absorption psiA' = e^{i(w1+w2)/2} psiA, psiB' = e^{i w2/2} psiB, phiD' = e^{i w1/2} phiD.
    std::array<double, 4> phase_residuals{};
    /// |P Omega| / |Omega|^3 for the full 8x8 pencil.
    double pencil_residual = 0;
    bool decoupled = false;
    std::array<double, 4> reduced_residuals{};
    /// Each qubit against its own Bloch vector; (-) for A, C and (+) for B, D.
    std::array<double, 4> weyl_residuals{};
    CoordinateVector z;
};

/// The 8-dim Cartan system in 2x2 blocks, with Z0 the lowered timelike coefficient:
///   (Z.s - Z0) A = (Z5 - iZ4) B + (Z7 - iZ6) D
///   (Z.s + Z0) B = -(Z5 + iZ4) A + (Z7 - iZ6) C
///   (Z.s - Z0) C = (Z5 + iZ4) D - (Z7 + iZ6) B
///   (Z.s + Z0) D = -(Z5 - iZ4) C - (Z7 + iZ6) A
inline Mix8Report coupled_system8(const ComplexVector &psi, const ComplexVector &phi, double tol = 1e-10) {
    DirectSum8 ds = direct_sum_coords8(psi, phi, tol);
    const CoordinateVector &z = ds.z;
    Mix8Report r;
    r.z = z;
    const double z0 = z.lowered(0);
    r.M1 = std::hypot(z[4], z[5]);
    r.omega1 = half_angle_phase(z[4], z[5]);
    r.M2 = std::hypot(z[6], z[7]);
    r.omega2 = half_angle_phase(z[6], z[7]);

    const ComplexVector &om = ds.omega.components();
    const ComplexVector a = slice(om, 0, 2);
    const ComplexVector b = slice(om, 2, 2);
    const ComplexVector c = slice(om, 4, 2);
    const ComplexVector d = slice(om, 6, 2);
    const ComplexMatrix s = spatial_sigma(z);
    const ComplexMatrix id = pauli::identity();
    const ComplexMatrix minus = s - Complex{z0} * id;
    const ComplexMatrix plus = s + Complex{z0} * id;
    const double scale = std::pow(norm(om), 3);

    const Complex p1{z[5], z[4]};   // Z5 + i Z4
    const Complex p1c{z[5], -z[4]}; // Z5 - i Z4
    const Complex p2{z[7], z[6]};
    const Complex p2c{z[7], -z[6]};
    r.residuals = {norm(minus * a - p1c * b - p2c * d) / scale, norm(plus * b + p1 * a - p2c * c) / scale,
                   norm(minus * c - p1 * d + p2 * b) / scale, norm(plus * d + p1c * c + p2 * a) / scale};

    const ComplexVector a2 = std::polar(1.0, (r.omega1 + r.omega2) / 2) * a;
    const ComplexVector b2 = std::polar(1.0, r.omega2 / 2) * b;
    const ComplexVector d2 = std::polar(1.0, r.omega1 / 2) * d;
    const Complex m1c{r.M1};
    const Complex m2c{r.M2};
    r.phase_residuals = {norm(minus * a2 - m1c * b2 - m2c * d2) / scale,
                         norm(plus * b2 + m1c * a2 - m2c * c) / scale,
                         norm(minus * c - m1c * d2 + m2c * b2) / scale,
                         norm(plus * d2 + m1c * c + m2c * a2) / scale};

    const OperatorPencil pencil = pencil_from(z, embedding_operators(SetName::GAMMA8));
    r.pencil_residual = norm(pencil.matrix() * om) / scale;

    r.decoupled = std::max(r.M1, r.M2) <= tol * std::max(1.0, z0);
    r.reduced_residuals = {norm(minus * a) / scale, norm(plus * b) / scale, norm(minus * c) / scale,
                           norm(plus * d) / scale};

    const std::array<const ComplexVector *, 4> parts = {&a, &b, &c, &d};
    for (std::size_t k = 0; k < 4; ++k) {
        const ComplexVector &v = *parts[k];
        const double n = norm(v);
        if (n == 0) continue;
        const QubitState q(v[0], v[1]);
        CoordinateVector x = bloch(q);
        const bool flip = k % 2 == 1;
        if (flip)
            for (std::size_t i = 1; i <= 3; ++i) x.coords[i] = -x.coords[i];
        const ComplexMatrix op = spatial_sigma(x) + Complex{flip ? x[0] : -x[0]} * id;
        r.weyl_residuals[k] = norm(op * v) / std::pow(n, 3);
    }
    return r;
}

/// A way of placing a1..a8 into the 8-dim spinor space of the Cl(7) set:
/// a_k (conjugated when conj[k]) goes to spinor index perm[k]; the seventh
/// operator is sign * i * J1 J2 J4 J5 J6 J7.
struct JConvention {
    int sign = 1;
    std::array<bool, 8> conj{};
    std::array<std::size_t, 8> perm{};
};

/// Best convention found by search_j_convention, frozen.
inline JConvention frozen_j_convention() {
    return JConvention{1, {false, true, false, true, false, true, false, true}, {6, 2, 4, 0, 7, 3, 5, 1}};
}

inline ComplexVector j_tilde(const OmegaState &o, const JConvention &conv) {
    ComplexVector t(8);
    for (std::size_t k = 0; k < 8; ++k) t[conv.perm[k]] = conv.conj[k] ? std::conj(o.amps[k]) : o.amps[k];
    return t;
}

/// (<t|t>, <t|J1|t>, ..., <t|J7|t>) for t = j_tilde(o, conv).
inline std::array<double, 8> j_expectations(const OmegaState &o, const JConvention &conv) {
    const ComplexVector t = j_tilde(o, conv);
    const GeneratorSet &j7 = generator_set(SetName::J7);
    std::array<double, 8> out{};
    out[0] = norm(t) * norm(t);
    for (std::size_t k = 0; k < 7; ++k) {
        double v = vdot(t, j7.generators[k] * t).real();
        if (k == 2) v *= conv.sign;
        out[k + 1] = v;
    }
    return out;
}

namespace detail {

/// One row-monomial Hermitian matrix: row r holds value val[r] at column col[r].
struct Monomial {
    std::array<std::size_t, 8> col{};
    std::array<Complex, 8> val{};
};

inline std::optional<Monomial> to_monomial(const ComplexMatrix &m) {
    Monomial out;
    for (std::size_t r = 0; r < 8; ++r) {
        std::size_t hits = 0;
        for (std::size_t c = 0; c < 8; ++c) {
            if (m(r, c) != Complex{}) {
                out.col[r] = c;
                out.val[r] = m(r, c);
                ++hits;
            }
        }
        if (hits != 1) return std::nullopt;
    }
    return out;
}

/// A bilinear term coef * a_i^(ci) * a_j^(cj), 0-based labels, ci/cj = conjugated.
struct ZTerm {
    Complex coef;
    std::size_t i;
    bool ci;
    std::size_t j;
    bool cj;
};

inline const std::array<std::array<ZTerm, 4>, 3> &z_term_lists() {
    static const std::array<std::array<ZTerm, 4>, 3> lists = {{
        {{{1.0, 1, false, 0, false}, {1.0, 2, true, 3, true}, {1.0, 5, true, 4, true}, {1.0, 6, false, 7, false}}},
        {{{-1.0, 0, false, 3, false}, {1.0, 1, false, 2, false}, {1.0, 7, false, 4, false}, {-1.0, 6, false, 5, false}}},
        {{{-1.0, 7, false, 0, false}, {1.0, 6, false, 1, false}, {1.0, 5, false, 2, false}, {-1.0, 4, false, 3, false}}},
    }};
    return lists;
}

/// Hermitian H with t^dagger H t equal to coordinate channel k (1..7) when the
/// spinor holds t_l = a_l or a_l^* per `conj`, identity ordering. Empty when
/// the channel is not a sesquilinear form of t under this pattern.
inline std::optional<Monomial> channel_form(std::size_t k, const std::array<bool, 8> &conj) {
    ComplexMatrix h(8, 8);
    if (k == 3) {
        for (std::size_t l = 0; l < 8; ++l) h(l, l) = l % 2 == 0 ? 1.0 : -1.0;
        return to_monomial(h);
    }
    const auto &terms = z_term_lists()[k <= 2 ? 0 : (k <= 5 ? 1 : 2)];
    const bool imag_part = k == 2 || k == 5 || k == 7;
    for (const ZTerm &t : terms) {
        const bool fi = t.ci != conj[t.i];
        const bool fj = t.cj != conj[t.j];
        if (fi == fj) return std::nullopt;
        // Orient so that the first factor is the conjugated spinor entry.
        const std::size_t row = fi ? t.i : t.j;
        const std::size_t col = fi ? t.j : t.i;
        const Complex kap = imag_part ? -kI * t.coef : t.coef;
        h(row, col) += kap;
        h(col, row) += std::conj(kap);
    }
    return to_monomial(h);
}

}  // namespace detail

struct JSearchResult {
    JConvention convention;
    /// Channels 0..7 reproduced exactly; channel 0 is the norm and always matches.
    std::array<bool, 8> matched{};
    std::size_t score = 0;
};

/// Which of the eight coordinate channels the convention reproduces exactly,
/// decided on the matrices (not on samples).
inline std::array<bool, 8> j_channel_matches(const JConvention &conv) {
    const GeneratorSet &j7 = generator_set(SetName::J7);
    std::array<bool, 8> matched{};
    matched[0] = true;
    for (std::size_t k = 1; k <= 7; ++k) {
        const auto form = detail::channel_form(k, conv.conj);
        if (!form) continue;
        ComplexMatrix j = j7.generators[k - 1];
        if (k == 3) j *= Complex{static_cast<double>(conv.sign)};
        bool ok = true;
        for (std::size_t r = 0; r < 8 && ok; ++r)
            for (std::size_t c = 0; c < 8 && ok; ++c) {
                const Complex want = form->col[r] == c ? form->val[r] : Complex{};
                ok = std::abs(j(conv.perm[r], conv.perm[c]) - want) <= 1e-12;
            }
        matched[k] = ok;
    }
    return matched;
}

/// Exhaustive search over J3 sign x 2^8 conjugation patterns x 8! orderings
/// for the convention reproducing the most coordinate channels. Ties go to the
/// first candidate in (sign +1 first, patterns in binary order with a1 most
/// significant, orderings lexicographic).
inline JSearchResult search_j_convention() {
    const GeneratorSet &j7 = generator_set(SetName::J7);
    std::array<detail::Monomial, 8> jm{};
    for (std::size_t k = 0; k < 7; ++k) jm[k + 1] = *detail::to_monomial(j7.generators[k]);

    JSearchResult best;
    best.score = 0;
    for (int sign : {1, -1}) {
        std::array<detail::Monomial, 8> js = jm;
        for (auto &v : js[3].val) v *= static_cast<double>(sign);
        for (unsigned pattern = 0; pattern < 256; ++pattern) {
            std::array<bool, 8> conj{};
            for (std::size_t l = 0; l < 8; ++l) conj[l] = (pattern >> (7 - l)) & 1u;
            std::array<std::optional<detail::Monomial>, 8> forms;
            std::size_t possible = 1;
            for (std::size_t k = 1; k <= 7; ++k) {
                forms[k] = detail::channel_form(k, conj);
                if (forms[k]) ++possible;
            }
            if (possible <= best.score) continue;
            std::array<std::size_t, 8> perm{};
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::size_t score = 1;
                std::array<bool, 8> matched{};
                matched[0] = true;
                for (std::size_t k = 1; k <= 7; ++k) {
                    if (!forms[k]) continue;
                    const detail::Monomial &h = *forms[k];
                    const detail::Monomial &j = js[k];
                    bool ok = true;
                    for (std::size_t r = 0; r < 8 && ok; ++r) {
                        const std::size_t pr = perm[r];
                        ok = j.col[pr] == perm[h.col[r]] && std::abs(j.val[pr] - h.val[r]) <= 1e-12;
                    }
                    if (ok) {
                        matched[k] = true;
                        ++score;
                    }
                }
                if (score > best.score) {
                    best.score = score;
                    best.matched = matched;
                    best.convention = JConvention{sign, conj, perm};
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return best;
}

struct JRepresentationReport {
    /// max over samples of |<t|J_k|t> - Z_k| / Z_0, per channel 0..7.
    std::array<double, 8> channel_deviation{};
    double max_deviation = 0;
    double clifford_residual = 0;
    double tolerance = 0;
    bool pass = false;
};

/// Compares the Cl(7) expectation values under the frozen convention with the
/// coordinate formulas on seeded random states. Reports; never throws on mismatch.
inline JRepresentationReport j_representation_check(double tol = 1e-10, std::size_t samples = 100,
                                                    std::uint64_t seed = 0) {
    JRepresentationReport rep;
    rep.tolerance = tol;
    const JConvention conv = frozen_j_convention();
    for (std::size_t s = 0; s < samples; ++s) {
        const OmegaState o(random_state(8, seed + s));
        const CoordinateVector z = z_coords(o);
        const auto e = j_expectations(o, conv);
        for (std::size_t k = 0; k < 8; ++k)
            rep.channel_deviation[k] = std::max(rep.channel_deviation[k], std::abs(e[k] - z[k]) / z[0]);
    }
    rep.max_deviation = *std::max_element(rep.channel_deviation.begin(), rep.channel_deviation.end());
    rep.clifford_residual = verify_clifford(generator_set(SetName::J7), tol).max_residual;
    rep.pass = rep.max_deviation <= tol && rep.clifford_residual <= tol;
    return rep;
}

}  // namespace purespinor
