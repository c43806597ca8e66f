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

// Single-qubit Bloch coordinates, the direct-sum pair of qubits with its
// mixing term, and tensor-product two-qubit geometry.

#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "purespinor/pure_spinor.hpp"

namespace purespinor {

/// Tolerance for "is this state normalized" preconditions.
inline constexpr double kNormalizationTol = 1e-10;

struct QubitState {
    Complex a;
    Complex b;

    QubitState(Complex a_, Complex b_) : a(a_), b(b_) {
        if (!is_finite(a) || !is_finite(b)) throw Error(Errc::non_finite, "qubit amplitudes");
        if (a == Complex{} && b == Complex{}) throw Error(Errc::zero_state, "qubit");
    }
    ComplexVector vec() const {
        return ComplexVector{a, b};
    }
    double norm2() const {
        return std::norm(a) + std::norm(b);
    }
};

/// Amplitudes of |00>, |01>, |10>, |11>.
struct TwoQubitState {
    Complex a;
    Complex b;
    Complex c;
    Complex d;

    TwoQubitState(Complex a_, Complex b_, Complex c_, Complex d_) : a(a_), b(b_), c(c_), d(d_) {
        for (Complex z : {a, b, c, d})
            if (!is_finite(z)) throw Error(Errc::non_finite, "two-qubit amplitudes");
        if (norm2() == 0) throw Error(Errc::zero_state, "two-qubit state");
    }
    ComplexVector vec() const {
        return ComplexVector{a, b, c, d};
    }
    double norm2() const {
        return std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    }
};

/// (X0, X1, X2, X3) with X0 = |a|^2 + |b|^2 in the timelike slot.
inline CoordinateVector bloch(const QubitState &q) {
    const Complex ab = std::conj(q.a) * q.b;
    return CoordinateVector({q.norm2(), 2 * ab.real(), 2 * ab.imag(), std::norm(q.a) - std::norm(q.b)}, {-1, 1, 1, 1});
}

/// The operators (I, s1, s2, s3) matching the Bloch coordinate slots.
inline std::vector<ComplexMatrix> bloch_operators() {
    return {pauli::identity(), pauli::s1(), pauli::s2(), pauli::s3()};
}

/// X_i s^i - X_0, annihilating the state the coordinates came from.
inline OperatorPencil bloch_pencil(const CoordinateVector &x) {
    return pencil_from(x, bloch_operators());
}

/// rho = (I + X.sigma) / 2 for a normalized qubit.
inline ComplexMatrix density(const QubitState &q) {
    if (std::abs(q.norm2() - 1.0) > kNormalizationTol) throw Error(Errc::normalize_first, "density");
    const CoordinateVector x = bloch(q);
    ComplexMatrix rho = pauli::identity();
    for (std::size_t i = 1; i <= 3; ++i) rho += Complex{x[i]} * pauli::sigma(i);
    return Complex{0.5} * rho;
}

struct DirectSum {
    SpinorState psi;
    CoordinateVector x;
    double c_mix;
};

/// Psi = qA (+) qB under the Dirac set with the two extra components appended.
inline DirectSum direct_sum_coords(const QubitState &qa, const QubitState &qb) {
    Embedding e = embed(qa.vec(), qb.vec(), SetName::OPS6);
    const double c_mix = 2 * std::abs(vdot(qa.vec(), qb.vec()));
    return {std::move(e.psi), std::move(e.x), c_mix};
}

/// Sigma . X for the three spatial slots of x.
inline ComplexMatrix spatial_sigma(const CoordinateVector &x) {
    ComplexMatrix s(2, 2);
    for (std::size_t i = 1; i <= 3; ++i) s += Complex{x[i]} * pauli::sigma(i);
    return s;
}

/// The phase that writes X5 +- i X4 as M exp(+- i w / 2), with w in [0, 4 pi).
inline double half_angle_phase(double x4, double x5) {
    double w = 2 * std::atan2(x4, x5);
    if (w < 0) w += 4 * std::numbers::pi;
    return w;
}

struct MixReport {
    double M = 0;
    double omega = 0;
    /// The two block equations of the coupled system, relative to |Psi|^3.
    std::array<double, 2> residuals{};
    /// Same equations after absorbing exp(i w / 2) into qA.
    std::array<double, 2> phase_residuals{};
    double c_mix = 0;
    bool decoupled = false;
    /// With the mixing terms dropped (only meaningful when decoupled).
    std::array<double, 2> reduced_residuals{};
    /// Each qubit against its own Bloch vector, signs (-) for A and (+) for B.
    std::array<double, 2> weyl_residuals{};
    CoordinateVector x;
};

/// The two-qubit Cartan system written in 2x2 blocks:
///   (X.s - X0) qA = (X5 - i X4) qB,  (X.s + X0) qB = -(X5 + i X4) qA
/// with X0 = |Psi|^2 the lowered timelike coefficient.
inline MixReport coupled_system(const QubitState &qa, const QubitState &qb, double tol = 1e-10) {
    DirectSum ds = direct_sum_coords(qa, qb);
    const CoordinateVector &x = ds.x;
    MixReport r;
    r.x = x;
    r.c_mix = ds.c_mix;
    const double x0 = x.lowered(0);
    const double x4 = x[4];
    const double x5 = x[5];
    r.M = std::hypot(x4, x5);
    r.omega = half_angle_phase(x4, x5);

    const ComplexMatrix s = spatial_sigma(x);
    const ComplexMatrix id = pauli::identity();
    const ComplexMatrix minus = s - Complex{x0} * id;
    const ComplexMatrix plus = s + Complex{x0} * id;
    const ComplexVector a = qa.vec();
    const ComplexVector b = qb.vec();
    const double scale = std::pow(norm(ds.psi.components()), 3);

    const Complex m_minus{x5, -x4};
    const Complex m_plus{x5, x4};
    r.residuals[0] = norm(minus * a - m_minus * b) / scale;
    r.residuals[1] = norm(plus * b + m_plus * a) / scale;

    const Complex phase = std::polar(1.0, r.omega / 2);
    const ComplexVector a_rot = phase * a;
    r.phase_residuals[0] = norm(minus * a_rot - Complex{r.M} * b) / scale;
    r.phase_residuals[1] = norm(plus * b + Complex{r.M} * a_rot) / scale;

    r.decoupled = r.M <= tol * std::max(1.0, x0);
    r.reduced_residuals[0] = norm(minus * a) / scale;
    r.reduced_residuals[1] = norm(plus * b) / scale;

    const CoordinateVector xa = bloch(qa);
    CoordinateVector xb = bloch(qb);
    for (std::size_t i = 1; i <= 3; ++i) xb.coords[i] = -xb.coords[i];
    r.weyl_residuals[0] = norm((spatial_sigma(xa) - Complex{xa[0]} * id) * a) / std::pow(norm(a), 3);
    r.weyl_residuals[1] = norm((spatial_sigma(xb) + Complex{xb[0]} * id) * b) / std::pow(norm(b), 3);
    return r;
}

/// (a, b, c*, d*): the amplitude map under which the five Cl(5) operators
/// reproduce the generalized Bloch coordinates as expectation values.
inline ComplexVector tilde(const TwoQubitState &s) {
    return ComplexVector{s.a, s.b, std::conj(s.c), std::conj(s.d)};
}

/// Generalized Bloch coordinates (X0..X5), null under (-,+,+,+,+,+).
inline CoordinateVector gbloch(const TwoQubitState &s) {
    const Complex w = 2.0 * (std::conj(s.a) * s.b + std::conj(s.c) * s.d);
    const Complex m = 2.0 * (s.c * s.b - s.a * s.d);
    const double x3 = std::norm(s.a) - std::norm(s.b) + std::norm(s.c) - std::norm(s.d);
    return CoordinateVector({s.norm2(), w.real(), w.imag(), x3, m.imag(), m.real()}, {-1, 1, 1, 1, 1, 1});
}

/// <t|G_k|t> for t = tilde(s), in the same slot order as gbloch.
inline CoordinateVector gbloch_via_operators(const TwoQubitState &s) {
    const ComplexVector t = tilde(s);
    const GeneratorSet &g5 = generator_set(SetName::G5);
    std::vector<double> coords{s.norm2()};
    for (const auto &g : g5.generators) coords.push_back(vdot(t, g * t).real());
    return CoordinateVector(std::move(coords), {-1, 1, 1, 1, 1, 1});
}

/// sqrt(X4^2 + X5^2) = 2|ad - bc|.
inline double concurrence(const TwoQubitState &s) {
    const CoordinateVector x = gbloch(s);
    return std::hypot(x[4], x[5]);
}

/// |ad - bc| <= tol for a normalized state.
inline bool separable(const TwoQubitState &s, double tol = 1e-10) {
    if (std::abs(s.norm2() - 1.0) > kNormalizationTol) throw Error(Errc::normalize_first, "separable");
    return std::abs(s.a * s.d - s.b * s.c) <= tol;
}

}  // namespace purespinor
