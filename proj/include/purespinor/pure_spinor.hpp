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

// Bilinear null vectors, purity, the two-extra-component embedding, and
// Cartan-equation pencils.
//
// Index convention: coordinates are stored with upper indices,
// X^a = Re(psibar gamma^a psi). A pencil built from coordinates contracts with
// the lowered coefficients X_a = metric[a] X^a.

#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "purespinor/clifford.hpp"

namespace purespinor {

/// Real coordinates paired with a metric signature.
struct CoordinateVector {
    std::vector<double> coords;
    std::vector<int> metric;

    CoordinateVector() = default;
    CoordinateVector(std::vector<double> c, std::vector<int> m) : coords(std::move(c)), metric(std::move(m)) {
        if (coords.size() != metric.size()) throw Error(Errc::dimension_mismatch, "coordinates vs metric");
    }

    std::size_t size() const noexcept {
        return coords.size();
    }
    double operator[](std::size_t i) const {
        return coords[i];
    }
    /// metric[a] * X^a.
    double lowered(std::size_t i) const {
        return metric[i] * coords[i];
    }
    double euclidean_norm2() const {
        double acc = 0;
        for (double c : coords) acc += c * c;
        return acc;
    }
};

/// sum_a metric[a] * coords[a]^2.
inline double null_norm(const CoordinateVector &v) {
    double acc = 0;
    for (std::size_t a = 0; a < v.size(); ++a) acc += v.metric[a] * v.coords[a] * v.coords[a];
    return acc;
}

/// Linear combination sum_k c_k M_k of equally sized square matrices.
struct OperatorPencil {
    std::vector<std::pair<Complex, ComplexMatrix>> terms;

    OperatorPencil &add(Complex coefficient, ComplexMatrix m) {
        if (!m.is_square()) throw Error(Errc::dimension_mismatch, "pencil term must be square");
        if (!terms.empty() && terms.front().second.rows() != m.rows())
            throw Error(Errc::dimension_mismatch, "pencil terms of different size");
        terms.emplace_back(coefficient, std::move(m));
        return *this;
    }

    std::size_t dim() const {
        return terms.empty() ? 0 : terms.front().second.rows();
    }

    ComplexMatrix matrix() const {
        ComplexMatrix out(dim(), dim());
        for (const auto &[c, m] : terms) out += c * m;
        return out;
    }
};

/// Pencil sum_a X_a ops[a] with the coefficients lowered by the metric.
inline OperatorPencil pencil_from(const CoordinateVector &x, std::span<const ComplexMatrix> ops) {
    if (ops.size() != x.size()) throw Error(Errc::dimension_mismatch, "one operator per coordinate");
    OperatorPencil p;
    for (std::size_t a = 0; a < ops.size(); ++a) p.add(Complex{x.lowered(a)}, ops[a]);
    return p;
}

/// psibar * op * psi, with psibar = psi^dagger * A.
inline Complex bilinear(const ComplexVector &psi, const ComplexMatrix &adjoint, const ComplexMatrix &op) {
    return vdot(psi, adjoint * (op * psi));
}

/// X^a = psibar ops[a] psi. Throws when an imaginary part exceeds
/// tol * max(1, |psi|^2), which signals a wrong operator/adjoint pairing.
inline CoordinateVector bilinear_coords(const SpinorState &psi, std::span<const ComplexMatrix> ops,
                                        std::vector<int> metric, double tol = 1e-10) {
    if (ops.size() != metric.size()) throw Error(Errc::dimension_mismatch, "one metric sign per operator");
    const ComplexMatrix adj = psi.set().adjoint_matrix();
    const double scale = std::max(1.0, norm(psi.components()) * norm(psi.components()));
    std::vector<double> coords;
    coords.reserve(ops.size());
    for (std::size_t a = 0; a < ops.size(); ++a) {
        if (ops[a].rows() != psi.dim() || ops[a].cols() != psi.dim())
            throw Error(Errc::dimension_mismatch, "operator does not act on the spinor");
        const Complex v = bilinear(psi.components(), adj, ops[a]);
        if (std::abs(v.imag()) > tol * scale)
            throw Error(Errc::non_real_bilinear, "component " + std::to_string(a));
        coords.push_back(v.real());
    }
    return CoordinateVector(std::move(coords), std::move(metric));
}

/// Bilinears over the spinor's own generator set.
inline CoordinateVector bilinear_coords(const SpinorState &psi, double tol = 1e-10) {
    const GeneratorSet &set = psi.set();
    return bilinear_coords(psi, set.generators, set.metric, tol);
}

struct PurityResult {
    std::size_t d = 0;
    bool is_pure = false;
};

/// d = dim ker of x -> (x^a gamma_a) psi over complex x; pure iff d = n for 2n generators.
inline PurityResult purity(const SpinorState &psi, double tol = 1e-10) {
    const GeneratorSet &set = psi.set();
    if (!set.is_clifford || set.size() % 2 != 0)
        throw Error(Errc::unsupported_set, "purity needs an even Clifford set, got " +
                                               std::string(set_name_str(set.name)));
    if (norm(psi.components()) == 0) throw Error(Errc::undefined_purity, "zero spinor");
    ComplexMatrix cols(psi.dim(), set.size());
    for (std::size_t a = 0; a < set.size(); ++a) {
        const ComplexVector g = set.generators[a] * psi.components();
        for (std::size_t r = 0; r < psi.dim(); ++r) cols(r, a) = g[r];
    }
    const std::size_t d = kernel_basis(cols, tol).size();
    return {d, d == set.size() / 2};
}

/// The set whose generators form the base of an embedding, plus the volume that
/// supplies the last extra component.
struct EmbeddingFrame {
    SetName state_set;
    std::vector<ComplexMatrix> base;
    std::vector<int> base_metric;
    ComplexMatrix volume;
};

inline EmbeddingFrame embedding_frame(SetName target) {
    switch (target) {
        case SetName::OPS6:
        case SetName::DIRAC31: {
            const GeneratorSet &d = generator_set(SetName::DIRAC31);
            return {SetName::DIRAC31, d.generators, d.metric, *d.volume};
        }
        case SetName::GAMMA8: {
            const GeneratorSet &g = generator_set(SetName::GAMMA8);
            return {SetName::GAMMA8, g.generators, g.metric, *g.volume};
        }
        default:
            throw Error(Errc::unsupported_set, "embedding targets are OPS6 and GAMMA8");
    }
}

/// Operators whose bilinears give the embedded vector: base generators, i*I, volume.
inline std::vector<ComplexMatrix> embedding_operators(SetName target) {
    EmbeddingFrame f = embedding_frame(target);
    std::vector<ComplexMatrix> ops = f.base;
    ops.push_back(kI * ComplexMatrix::identity(f.volume.rows()));
    ops.push_back(f.volume);
    return ops;
}

inline std::vector<int> embedding_metric(SetName target) {
    std::vector<int> m = embedding_frame(target).base_metric;
    m.push_back(1);
    m.push_back(1);
    return m;
}

struct Embedding {
    SpinorState psi;
    CoordinateVector x;
};

/// Psi = phi_plus (+) phi_minus from the two chiral halves (upper and lower
/// blocks of the volume element), and its 2n+2 component vector
/// (base bilinears, i psibar psi, psibar vol psi).
inline Embedding embed(const ComplexVector &phi_plus, const ComplexVector &phi_minus, SetName target,
                       double tol = 1e-10) {
    const EmbeddingFrame f = embedding_frame(target);
    const std::size_t half = f.volume.rows() / 2;
    if (phi_plus.dim() != half || phi_minus.dim() != half)
        throw Error(Errc::incompatible_weyl_halves,
                    "each half needs " + std::to_string(half) + " components, got " +
                        std::to_string(phi_plus.dim()) + " and " + std::to_string(phi_minus.dim()));
    SpinorState psi(f.state_set, concat(phi_plus, phi_minus));
    CoordinateVector x = bilinear_coords(psi, embedding_operators(target), embedding_metric(target), tol);
    return {std::move(psi), std::move(x)};
}

/// Full-dimension overload: phi_plus and phi_minus must already be chiral
/// eigenvectors with eigenvalues +1 and -1.
inline Embedding embed(const SpinorState &phi_plus, const SpinorState &phi_minus, double tol = 1e-10) {
    if (phi_plus.set_name() != phi_minus.set_name())
        throw Error(Errc::incompatible_weyl_halves, "halves belong to different sets");
    const GeneratorSet &set = phi_plus.set();
    if (!set.volume) throw Error(Errc::no_volume_element, std::string(set_name_str(set.name)));
    const ComplexMatrix &vol = *set.volume;
    const double scale = std::max(1.0, norm(phi_plus.components()) + norm(phi_minus.components()));
    if (norm(vol * phi_plus.components() - phi_plus.components()) > tol * scale ||
        norm(vol * phi_minus.components() + phi_minus.components()) > tol * scale)
        throw Error(Errc::incompatible_weyl_halves, "inputs are not chiral eigenvectors");
    const std::size_t half = set.spinor_dim / 2;
    return embed(slice(phi_plus.components(), 0, half), slice(phi_minus.components(), half, half), set.name, tol);
}

/// |P psi| / |psi|.
inline double cartan_residual(const OperatorPencil &p, const ComplexVector &psi) {
    if (p.dim() != psi.dim()) throw Error(Errc::dimension_mismatch, "pencil vs spinor");
    const double n = norm(psi);
    if (n == 0) throw Error(Errc::undefined_residual, "zero spinor");
    return norm(p.matrix() * psi) / n;
}

inline double cartan_residual(const OperatorPencil &p, const SpinorState &psi) {
    return cartan_residual(p, psi.components());
}

/// Orthonormal basis of the spinors annihilated by the pencil.
inline std::vector<ComplexVector> cartan_solve(const OperatorPencil &p, double tol = 1e-10) {
    return kernel_basis(p.matrix(), tol);
}

}  // namespace purespinor
