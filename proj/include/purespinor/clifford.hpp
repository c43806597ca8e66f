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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "purespinor/numeric.hpp"

namespace purespinor {

enum class SetName { PAULI3, DIRAC31, OPS6, G5, GAMMA8, J7 };

inline constexpr std::array<SetName, 6> kAllSets = {
    SetName::PAULI3, SetName::DIRAC31, SetName::OPS6, SetName::G5, SetName::GAMMA8, SetName::J7};

inline std::string_view set_name_str(SetName name) {
    switch (name) {
        case SetName::PAULI3:
            return "PAULI3";
        case SetName::DIRAC31:
            return "DIRAC31";
        case SetName::OPS6:
            return "OPS6";
        case SetName::G5:
            return "G5";
        case SetName::GAMMA8:
            return "GAMMA8";
        case SetName::J7:
            return "J7";
    }
    return "?";
}

inline std::optional<SetName> parse_set_name(std::string_view text) {
    for (SetName n : kAllSets)
        if (set_name_str(n) == text) return n;
    return std::nullopt;
}

/// A named list of square matrices with metric signature, optional volume
/// element and the adjoint convention psibar = psi^dagger * A.
struct GeneratorSet {
    SetName name;
    std::vector<ComplexMatrix> generators;
    std::vector<int> metric;
    std::optional<ComplexMatrix> volume;
    std::vector<std::size_t> adjoint_indices;
    std::size_t spinor_dim = 0;
    bool is_clifford = true;

    std::size_t size() const noexcept {
        return generators.size();
    }

    /// Product of the generators at adjoint_indices (identity when empty).
    ComplexMatrix adjoint_matrix() const {
        ComplexMatrix a = ComplexMatrix::identity(spinor_dim);
        for (std::size_t i : adjoint_indices) a = a * generators[i];
        return a;
    }
};

namespace pauli {

inline const ComplexMatrix &identity() {
    static const ComplexMatrix m = ComplexMatrix::identity(2);
    return m;
}
inline const ComplexMatrix &s1() {
    static const ComplexMatrix m{{0.0, 1.0}, {1.0, 0.0}};
    return m;
}
inline const ComplexMatrix &s2() {
    static const ComplexMatrix m{{0.0, -kI}, {kI, 0.0}};
    return m;
}
inline const ComplexMatrix &s3() {
    static const ComplexMatrix m{{1.0, 0.0}, {0.0, -1.0}};
    return m;
}
inline const ComplexMatrix &sigma(std::size_t i) {
    switch (i) {
        case 1:
            return s1();
        case 2:
            return s2();
        case 3:
            return s3();
        default:
            return identity();
    }
}

}  // namespace pauli

namespace detail {

inline ComplexMatrix block2(const ComplexMatrix &a, const ComplexMatrix &b, const ComplexMatrix &c,
                            const ComplexMatrix &d) {
    const std::size_t n = a.rows();
    ComplexMatrix out(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = a(i, j);
            out(i, n + j) = b(i, j);
            out(n + i, j) = c(i, j);
            out(n + i, n + j) = d(i, j);
        }
    }
    return out;
}

inline ComplexMatrix kron3(const ComplexMatrix &a, const ComplexMatrix &b, const ComplexMatrix &c) {
    return kron(kron(a, b), c);
}

inline std::vector<ComplexMatrix> dirac_gammas() {
    const ComplexMatrix z(2, 2);
    const ComplexMatrix &i2 = pauli::identity();
    std::vector<ComplexMatrix> g;
    g.push_back(block2(z, i2, -i2, z));
    for (std::size_t i = 1; i <= 3; ++i) g.push_back(block2(z, pauli::sigma(i), pauli::sigma(i), z));
    return g;
}

inline ComplexMatrix dirac_gamma5() {
    const auto g = dirac_gammas();
    return Complex{0.0, -1.0} * (g[0] * g[1] * g[2] * g[3]);
}

inline GeneratorSet make_set(SetName name) {
    using pauli::s1;
    using pauli::s2;
    using pauli::s3;
    const ComplexMatrix &i2 = pauli::identity();
    GeneratorSet set{name, {}, {}, std::nullopt, {}, 0, true};
    switch (name) {
        case SetName::PAULI3:
            set.generators = {s1(), s2(), s3()};
            set.metric = {1, 1, 1};
            set.spinor_dim = 2;
            break;
        case SetName::DIRAC31:
            set.generators = dirac_gammas();
            set.metric = {-1, 1, 1, 1};
            set.volume = dirac_gamma5();
            set.adjoint_indices = {0};
            set.spinor_dim = 4;
            break;
        case SetName::OPS6:
            set.generators = dirac_gammas();
            set.generators.push_back(kI * ComplexMatrix::identity(4));
            set.generators.push_back(dirac_gamma5());
            set.metric = {-1, 1, 1, 1, 1, 1};
            set.volume = dirac_gamma5();
            set.adjoint_indices = {0};
            set.spinor_dim = 4;
            set.is_clifford = false;
            break;
        case SetName::G5: {
            // Entered as printed; the labels on these are reversed-order products.
            const Complex i = kI;
            set.generators = {
                ComplexMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}},
                ComplexMatrix{{0, -i, 0, 0}, {i, 0, 0, 0}, {0, 0, 0, i}, {0, 0, -i, 0}},
                ComplexMatrix{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}},
                ComplexMatrix{{0, 0, 0, -i}, {0, 0, i, 0}, {0, -i, 0, 0}, {i, 0, 0, 0}},
                ComplexMatrix{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}},
            };
            set.metric = {1, 1, 1, 1, 1};
            set.spinor_dim = 4;
            break;
        }
        case SetName::GAMMA8: {
            const auto g = dirac_gammas();
            const ComplexMatrix i4 = ComplexMatrix::identity(4);
            for (std::size_t a = 0; a < 4; ++a) set.generators.push_back(kron(s1(), g[a]));
            set.generators.push_back(kron(s2(), i4));
            set.generators.push_back(kron(s1(), dirac_gamma5()));
            set.metric = {-1, 1, 1, 1, 1, 1};
            ComplexMatrix vol = ComplexMatrix::identity(8);
            for (const auto &m : set.generators) vol = vol * m;
            set.volume = vol;
            set.adjoint_indices = {0};
            set.spinor_dim = 8;
            break;
        }
        case SetName::J7: {
            std::vector<ComplexMatrix> j(8);
            j[1] = kron3(s1(), i2, i2);
            j[2] = kron3(s2(), s3(), i2);
            j[4] = kron3(s2(), s2(), s3());
            j[5] = kron3(s2(), s1(), i2);
            j[6] = kron3(s2(), s2(), s1());
            j[7] = kron3(s2(), s2(), s2());
            // The remaining generator is fixed by completing the volume element.
            j[3] = kI * (j[1] * j[2] * j[4] * j[5] * j[6] * j[7]);
            set.generators.assign(j.begin() + 1, j.end());
            set.metric = std::vector<int>(7, 1);
            set.spinor_dim = 8;
            break;
        }
    }
    return set;
}

}  // namespace detail

/// Fresh copy of the named set.
inline GeneratorSet build_set(SetName name) {
    return detail::make_set(name);
}

/// Shared immutable instance of the named set.
inline const GeneratorSet &generator_set(SetName name) {
    static const std::array<GeneratorSet, 6> cache = {
        detail::make_set(SetName::PAULI3), detail::make_set(SetName::DIRAC31), detail::make_set(SetName::OPS6),
        detail::make_set(SetName::G5),     detail::make_set(SetName::GAMMA8),  detail::make_set(SetName::J7)};
    return cache[static_cast<std::size_t>(name)];
}

struct PairResidual {
    std::size_t a;
    std::size_t b;
    double residual;
};

struct CliffordReport {
    SetName name;
    std::vector<PairResidual> pairs;
    double max_residual = 0;
    /// max |vol^2 -+ I| and, for even sets, max |{vol, g_a}|; 0 without a volume.
    double volume_residual = 0;
    double tolerance = 0;
    bool pass = false;
};

/// Checks {g_a, g_b} = 2 h_ab I entrywise over all pairs a <= b.
inline CliffordReport verify_clifford(const GeneratorSet &set, double tol) {
    if (!set.is_clifford) throw Error(Errc::not_clifford, std::string(set_name_str(set.name)));
    CliffordReport report{set.name, {}, 0, 0, tol, false};
    const ComplexMatrix id = ComplexMatrix::identity(set.spinor_dim);
    for (std::size_t a = 0; a < set.size(); ++a) {
        for (std::size_t b = a; b < set.size(); ++b) {
            ComplexMatrix ac = anticommutator(set.generators[a], set.generators[b]);
            if (a == b) ac -= Complex{2.0 * set.metric[a]} * id;
            const double r = max_abs(ac);
            report.pairs.push_back({a, b, r});
            report.max_residual = std::max(report.max_residual, r);
        }
    }
    if (set.volume) {
        const ComplexMatrix sq = *set.volume * *set.volume;
        const double plus = max_abs(sq - id);
        const double minus = max_abs(sq + id);
        report.volume_residual = std::min(plus, minus);
        if (set.size() % 2 == 0)
            for (const auto &g : set.generators)
                report.volume_residual = std::max(report.volume_residual, max_abs(anticommutator(*set.volume, g)));
    }
    report.pass = report.max_residual <= tol && report.volume_residual <= tol;
    return report;
}

/// A complex vector interpreted against one of the generator sets.
class SpinorState {
   public:
    SpinorState(SetName set, ComplexVector components) : set_(set), components_(std::move(components)) {
        if (components_.dim() != generator_set(set_).spinor_dim)
            throw Error(Errc::dimension_mismatch, "spinor for " + std::string(set_name_str(set_)) + " needs " +
                                                      std::to_string(generator_set(set_).spinor_dim) + " components");
        if (!all_finite(components_)) throw Error(Errc::non_finite, "spinor components");
    }

    SetName set_name() const noexcept {
        return set_;
    }
    const GeneratorSet &set() const {
        return generator_set(set_);
    }
    const ComplexVector &components() const noexcept {
        return components_;
    }
    std::size_t dim() const noexcept {
        return components_.dim();
    }

   private:
    SetName set_;
    ComplexVector components_;
};

/// phi_pm = (I +- vol) psi / 2.
inline std::pair<ComplexVector, ComplexVector> weyl_split(const GeneratorSet &set, const ComplexVector &psi) {
    if (!set.volume) throw Error(Errc::no_volume_element, std::string(set_name_str(set.name)));
    if (psi.dim() != set.spinor_dim) throw Error(Errc::dimension_mismatch, "weyl_split");
    const ComplexVector v = *set.volume * psi;
    return {Complex{0.5} * (psi + v), Complex{0.5} * (psi - v)};
}

inline std::pair<SpinorState, SpinorState> weyl_split(const SpinorState &psi) {
    auto [plus, minus] = weyl_split(psi.set(), psi.components());
    return {SpinorState(psi.set_name(), std::move(plus)), SpinorState(psi.set_name(), std::move(minus))};
}

}  // namespace purespinor
