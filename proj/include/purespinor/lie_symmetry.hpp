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

// Rotation generators M^{kl} = (i/4)[g^k, g^l], their so(p,q) structure
// relations, the chiral 2x2 split of the Dirac set, and the two commuting
// su(2) triples.

#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "purespinor/clifford.hpp"

namespace purespinor {

/// Antisymmetric family M^{kl}, stored for k < l.
class GeneratorBundle {
   public:
    GeneratorBundle(std::vector<int> metric, const std::function<ComplexMatrix(std::size_t, std::size_t)> &make)
        : metric_(std::move(metric)) {
        const std::size_t n = metric_.size();
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = k + 1; l < n; ++l) upper_.push_back(make(k, l));
        dim_ = upper_.empty() ? 0 : upper_.front().rows();
    }

    std::size_t size() const noexcept {
        return metric_.size();
    }
    std::size_t matrix_dim() const noexcept {
        return dim_;
    }
    const std::vector<int> &metric() const noexcept {
        return metric_;
    }

    /// M^{kl}; zero on the diagonal, sign flipped below it.
    ComplexMatrix operator()(std::size_t k, std::size_t l) const {
        if (k == l) return ComplexMatrix(dim_, dim_);
        if (k > l) return -upper_[index(l, k)];
        return upper_[index(k, l)];
    }

   private:
    std::size_t index(std::size_t k, std::size_t l) const {
        const std::size_t n = metric_.size();
        return k * n - k * (k + 1) / 2 + (l - k - 1);
    }

    std::vector<int> metric_;
    std::vector<ComplexMatrix> upper_;
    std::size_t dim_ = 0;
};

inline GeneratorBundle rotation_generators(const GeneratorSet &set) {
    if (!set.is_clifford) throw Error(Errc::not_clifford, std::string(set_name_str(set.name)));
    return GeneratorBundle(set.metric, [&](std::size_t k, std::size_t l) {
        return Complex{0.0, 0.25} * commutator(set.generators[k], set.generators[l]);
    });
}

struct LieReport {
    double max_residual = 0;
    double tolerance = 0;
    bool pass = false;
};

/// [M^{kl}, M^{mn}] = i (M^{kn} h^{lm} + M^{lm} h^{kn} - M^{km} h^{ln} - M^{ln} h^{km})
/// over every index quadruple.
inline LieReport verify_so_algebra(const GeneratorBundle &b, double tol) {
    LieReport r;
    r.tolerance = tol;
    const std::size_t n = b.size();
    const auto &h = b.metric();
    auto eta = [&](std::size_t i, std::size_t j) { return i == j ? static_cast<double>(h[i]) : 0.0; };
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t m = 0; m < n; ++m)
                for (std::size_t q = 0; q < n; ++q) {
                    ComplexMatrix rhs = Complex{eta(l, m)} * b(k, q) + Complex{eta(k, q)} * b(l, m) -
                                        Complex{eta(l, q)} * b(k, m) - Complex{eta(k, m)} * b(l, q);
                    const ComplexMatrix diff = commutator(b(k, l), b(m, q)) - kI * rhs;
                    r.max_residual = std::max(r.max_residual, max_abs(diff));
                }
    r.pass = r.max_residual <= tol;
    return r;
}

struct ChiralSplit {
    std::array<ComplexMatrix, 4> zeta;
    std::array<ComplexMatrix, 4> theta;
    /// max |zeta^m theta^n + zeta^n theta^m - 2 eta^{mn}| and the same with theta first.
    double pairing_residual = 0;
    GeneratorBundle M_L;
    GeneratorBundle M_R;
};

/// Off-diagonal blocks of the Dirac set, g^m = [[0, zeta^m], [theta^m, 0]].
inline ChiralSplit chiral_split() {
    const GeneratorSet &dirac = generator_set(SetName::DIRAC31);
    std::array<ComplexMatrix, 4> zeta;
    std::array<ComplexMatrix, 4> theta;
    for (std::size_t m = 0; m < 4; ++m) {
        const ComplexMatrix &g = dirac.generators[m];
        zeta[m] = ComplexMatrix(2, 2);
        theta[m] = ComplexMatrix(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                zeta[m](i, j) = g(i, 2 + j);
                theta[m](i, j) = g(2 + i, j);
            }
    }
    double pairing = 0;
    const ComplexMatrix id = pauli::identity();
    for (std::size_t m = 0; m < 4; ++m)
        for (std::size_t n = 0; n < 4; ++n) {
            const Complex eta{m == n ? 2.0 * dirac.metric[m] : 0.0};
            pairing = std::max(pairing, max_abs(zeta[m] * theta[n] + zeta[n] * theta[m] - eta * id));
            pairing = std::max(pairing, max_abs(theta[m] * zeta[n] + theta[n] * zeta[m] - eta * id));
        }
    const Complex quarter_i{0.0, 0.25};
    GeneratorBundle ml(dirac.metric, [&](std::size_t m, std::size_t n) {
        return quarter_i * (zeta[m] * theta[n] - zeta[n] * theta[m]);
    });
    GeneratorBundle mr(dirac.metric, [&](std::size_t m, std::size_t n) {
        return quarter_i * (theta[m] * zeta[n] - theta[n] * zeta[m]);
    });
    return ChiralSplit{zeta, theta, pairing, std::move(ml), std::move(mr)};
}

using Triple = std::array<ComplexMatrix, 3>;

struct SU2Split {
    Triple J_L, K_L, J_R, K_R;
    Triple L, Lbar, R, Rbar;
    /// max |L_i - s_i/2| and max |Rbar_i - s_i/2|.
    double value_residual = 0;
    /// max entry of Lbar and R (expected to vanish exactly).
    double vanishing_residual = 0;
    /// [L_i, L_j] = i eps L_k and the same for Rbar.
    double su2_residual = 0;
    /// Cross commutators within {L, Lbar}, within {R, Rbar}, and between the
    /// left block carrying L and the right block carrying Rbar.
    double cross_residual = 0;
    double tolerance = 0;
    bool pass = false;
};

namespace detail {

inline int levi_civita(std::size_t i, std::size_t j, std::size_t k) {
    if (i == j || j == k || i == k) return 0;
    // Spatial labels 1..3.
    const int p = static_cast<int>((j - i + 3) % 3);
    const bool cyclic = p == 1 && ((k - j + 3) % 3) == 1;
    return cyclic ? 1 : -1;
}

/// J_i = (1/2) eps_ijk M^{kj}, K_i = eta_00 M^{0i}.
inline void rotations_and_boosts(const GeneratorBundle &m, Triple &j, Triple &k) {
    const double eta00 = m.metric()[0];
    for (std::size_t i = 1; i <= 3; ++i) {
        ComplexMatrix acc(2, 2);
        for (std::size_t a = 1; a <= 3; ++a)
            for (std::size_t b = 1; b <= 3; ++b) {
                const int e = levi_civita(i, a, b);
                if (e != 0) acc += Complex{0.5 * e} * m(b, a);
            }
        j[i - 1] = acc;
        k[i - 1] = Complex{eta00} * m(0, i);
    }
}

inline double su2_table_residual(const Triple &t) {
    double r = 0;
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= 3; ++j) {
            ComplexMatrix rhs(2, 2);
            for (std::size_t k = 1; k <= 3; ++k) {
                const int e = levi_civita(i, j, k);
                if (e != 0) rhs += Complex{0.0, static_cast<double>(e)} * t[k - 1];
            }
            r = std::max(r, max_abs(commutator(t[i - 1], t[j - 1]) - rhs));
        }
    return r;
}

inline double cross_table_residual(const Triple &a, const Triple &b) {
    double r = 0;
    for (const auto &x : a)
        for (const auto &y : b) r = std::max(r, max_abs(commutator(x, y)));
    return r;
}

inline ComplexMatrix embed_block(const ComplexMatrix &m, bool lower) {
    ComplexMatrix out(4, 4);
    const std::size_t o = lower ? 2 : 0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) out(o + i, o + j) = m(i, j);
    return out;
}

}  // namespace detail

inline SU2Split su2_decouple(double tol = 1e-12) {
    const ChiralSplit cs = chiral_split();
    SU2Split s;
    s.tolerance = tol;
    detail::rotations_and_boosts(cs.M_L, s.J_L, s.K_L);
    detail::rotations_and_boosts(cs.M_R, s.J_R, s.K_R);
    for (std::size_t i = 0; i < 3; ++i) {
        s.L[i] = Complex{0.5} * (s.J_L[i] + kI * s.K_L[i]);
        s.Lbar[i] = Complex{0.5} * (s.J_L[i] - kI * s.K_L[i]);
        s.R[i] = Complex{0.5} * (s.J_R[i] + kI * s.K_R[i]);
        s.Rbar[i] = Complex{0.5} * (s.J_R[i] - kI * s.K_R[i]);
        const ComplexMatrix half_sigma = Complex{0.5} * pauli::sigma(i + 1);
        s.value_residual = std::max({s.value_residual, max_abs(s.L[i] - half_sigma), max_abs(s.Rbar[i] - half_sigma)});
        s.vanishing_residual = std::max({s.vanishing_residual, max_abs(s.Lbar[i]), max_abs(s.R[i])});
    }
    s.su2_residual = std::max(detail::su2_table_residual(s.L), detail::su2_table_residual(s.Rbar));
    Triple left_l, right_rbar;
    for (std::size_t i = 0; i < 3; ++i) {
        left_l[i] = detail::embed_block(s.L[i], false);
        right_rbar[i] = detail::embed_block(s.Rbar[i], true);
    }
    s.cross_residual = std::max({detail::cross_table_residual(s.L, s.Lbar), detail::cross_table_residual(s.R, s.Rbar),
                                 detail::cross_table_residual(left_l, right_rbar)});
    s.pass = s.value_residual <= tol && s.vanishing_residual == 0.0 && s.su2_residual <= tol &&
             s.cross_residual <= tol;
    return s;
}

/// Rotation parameters omega_kl for k < l (antisymmetric completion implied).
class RotationParams {
   public:
    explicit RotationParams(std::size_t n) : n_(n), w_(n * n, 0.0) {
    }
    RotationParams &set(std::size_t k, std::size_t l, double value) {
        w_[k * n_ + l] = value;
        w_[l * n_ + k] = -value;
        return *this;
    }
    RotationParams operator-() const {
        RotationParams out = *this;
        for (double &v : out.w_) v = -v;
        return out;
    }
    double operator()(std::size_t k, std::size_t l) const {
        return w_[k * n_ + l];
    }
    std::size_t size() const noexcept {
        return n_;
    }

   private:
    std::size_t n_;
    std::vector<double> w_;
};

/// Lambda = exp(i sum_{k<l} omega_kl M^{kl}).
inline ComplexMatrix spin_exp(const GeneratorBundle &b, const RotationParams &omega) {
    if (omega.size() != b.size()) throw Error(Errc::dimension_mismatch, "one rotation parameter per index pair");
    ComplexMatrix gen(b.matrix_dim(), b.matrix_dim());
    for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t l = k + 1; l < b.size(); ++l)
            if (omega(k, l) != 0) gen += Complex{0.0, omega(k, l)} * b(k, l);
    return expm(gen);
}

}  // namespace purespinor
