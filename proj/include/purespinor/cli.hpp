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

// Command-line front end. `run` is the whole program; tools/ only forwards
// argv to it, so tests can drive it in-process.

#pragma once

#include <CLI11.hpp>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "purespinor/four_qubit.hpp"
#include "purespinor/lie_symmetry.hpp"
#include "purespinor/qubit_geometry.hpp"

namespace purespinor::cli {

using Json = nlohmann::ordered_json;
using OutputValue = std::variant<double, Complex>;

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Bad command-line input; maps to exit code 2.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Rounds to 12 significant digits and clears negative zero.
inline double round12(double v) {
    if (v == 0 || !std::isfinite(v)) return v == 0 ? 0.0 : v;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    const double r = std::strtod(buf, nullptr);
    return r == 0 ? 0.0 : r;
}

inline std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", round12(v));
    return buf;
}

struct Report {
    std::string command;
    Json inputs = Json::object();
    std::vector<std::pair<std::string, OutputValue>> outputs;
    std::vector<std::pair<std::string, double>> residuals;
    double tolerance = 1e-10;

    void out(std::string name, double v) {
        outputs.emplace_back(std::move(name), v);
    }
    void out(std::string name, Complex v) {
        outputs.emplace_back(std::move(name), v);
    }
    void flag(std::string name, bool v) {
        outputs.emplace_back(std::move(name), v ? 1.0 : 0.0);
    }
    void residual(std::string name, double v) {
        residuals.emplace_back(std::move(name), v);
    }
    bool pass() const {
        for (const auto &[name, r] : residuals)
            if (!(r <= tolerance)) return false;
        return true;
    }

    Json to_json() const {
        Json j;
        j["command"] = command;
        j["inputs"] = inputs;
        Json o = Json::object();
        for (const auto &[name, v] : outputs) {
            if (const double *d = std::get_if<double>(&v))
                o[name] = round12(*d);
            else {
                const Complex z = std::get<Complex>(v);
                o[name] = Json::array({round12(z.real()), round12(z.imag())});
            }
        }
        j["outputs"] = std::move(o);
        Json r = Json::object();
        for (const auto &[name, v] : residuals) r[name] = round12(v);
        j["residuals"] = std::move(r);
        j["pass"] = pass();
        j["tolerance"] = round12(tolerance);
        return j;
    }

    std::string to_text() const {
        std::string s = "command: " + command + "\n";
        for (const auto &[k, v] : inputs.items()) s += "input " + k + " = " + v.dump() + "\n";
        for (const auto &[name, v] : outputs) {
            if (const double *d = std::get_if<double>(&v))
                s += "output " + name + " = " + fmt12(*d) + "\n";
            else {
                const Complex z = std::get<Complex>(v);
                s += "output " + name + " = (" + fmt12(z.real()) + ", " + fmt12(z.imag()) + ")\n";
            }
        }
        for (const auto &[name, v] : residuals) s += "residual " + name + " = " + fmt12(v) + "\n";
        s += "tolerance: " + fmt12(tolerance) + "\n";
        s += std::string("pass: ") + (pass() ? "true" : "false") + "\n";
        return s;
    }
};

struct Options {
    std::string state;
    std::string coords;
    double tol = 1e-10;
    std::uint64_t seed = 0;
    std::size_t n = 10000;
    bool json = false;
    bool all = false;
    bool lie = false;
};

/// Comma-separated reals; names the offending field on failure.
inline std::vector<double> parse_reals(const std::string &text, const std::string &flag) {
    std::vector<double> out;
    std::size_t start = 0;
    std::size_t field = 1;
    while (true) {
        const std::size_t end = text.find(',', start);
        std::string tok = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        const auto first = tok.find_first_not_of(" \t");
        const auto last = tok.find_last_not_of(" \t");
        tok = first == std::string::npos ? "" : tok.substr(first, last - first + 1);
        double v = 0;
        const char *b = tok.data();
        const char *e = tok.data() + tok.size();
        if (!tok.empty() && *b == '+') ++b;
        const auto [ptr, ec] = std::from_chars(b, e, v);
        if (tok.empty() || ec != std::errc() || ptr != e)
            throw UsageError(flag + ": field " + std::to_string(field) + " ('" + tok + "') is not a number");
        if (!std::isfinite(v))
            throw UsageError(flag + ": field " + std::to_string(field) + " ('" + tok + "') is not finite");
        out.push_back(v);
        if (end == std::string::npos) break;
        start = end + 1;
        ++field;
    }
    return out;
}

/// Interleaved re,im pairs. With `real_dim` set, exactly that many numbers
/// are also accepted and read as real amplitudes.
inline ComplexVector parse_state(const std::string &text, std::optional<std::size_t> real_dim = std::nullopt) {
    if (text.empty()) throw UsageError("--state: missing amplitudes");
    const std::vector<double> v = parse_reals(text, "--state");
    if (real_dim && v.size() == *real_dim && v.size() != 2 * *real_dim) {
        ComplexVector out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
        return out;
    }
    if (v.size() % 2 != 0)
        throw UsageError("--state: expected interleaved re,im pairs, got " + std::to_string(v.size()) + " numbers");
    ComplexVector out(v.size() / 2);
    for (std::size_t i = 0; i < out.dim(); ++i) out[i] = Complex{v[2 * i], v[2 * i + 1]};
    return out;
}

/// Commands with a single admissible size also take real amplitudes; those
/// accepting several sizes need the interleaved form to stay unambiguous.
inline ComplexVector require_state(const Options &o, std::initializer_list<std::size_t> dims,
                                   const std::string &command) {
    const std::optional<std::size_t> real_dim =
        dims.size() == 1 ? std::optional<std::size_t>(*dims.begin()) : std::nullopt;
    ComplexVector s = parse_state(o.state, real_dim);
    for (std::size_t d : dims)
        if (s.dim() == d) {
            if (norm(s) == 0) throw UsageError("--state: all amplitudes are zero");
            return s;
        }
    std::string want;
    for (std::size_t d : dims) want += (want.empty() ? "" : " or ") + std::to_string(d);
    throw UsageError("--state: " + command + " needs " + want + " amplitudes, got " + std::to_string(s.dim()));
}

inline Json state_json(const ComplexVector &v) {
    Json a = Json::array();
    for (Complex z : v) a.push_back(Json::array({round12(z.real()), round12(z.imag())}));
    return a;
}

inline Report make_report(std::string command, const Options &o) {
    Report r;
    r.command = std::move(command);
    r.tolerance = o.tol;
    return r;
}

inline void add_coords(Report &r, const std::string &prefix, const CoordinateVector &x) {
    for (std::size_t i = 0; i < x.size(); ++i) r.out(prefix + std::to_string(i), x[i]);
}

/// |null_norm| / |X|^2, zero for the zero vector.
inline double relative_null(const CoordinateVector &x) {
    const double n2 = x.euclidean_norm2();
    return n2 == 0 ? 0.0 : std::abs(null_norm(x)) / n2;
}

// ---- subcommands ---------------------------------------------------------

inline Report cmd_bloch(const Options &o) {
    const ComplexVector s = require_state(o, {2}, "bloch");
    Report r = make_report("bloch", o);
    r.inputs["state"] = state_json(s);
    const QubitState q(s[0], s[1]);
    const CoordinateVector x = bloch(q);
    add_coords(r, "X", x);
    r.residual("sphere", std::abs(null_norm(x)) / (x[0] * x[0]));
    r.residual("cartan", cartan_residual(bloch_pencil(x), s) / x[0]);
    return r;
}

inline TwoQubitState two_qubit_from(const ComplexVector &s) {
    return TwoQubitState(s[0], s[1], s[2], s[3]);
}

inline Report cmd_two_qubit(const std::string &what, const Options &o) {
    Report r = make_report("two-qubit " + what, o);
    if (what == "mix") {
        const ComplexVector s = require_state(o, {4}, "two-qubit mix");
        r.inputs["state"] = state_json(s);
        if (norm(slice(s, 0, 2)) == 0 || norm(slice(s, 2, 2)) == 0)
            throw UsageError("--state: both qubits of the direct sum must be nonzero");
        const MixReport m = coupled_system(QubitState(s[0], s[1]), QubitState(s[2], s[3]), o.tol);
        add_coords(r, "X", m.x);
        r.out("M", m.M);
        r.out("omega", m.omega);
        r.out("C_mix", m.c_mix);
        r.flag("decoupled", m.decoupled);
        r.residual("block_A", m.residuals[0]);
        r.residual("block_B", m.residuals[1]);
        r.residual("phase_A", m.phase_residuals[0]);
        r.residual("phase_B", m.phase_residuals[1]);
        r.residual("null", relative_null(m.x));
        r.residual("mixing_circle", std::abs(m.M * m.M - m.c_mix * m.c_mix) / (m.x[0] * m.x[0]));
        if (m.decoupled) {
            r.residual("reduced_A", m.reduced_residuals[0]);
            r.residual("reduced_B", m.reduced_residuals[1]);
        }
        return r;
    }
    const ComplexVector raw = require_state(o, {4}, "two-qubit " + what);
    r.inputs["state"] = state_json(raw);
    if (what == "coords") {
        const TwoQubitState st = two_qubit_from(raw);
        const CoordinateVector x = gbloch(st);
        const CoordinateVector via = gbloch_via_operators(st);
        add_coords(r, "X", x);
        double cross = 0;
        for (std::size_t i = 0; i < x.size(); ++i) cross = std::max(cross, std::abs(x[i] - via[i]) / x[0]);
        r.residual("sphere", std::abs(null_norm(x)) / (x[0] * x[0]));
        r.residual("operators", cross);
        return r;
    }
    // Measures are defined on the normalized state.
    const TwoQubitState st = two_qubit_from(normalized(raw));
    const Complex det = st.a * st.d - st.b * st.c;
    if (what == "concurrence") {
        const double m = concurrence(st);
        r.out("M", m);
        r.residual("formula", std::abs(m - 2 * std::abs(det)));
        return r;
    }
    // separable
    const bool sep = separable(st, o.tol);
    const CoordinateVector x = gbloch(st);
    const bool by_coords = std::abs(x[4]) <= 2 * o.tol && std::abs(x[5]) <= 2 * o.tol;
    r.flag("separable", sep);
    r.out("abs_ad_minus_bc", std::abs(det));
    r.out("X4", x[4]);
    r.out("X5", x[5]);
    r.residual("criteria_disagree", sep == by_coords ? 0.0 : 1.0);
    return r;
}

inline Report cmd_four_qubit(const std::string &what, const Options &o) {
    Report r = make_report("four-qubit " + what, o);
    if (what == "gabcd") {
        const ComplexVector s = require_state(o, {4}, "four-qubit gabcd");
        r.inputs["state"] = state_json(s);
        const OmegaState g = gabcd(s[0], s[1], s[2], s[3]);
        for (std::size_t k = 0; k < 8; ++k) r.out("a" + std::to_string(k + 1), g.amps[k]);
        const double m2v = m2(g);
        const double m1v = m1(g);
        r.out("M1", m1v);
        r.out("M2", m2v);
        r.residual("M2_vs_concurrence", std::abs(m2v - 2 * std::abs(s[0] * s[3] - s[1] * s[2])));
        r.residual("M1_vanishes", m1v);
        return r;
    }
    const ComplexVector raw = require_state(o, {8}, "four-qubit " + what);
    r.inputs["state"] = state_json(raw);
    if (what == "coords") {
        const OmegaState st(raw);
        const CoordinateVector z = z_coords(st);
        add_coords(r, "Z", z);
        r.residual("sphere", z_sphere_residual(st));
        return r;
    }
    const OmegaState st(normalized(raw));
    const CoordinateVector z = z_coords(st);
    if (what == "m1") {
        r.out("M1", m1(st));
        r.residual("formula", std::abs(m1(st) - std::hypot(z[4], z[5])));
    } else if (what == "m2") {
        r.out("M2", m2(st));
        r.residual("formula", std::abs(m2(st) - std::hypot(z[6], z[7])));
    } else {  // bound
        const FourQubitMeasures m = m1_bound(st, o.tol);
        r.out("M1", m.M1);
        r.out("M2", m.M2);
        r.out("M1_first", m.M1_first);
        r.out("M1_second", m.M1_second);
        r.out("bound", m.bound_M1);
        r.residual("violation", std::max(0.0, m.M1 - m.bound_M1));
    }
    return r;
}

/// Operators matching a coordinate vector of the given length.
inline std::pair<std::vector<ComplexMatrix>, std::vector<int>> pencil_frame(std::size_t n_coords) {
    switch (n_coords) {
        case 4:
            return {bloch_operators(), {-1, 1, 1, 1}};
        case 6:
            return {embedding_operators(SetName::OPS6), embedding_metric(SetName::OPS6)};
        case 8:
            return {embedding_operators(SetName::GAMMA8), embedding_metric(SetName::GAMMA8)};
        default:
            throw UsageError("--coords: expected 4, 6 or 8 coordinates, got " + std::to_string(n_coords));
    }
}

/// Own coordinates of a 2-, 4- or 8-component state.
inline CoordinateVector own_coords(const ComplexVector &s, double tol) {
    switch (s.dim()) {
        case 2:
            return bloch(QubitState(s[0], s[1]));
        case 4:
            return embed(slice(s, 0, 2), slice(s, 2, 2), SetName::OPS6, tol).x;
        default:
            return embed(slice(s, 0, 4), slice(s, 4, 4), SetName::GAMMA8, tol).x;
    }
}

inline Report cmd_spinor(const std::string &what, const Options &o) {
    Report r = make_report("spinor " + what, o);
    if (what == "cartan-solve") {
        if (o.coords.empty()) throw UsageError("--coords: required for cartan-solve");
        const std::vector<double> c = parse_reals(o.coords, "--coords");
        r.inputs["coords"] = c;
        auto [ops, metric] = pencil_frame(c.size());
        const CoordinateVector x(c, metric);
        const OperatorPencil p = pencil_from(x, ops);
        const auto basis = cartan_solve(p, o.tol);
        r.out("kernel_dim", static_cast<double>(basis.size()));
        const ComplexMatrix pm = p.matrix();
        const double pn = frobenius_norm(pm);
        double worst = 0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis[i].dim(); ++j)
                r.out("v" + std::to_string(i) + "_" + std::to_string(j), basis[i][j]);
            if (pn > 0) worst = std::max(worst, norm(pm * basis[i]) / pn);
        }
        r.residual("kernel", worst);
        return r;
    }
    if (what == "cartan-residual") {
        const ComplexVector s = require_state(o, {2, 4, 8}, "spinor cartan-residual");
        r.inputs["state"] = state_json(s);
        CoordinateVector x;
        if (o.coords.empty()) {
            x = own_coords(s, o.tol);
        } else {
            const std::vector<double> c = parse_reals(o.coords, "--coords");
            r.inputs["coords"] = c;
            x = CoordinateVector(c, pencil_frame(c.size()).second);
        }
        auto [ops, metric] = pencil_frame(x.size());
        if (ops.front().rows() != s.dim())
            throw UsageError("--coords: " + std::to_string(x.size()) + " coordinates do not act on a " +
                             std::to_string(s.dim()) + "-component state");
        add_coords(r, "X", x);
        r.residual("cartan", cartan_residual(pencil_from(CoordinateVector(x.coords, metric), ops), s));
        return r;
    }
    if (what == "embed") {
        const ComplexVector s = require_state(o, {4, 8}, "spinor embed");
        r.inputs["state"] = state_json(s);
        const std::size_t half = s.dim() / 2;
        const Embedding e = embed(slice(s, 0, half), slice(s, half, half),
                                  s.dim() == 4 ? SetName::OPS6 : SetName::GAMMA8, o.tol);
        add_coords(r, "X", e.x);
        r.residual("null", relative_null(e.x));
        return r;
    }
    // pure
    const ComplexVector s = require_state(o, {4, 8}, "spinor pure");
    r.inputs["state"] = state_json(s);
    const SpinorState psi(s.dim() == 4 ? SetName::DIRAC31 : SetName::GAMMA8, s);
    const PurityResult p = purity(psi, o.tol);
    const CoordinateVector x = bilinear_coords(psi, o.tol);
    r.out("d", static_cast<double>(p.d));
    r.out("n", static_cast<double>(psi.set().size() / 2));
    r.flag("pure", p.is_pure);
    r.out("null_norm", null_norm(x));
    return r;
}

inline Report cmd_verify_algebras(const Options &o) {
    Report r = make_report("verify-algebras", o);
    r.inputs["all"] = o.all;
    r.inputs["lie"] = o.lie;
    const bool clifford_part = o.all || !o.lie;
    const bool lie_part = o.all || o.lie;
    if (clifford_part) {
        for (SetName n : kAllSets) {
            const GeneratorSet &set = generator_set(n);
            const std::string name(set_name_str(n));
            r.flag(name + ".clifford", set.is_clifford);
            if (!set.is_clifford) continue;
            const CliffordReport c = verify_clifford(set, o.tol);
            r.residual(name + ".anticommutators", c.max_residual);
            if (set.volume) r.residual(name + ".volume", c.volume_residual);
        }
        const JRepresentationReport j = j_representation_check(o.tol);
        std::size_t matched = 0;
        for (double d : j.channel_deviation)
            if (d <= o.tol) ++matched;
        r.out("J7.channels_reproduced", static_cast<double>(matched));
        r.out("J7.channel_deviation", j.max_deviation);
    }
    if (lie_part) {
        r.residual("so31", verify_so_algebra(rotation_generators(generator_set(SetName::DIRAC31)), o.tol).max_residual);
        r.residual("so51", verify_so_algebra(rotation_generators(generator_set(SetName::GAMMA8)), o.tol).max_residual);
        const ChiralSplit cs = chiral_split();
        r.residual("chiral_pairing", cs.pairing_residual);
        const SU2Split su = su2_decouple(o.tol);
        r.residual("su2_values", su.value_residual);
        r.residual("su2_vanishing", su.vanishing_residual);
        r.residual("su2_tables", su.su2_residual);
        r.residual("su2_cross", su.cross_residual);
        const GeneratorBundle b = rotation_generators(generator_set(SetName::DIRAC31));
        RotationParams w(4);
        w.set(1, 2, 2 * std::numbers::pi);
        const ComplexMatrix lam = spin_exp(b, w);
        r.residual("double_cover", max_abs(lam + ComplexMatrix::identity(4)));
    }
    return r;
}

/// Running maximum of a named residual family.
class MaxTable {
   public:
    void update(const std::string &name, double v) {
        for (auto &[k, m] : rows_)
            if (k == name) {
                m = std::max(m, v);
                return;
            }
        rows_.emplace_back(name, v);
    }
    const std::vector<std::pair<std::string, double>> &rows() const {
        return rows_;
    }

   private:
    std::vector<std::pair<std::string, double>> rows_;
};

/// Distinct per-case, per-draw seed: case i of the suite uses base + i.
inline std::uint64_t draw_seed(std::uint64_t case_seed, std::uint64_t draw) {
    return case_seed * 16 + draw;
}

inline Report cmd_random_suite(const Options &o) {
    Report r = make_report("random-suite", o);
    r.inputs["n"] = o.n;
    r.inputs["seed"] = o.seed;
    MaxTable t;
    for (std::size_t i = 0; i < o.n; ++i) {
        const std::uint64_t cs = o.seed + i;
        auto draw = [&](std::size_t dim, std::uint64_t k) { return random_state(dim, draw_seed(cs, k)); };

        const ComplexVector q = draw(2, 0);
        const CoordinateVector xb = bloch(QubitState(q[0], q[1]));
        t.update("bloch_sphere", std::abs(null_norm(xb)) / (xb[0] * xb[0]));
        t.update("bloch_cartan", cartan_residual(bloch_pencil(xb), q) / xb[0]);

        const ComplexVector s4 = draw(4, 1);
        const TwoQubitState st = two_qubit_from(s4);
        const CoordinateVector xg = gbloch(st);
        t.update("gbloch_sphere", std::abs(null_norm(xg)) / (xg[0] * xg[0]));
        const TwoQubitState sn = two_qubit_from(normalized(s4));
        t.update("concurrence_formula", std::abs(concurrence(sn) - 2 * std::abs(sn.a * sn.d - sn.b * sn.c)));

        const ComplexVector qa = draw(2, 2);
        const ComplexVector qb = draw(2, 3);
        const MixReport m = coupled_system(QubitState(qa[0], qa[1]), QubitState(qb[0], qb[1]), o.tol);
        t.update("direct_sum_null", relative_null(m.x));
        t.update("direct_sum_blocks", std::max(m.residuals[0], m.residuals[1]));
        t.update("direct_sum_phase", std::max(m.phase_residuals[0], m.phase_residuals[1]));

        const ComplexVector d4 = draw(4, 4);
        const SpinorState weyl4(SetName::DIRAC31, weyl_split(generator_set(SetName::DIRAC31), d4).first);
        t.update("weyl_null_dirac", relative_null(bilinear_coords(weyl4, o.tol)));
        const ComplexVector d8 = draw(8, 5);
        const SpinorState weyl8(SetName::GAMMA8, weyl_split(generator_set(SetName::GAMMA8), d8).first);
        t.update("weyl_null_gamma8", relative_null(bilinear_coords(weyl8, o.tol)));
        const CoordinateVector xd = bilinear_coords(SpinorState(SetName::DIRAC31, d4), o.tol);
        const CoordinateVector xe = embed(slice(d4, 0, 2), slice(d4, 2, 2), SetName::OPS6, o.tol).x;
        t.update("dirac_null_vs_mixing",
                 std::abs(null_norm(xd) + xe[4] * xe[4] + xe[5] * xe[5]) / xd.euclidean_norm2());

        const ComplexVector p4 = draw(4, 6);
        const ComplexVector f4 = draw(4, 7);
        const Mix8Report m8 = coupled_system8(p4, f4, o.tol);
        t.update("direct_sum8_null", relative_null(m8.z));
        t.update("direct_sum8_blocks", *std::max_element(m8.residuals.begin(), m8.residuals.end()));

        const OmegaState om(draw(8, 8));
        t.update("z_sphere", z_sphere_residual(om));
        const OmegaState omn(normalized(om.vec()));
        const FourQubitMeasures fm = m1_bound(omn, o.tol);
        t.update("m1_bound_violation", std::max(0.0, fm.M1 - fm.bound_M1));

        const ComplexVector g = draw(4, 9);
        const OmegaState ga = gabcd(g[0], g[1], g[2], g[3]);
        t.update("gabcd_m2", std::abs(m2(ga) - 2 * std::abs(g[0] * g[3] - g[1] * g[2])));
        t.update("gabcd_m1", m1(ga));
    }
    r.out("cases", static_cast<double>(o.n));
    for (const auto &[name, v] : t.rows()) r.residual(name, v);
    return r;
}

// ---- driver --------------------------------------------------------------

inline void add_common(CLI::App *app, Options &o, bool needs_state) {
    auto *state = app->add_option("--state", o.state, "amplitudes as interleaved re,im decimals");
    if (needs_state) state->required();
    app->add_option("--tol", o.tol, "verification tolerance")->capture_default_str();
    app->add_option("--seed", o.seed, "random seed")->capture_default_str();
    app->add_option("--n", o.n, "number of random cases")->capture_default_str();
    app->add_flag("--json", o.json, "emit a JSON report");
}

/// Parses argv, runs one command, writes its report. Returns the exit code.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Pure-spinor geometry of qubit entanglement", "purespinor"};
    app.require_subcommand(1);
    Options o;
    std::vector<std::pair<CLI::App *, std::function<Report()>>> leaves;

    auto *bloch_cmd = app.add_subcommand("bloch", "Bloch coordinates of one qubit");
    add_common(bloch_cmd, o, true);
    leaves.emplace_back(bloch_cmd, [&] { return cmd_bloch(o); });

    auto *two = app.add_subcommand("two-qubit", "two-qubit geometry");
    two->require_subcommand(1);
    for (const char *what : {"coords", "concurrence", "separable", "mix"}) {
        auto *c = two->add_subcommand(what);
        add_common(c, o, true);
        leaves.emplace_back(c, [&o, w = std::string(what)] { return cmd_two_qubit(w, o); });
    }

    auto *four = app.add_subcommand("four-qubit", "restricted four-qubit states");
    four->require_subcommand(1);
    for (const char *what : {"coords", "m1", "m2", "gabcd", "bound"}) {
        auto *c = four->add_subcommand(what);
        add_common(c, o, true);
        leaves.emplace_back(c, [&o, w = std::string(what)] { return cmd_four_qubit(w, o); });
    }

    auto *spin = app.add_subcommand("spinor", "purity, embedding and Cartan equations");
    spin->require_subcommand(1);
    for (const char *what : {"pure", "embed", "cartan-solve", "cartan-residual"}) {
        auto *c = spin->add_subcommand(what);
        const bool solve = std::string(what) == "cartan-solve";
        add_common(c, o, !solve);
        c->add_option("--coords", o.coords, "comma-separated coordinates X0,X1,...");
        leaves.emplace_back(c, [&o, w = std::string(what)] { return cmd_spinor(w, o); });
    }

    auto *verify = app.add_subcommand("verify-algebras", "Clifford and Lie algebra suites");
    add_common(verify, o, false);
    verify->add_flag("--all", o.all, "every generator set plus the Lie suites");
    verify->add_flag("--lie", o.lie, "Lie suites only");
    leaves.emplace_back(verify, [&] { return cmd_verify_algebras(o); });

    auto *suite = app.add_subcommand("random-suite", "seeded property suite");
    add_common(suite, o, false);
    leaves.emplace_back(suite, [&] { return cmd_random_suite(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (!(o.tol > 0)) throw UsageError("--tol: must be positive");
        for (auto &[cmd, handler] : leaves) {
            if (!cmd->parsed()) continue;
            const Report r = handler();
            if (o.json)
                out << r.to_json().dump(2) << "\n";
            else
                out << r.to_text();
            return r.pass() ? kPass : kFail;
        }
        err << "error: no command\n";
        return kUsage;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace purespinor::cli
