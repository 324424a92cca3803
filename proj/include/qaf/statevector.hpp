// Copyright 2026 The qaf developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "qaf/circuit.hpp"
#include "qaf/common.hpp"
#include "qaf/rng.hpp"

namespace qaf {

/// Histogram of S full-register measurement outcomes.
struct ShotHistogram {
    std::map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t total = 0;
    std::uint64_t seed = 0;

    std::uint64_t count_of(std::uint64_t basis_index) const {
        auto it = counts.find(basis_index);
        return it == counts.end() ? 0 : it->second;
    }
};

/**
 * @brief Dense statevector over the (q, a, l) layout, plus an optional block
 * of `extra` qubits above l (used by the amplitude-estimation phase register).
 *
 * Gates are applied in place with bit-masked strided access; no dense matrix
 * is ever formed. A statevector is exclusively owned while mutated.
 */
class StateVector {
  public:
    StateVector(int num_q, int num_a, bool has_l, int num_extra = 0)
        : num_q_(num_q), num_a_(num_a), has_l_(has_l), num_extra_(num_extra) {
        const int t = total_qubits();
        detail::require(t >= 1 && t <= 26, "StateVector: unsupported qubit count");
        amps_.assign(std::size_t{1} << t, cdouble{0.0, 0.0});
        amps_[0] = 1.0;
    }

    int num_q() const { return num_q_; }
    int num_a() const { return num_a_; }
    bool has_l() const { return has_l_; }
    int num_extra() const { return num_extra_; }
    int total_qubits() const {
        return num_q_ + num_a_ + (has_l_ ? 1 : 0) + num_extra_;
    }
    std::size_t dim() const { return amps_.size(); }

    const std::vector<cdouble>& amplitudes() const { return amps_; }
    std::vector<cdouble>& amplitudes() { return amps_; }

    /// Stored amplitude at (l, a_index, q_index); extra bits must be zero.
    cdouble amplitude(int l, std::uint64_t a_index, std::uint64_t q_index) const {
        detail::require(l == 0 || (l == 1 && has_l_), "amplitude: l out of range");
        detail::require(a_index < (std::uint64_t{1} << num_a_),
                        "amplitude: a index out of range");
        detail::require(q_index < (std::uint64_t{1} << num_q_),
                        "amplitude: q index out of range");
        const std::uint64_t idx =
            (static_cast<std::uint64_t>(l) << (num_q_ + num_a_)) |
            (a_index << num_q_) | q_index;
        return amps_[idx];
    }

    double norm_squared() const {
        double s = 0.0;
        for (const cdouble& a : amps_) s += std::norm(a);
        return s;
    }

    std::vector<double> probabilities() const {
        std::vector<double> p(amps_.size());
        for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
        return p;
    }

    /// Applies the circuit gate by gate; register sizes must match exactly.
    void apply(const Circuit& c) {
        detail::require(c.num_q() == num_q_ && c.num_a() == num_a_ &&
                            c.has_l() == has_l_,
                        "apply: circuit/state register mismatch");
        for (const Gate& g : c.gates()) apply_gate(c, g);
    }

    /// Applies the circuit with one additional raw-bit control (phase register).
    void apply_with_bit_control(const Circuit& c, int control_bit) {
        detail::require(c.num_q() == num_q_ && c.num_a() == num_a_ &&
                            c.has_l() == has_l_,
                        "apply_with_bit_control: register mismatch");
        detail::require(control_bit >= c.total_qubits() && control_bit < total_qubits(),
                        "apply_with_bit_control: control bit outside extra block");
        const std::uint64_t cb = std::uint64_t{1} << control_bit;
        for (const Gate& g : c.gates()) apply_gate(c, g, cb, cb);
    }

    // Raw-bit gates used by the phase-estimation network.

    void h_bit(int bit) {
        const double r = 1.0 / std::sqrt(2.0);
        apply_1q(cdouble{r, 0}, cdouble{r, 0}, cdouble{r, 0}, cdouble{-r, 0}, bit, 0, 0);
    }

    void x_bit(int bit) {
        apply_1q(cdouble{0, 0}, cdouble{1, 0}, cdouble{1, 0}, cdouble{0, 0}, bit, 0, 0);
    }

    /// diag(1, exp(i*phi)) on `bit`, optionally controlled by `ctrl_bit` at |1>.
    void phase_bit(int bit, double phi, int ctrl_bit = -1) {
        std::uint64_t cmask = 0;
        if (ctrl_bit >= 0) cmask = std::uint64_t{1} << ctrl_bit;
        const cdouble ph{std::cos(phi), std::sin(phi)};
        const std::uint64_t tbit = std::uint64_t{1} << bit;
        const std::uint64_t free_mask = (dim() - 1) & ~(tbit | cmask);
        std::uint64_t s = 0;
        do {
            amps_[s | cmask | tbit] *= ph;
            s = (s - free_mask) & free_mask;
        } while (s != 0);
    }

    void swap_bits(int bit_a, int bit_b) {
        if (bit_a == bit_b) return;
        const std::uint64_t ma = std::uint64_t{1} << bit_a;
        const std::uint64_t mb = std::uint64_t{1} << bit_b;
        const std::uint64_t free_mask = (dim() - 1) & ~(ma | mb);
        std::uint64_t s = 0;
        do {
            std::swap(amps_[s | ma], amps_[s | mb]);
            s = (s - free_mask) & free_mask;
        } while (s != 0);
    }

  private:
    void apply_gate(const Circuit& c, const Gate& g, std::uint64_t extra_mask = 0,
                    std::uint64_t extra_val = 0) {
        std::uint64_t cmask = extra_mask;
        std::uint64_t cval = extra_val;
        for (const Control& ctl : g.controls) {
            const std::uint64_t b = std::uint64_t{1} << c.bit_of(ctl.qubit);
            cmask |= b;
            if (ctl.polarity == Polarity::on_one) cval |= b;
        }
        const int t = c.bit_of(g.target);
        switch (g.kind) {
            case GateKind::X:
                apply_1q(0, 1, 1, 0, t, cmask, cval);
                break;
            case GateKind::H: {
                const double r = 1.0 / std::sqrt(2.0);
                apply_1q(r, r, r, -r, t, cmask, cval);
                break;
            }
            case GateKind::Z:
            case GateKind::Phase:
                apply_sign_flip(t, cmask, cval);
                break;
            case GateKind::Ry: {
                const double co = std::cos(0.5 * g.angle);
                const double si = std::sin(0.5 * g.angle);
                apply_1q(co, -si, si, co, t, cmask, cval);
                break;
            }
            case GateKind::Rz: {
                const cdouble e0{std::cos(0.5 * g.angle), -std::sin(0.5 * g.angle)};
                const cdouble e1{std::cos(0.5 * g.angle), std::sin(0.5 * g.angle)};
                apply_1q(e0, 0, 0, e1, t, cmask, cval);
                break;
            }
        }
    }

    void apply_1q(cdouble m00, cdouble m01, cdouble m10, cdouble m11, int target_bit,
                  std::uint64_t cmask, std::uint64_t cval) {
        const std::uint64_t tbit = std::uint64_t{1} << target_bit;
        const std::uint64_t free_mask = (dim() - 1) & ~(tbit | cmask);
        std::uint64_t s = 0;
        do {
            const std::uint64_t i0 = s | cval;
            const std::uint64_t i1 = i0 | tbit;
            const cdouble a0 = amps_[i0];
            const cdouble a1 = amps_[i1];
            amps_[i0] = m00 * a0 + m01 * a1;
            amps_[i1] = m10 * a0 + m11 * a1;
            s = (s - free_mask) & free_mask;
        } while (s != 0);
    }

    void apply_sign_flip(int target_bit, std::uint64_t cmask, std::uint64_t cval) {
        const std::uint64_t tbit = std::uint64_t{1} << target_bit;
        const std::uint64_t free_mask = (dim() - 1) & ~(tbit | cmask);
        std::uint64_t s = 0;
        do {
            amps_[s | cval | tbit] = -amps_[s | cval | tbit];
            s = (s - free_mask) & free_mask;
        } while (s != 0);
    }

    int num_q_;
    int num_a_;
    bool has_l_;
    int num_extra_;
    std::vector<cdouble> amps_;
};

/// Value-returning form of StateVector::apply.
inline StateVector apply_circuit(StateVector state, const Circuit& circuit) {
    state.apply(circuit);
    return state;
}

/// Runs `circuit` on the all-zeros state.
inline StateVector run_on_zero(const Circuit& circuit) {
    StateVector sv(circuit.num_q(), circuit.num_a(), circuit.has_l());
    sv.apply(circuit);
    return sv;
}

/**
 * @brief S independent draws from the Born distribution of `state`.
 *
 * Sampling uses an alias table over |amplitude|^2 and a SplitMix64 stream,
 * so the histogram is a deterministic function of (state, S, seed).
 */
inline ShotHistogram sample_counts(const StateVector& state, std::uint64_t S,
                                   std::uint64_t seed) {
    detail::require(S >= 1, "sample_counts: S must be >= 1");
    const AliasTable table(state.probabilities());
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> dense(state.dim(), 0);
    for (std::uint64_t i = 0; i < S; ++i) ++dense[table.draw(rng)];
    ShotHistogram hist;
    hist.total = S;
    hist.seed = seed;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (dense[i] != 0) hist.counts.emplace(i, dense[i]);
    return hist;
}

} // namespace qaf
