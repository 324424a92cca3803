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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "qaf/common.hpp"

namespace qaf {

/// The three named registers: q carries the input encoding (n qubits),
/// a the power/polynomial ancillas (d qubits), l the single readout ancilla.
enum class Register : std::uint8_t { q, a, l };

struct QubitId {
    Register reg;
    int index;

    friend bool operator==(const QubitId& lhs, const QubitId& rhs) {
        return lhs.reg == rhs.reg && lhs.index == rhs.index;
    }
};

inline QubitId qubit_q(int i) { return {Register::q, i}; }
inline QubitId qubit_a(int i) { return {Register::a, i}; }
inline QubitId qubit_l() { return {Register::l, 0}; }

/// Control polarity: a gate fires when the control qubit is |1> (on_one)
/// or |0> (on_zero, the paper's anti-control).
enum class Polarity : std::uint8_t { on_one, on_zero };

struct Control {
    QubitId qubit;
    Polarity polarity;
};

/**
 * Gate kinds. Rotation conventions follow the usual matrix forms
 *   Ry(t) = [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]]
 *   Rz(t) = diag(exp(-i t/2), exp(+i t/2)).
 * `Phase` is the multi-controlled-Z node: a diagonal that flips the sign of
 * every basis state with the target at |1> and all controls satisfied. With
 * no controls it coincides with Z.
 */
enum class GateKind : std::uint8_t { X, H, Z, Ry, Rz, Phase };

struct Gate {
    GateKind kind;
    double angle = 0.0; // used by Ry/Rz only
    QubitId target;
    std::vector<Control> controls;
};

inline const char* to_string(GateKind k) {
    switch (k) {
        case GateKind::X: return "X";
        case GateKind::H: return "H";
        case GateKind::Z: return "Z";
        case GateKind::Ry: return "Ry";
        case GateKind::Rz: return "Rz";
        case GateKind::Phase: return "Phase";
    }
    return "?";
}

inline std::string to_string(const QubitId& id) {
    switch (id.reg) {
        case Register::q: return "q" + std::to_string(id.index);
        case Register::a: return "a" + std::to_string(id.index);
        case Register::l: return "l";
    }
    return "?";
}

/**
 * @brief Ordered gate list over the (q, a, l) register layout.
 *
 * Immutable by convention once built: construction helpers return new
 * circuits, and nothing mutates gates in place after assembly, so circuits
 * are safe to share across threads.
 *
 * Basis-state layout: global index = l*2^(n+d) + a_index*2^n + q_index,
 * with qubit 0 of each register the least-significant bit.
 */
class Circuit {
  public:
    Circuit(int num_q, int num_a, bool has_l)
        : num_q_(num_q), num_a_(num_a), has_l_(has_l) {
        detail::require(num_q >= 0 && num_a >= 0, "Circuit: negative register size");
    }

    int num_q() const { return num_q_; }
    int num_a() const { return num_a_; }
    bool has_l() const { return has_l_; }
    int total_qubits() const { return num_q_ + num_a_ + (has_l_ ? 1 : 0); }

    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    /// Global bit position of a qubit under this circuit's register sizes.
    int bit_of(const QubitId& id) const {
        switch (id.reg) {
            case Register::q: return id.index;
            case Register::a: return num_q_ + id.index;
            case Register::l: return num_q_ + num_a_;
        }
        throw InternalError("bit_of: bad register");
    }

    bool contains(const QubitId& id) const {
        switch (id.reg) {
            case Register::q: return id.index >= 0 && id.index < num_q_;
            case Register::a: return id.index >= 0 && id.index < num_a_;
            case Register::l: return has_l_ && id.index == 0;
        }
        return false;
    }

    void append(Gate g) {
        validate(g);
        gates_.push_back(std::move(g));
    }

    void append(GateKind kind, QubitId target, std::vector<Control> controls = {},
                double angle = 0.0) {
        append(Gate{kind, angle, target, std::move(controls)});
    }

    /// Appends every gate of `other`; registers must be compatible.
    void append_circuit(const Circuit& other) {
        detail::require(other.num_q_ <= num_q_ && other.num_a_ <= num_a_ &&
                            (!other.has_l_ || has_l_),
                        "append_circuit: register mismatch");
        for (const Gate& g : other.gates_) append(g);
    }

    /// Same gates re-declared over larger registers (metadata-only change).
    Circuit lifted(int num_q, int num_a, bool has_l) const {
        detail::require(num_q >= num_q_ && num_a >= num_a_ && (has_l || !has_l_),
                        "lifted: registers may only grow");
        Circuit out(num_q, num_a, has_l);
        out.gates_ = gates_;
        return out;
    }

    /// Inverse circuit: reversed order, rotation angles negated.
    Circuit dagger() const {
        Circuit out(num_q_, num_a_, has_l_);
        out.gates_.reserve(gates_.size());
        for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
            Gate g = *it;
            if (g.kind == GateKind::Ry || g.kind == GateKind::Rz) g.angle = -g.angle;
            out.gates_.push_back(std::move(g));
        }
        return out;
    }

    bool uses(const QubitId& id) const {
        for (const Gate& g : gates_) {
            if (g.target == id) return true;
            for (const Control& c : g.controls)
                if (c.qubit == id) return true;
        }
        return false;
    }

    /// Debug dump, one gate per line: kind(angle) target ; ctrl <id><+|->...
    /// Not a compatibility surface.
    std::string dump() const {
        std::ostringstream os;
        os.precision(12);
        for (const Gate& g : gates_) {
            os << to_string(g.kind);
            if (g.kind == GateKind::Ry || g.kind == GateKind::Rz)
                os << "(" << g.angle << ")";
            os << " " << to_string(g.target);
            if (!g.controls.empty()) {
                os << " ; ctrl";
                for (const Control& c : g.controls)
                    os << " " << to_string(c.qubit)
                       << (c.polarity == Polarity::on_one ? "+" : "-");
            }
            os << "\n";
        }
        return os.str();
    }

  private:
    void validate(const Gate& g) const {
        detail::require(contains(g.target),
                        "Gate target " + to_string(g.target) + " outside registers");
        for (std::size_t i = 0; i < g.controls.size(); ++i) {
            const Control& c = g.controls[i];
            detail::require(contains(c.qubit),
                            "Gate control " + to_string(c.qubit) + " outside registers");
            detail::require(!(c.qubit == g.target), "Gate control equals target");
            for (std::size_t j = i + 1; j < g.controls.size(); ++j)
                detail::require(!(c.qubit == g.controls[j].qubit),
                                "Duplicate control qubit");
        }
        if (g.kind == GateKind::Ry || g.kind == GateKind::Rz)
            detail::require(std::isfinite(g.angle), "Rotation angle not finite");
    }

    int num_q_;
    int num_a_;
    bool has_l_;
    std::vector<Gate> gates_;
};

/**
 * @brief Every gate of `circuit` gains `control` as an extra control.
 *
 * Registers grow if the control qubit lies outside the input circuit's
 * declared registers. Applying the result with the control in the
 * non-triggering state acts as the identity on the rest.
 */
inline Circuit add_control(const Circuit& circuit, QubitId control, Polarity polarity) {
    detail::require(!circuit.uses(control),
                    "add_control: control " + to_string(control) +
                        " already used inside circuit");
    int num_q = circuit.num_q();
    int num_a = circuit.num_a();
    bool has_l = circuit.has_l();
    switch (control.reg) {
        case Register::q:
            detail::require(control.index >= 0, "add_control: bad q index");
            num_q = std::max(num_q, control.index + 1);
            break;
        case Register::a:
            detail::require(control.index >= 0, "add_control: bad a index");
            num_a = std::max(num_a, control.index + 1);
            break;
        case Register::l:
            detail::require(control.index == 0, "add_control: bad l index");
            has_l = true;
            break;
    }
    Circuit out(num_q, num_a, has_l);
    for (Gate g : circuit.gates()) {
        g.controls.push_back(Control{control, polarity});
        out.append(std::move(g));
    }
    return out;
}

} // namespace qaf
