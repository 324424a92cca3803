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

#include <vector>

#include "qaf/circuit.hpp"
#include "qaf/rng.hpp"

namespace qaf::testutil {

/// All qubits of a circuit's declared registers, in bit order.
inline std::vector<QubitId> all_qubits(int num_q, int num_a, bool has_l) {
    std::vector<QubitId> ids;
    for (int i = 0; i < num_q; ++i) ids.push_back(qubit_q(i));
    for (int i = 0; i < num_a; ++i) ids.push_back(qubit_a(i));
    if (has_l) ids.push_back(qubit_l());
    return ids;
}

/// Random circuit over the given registers, mixing every gate kind and
/// control arity up to max_controls. Used to cross-check simulators.
inline Circuit random_circuit(SplitMix64& rng, int num_q, int num_a, bool has_l,
                              int num_gates, int max_controls = 2) {
    Circuit c(num_q, num_a, has_l);
    const auto ids = all_qubits(num_q, num_a, has_l);
    for (int g = 0; g < num_gates; ++g) {
        const auto kind = static_cast<GateKind>(rng.next_below(6));
        const std::size_t target = rng.next_below(ids.size());
        std::vector<Control> ctrls;
        const int nctl = static_cast<int>(rng.next_below(
            static_cast<std::uint64_t>(max_controls) + 1));
        for (std::size_t i = 0; i < ids.size() && static_cast<int>(ctrls.size()) < nctl;
             ++i) {
            if (i == target) continue;
            if (rng.next_double() < 0.5) continue;
            ctrls.push_back(Control{
                ids[i], rng.next_double() < 0.5 ? Polarity::on_one : Polarity::on_zero});
        }
        const double angle = 4.0 * kPi * (rng.next_double() - 0.5);
        c.append(kind, ids[target], ctrls, angle);
    }
    return c;
}

} // namespace qaf::testutil
