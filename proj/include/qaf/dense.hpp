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
#include <vector>

#include "qaf/circuit.hpp"
#include "qaf/statevector.hpp"

namespace qaf {

/// Row-major square complex matrix; the verification-oracle workhorse.
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<cdouble> data;

    explicit DenseMatrix(std::size_t d) : dim(d), data(d * d, cdouble{0, 0}) {}

    cdouble& at(std::size_t r, std::size_t c) { return data[r * dim + c]; }
    const cdouble& at(std::size_t r, std::size_t c) const { return data[r * dim + c]; }

    static DenseMatrix identity(std::size_t d) {
        DenseMatrix m(d);
        for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
        return m;
    }
};

inline DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    detail::require(a.dim == b.dim, "multiply: dimension mismatch");
    DenseMatrix out(a.dim);
    for (std::size_t r = 0; r < a.dim; ++r)
        for (std::size_t k = 0; k < a.dim; ++k) {
            const cdouble arb = a.at(r, k);
            if (arb == cdouble{0, 0}) continue;
            for (std::size_t c = 0; c < a.dim; ++c) out.at(r, c) += arb * b.at(k, c);
        }
    return out;
}

inline DenseMatrix conjugate_transpose(const DenseMatrix& a) {
    DenseMatrix out(a.dim);
    for (std::size_t r = 0; r < a.dim; ++r)
        for (std::size_t c = 0; c < a.dim; ++c) out.at(c, r) = std::conj(a.at(r, c));
    return out;
}

inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    detail::require(a.dim == b.dim, "max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        m = std::max(m, std::abs(a.data[i] - b.data[i]));
    return m;
}

/// Max-norm of U^dag U - I.
inline double unitarity_defect(const DenseMatrix& u) {
    return max_abs_diff(multiply(conjugate_transpose(u), u),
                        DenseMatrix::identity(u.dim));
}

/**
 * @brief Dense 2^t x 2^t matrix of a circuit, column by basis-state column.
 *
 * Verification oracle only; refuses more than 12 qubits.
 */
inline DenseMatrix circuit_unitary(const Circuit& circuit) {
    const int t = circuit.total_qubits();
    detail::require(t >= 1 && t <= 12, "circuit_unitary: more than 12 qubits");
    const std::size_t dim = std::size_t{1} << t;
    DenseMatrix u(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        StateVector sv(circuit.num_q(), circuit.num_a(), circuit.has_l());
        sv.amplitudes()[0] = 0.0;
        sv.amplitudes()[col] = 1.0;
        sv.apply(circuit);
        for (std::size_t row = 0; row < dim; ++row)
            u.at(row, col) = sv.amplitudes()[row];
    }
    return u;
}

/// Relative-phase-insensitive distance: min over unit phase of max|a - e^{ip} b|.
inline double max_abs_diff_up_to_phase(const DenseMatrix& a, const DenseMatrix& b) {
    detail::require(a.dim == b.dim, "max_abs_diff_up_to_phase: dimension mismatch");
    // Align on the largest entry of b.
    std::size_t imax = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < b.data.size(); ++i)
        if (std::abs(b.data[i]) > best) {
            best = std::abs(b.data[i]);
            imax = i;
        }
    if (best == 0.0) return max_abs_diff(a, b);
    const cdouble phase = a.data[imax] / b.data[imax];
    const cdouble unit = std::abs(phase) == 0.0 ? cdouble{1, 0} : phase / std::abs(phase);
    double m = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        m = std::max(m, std::abs(a.data[i] - unit * b.data[i]));
    return m;
}

} // namespace qaf
