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

#include <cstdint>
#include <vector>

#include "qaf/common.hpp"

namespace qaf {

/**
 * @brief SplitMix64 pseudo-random stream.
 *
 * Counter-based mixer (Steele, Lea & Flood 2014); two streams with different
 * seeds are statistically independent, which is what the sweep harness relies
 * on when it derives one stream per grid point as `seed_base ^ point_index`.
 * Deterministic across platforms.
 */
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n) via multiply-shift (bias < 2^-64).
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

  private:
    std::uint64_t state_;
};

/**
 * @brief Walker/Vose alias table for O(1) categorical sampling.
 *
 * Weights need not be normalized; zero-weight outcomes are never drawn.
 */
class AliasTable {
  public:
    explicit AliasTable(const std::vector<double>& weights) {
        const std::size_t n = weights.size();
        detail::require(n > 0, "AliasTable: empty weight vector");
        double total = 0.0;
        for (double w : weights) {
            detail::require(w >= 0.0, "AliasTable: negative weight");
            total += w;
        }
        detail::require(total > 0.0, "AliasTable: all weights zero");

        prob_.assign(n, 0.0);
        alias_.assign(n, 0);
        std::vector<double> scaled(n);
        for (std::size_t i = 0; i < n; ++i)
            scaled[i] = weights[i] * static_cast<double>(n) / total;

        std::vector<std::uint32_t> small, large;
        small.reserve(n);
        large.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));

        while (!small.empty() && !large.empty()) {
            const std::uint32_t s = small.back();
            const std::uint32_t g = large.back();
            small.pop_back();
            prob_[s] = scaled[s];
            alias_[s] = g;
            scaled[g] = (scaled[g] + scaled[s]) - 1.0;
            if (scaled[g] < 1.0) {
                large.pop_back();
                small.push_back(g);
            }
        }
        while (!large.empty()) {
            prob_[large.back()] = 1.0;
            large.pop_back();
        }
        while (!small.empty()) { // numerical leftovers
            prob_[small.back()] = 1.0;
            small.pop_back();
        }
    }

    std::size_t draw(SplitMix64& rng) const {
        const std::size_t col = static_cast<std::size_t>(rng.next_below(prob_.size()));
        const double coin = rng.next_double();
        return coin < prob_[col] ? col : alias_[col];
    }

    std::size_t size() const { return prob_.size(); }

  private:
    std::vector<double> prob_;
    std::vector<std::uint32_t> alias_;
};

} // namespace qaf
