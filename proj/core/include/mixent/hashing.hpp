// Copyright 2026 The mixent Authors
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

// One-way hashing and breeding on small blocks with an exact posterior over
// all 4^n Bell strings.
//
// Strings are packed with pair 0 in the most significant position (see
// BellString::pack). Each hashing round measures a random subset parity,
// discards the inconsistent candidates and pushes the survivors through the
// parity network's back-action; breeding measures the same parity onto a
// pre-purified pool pair and leaves the working string untouched.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "mixent/bell.hpp"
#include "mixent/density.hpp"

namespace mixent {

inline constexpr std::size_t kMaxExactPairs = 8;

/// max(0, 1 - S(W)).
double hashing_yield(const BellDiagonal &w);

/// n^(-1/4).
double default_delta(std::size_t n);

/// ceil(2 delta n).
std::size_t extra_rounds(std::size_t n, double delta);

enum class FailureMode { None, Ambiguous, TruthOutsideCandidates };

std::string_view failure_mode_name(FailureMode mode);

struct HashingRound {
    SubsetIndex s;
    unsigned parity_observed = 0;
    std::size_t round_index = 0;
};

struct HashingReport {
    std::size_t n = 0;
    std::size_t rounds = 0;
    bool identified = false;
    FailureMode failure_mode = FailureMode::None;
    BellString truth;  // sampled initial string
    std::vector<HashingRound> history;
    std::vector<double> entropy_trace;         // Shannon entropy in bits; entry 0 is the prior
    std::vector<std::size_t> candidate_trace;  // nonzero-weight candidates; entry 0 is the prior

    // Breeding only.
    std::size_t pool_consumed = 0;
    double net_yield = 0.0;  // (n - pool_consumed) / n
    bool working_string_intact = true;

    /// Mean of entropy_trace[k-1] - entropy_trace[k] over the first `count` rounds.
    double mean_entropy_drop(std::size_t count) const;
};

struct HashingOptions {
    // Restrict the prior to the likely set {x : -log2 P(x) <= n (S(W) + delta)}.
    bool likely_set = false;
    std::optional<double> delta;  // defaults to default_delta(n)
};

/// Exact posterior over the 4^n candidates. Throws InputError for n outside
/// [1, 8] or rounds > n.
HashingReport hashing_simulate(const BellDiagonal &w, std::size_t n, std::size_t rounds, std::mt19937_64 &rng,
                               const HashingOptions &options = {});

struct BreedingMeasurement {
    unsigned parity = 0;
    BellString working;  // x after the round; equal to the input
    BellIndex pool_after;
    std::vector<GateOp> gates;  // on n + 1 pairs, the pool pair last
};

/// Collects s . x onto a fresh Phi+ pool pair appended after x, reads its
/// amplitude, and undoes the one-pair preprocessing on x.
BreedingMeasurement breeding_round(const SubsetIndex &s, const BellString &x);

struct BreedingOptions : HashingOptions {
    // Run exactly this many rounds; otherwise run until one candidate remains.
    std::optional<std::size_t> rounds;
};

/// Throws InputError when the pool is too small for the requested rounds or
/// runs dry before the string is identified.
HashingReport breeding_simulate(const BellDiagonal &w, std::size_t n, std::size_t pool, std::mt19937_64 &rng,
                                const BreedingOptions &options = {});

/// Shannon entropy in bits of a non-negative weight vector (normalized internally).
double shannon_entropy(const std::vector<double> &weights);

}  // namespace mixent
