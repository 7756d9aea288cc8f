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

// Two-way purification on Bell-diagonal weights: the recurrence step, its
// iteration with twirl or Macchiavello re-shuffling, and the direct
// purification of the non-Bell-diagonal (1-p)|00><00| + p|Psi+><Psi+| family.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "mixent/density.hpp"

namespace mixent {

struct RecurrenceStep {
    BellDiagonal p;
    double p_pass = 0.0;
};

/// One BXOR of two copies followed by a bilateral z measurement of the
/// target; returns the weights of the kept source given that the two
/// readings agreed, and the probability that they did.
RecurrenceStep recurrence_step(const BellDiagonal &p);

enum class RecurrenceVariant { WernerTwirl, Macchiavello };

std::string_view variant_name(RecurrenceVariant v);

/// Keep p00, replace the other three weights with their mean.
BellDiagonal werner_equalize(const BellDiagonal &p);

/// Fix p00 and p01, swap p10 <-> p11.
BellDiagonal macchiavello_permute(const BellDiagonal &p);

struct StopRule {
    double target_fidelity = 1.0 - 1e-6;
    std::size_t max_steps = 64;
};

struct RecurrenceRecord {
    BellDiagonal p;
    double p_pass = 0.0;
    double fraction_remaining = 1.0;
};

struct RecurrenceTrace {
    BellDiagonal initial;
    std::vector<RecurrenceRecord> steps;

    double final_fidelity() const { return steps.empty() ? initial.fidelity() : steps.back().p.fidelity(); }
};

/// Iterates from a Werner state. Throws InputError unless F0 lies in (1/2, 1].
RecurrenceTrace recurrence_iterate(double f0, RecurrenceVariant variant, const StopRule &stop = {});

/// Same from an arbitrary Bell-diagonal start (no fidelity restriction).
RecurrenceTrace recurrence_iterate(const BellDiagonal &p0, RecurrenceVariant variant, const StopRule &stop = {});

struct DirectPurifyResult {
    std::size_t trials = 0;  // source/target couples, n_pairs / 2
    std::size_t successes = 0;
    double estimated_success_prob = 0.0;
    double estimated_yield = 0.0;  // kept sources per input pair
    double success_prob_stderr = 0.0;
    double yield_stderr = 0.0;
    double min_survivor_fidelity = 1.0;  // against Psi+, 1 if nothing survived
};

/// Monte Carlo on explicit four-qubit state vectors (A_s, B_s, A_t, B_t):
/// each pair is |00> with probability 1-p and Psi+ otherwise; BXOR source
/// into target, measure both target qubits, keep the source on "down-down".
DirectPurifyResult direct_purify_sim(double p, std::size_t n_pairs, std::mt19937_64 &rng);

}  // namespace mixent
