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

// Yield and bound curves over Werner fidelity, and the correspondence
// between Pauli channels and Bell-diagonal states.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "mixent/density.hpp"
#include "mixent/protocols.hpp"

namespace mixent {

/// Replaces the qubit with a completely random one with probability p.
class DepolarizingChannel {
   public:
    explicit DepolarizingChannel(double p);
    double p() const { return p_; }

   private:
    double p_;
};

/// Applies I, sigma_x, sigma_y, sigma_z with the given probabilities.
struct PauliChannel {
    double identity = 1.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

PauliChannel to_pauli_channel(const DepolarizingChannel &c);

/// State obtained by sending Bob's half of Phi+ through the channel.
BellDiagonal channel_to_state(const DepolarizingChannel &c);
BellDiagonal channel_to_state(const PauliChannel &c);

/// Inverse of channel_to_state on Bell-diagonal states:
/// (I, x, y, z) = (p00, p01, p11, p10).
PauliChannel state_to_channel(const BellDiagonal &w);

/// sum_k p_k (I (x) sigma_k) |Phi+><Phi+| (I (x) sigma_k)^dagger, built from matrices.
DensityMatrix share_through(const PauliChannel &c);

/// min(1, max(0, 4F - 3)).
double kl_upper_bound(double f);

inline constexpr std::size_t kMaxRecurrenceSteps = 64;

struct CombinedYield {
    double yield = 0.0;
    std::size_t recurrence_steps = 0;  // k achieving the maximum
};

/// max over k in [0, 64] of (fraction left after k recurrence steps) times
/// the hashing yield of the resulting state. Zero for F <= 1/2.
CombinedYield combined_yield_detail(double f, RecurrenceVariant variant);
double combined_yield(double f, RecurrenceVariant variant);

struct CurvePoint {
    double F = 0.0;
    double E_formation = 0.0;
    double D_hash = 0.0;
    double D_recur_hash = 0.0;
    double D_macch_hash = 0.0;
    double KL_upper = 0.0;
};

CurvePoint curve_point(double f);
std::vector<CurvePoint> emit_curves(const std::vector<double> &grid);

/// `points` evenly spaced values from fmin to fmax inclusive.
std::vector<double> linear_grid(double fmin, double fmax, std::size_t points);

/// Evenly spaced in log10(F - 1/2); needs fmin > 1/2.
std::vector<double> log_grid(double fmin, double fmax, std::size_t points);

/// Header F,E_formation,D_hash,D_recur_hash,D_macch_hash,KL_upper. With
/// `log_x` a leading log10_F_minus_half column is added.
void write_curves_csv(std::ostream &out, const std::vector<CurvePoint> &points, bool log_x = false);

}  // namespace mixent
