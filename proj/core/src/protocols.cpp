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

#include "mixent/protocols.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "mixent/error.hpp"

namespace mixent {

RecurrenceStep recurrence_step(const BellDiagonal &p) {
    const double p00 = p.at(0b00);
    const double p01 = p.at(0b01);
    const double p10 = p.at(0b10);
    const double p11 = p.at(0b11);
    const double pass = p00 * p00 + p01 * p01 + p10 * p10 + p11 * p11 + 2.0 * p00 * p10 + 2.0 * p01 * p11;
    if (!(pass > 0.0)) {
        throw InputError("recurrence step has zero pass probability");
    }
    return {BellDiagonal((p00 * p00 + p10 * p10) / pass, (p01 * p01 + p11 * p11) / pass, 2.0 * p00 * p10 / pass,
                         2.0 * p01 * p11 / pass),
            pass};
}

std::string_view variant_name(RecurrenceVariant v) {
    return v == RecurrenceVariant::WernerTwirl ? "twirl" : "macchiavello";
}

BellDiagonal werner_equalize(const BellDiagonal &p) {
    const double q = (1.0 - p.at(0)) / 3.0;
    return BellDiagonal(p.at(0), q, q, 1.0 - p.at(0) - 2.0 * q);
}

BellDiagonal macchiavello_permute(const BellDiagonal &p) { return BellDiagonal(p.at(0), p.at(1), p.at(3), p.at(2)); }

RecurrenceTrace recurrence_iterate(double f0, RecurrenceVariant variant, const StopRule &stop) {
    if (!(f0 > 0.5 && f0 <= 1.0)) {
        throw InputError("recurrence needs a starting fidelity in (1/2, 1]");
    }
    return recurrence_iterate(werner(f0), variant, stop);
}

RecurrenceTrace recurrence_iterate(const BellDiagonal &p0, RecurrenceVariant variant, const StopRule &stop) {
    RecurrenceTrace trace{p0, {}};
    BellDiagonal p = p0;
    double fraction = 1.0;
    while (trace.steps.size() < stop.max_steps && p.fidelity() < stop.target_fidelity) {
        const RecurrenceStep step = recurrence_step(p);
        fraction *= step.p_pass / 2.0;
        p = variant == RecurrenceVariant::WernerTwirl ? werner_equalize(step.p) : macchiavello_permute(step.p);
        trace.steps.push_back({p, step.p_pass, fraction});
    }
    return trace;
}

namespace {

using Vector16c = Eigen::Matrix<Complex, 16, 1>;

// Qubit order (A_s, B_s, A_t, B_t), A_s most significant.
Vector16c couple(const Vector4c &source, const Vector4c &target) {
    Vector16c v;
    for (int s = 0; s < 4; ++s) {
        for (int t = 0; t < 4; ++t) v(4 * s + t) = source(s) * target(t);
    }
    return v;
}

Vector16c bilateral_cnot(const Vector16c &v) {
    Vector16c out = Vector16c::Zero();
    for (int k = 0; k < 16; ++k) {
        const int as = (k >> 3) & 1;
        const int bs = (k >> 2) & 1;
        const int j = k ^ (as << 1) ^ bs;
        out(j) = v(k);
    }
    return out;
}

}  // namespace

DirectPurifyResult direct_purify_sim(double p, std::size_t n_pairs, std::mt19937_64 &rng) {
    detail::require(p >= 0.0 && p <= 1.0, "mixture weight must lie in [0, 1]");
    detail::require(n_pairs % 2 == 0, "direct purification needs an even number of pairs");

    Vector4c up_up = Vector4c::Zero();
    up_up(0) = 1.0;
    const Vector4c psi = bell_vector(kPsiPlus);

    std::bernoulli_distribution entangled(p);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    DirectPurifyResult r;
    r.trials = n_pairs / 2;
    for (std::size_t trial = 0; trial < r.trials; ++trial) {
        const Vector4c &source = entangled(rng) ? psi : up_up;
        const Vector4c &target = entangled(rng) ? psi : up_up;
        const Vector16c after = bilateral_cnot(couple(source, target));

        std::array<double, 4> outcome{};
        for (int k = 0; k < 16; ++k) outcome[k & 3] += std::norm(after(k));
        double u = uniform(rng);
        int reading = 3;
        for (int o = 0; o < 4; ++o) {
            if (u < outcome[o]) {
                reading = o;
                break;
            }
            u -= outcome[o];
        }
        while (outcome[reading] == 0.0) --reading;  // guard against rounding at the top end
        if (reading != 0b11) continue;

        Vector4c kept;
        for (int s = 0; s < 4; ++s) kept(s) = after(4 * s + 0b11);
        kept /= kept.norm();
        r.min_survivor_fidelity = std::min(r.min_survivor_fidelity, std::norm(psi.dot(kept)));
        ++r.successes;
    }
    if (r.trials > 0) {
        const double q = static_cast<double>(r.successes) / static_cast<double>(r.trials);
        r.estimated_success_prob = q;
        r.estimated_yield = q / 2.0;
        r.success_prob_stderr = std::sqrt(q * (1.0 - q) / static_cast<double>(r.trials));
        r.yield_stderr = r.success_prob_stderr / 2.0;
    }
    return r;
}

}  // namespace mixent
