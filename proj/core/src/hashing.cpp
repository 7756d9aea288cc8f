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

#include "mixent/hashing.hpp"

#include <algorithm>
#include <cmath>

#include "mixent/error.hpp"

namespace mixent {

namespace {

std::vector<double> product_prior(const BellDiagonal &w, std::size_t n) {
    std::vector<double> weights{1.0};
    for (std::size_t pair = 0; pair < n; ++pair) {
        std::vector<double> next(weights.size() * 4);
        for (std::size_t code = 0; code < weights.size(); ++code) {
            for (std::uint8_t b = 0; b < 4; ++b) next[(code << 2) | b] = weights[code] * w.at(b);
        }
        weights = std::move(next);
    }
    return weights;
}

void truncate_to_likely_set(std::vector<double> &weights, const BellDiagonal &w, std::size_t n, double delta) {
    const double limit = static_cast<double>(n) * (von_neumann_entropy(w) + delta);
    for (double &x : weights) {
        if (x > 0.0 && -std::log2(x) > limit) x = 0.0;
    }
}

double normalize(std::vector<double> &weights) {
    double total = 0.0;
    for (double x : weights) total += x;
    if (total > 0.0) {
        for (double &x : weights) x /= total;
    }
    return total;
}

std::size_t support_size(const std::vector<double> &weights) {
    return static_cast<std::size_t>(std::count_if(weights.begin(), weights.end(), [](double x) { return x > 0.0; }));
}

BellString sample_string(const BellDiagonal &w, std::size_t n, std::mt19937_64 &rng) {
    const auto &p = w.probabilities();
    std::discrete_distribution<int> pick(p.begin(), p.end());
    std::vector<BellIndex> pairs(n);
    for (auto &b : pairs) b = BellIndex(static_cast<std::uint8_t>(pick(rng)));
    return BellString(std::move(pairs));
}

SubsetIndex random_subset(std::size_t n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::uint32_t> pick(1, (1u << (2 * n)) - 1u);
    return SubsetIndex::unpack(pick(rng), n);
}

void check_block(std::size_t n) {
    if (n < 1 || n > kMaxExactPairs) {
        throw InputError("exact posterior needs 1 <= n <= " + std::to_string(kMaxExactPairs));
    }
}

std::vector<double> initial_posterior(const BellDiagonal &w, std::size_t n, const HashingOptions &options) {
    std::vector<double> weights = product_prior(w, n);
    if (options.likely_set) {
        truncate_to_likely_set(weights, w, n, options.delta.value_or(default_delta(n)));
        normalize(weights);
    }
    return weights;
}

void record(HashingReport &report, const std::vector<double> &weights) {
    report.entropy_trace.push_back(shannon_entropy(weights));
    report.candidate_trace.push_back(support_size(weights));
}

void finish(HashingReport &report, const std::vector<double> &weights, std::uint32_t truth_code) {
    const bool truth_kept = truth_code < weights.size() && weights[truth_code] > 0.0;
    const std::size_t left = report.candidate_trace.back();
    report.identified = truth_kept && left == 1;
    if (!truth_kept) {
        report.failure_mode = FailureMode::TruthOutsideCandidates;
    } else if (left > 1) {
        report.failure_mode = FailureMode::Ambiguous;
    } else {
        report.failure_mode = FailureMode::None;
    }
}

}  // namespace

double hashing_yield(const BellDiagonal &w) { return std::max(0.0, 1.0 - von_neumann_entropy(w)); }

double default_delta(std::size_t n) { return std::pow(static_cast<double>(n), -0.25); }

std::size_t extra_rounds(std::size_t n, double delta) {
    return static_cast<std::size_t>(std::ceil(2.0 * delta * static_cast<double>(n)));
}

std::string_view failure_mode_name(FailureMode mode) {
    switch (mode) {
        case FailureMode::None: return "none";
        case FailureMode::Ambiguous: return "ambiguous";
        case FailureMode::TruthOutsideCandidates: return "truth_outside_candidates";
    }
    return "?";
}

double HashingReport::mean_entropy_drop(std::size_t count) const {
    if (entropy_trace.size() < 2) return 0.0;
    count = std::min(count, entropy_trace.size() - 1);
    if (count == 0) return 0.0;
    return (entropy_trace.front() - entropy_trace[count]) / static_cast<double>(count);
}

double shannon_entropy(const std::vector<double> &weights) {
    double total = 0.0;
    for (double x : weights) total += x;
    if (!(total > 0.0)) return 0.0;
    double h = 0.0;
    for (double x : weights) {
        if (x > 0.0) {
            const double p = x / total;
            h -= p * std::log2(p);
        }
    }
    return h;
}

HashingReport hashing_simulate(const BellDiagonal &w, std::size_t n, std::size_t rounds, std::mt19937_64 &rng,
                               const HashingOptions &options) {
    check_block(n);
    if (rounds > n) {
        throw InputError("hashing cannot run more rounds than there are pairs");
    }
    HashingReport report;
    report.n = n;
    report.rounds = rounds;
    report.truth = sample_string(w, n, rng);

    std::vector<double> weights = initial_posterior(w, n, options);
    std::uint32_t truth = report.truth.pack();
    record(report, weights);

    std::size_t width = n;
    for (std::size_t k = 0; k < rounds; ++k) {
        const SubsetIndex s = random_subset(width, rng);
        const ParityNetwork net = build_parity_network(s);
        const PackedMeasurement observed = measure_and_backaction_packed(net, truth, width);

        std::vector<double> next(weights.size() / 4, 0.0);
        for (std::uint32_t code = 0; code < weights.size(); ++code) {
            if (weights[code] == 0.0) continue;
            const PackedMeasurement m = measure_and_backaction_packed(net, code, width);
            if (m.parity == observed.parity) next[m.residual] += weights[code];
        }
        normalize(next);
        weights = std::move(next);
        truth = observed.residual;
        --width;

        report.history.push_back({s, observed.parity, k});
        record(report, weights);
    }
    finish(report, weights, truth);
    return report;
}

BreedingMeasurement breeding_round(const SubsetIndex &s, const BellString &x) {
    if (s.size() != x.size()) {
        throw InputError("subset index and Bell string lengths differ");
    }
    if (s.is_zero()) {
        throw InputError("subset index selects no bits");
    }
    const std::size_t n = x.size();
    std::vector<GateOp> prep;
    for (std::size_t i = 0; i < n; ++i) {
        if (s.mask(i) == 0b10) prep.push_back(GateOp::single(GateKind::BY, i));
        if (s.mask(i) == 0b11) prep.push_back(GateOp::single(GateKind::SXBX, i));
    }
    BreedingMeasurement out;
    out.gates = prep;
    for (std::size_t i = 0; i < n; ++i) {
        if (s.mask(i) != 0) out.gates.push_back(GateOp::bxor(i, n));
    }
    // Both preprocessing gates are involutions, so undoing is re-applying.
    out.gates.insert(out.gates.end(), prep.rbegin(), prep.rend());

    std::vector<BellIndex> pairs = x.pairs();
    pairs.push_back(kPhiPlus);
    const BellString after = apply_gates(out.gates, BellString(std::move(pairs)));
    out.pool_after = after[n];
    out.parity = out.pool_after.amplitude();
    std::vector<BellIndex> working(after.pairs().begin(), after.pairs().end() - 1);
    out.working = BellString(std::move(working));
    return out;
}

HashingReport breeding_simulate(const BellDiagonal &w, std::size_t n, std::size_t pool, std::mt19937_64 &rng,
                                const BreedingOptions &options) {
    check_block(n);
    if (options.rounds && *options.rounds > pool) {
        throw InputError("breeding pool is smaller than the requested number of rounds");
    }
    HashingReport report;
    report.n = n;
    report.truth = sample_string(w, n, rng);

    std::vector<double> weights = initial_posterior(w, n, options);
    const std::uint32_t truth = report.truth.pack();
    record(report, weights);

    auto more = [&] {
        if (options.rounds) return report.pool_consumed < *options.rounds;
        return report.candidate_trace.back() > 1;
    };
    while (more()) {
        if (report.pool_consumed == pool) {
            throw InputError("breeding pool exhausted before the string was identified");
        }
        const SubsetIndex s = random_subset(n, rng);
        const BreedingMeasurement m = breeding_round(s, report.truth);
        if (!(m.working == report.truth)) report.working_string_intact = false;

        const std::uint32_t mask = s.pack();
        for (std::uint32_t code = 0; code < weights.size(); ++code) {
            if (weights[code] != 0.0 && (static_cast<unsigned>(__builtin_popcount(mask & code)) & 1u) != m.parity) {
                weights[code] = 0.0;
            }
        }
        normalize(weights);

        report.history.push_back({s, m.parity, report.pool_consumed});
        ++report.pool_consumed;
        record(report, weights);
    }
    report.rounds = report.pool_consumed;
    report.net_yield = (static_cast<double>(n) - static_cast<double>(report.pool_consumed)) / static_cast<double>(n);
    finish(report, weights, truth);
    return report;
}

}  // namespace mixent
