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

#include "mixent/codesearch.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "mixent/error.hpp"

namespace mixent {

namespace {

constexpr std::uint64_t kPhaseBits = 0x5555555555555555ull;
constexpr std::uint64_t kAmplitudeBits = 0xAAAAAAAAAAAAAAAAull;

unsigned parity64(std::uint64_t x) { return static_cast<unsigned>(std::popcount(x) & 1); }

std::uint64_t low_mask(std::size_t bits) { return bits >= 64 ? ~0ull : ((1ull << bits) - 1ull); }

unsigned symplectic_form(std::uint64_t u, std::uint64_t v) {
    return parity64((((u & kPhaseBits) << 1) & v) ^ (((u & kAmplitudeBits) >> 1) & v));
}

void check_pairs(std::size_t n) {
    if (n < 1 || n > kMaxAffinePairs) {
        throw InputError("affine model supports 1 to " + std::to_string(kMaxAffinePairs) + " pairs");
    }
}

// goodcon/badcon over transformed words, reusing a readout-indexed table.
class ConditionChecker {
   public:
    ConditionChecker(std::size_t n, std::size_t m) : n_(n), m_(m) {
        const std::size_t readout_bits = n - m;
        if (readout_bits <= 20) {
            stamp_.assign(std::size_t{1} << readout_bits, 0);
            kept_.assign(stamp_.size(), 0);
        }
    }

    Conditions operator()(const std::vector<std::uint64_t> &words) {
        if (stamp_.empty()) return check_sorted(words);
        if (++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
        Conditions c{true, true};
        for (std::uint64_t w : words) {
            const std::uint32_t v = readout(w, n_, m_);
            const std::uint64_t k = kept_bits(w, m_);
            if (stamp_[v] == epoch_) {
                c.badcon = false;
                if (kept_[v] != k) {
                    c.goodcon = false;
                    return c;
                }
            } else {
                stamp_[v] = epoch_;
                kept_[v] = k;
            }
        }
        return c;
    }

   private:
    Conditions check_sorted(const std::vector<std::uint64_t> &words) const {
        std::vector<std::pair<std::uint32_t, std::uint64_t>> seen;
        seen.reserve(words.size());
        for (std::uint64_t w : words) seen.emplace_back(readout(w, n_, m_), kept_bits(w, m_));
        std::sort(seen.begin(), seen.end());
        Conditions c{true, true};
        for (std::size_t i = 1; i < seen.size(); ++i) {
            if (seen[i].first == seen[i - 1].first) {
                c.badcon = false;
                if (seen[i].second != seen[i - 1].second) c.goodcon = false;
            }
        }
        return c;
    }

    std::size_t n_;
    std::size_t m_;
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint64_t> kept_;
    std::uint32_t epoch_ = 0;
};

GateOp random_gate(std::size_t n, std::mt19937_64 &rng) {
    static constexpr GateKind kinds[] = {GateKind::BXOR, GateKind::BY, GateKind::SX, GateKind::SXBX};
    std::uniform_int_distribution<int> pick_kind(0, n > 1 ? 3 : 2);
    std::uniform_int_distribution<std::size_t> pick_pair(0, n - 1);
    // With one pair there is no BXOR; shift the draw onto the other three.
    const GateKind kind = kinds[n > 1 ? pick_kind(rng) : pick_kind(rng) + 1];
    if (kind != GateKind::BXOR) return GateOp::single(kind, pick_pair(rng));
    const std::size_t source = pick_pair(rng);
    std::uniform_int_distribution<std::size_t> pick_other(0, n - 2);
    std::size_t target = pick_other(rng);
    if (target >= source) ++target;
    return GateOp::bxor(source, target);
}

CodeSolution make_solution(const std::vector<GateOp> &gates, std::size_t n, const SyndromeSet &syn) {
    CodeSolution s;
    s.gates = gates;
    s.affine = affine_of(gates, n);
    const Conditions c = check_conditions(s.affine, syn);
    s.satisfies_goodcon = c.goodcon;
    s.satisfies_badcon = c.badcon;
    s.op_count = gates.size();
    s.bxor_count = static_cast<std::size_t>(std::count_if(gates.begin(), gates.end(), [](const GateOp &g) {
        return g.is_bxor();
    }));
    return s;
}

bool prefix_can_improve(std::size_t ops, std::size_t bxors, const std::optional<CodeSolution> &best,
                        Minimize minimize, std::size_t cap) {
    const std::size_t next_ops = ops + 1;
    if (next_ops > cap) return false;
    if (!best) return true;
    if (minimize == Minimize::Ops) {
        return next_ops < best->op_count || (next_ops == best->op_count && bxors < best->bxor_count);
    }
    return bxors < best->bxor_count || (bxors == best->bxor_count && next_ops < best->op_count);
}

}  // namespace

GF2Affine::GF2Affine(std::vector<std::uint64_t> rows, std::uint64_t offset)
    : rows_(std::move(rows)), offset_(offset) {
    if (rows_.empty() || rows_.size() % 2 != 0 || rows_.size() > 2 * kMaxAffinePairs) {
        throw InputError("affine map needs an even dimension between 2 and 64");
    }
    const std::uint64_t mask = low_mask(rows_.size());
    for (std::uint64_t r : rows_) {
        if (r & ~mask) throw InputError("affine row has bits beyond the dimension");
    }
    if (offset_ & ~mask) throw InputError("affine offset has bits beyond the dimension");
}

GF2Affine GF2Affine::identity(std::size_t n) {
    check_pairs(n);
    std::vector<std::uint64_t> rows(2 * n);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = 1ull << i;
    return GF2Affine(std::move(rows), 0);
}

std::uint64_t GF2Affine::apply(std::uint64_t x) const {
    std::uint64_t y = offset_;
    for (std::size_t i = 0; i < rows_.size(); ++i) y ^= static_cast<std::uint64_t>(parity64(rows_[i] & x)) << i;
    return y;
}

unsigned GF2Affine::det() const {
    std::vector<std::uint64_t> m = rows_;
    const std::size_t d = m.size();
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        while (pivot < d && !((m[pivot] >> col) & 1u)) ++pivot;
        if (pivot == d) return 0;
        std::swap(m[col], m[pivot]);
        for (std::size_t r = col + 1; r < d; ++r) {
            if ((m[r] >> col) & 1u) m[r] ^= m[col];
        }
    }
    return 1;
}

bool GF2Affine::is_symplectic() const {
    const std::size_t d = rows_.size();
    std::vector<std::uint64_t> cols(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) cols[j] |= static_cast<std::uint64_t>((rows_[i] >> j) & 1u) << i;
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (symplectic_form(cols[i], cols[j]) != symplectic_form(1ull << i, 1ull << j)) return false;
        }
    }
    return true;
}

std::vector<std::string> GF2Affine::row_strings() const {
    std::vector<std::string> out;
    for (std::uint64_t r : rows_) {
        std::string s;
        for (std::size_t j = 0; j < rows_.size(); ++j) s += static_cast<char>('0' + ((r >> j) & 1u));
        out.push_back(std::move(s));
    }
    return out;
}

std::uint64_t to_bits(const BellString &x) {
    check_pairs(x.size());
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        w |= static_cast<std::uint64_t>(x[i].phase()) << (2 * i);
        w |= static_cast<std::uint64_t>(x[i].amplitude()) << (2 * i + 1);
    }
    return w;
}

BellString from_bits(std::uint64_t bits, std::size_t n) {
    check_pairs(n);
    std::vector<BellIndex> pairs(n);
    for (std::size_t i = 0; i < n; ++i) {
        pairs[i] = BellIndex(static_cast<unsigned>((bits >> (2 * i)) & 1u), static_cast<unsigned>((bits >> (2 * i + 1)) & 1u));
    }
    return BellString(std::move(pairs));
}

std::uint64_t parse_word(std::string_view text) {
    std::uint64_t w = 0;
    std::size_t k = 0;
    for (char c : text) {
        if (c == ' ' || c == ',' || c == '_') continue;
        if (c != '0' && c != '1') throw InputError(std::string("unexpected character in word: '") + c + "'");
        if (k >= 64) throw InputError("word longer than 64 bits");
        w |= static_cast<std::uint64_t>(c - '0') << k;
        ++k;
    }
    return w;
}

std::string format_word(std::uint64_t bits, std::size_t n, bool spaced) {
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
        if (spaced && i > 0) out += ' ';
        out += static_cast<char>('0' + ((bits >> (2 * i)) & 1u));
        out += static_cast<char>('0' + ((bits >> (2 * i + 1)) & 1u));
    }
    return out;
}

std::uint64_t apply_gate_bits(const GateOp &g, std::uint64_t x) {
    const unsigned ph = static_cast<unsigned>(2 * g.first);
    switch (g.kind) {
        case GateKind::BXOR: {
            const unsigned tph = static_cast<unsigned>(2 * g.second);
            x ^= ((x >> tph) & 1ull) << ph;
            x ^= ((x >> (ph + 1)) & 1ull) << (tph + 1);
            return x;
        }
        case GateKind::BY: {
            const std::uint64_t diff = ((x >> ph) ^ (x >> (ph + 1))) & 1ull;
            return x ^ (diff << ph) ^ (diff << (ph + 1));
        }
        case GateKind::SX: return x ^ (1ull << (ph + 1));
        case GateKind::SXBX: return x ^ (((x >> ph) & 1ull) << (ph + 1));
        default: throw InputError("gate " + std::string(gate_kind_name(g.kind)) + " is outside the affine repertoire");
    }
}

GF2Affine gate_to_affine(const GateOp &g, std::size_t n) {
    check_pairs(n);
    if (g.first >= n || (g.is_bxor() && (g.second >= n || g.second == g.first))) {
        throw InputError("gate pair index out of range: " + format_gate(g));
    }
    std::vector<std::uint64_t> rows(2 * n);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = 1ull << i;
    std::uint64_t b = 0;
    const std::size_t p = 2 * g.first;
    switch (g.kind) {
        case GateKind::BXOR: {
            const std::size_t t = 2 * g.second;
            rows[p] |= 1ull << t;
            rows[t + 1] |= 1ull << (p + 1);
            break;
        }
        case GateKind::BY: std::swap(rows[p], rows[p + 1]); break;
        case GateKind::SX: b = 1ull << (p + 1); break;
        case GateKind::SXBX: rows[p + 1] |= 1ull << p; break;
        default: throw InputError("gate " + std::string(gate_kind_name(g.kind)) + " is outside the affine repertoire");
    }
    return GF2Affine(std::move(rows), b);
}

GF2Affine compose(const GF2Affine &a1, const GF2Affine &a2) {
    if (a1.dimension() != a2.dimension()) {
        throw InputError("cannot compose affine maps of different dimension");
    }
    const std::size_t d = a1.dimension();
    // Row i of M2 M1 is the XOR of the rows of M1 selected by row i of M2.
    std::vector<std::uint64_t> rows(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            if ((a2.rows()[i] >> k) & 1u) rows[i] ^= a1.rows()[k];
        }
    }
    return GF2Affine(std::move(rows), a2.apply(a1.offset()));
}

GF2Affine affine_of(const std::vector<GateOp> &gates, std::size_t n) {
    GF2Affine a = GF2Affine::identity(n);
    for (const auto &g : gates) a = compose(a, gate_to_affine(g, n));
    return a;
}

std::size_t syndrome_count(std::size_t n, std::size_t t) {
    std::size_t total = 0;
    std::size_t binom = 1;  // C(n, p)
    std::size_t pow3 = 1;
    for (std::size_t p = 0; p <= std::min(t, n); ++p) {
        total += pow3 * binom;
        binom = binom * (n - p) / (p + 1);
        pow3 *= 3;
    }
    return total;
}

SyndromeSet enumerate_syndromes(std::size_t n, std::size_t t, std::size_t m) {
    check_pairs(n);
    detail::require(t <= n, "error count t must not exceed n");
    detail::require(m >= 1 && m <= n, "kept pair count m must lie in [1, n]");
    SyndromeSet set{n, t, m, {}, {}};
    for (std::size_t weight = 0; weight <= t; ++weight) {
        // Pair subsets of this size in lexicographic order.
        std::vector<std::size_t> chosen(weight);
        for (std::size_t i = 0; i < weight; ++i) chosen[i] = i;
        while (true) {
            std::size_t combos = 1;
            for (std::size_t i = 0; i < weight; ++i) combos *= 3;
            for (std::size_t c = 0; c < combos; ++c) {
                BellString x(n);
                std::size_t digits = c;
                for (std::size_t i = weight; i-- > 0;) {
                    x[chosen[i]] = BellIndex(static_cast<std::uint8_t>(digits % 3 + 1));
                    digits /= 3;
                }
                set.words.push_back(to_bits(x));
                set.strings.push_back(std::move(x));
            }
            std::size_t i = weight;
            while (i > 0 && chosen[i - 1] == n - weight + i - 1) --i;
            if (i == 0) break;
            ++chosen[i - 1];
            for (std::size_t j = i; j < weight; ++j) chosen[j] = chosen[j - 1] + 1;
        }
    }
    return set;
}

std::uint32_t readout(std::uint64_t w, std::size_t n, std::size_t m) {
    std::uint32_t v = 0;
    for (std::size_t pair = m; pair < n; ++pair) v = (v << 1) | static_cast<std::uint32_t>((w >> (2 * pair + 1)) & 1u);
    return v;
}

std::uint64_t kept_bits(std::uint64_t w, std::size_t m) { return w & low_mask(2 * m); }

Conditions check_conditions_words(const std::vector<std::uint64_t> &w, std::size_t n, std::size_t m) {
    ConditionChecker check(n, m);
    return check(w);
}

Conditions check_conditions(const GF2Affine &a, const SyndromeSet &syn) {
    if (a.pairs() != syn.n) {
        throw InputError("affine map and syndrome set have different block sizes");
    }
    std::vector<std::uint64_t> w;
    w.reserve(syn.words.size());
    for (std::uint64_t x : syn.words) w.push_back(a.apply(x));
    return check_conditions_words(w, syn.n, syn.m);
}

std::string_view minimize_name(Minimize m) { return m == Minimize::Ops ? "ops" : "bxors"; }

bool better(const CodeSolution &a, const CodeSolution &b, Minimize minimize) {
    if (minimize == Minimize::Ops) {
        return std::pair(a.op_count, a.bxor_count) < std::pair(b.op_count, b.bxor_count);
    }
    return std::pair(a.bxor_count, a.op_count) < std::pair(b.bxor_count, b.op_count);
}

SearchResult monte_carlo_search(std::size_t n, std::size_t m, std::size_t t, std::size_t budget, Minimize minimize,
                                std::mt19937_64 &rng, const SearchOptions &options) {
    detail::require(budget > 0, "search budget must be positive");
    const SyndromeSet syn = enumerate_syndromes(n, t, m);
    ConditionChecker check(n, m);
    SearchResult result;

    if (check(syn.words).goodcon) {
        result.best = make_solution({}, n, syn);
        result.solutions_found = 1;
        return result;
    }

    std::vector<std::uint64_t> words = syn.words;
    std::vector<GateOp> gates;
    std::size_t bxors = 0;
    auto restart = [&] {
        words = syn.words;
        gates.clear();
        bxors = 0;
        ++result.restarts;
    };

    while (result.attempts < budget) {
        const GateOp g = random_gate(n, rng);
        ++result.attempts;
        for (auto &w : words) w = apply_gate_bits(g, w);
        gates.push_back(g);
        if (g.is_bxor()) ++bxors;

        if (check(words).goodcon) {
            ++result.solutions_found;
            CodeSolution found = make_solution(gates, n, syn);
            if (!result.best || better(found, *result.best, minimize)) result.best = std::move(found);
            restart();
        } else if (!prefix_can_improve(gates.size(), bxors, result.best, minimize, options.initial_cap)) {
            restart();
        }
    }
    return result;
}

SweepResult search_sweep(std::size_t n, std::size_t m, std::size_t t, std::size_t budget, Minimize minimize,
                         const std::vector<std::uint64_t> &seeds, const SearchOptions &options) {
    SweepResult sweep;
    sweep.seeds = seeds;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        std::mt19937_64 rng(seeds[i]);
        sweep.runs.push_back(monte_carlo_search(n, m, t, budget, minimize, rng, options));
        const auto &found = sweep.runs.back().best;
        if (found && (!sweep.best || better(*found, *sweep.best, minimize))) {
            sweep.best = found;
            sweep.best_seed_index = i;
        }
    }
    return sweep;
}

GF2Affine published_affine() {
    GF2Affine printed = published_affine_as_printed();
    std::vector<std::uint64_t> rows = printed.rows();
    rows[8] &= ~(1ull << 1);  // printed row 9
    rows[7] |= 1ull << 1;     // printed row 8
    return GF2Affine(std::move(rows), printed.offset());
}

GF2Affine published_affine_as_printed() {
    static constexpr std::string_view rows[] = {
        "1000010100", "0110000010", "0010000010", "1001000110", "0000010010",
        "0010111110", "0000010100", "0000011010", "0100000010", "0001101001",
    };
    std::vector<std::uint64_t> bits;
    for (auto r : rows) bits.push_back(parse_word(r));
    return GF2Affine(std::move(bits), parse_word("0000000001"));
}

const std::vector<PublishedRow> &published_syndrome_table() {
    static const std::vector<PublishedRow> table = {
        {"00 00 00 00 00", "00 00 00 00 01", "0001"}, {"01 00 00 00 00", "01 00 00 01 01", "0011"},
        {"10 00 00 00 00", "10 01 00 00 01", "1001"}, {"11 00 00 00 00", "11 01 00 01 01", "1011"},
        {"00 01 00 00 00", "00 01 00 00 00", "1000"}, {"00 10 00 00 00", "01 10 01 00 01", "0101"},
        {"00 11 00 00 00", "01 11 01 00 00", "1100"}, {"00 00 01 00 00", "10 00 11 11 01", "0111"},
        {"00 00 10 00 00", "00 00 01 00 00", "0100"}, {"00 00 11 00 00", "10 00 10 11 00", "0010"},
        {"00 00 00 01 00", "10 01 01 10 01", "1101"}, {"00 00 00 10 00", "00 00 01 01 00", "0110"},
        {"00 00 00 11 00", "10 01 00 11 00", "1010"}, {"00 00 00 00 01", "00 00 00 00 00", "0000"},
        {"00 00 00 00 10", "01 11 11 01 11", "1111"}, {"00 00 00 00 11", "01 11 11 01 10", "1110"},
    };
    return table;
}

TableCheck verify_against_table(const GF2Affine &a) {
    constexpr std::size_t n = 5;
    constexpr std::size_t m = 1;
    TableCheck check;
    auto fail = [&check](std::string message) {
        check.ok = false;
        check.failures.push_back(std::move(message));
    };
    if (a.pairs() != n) {
        fail("affine map has " + std::to_string(a.pairs()) + " pairs, expected 5");
        return check;
    }
    const SyndromeSet syn = enumerate_syndromes(n, 1, m);
    const auto &table = published_syndrome_table();
    for (std::size_t i = 0; i < table.size(); ++i) {
        const std::size_t row = i + 1;
        const std::uint64_t x = parse_word(table[i].x);
        const std::uint64_t w = parse_word(table[i].w);
        std::uint32_t v = 0;
        for (char c : table[i].v) v = (v << 1) | static_cast<std::uint32_t>(c - '0');
        bool row_ok = true;
        if (i >= syn.words.size() || syn.words[i] != x) {
            fail("row " + std::to_string(row) + ": initial string is not the expected single-error syndrome");
            row_ok = false;
        }
        const std::uint64_t got = a.apply(x);
        if (got != w) {
            fail("row " + std::to_string(row) + ": M x + b = " + format_word(got, n) + ", table has " +
                 format_word(w, n));
            row_ok = false;
        }
        if (readout(w, n, m) != v) {
            fail("row " + std::to_string(row) + ": readout of the table's w differs from its v column");
            row_ok = false;
        }
        if (!row_ok) check.failing_rows.push_back(row);
    }
    check.det = a.det();
    if (check.det != 1) fail("det(M) = 0 over GF(2)");
    check.symplectic = a.is_symplectic();
    if (!check.symplectic) fail("M does not preserve the symplectic form; no gate array produces it");
    check.conditions = check_conditions(a, syn);
    if (!check.conditions.goodcon) fail("goodcon does not hold");
    if (!check.conditions.badcon) fail("badcon does not hold");
    return check;
}

TableCheck verify_published() { return verify_against_table(published_affine()); }

}  // namespace mixent
