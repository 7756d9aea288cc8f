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

// GF(2) model of Bell-string circuits built from BXOR, BY, SX (amplitude
// complement) and SXBX, and a random-walk search for block codes.
//
// A block of n pairs is a 2n-bit word; bit 2i is the phase bit and bit
// 2i+1 the amplitude bit of pair i, with bit 0 the least significant bit of
// a std::uint64_t. The first m pairs are kept; the amplitude bits of the
// remaining n - m pairs are measured and form the syndrome readout v.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mixent/bell.hpp"

namespace mixent {

inline constexpr std::size_t kMaxAffinePairs = 32;

/// x -> M x + b over GF(2). Row i of M is a bit mask over input bits.
class GF2Affine {
   public:
    GF2Affine() = default;
    GF2Affine(std::vector<std::uint64_t> rows, std::uint64_t offset);

    static GF2Affine identity(std::size_t n);

    std::size_t pairs() const { return rows_.size() / 2; }
    std::size_t dimension() const { return rows_.size(); }
    const std::vector<std::uint64_t> &rows() const { return rows_; }
    std::uint64_t offset() const { return offset_; }
    unsigned entry(std::size_t row, std::size_t col) const { return (rows_[row] >> col) & 1u; }

    std::uint64_t apply(std::uint64_t x) const;

    /// Determinant over GF(2).
    unsigned det() const;

    /// Whether M preserves sum_i (p_i a'_i + a_i p'_i).
    bool is_symplectic() const;

    /// Rows as '0'/'1' strings, column 0 leftmost.
    std::vector<std::string> row_strings() const;

    bool operator==(const GF2Affine &) const = default;

   private:
    std::vector<std::uint64_t> rows_;
    std::uint64_t offset_ = 0;
};

std::uint64_t to_bits(const BellString &x);
BellString from_bits(std::uint64_t bits, std::size_t n);

/// Parses a 2n-character '0'/'1' word (spaces ignored), first character = bit 0.
std::uint64_t parse_word(std::string_view text);
std::string format_word(std::uint64_t bits, std::size_t n, bool spaced = true);

/// Action of one gate on a packed word. Only BXOR, BY, SX and SXBX.
std::uint64_t apply_gate_bits(const GateOp &g, std::uint64_t x);

/// Throws InputError for gate kinds outside the restricted repertoire.
GF2Affine gate_to_affine(const GateOp &g, std::size_t n);

/// a2 after a1.
GF2Affine compose(const GF2Affine &a1, const GF2Affine &a2);

GF2Affine affine_of(const std::vector<GateOp> &gates, std::size_t n);

struct SyndromeSet {
    std::size_t n = 0;
    std::size_t t = 0;
    std::size_t m = 0;
    std::vector<BellString> strings;  // all-zero first, then by weight, pair-major
    std::vector<std::uint64_t> words;
};

/// sum_{p <= t} 3^p C(n, p).
std::size_t syndrome_count(std::size_t n, std::size_t t);

SyndromeSet enumerate_syndromes(std::size_t n, std::size_t t, std::size_t m);

/// Amplitude bits of pairs m..n-1 packed with pair m as the most significant bit.
std::uint32_t readout(std::uint64_t w, std::size_t n, std::size_t m);

/// Bits of pairs 0..m-1.
std::uint64_t kept_bits(std::uint64_t w, std::size_t m);

struct Conditions {
    bool goodcon = false;  // equal readouts imply equal kept pairs
    bool badcon = false;   // all readouts distinct
};

Conditions check_conditions(const GF2Affine &a, const SyndromeSet &syn);

/// Same check on already-transformed words.
Conditions check_conditions_words(const std::vector<std::uint64_t> &w, std::size_t n, std::size_t m);

struct CodeSolution {
    std::vector<GateOp> gates;
    GF2Affine affine;
    bool satisfies_goodcon = false;
    bool satisfies_badcon = false;
    std::size_t op_count = 0;
    std::size_t bxor_count = 0;
};

enum class Minimize { Ops, Bxors };

std::string_view minimize_name(Minimize m);

/// Strict improvement under the tie-break order: (ops, bxors), or
/// (bxors, ops) when minimizing BXORs.
bool better(const CodeSolution &a, const CodeSolution &b, Minimize minimize);

struct SearchOptions {
    std::size_t initial_cap = 25;  // longest gate list tried before a solution is known
};

struct SearchResult {
    std::optional<CodeSolution> best;
    std::size_t attempts = 0;  // gate appends spent
    std::size_t solutions_found = 0;
    std::size_t restarts = 0;
};

/// Random walk: append uniformly chosen gates (kind first, then pairs) and
/// re-check goodcon after every append. A success is recorded and the walk
/// restarts, only accepting strictly better solutions from then on.
SearchResult monte_carlo_search(std::size_t n, std::size_t m, std::size_t t, std::size_t budget, Minimize minimize,
                                std::mt19937_64 &rng, const SearchOptions &options = {});

struct SweepResult {
    std::vector<std::uint64_t> seeds;
    std::vector<SearchResult> runs;  // one per seed, same order
    std::optional<CodeSolution> best;
    std::optional<std::size_t> best_seed_index;
};

/// One independent search per seed; the best is chosen by the tie-break
/// order, earliest seed first on ties.
SweepResult search_sweep(std::size_t n, std::size_t m, std::size_t t, std::size_t budget, Minimize minimize,
                         const std::vector<std::uint64_t> &seeds, const SearchOptions &options = {});

// Five-pair, one-error code with one kept pair.

/// The published affine map with one misprinted entry repaired: the
/// amplitude bit of pair 1 feeds output row 8 rather than row 9.
GF2Affine published_affine();

/// The affine map exactly as printed.
GF2Affine published_affine_as_printed();

struct PublishedRow {
    std::string_view x;
    std::string_view w;
    std::string_view v;
};

/// The 16-row syndrome table: initial string, transformed string, readout.
const std::vector<PublishedRow> &published_syndrome_table();

struct TableCheck {
    bool ok = true;
    std::vector<std::string> failures;  // one message per failing row or property
    std::vector<std::size_t> failing_rows;  // 1-based
    unsigned det = 0;
    bool symplectic = false;
    Conditions conditions;
};

TableCheck verify_against_table(const GF2Affine &a);

/// verify_against_table(published_affine()).
TableCheck verify_published();

}  // namespace mixent
