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

// Two-bit Bell-state algebra.
//
// A Bell state is labelled by two classical bits: the high-order "phase" bit
// (+/-) and the low-order "amplitude" bit (Phi/Psi):
//
//     Phi+ = 00    Psi+ = 01    Phi- = 10    Psi- = 11
//
// Gates act on these labels only; global and relative phases are dropped.
// Phase-sensitive work lives in density.hpp, twirl.hpp and qecc.hpp.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace mixent {

class BellIndex {
   public:
    constexpr BellIndex() = default;
    constexpr explicit BellIndex(std::uint8_t bits) : bits_(bits & 3u) {}
    constexpr BellIndex(unsigned phase, unsigned amplitude)
        : bits_(static_cast<std::uint8_t>(((phase & 1u) << 1) | (amplitude & 1u))) {}

    constexpr std::uint8_t bits() const { return bits_; }
    constexpr unsigned phase() const { return (bits_ >> 1) & 1u; }
    constexpr unsigned amplitude() const { return bits_ & 1u; }

    constexpr bool operator==(const BellIndex &) const = default;

    /// "Phi+", "Psi+", "Phi-" or "Psi-".
    std::string_view name() const;

   private:
    std::uint8_t bits_ = 0;
};

inline constexpr BellIndex kPhiPlus{0b00};
inline constexpr BellIndex kPsiPlus{0b01};
inline constexpr BellIndex kPhiMinus{0b10};
inline constexpr BellIndex kPsiMinus{0b11};

/// Ordered sequence of Bell labels. Bit layout is pair-major with the phase
/// bit first, so Psi- Phi+ Phi- reads "110010".
class BellString {
   public:
    BellString() = default;
    explicit BellString(std::size_t n, BellIndex fill = kPhiPlus) : pairs_(n, fill) {}
    explicit BellString(std::vector<BellIndex> pairs) : pairs_(std::move(pairs)) {}

    /// Accepts "110010" or comma/space separated pairs "11,00,10".
    static BellString parse(std::string_view text);

    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }
    BellIndex operator[](std::size_t i) const { return pairs_[i]; }
    BellIndex &operator[](std::size_t i) { return pairs_[i]; }
    const std::vector<BellIndex> &pairs() const { return pairs_; }

    /// Bit k of the 2n-bit string (k = 2*pair for phase, 2*pair+1 for amplitude).
    unsigned bit(std::size_t k) const;

    /// Pair 0 in the most significant position; only valid for n <= 16.
    std::uint32_t pack() const;
    static BellString unpack(std::uint32_t code, std::size_t n);

    /// Comma separated pairs, e.g. "11,00,10".
    std::string to_string() const;

    bool operator==(const BellString &) const = default;

   private:
    std::vector<BellIndex> pairs_;
};

std::ostream &operator<<(std::ostream &out, const BellString &x);

/// Subset selector over the 2n bits of a BellString, stored as one two-bit
/// mask per pair (phase-select, amplitude-select).
class SubsetIndex {
   public:
    SubsetIndex() = default;
    explicit SubsetIndex(std::vector<std::uint8_t> masks);

    static SubsetIndex parse(std::string_view text);

    std::size_t size() const { return masks_.size(); }
    std::uint8_t mask(std::size_t pair) const { return masks_[pair]; }
    const std::vector<std::uint8_t> &masks() const { return masks_; }
    bool is_zero() const;
    std::uint32_t pack() const;
    static SubsetIndex unpack(std::uint32_t code, std::size_t n);
    std::string to_string() const;

    bool operator==(const SubsetIndex &) const = default;

   private:
    std::vector<std::uint8_t> masks_;
};

enum class GateKind : std::uint8_t { BXOR, BX, BY, BZ, SX, SY, SZ, SXBX };

std::string_view gate_kind_name(GateKind kind);

struct GateOp {
    GateKind kind = GateKind::BY;
    std::size_t first = 0;   // pair (or BXOR source)
    std::size_t second = 0;  // BXOR target, unused otherwise

    static GateOp bxor(std::size_t source, std::size_t target) { return {GateKind::BXOR, source, target}; }
    static GateOp single(GateKind kind, std::size_t pair) { return {kind, pair, 0}; }

    bool is_bxor() const { return kind == GateKind::BXOR; }
    bool operator==(const GateOp &) const = default;
};

/// Index-level action of a gate. Throws InputError for bad indices.
BellString apply_gate(const GateOp &gate, BellString x);
BellString apply_gates(const std::vector<GateOp> &gates, BellString x);

/// In-place variant used by the simulators.
void apply_gate_inplace(const GateOp &gate, BellString &x);

/// s . x over GF(2).
unsigned subset_parity(const SubsetIndex &s, const BellString &x);

struct ParityNetwork {
    std::vector<GateOp> gates;
    std::size_t destination = 0;
};

/// Gate list collecting s . x into the amplitude bit of the first selected
/// pair. Throws InputError if s is all zero.
ParityNetwork build_parity_network(const SubsetIndex &s);

struct ParityMeasurement {
    unsigned parity = 0;
    BellString residual;  // unmeasured pairs after the network, destination removed
};

ParityMeasurement measure_and_backaction(const SubsetIndex &s, const BellString &x);

/// Same as measure_and_backaction on packed codes (pair 0 most significant).
/// Residual code has n-1 pairs.
struct PackedMeasurement {
    unsigned parity = 0;
    std::uint32_t residual = 0;
};
PackedMeasurement measure_and_backaction_packed(const ParityNetwork &network, std::uint32_t code,
                                                std::size_t n);

/// Bilateral z measurement: both sides read a random but correlated bit, and
/// the pair is Phi-type iff the readings agree.
struct AmplitudeMeasurement {
    unsigned amplitude = 0;
    unsigned alice = 0;
    unsigned bob = 0;
};

AmplitudeMeasurement measure_amplitude(BellIndex b, std::mt19937_64 &rng);

// Gate-list text format: one gate per line, e.g. "BXOR 0 3", "BY 2".
std::string format_gate(const GateOp &gate);
std::string format_gate_list(const std::vector<GateOp> &gates);
GateOp parse_gate(std::string_view line);
std::vector<GateOp> parse_gate_list(std::string_view text);

}  // namespace mixent
