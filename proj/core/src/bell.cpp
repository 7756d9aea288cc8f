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

#include "mixent/bell.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>
#include <utility>

#include "mixent/error.hpp"

namespace mixent {

namespace {

// Collects the 0/1 characters of text, ignoring separators.
std::vector<std::uint8_t> parse_bits(std::string_view text) {
    std::vector<std::uint8_t> bits;
    for (char c : text) {
        if (c == '0' || c == '1') {
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        } else if (c == ',' || c == ' ' || c == '\t' || c == '_') {
            continue;
        } else {
            throw InputError(std::string("unexpected character in bit string: '") + c + "'");
        }
    }
    if (bits.size() % 2 != 0) {
        throw InputError("bit string must have an even number of bits");
    }
    return bits;
}

void check_pair(std::size_t pair, std::size_t n) {
    if (pair >= n) {
        throw InputError("pair index " + std::to_string(pair) + " out of range for " + std::to_string(n) +
                         " pairs");
    }
}

}  // namespace

std::string_view BellIndex::name() const {
    static constexpr std::array<std::string_view, 4> names{"Phi+", "Psi+", "Phi-", "Psi-"};
    return names[bits_];
}

BellString BellString::parse(std::string_view text) {
    auto bits = parse_bits(text);
    std::vector<BellIndex> pairs;
    pairs.reserve(bits.size() / 2);
    for (std::size_t i = 0; i < bits.size(); i += 2) {
        pairs.emplace_back(bits[i], bits[i + 1]);
    }
    return BellString(std::move(pairs));
}

unsigned BellString::bit(std::size_t k) const {
    const BellIndex b = pairs_.at(k / 2);
    return (k % 2 == 0) ? b.phase() : b.amplitude();
}

std::uint32_t BellString::pack() const {
    detail::require(pairs_.size() <= 16, "pack supports at most 16 pairs");
    std::uint32_t code = 0;
    for (BellIndex b : pairs_) {
        code = (code << 2) | b.bits();
    }
    return code;
}

BellString BellString::unpack(std::uint32_t code, std::size_t n) {
    std::vector<BellIndex> pairs(n);
    for (std::size_t i = 0; i < n; ++i) {
        pairs[n - 1 - i] = BellIndex(static_cast<std::uint8_t>(code & 3u));
        code >>= 2;
    }
    return BellString(std::move(pairs));
}

std::string BellString::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (i > 0) out += ',';
        out += static_cast<char>('0' + pairs_[i].phase());
        out += static_cast<char>('0' + pairs_[i].amplitude());
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const BellString &x) { return out << x.to_string(); }

SubsetIndex::SubsetIndex(std::vector<std::uint8_t> masks) : masks_(std::move(masks)) {
    for (auto &m : masks_) {
        detail::require(m < 4, "subset mask entries are two-bit values");
    }
}

SubsetIndex SubsetIndex::parse(std::string_view text) {
    auto bits = parse_bits(text);
    std::vector<std::uint8_t> masks;
    for (std::size_t i = 0; i < bits.size(); i += 2) {
        masks.push_back(static_cast<std::uint8_t>((bits[i] << 1) | bits[i + 1]));
    }
    return SubsetIndex(std::move(masks));
}

bool SubsetIndex::is_zero() const {
    for (auto m : masks_) {
        if (m != 0) return false;
    }
    return true;
}

std::uint32_t SubsetIndex::pack() const {
    std::uint32_t code = 0;
    for (auto m : masks_) code = (code << 2) | m;
    return code;
}

SubsetIndex SubsetIndex::unpack(std::uint32_t code, std::size_t n) {
    std::vector<std::uint8_t> masks(n);
    for (std::size_t i = 0; i < n; ++i) {
        masks[n - 1 - i] = static_cast<std::uint8_t>(code & 3u);
        code >>= 2;
    }
    return SubsetIndex(std::move(masks));
}

std::string SubsetIndex::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < masks_.size(); ++i) {
        if (i > 0) out += ',';
        out += static_cast<char>('0' + ((masks_[i] >> 1) & 1));
        out += static_cast<char>('0' + (masks_[i] & 1));
    }
    return out;
}

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::BXOR: return "BXOR";
        case GateKind::BX: return "BX";
        case GateKind::BY: return "BY";
        case GateKind::BZ: return "BZ";
        case GateKind::SX: return "SX";
        case GateKind::SY: return "SY";
        case GateKind::SZ: return "SZ";
        case GateKind::SXBX: return "SXBX";
    }
    return "?";
}

void apply_gate_inplace(const GateOp &gate, BellString &x) {
    const std::size_t n = x.size();
    check_pair(gate.first, n);
    BellIndex &p = x[gate.first];
    const unsigned ph = p.phase();
    const unsigned am = p.amplitude();
    switch (gate.kind) {
        case GateKind::BXOR: {
            check_pair(gate.second, n);
            if (gate.first == gate.second) {
                throw InputError("BXOR source and target must differ");
            }
            BellIndex &t = x[gate.second];
            const unsigned tph = t.phase();
            const unsigned tam = t.amplitude();
            p = BellIndex(ph ^ tph, am);
            t = BellIndex(tph, tam ^ am);
            break;
        }
        case GateKind::BX: p = BellIndex(ph, am ^ (ph ^ 1u)); break;
        case GateKind::BY: p = BellIndex(am, ph); break;
        case GateKind::BZ: p = BellIndex(ph ^ (am ^ 1u), am); break;
        case GateKind::SX: p = BellIndex(ph, am ^ 1u); break;
        case GateKind::SY: p = BellIndex(ph ^ 1u, am ^ 1u); break;
        case GateKind::SZ: p = BellIndex(ph ^ 1u, am); break;
        case GateKind::SXBX: p = BellIndex(ph, am ^ ph); break;
    }
}

BellString apply_gate(const GateOp &gate, BellString x) {
    apply_gate_inplace(gate, x);
    return x;
}

BellString apply_gates(const std::vector<GateOp> &gates, BellString x) {
    for (const auto &g : gates) apply_gate_inplace(g, x);
    return x;
}

unsigned subset_parity(const SubsetIndex &s, const BellString &x) {
    if (s.size() != x.size()) {
        throw InputError("subset index and Bell string lengths differ");
    }
    unsigned parity = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        parity ^= static_cast<unsigned>(__builtin_popcount(s.mask(i) & x[i].bits()) & 1);
    }
    return parity;
}

ParityNetwork build_parity_network(const SubsetIndex &s) {
    ParityNetwork net;
    bool found = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.mask(i) != 0) {
            net.destination = i;
            found = true;
            break;
        }
    }
    if (!found) {
        throw InputError("subset index selects no bits; there is no destination pair");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        switch (s.mask(i)) {
            case 0b10: net.gates.push_back(GateOp::single(GateKind::BY, i)); break;
            case 0b11: net.gates.push_back(GateOp::single(GateKind::SXBX, i)); break;
            default: break;
        }
    }
    for (std::size_t i = net.destination + 1; i < s.size(); ++i) {
        if (s.mask(i) != 0) {
            net.gates.push_back(GateOp::bxor(i, net.destination));
        }
    }
    return net;
}

ParityMeasurement measure_and_backaction(const SubsetIndex &s, const BellString &x) {
    if (s.size() != x.size()) {
        throw InputError("subset index and Bell string lengths differ");
    }
    const ParityNetwork net = build_parity_network(s);
    const BellString after = apply_gates(net.gates, x);
    ParityMeasurement out;
    out.parity = after[net.destination].amplitude();
    std::vector<BellIndex> rest;
    rest.reserve(x.size() - 1);
    for (std::size_t i = 0; i < after.size(); ++i) {
        if (i != net.destination) rest.push_back(after[i]);
    }
    out.residual = BellString(std::move(rest));
    return out;
}

PackedMeasurement measure_and_backaction_packed(const ParityNetwork &network, std::uint32_t code,
                                                std::size_t n) {
    auto shift = [n](std::size_t pair) { return static_cast<unsigned>(2 * (n - 1 - pair)); };
    for (const auto &g : network.gates) {
        const unsigned sh = shift(g.first);
        const std::uint32_t pair = (code >> sh) & 3u;
        switch (g.kind) {
            case GateKind::BY: {
                const std::uint32_t swapped = ((pair & 1u) << 1) | (pair >> 1);
                code = (code & ~(3u << sh)) | (swapped << sh);
                break;
            }
            case GateKind::SXBX: code ^= ((pair >> 1) & 1u) << sh; break;
            case GateKind::BXOR: {
                const unsigned tsh = shift(g.second);
                const std::uint32_t target = (code >> tsh) & 3u;
                code ^= (target & 2u) << sh;         // source phase ^= target phase
                code ^= (pair & 1u) << tsh;          // target amplitude ^= source amplitude
                break;
            }
            default: throw InputError("packed network only supports BY, SXBX and BXOR");
        }
    }
    const unsigned dsh = shift(network.destination);
    PackedMeasurement out;
    out.parity = (code >> dsh) & 1u;
    const std::uint32_t low = code & ((1u << dsh) - 1u);
    const std::uint32_t high = (dsh + 2 >= 32) ? 0u : (code >> (dsh + 2));
    out.residual = (high << dsh) | low;
    return out;
}

AmplitudeMeasurement measure_amplitude(BellIndex b, std::mt19937_64 &rng) {
    AmplitudeMeasurement m;
    m.amplitude = b.amplitude();
    m.alice = static_cast<unsigned>(rng() & 1u);
    m.bob = m.alice ^ m.amplitude;
    return m;
}

std::string format_gate(const GateOp &gate) {
    std::string out(gate_kind_name(gate.kind));
    out += ' ';
    out += std::to_string(gate.first);
    if (gate.kind == GateKind::BXOR) {
        out += ' ';
        out += std::to_string(gate.second);
    }
    return out;
}

std::string format_gate_list(const std::vector<GateOp> &gates) {
    std::string out;
    for (const auto &g : gates) {
        out += format_gate(g);
        out += '\n';
    }
    return out;
}

GateOp parse_gate(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::string name;
    in >> name;
    static constexpr std::array kinds{GateKind::BXOR, GateKind::BX, GateKind::BY, GateKind::BZ,
                                      GateKind::SX,   GateKind::SY, GateKind::SZ, GateKind::SXBX};
    for (GateKind k : kinds) {
        if (name == gate_kind_name(k)) {
            GateOp g;
            g.kind = k;
            long long a = -1;
            long long b = -1;
            if (!(in >> a) || a < 0) throw InputError("bad pair index in gate line: " + std::string(line));
            g.first = static_cast<std::size_t>(a);
            if (k == GateKind::BXOR) {
                if (!(in >> b) || b < 0) throw InputError("BXOR needs a target index: " + std::string(line));
                g.second = static_cast<std::size_t>(b);
                if (g.first == g.second) throw InputError("BXOR source and target must differ");
            }
            std::string extra;
            if (in >> extra) throw InputError("trailing tokens in gate line: " + std::string(line));
            return g;
        }
    }
    throw InputError("unknown gate: " + name);
}

std::vector<GateOp> parse_gate_list(std::string_view text) {
    std::vector<GateOp> gates;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        bool blank = true;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        }
        if (!blank && line.front() != '#') gates.push_back(parse_gate(line));
        start = end + 1;
    }
    return gates;
}

}  // namespace mixent
