// Packet value types: native packet ids, XOR combinations and two-layer
// collided packets, plus the ANC decode primitive.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace jncsim {

using ApIndex = std::uint8_t;

inline constexpr ApIndex kAp1 = 1;
inline constexpr ApIndex kAp2 = 2;

inline constexpr ApIndex other_ap(ApIndex ap) { return ap == kAp1 ? kAp2 : kAp1; }

// Identity of one native packet: owning AP and 1-based index in that AP's batch.
struct PacketId {
    ApIndex ap = kAp1;
    std::uint32_t seq = 1;

    auto operator<=>(const PacketId&) const = default;
};

// XOR combination of native packets from a single AP, tracked by its
// constituent set (symmetric-difference algebra). A native packet is the
// singleton case. The set is kept sorted and duplicate-free.
class CodedPacket {
public:
    CodedPacket(ApIndex source_ap, std::vector<std::uint32_t> seqs);

    static CodedPacket native(PacketId id);

    ApIndex source_ap() const { return ap_; }
    const std::vector<std::uint32_t>& seqs() const { return seqs_; }
    std::size_t cardinality() const { return seqs_.size(); }
    bool contains(std::uint32_t seq) const;
    std::vector<PacketId> constituents() const;

    friend bool operator==(const CodedPacket&, const CodedPacket&) = default;
    friend auto operator<=>(const CodedPacket&, const CodedPacket&) = default;

private:
    ApIndex ap_;
    std::vector<std::uint32_t> seqs_;
};

// Builds the XOR combination of a set of same-AP native packets.
// Throws EmptyCombination / MixedSource.
CodedPacket xor_combine(const std::vector<PacketId>& ids);

// Symmetric difference of two same-AP combinations. Throws MixedSource on
// differing source APs and EmptyCombination when everything cancels.
CodedPacket xor_combine(const CodedPacket& a, const CodedPacket& b);

// Collision of exactly two coded packets, one per AP; AP1's layer first.
class JncPacket {
public:
    JncPacket(CodedPacket layer1, CodedPacket layer2);

    const CodedPacket& layer1() const { return layer1_; }
    const CodedPacket& layer2() const { return layer2_; }
    const CodedPacket& layer(ApIndex ap) const { return ap == kAp1 ? layer1_ : layer2_; }

    friend bool operator==(const JncPacket&, const JncPacket&) = default;

private:
    CodedPacket layer1_;
    CodedPacket layer2_;
};

// Strips a fully-known layer from a collision and returns the other layer.
// `known` must equal one of the two layers exactly; throws UnknownLayer.
CodedPacket anc_decode(const JncPacket& jp, const CodedPacket& known);

// Display names use the two-batch numbering: AP1's packets are c1..cB and
// AP2's are c(B+1)..c(2B).
std::string packet_label(PacketId id, std::uint32_t batch_size);
std::string coded_label(const CodedPacket& cp, std::uint32_t batch_size);
std::string jnc_label(const JncPacket& jp, std::uint32_t batch_size);

}  // namespace jncsim
