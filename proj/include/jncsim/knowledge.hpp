// Receiver-side knowledge: decoded natives plus buffered, not-yet-reducible
// coded packets, with an iterative peeling decoder.
#pragma once

#include <cstdint>
#include <vector>

#include "jncsim/packet.hpp"

namespace jncsim {

// Invariants kept by every operation:
//  - decoded only grows;
//  - the buffer never holds a packet whose constituents are all decoded,
//    and never holds duplicates.
class KnowledgeState {
public:
    bool has(PacketId id) const;
    std::size_t decoded_count(ApIndex ap) const { return decoded_[ap - 1].size(); }
    const std::vector<std::uint32_t>& decoded(ApIndex ap) const { return decoded_[ap - 1]; }
    const std::vector<CodedPacket>& buffer() const { return buffer_; }

    // Number of cp's constituents outside the decoded set.
    std::size_t unknown_count(const CodedPacket& cp) const;

    // True iff the receiver can regenerate cp bit-exactly, i.e. every
    // constituent is decoded.
    bool can_reconstruct(const CodedPacket& cp) const;

    // True iff cp lies outside the GF(2) span of the decoded natives and
    // the buffered packets.
    bool is_innovative(const CodedPacket& cp) const;

    // Absorbs cp (buffering it when not immediately reducible) and peels to
    // fixpoint: any buffered packet with exactly one unknown constituent
    // yields that constituent. Returns the natives decoded by this call,
    // sorted. Redundant packets vanish silently.
    std::vector<PacketId> absorb_and_peel(const CodedPacket& cp);

    // Directly marks a native as decoded (matrix seeding).
    void add_decoded(PacketId id);

    bool complete(ApIndex home_ap, std::uint32_t batch_size) const {
        return decoded_count(home_ap) >= batch_size;
    }
    std::vector<std::uint32_t> missing_seqs(ApIndex ap, std::uint32_t batch_size) const;

    friend bool operator==(const KnowledgeState&, const KnowledgeState&) = default;

private:
    std::vector<std::uint32_t> decoded_[2];  // sorted seqs per AP
    std::vector<CodedPacket> buffer_;

    void normalize_buffer();
};

}  // namespace jncsim
