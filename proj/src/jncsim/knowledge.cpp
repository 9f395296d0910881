#include "jncsim/knowledge.hpp"

#include <algorithm>

#include "jncsim/gf2.hpp"

namespace jncsim {

bool KnowledgeState::has(PacketId id) const {
    const auto& d = decoded_[id.ap - 1];
    return std::binary_search(d.begin(), d.end(), id.seq);
}

std::size_t KnowledgeState::unknown_count(const CodedPacket& cp) const {
    std::size_t n = 0;
    for (std::uint32_t s : cp.seqs()) {
        if (!has(PacketId{cp.source_ap(), s})) ++n;
    }
    return n;
}

bool KnowledgeState::can_reconstruct(const CodedPacket& cp) const {
    return unknown_count(cp) == 0;
}

bool KnowledgeState::is_innovative(const CodedPacket& cp) const {
    // Quotient out the decoded coordinates: cp is in the span of
    // (decoded units ∪ buffer) iff its undecoded residual is in the span
    // of the buffered packets' residuals.
    gf2::Vec target;
    for (std::uint32_t s : cp.seqs()) {
        const PacketId id{cp.source_ap(), s};
        if (!has(id)) gf2::set_bit(target, gf2::bit_index(id));
    }
    if (gf2::is_zero(target)) return false;
    gf2::Basis basis;
    for (const CodedPacket& b : buffer_) {
        gf2::Vec res;
        for (std::uint32_t s : b.seqs()) {
            const PacketId id{b.source_ap(), s};
            if (!has(id)) gf2::set_bit(res, gf2::bit_index(id));
        }
        basis.insert(std::move(res));
    }
    return !basis.contains(std::move(target));
}

void KnowledgeState::add_decoded(PacketId id) {
    auto& d = decoded_[id.ap - 1];
    auto pos = std::lower_bound(d.begin(), d.end(), id.seq);
    if (pos == d.end() || *pos != id.seq) d.insert(pos, id.seq);
}

void KnowledgeState::normalize_buffer() {
    std::erase_if(buffer_, [this](const CodedPacket& b) { return unknown_count(b) == 0; });
}

std::vector<PacketId> KnowledgeState::absorb_and_peel(const CodedPacket& cp) {
    std::vector<PacketId> newly;
    if (unknown_count(cp) > 0 &&
        std::find(buffer_.begin(), buffer_.end(), cp) == buffer_.end()) {
        buffer_.push_back(cp);
    }
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (const CodedPacket& b : buffer_) {
            if (unknown_count(b) != 1) continue;
            for (std::uint32_t s : b.seqs()) {
                const PacketId id{b.source_ap(), s};
                if (!has(id)) {
                    add_decoded(id);
                    newly.push_back(id);
                    break;
                }
            }
            progressed = true;
        }
        normalize_buffer();
    }
    std::sort(newly.begin(), newly.end());
    return newly;
}

std::vector<std::uint32_t> KnowledgeState::missing_seqs(ApIndex ap,
                                                        std::uint32_t batch_size) const {
    std::vector<std::uint32_t> out;
    const auto& d = decoded_[ap - 1];
    auto it = d.begin();
    for (std::uint32_t s = 1; s <= batch_size; ++s) {
        while (it != d.end() && *it < s) ++it;
        if (it == d.end() || *it != s) out.push_back(s);
    }
    return out;
}

}  // namespace jncsim
