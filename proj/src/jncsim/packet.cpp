#include "jncsim/packet.hpp"

#include <algorithm>

#include "jncsim/errors.hpp"

namespace jncsim {

CodedPacket::CodedPacket(ApIndex source_ap, std::vector<std::uint32_t> seqs)
    : ap_(source_ap), seqs_(std::move(seqs)) {
    if (seqs_.empty()) {
        throw EmptyCombination("coded packet needs at least one constituent");
    }
    std::sort(seqs_.begin(), seqs_.end());
    seqs_.erase(std::unique(seqs_.begin(), seqs_.end()), seqs_.end());
}

CodedPacket CodedPacket::native(PacketId id) { return CodedPacket(id.ap, {id.seq}); }

bool CodedPacket::contains(std::uint32_t seq) const {
    return std::binary_search(seqs_.begin(), seqs_.end(), seq);
}

std::vector<PacketId> CodedPacket::constituents() const {
    std::vector<PacketId> out;
    out.reserve(seqs_.size());
    for (std::uint32_t s : seqs_) out.push_back(PacketId{ap_, s});
    return out;
}

CodedPacket xor_combine(const std::vector<PacketId>& ids) {
    if (ids.empty()) throw EmptyCombination("xor_combine over an empty id set");
    const ApIndex ap = ids.front().ap;
    std::vector<std::uint32_t> seqs;
    seqs.reserve(ids.size());
    for (const PacketId& id : ids) {
        if (id.ap != ap) throw MixedSource("xor_combine over ids from both APs");
        seqs.push_back(id.seq);
    }
    return CodedPacket(ap, std::move(seqs));
}

CodedPacket xor_combine(const CodedPacket& a, const CodedPacket& b) {
    if (a.source_ap() != b.source_ap()) {
        throw MixedSource("xor_combine over packets from different APs");
    }
    std::vector<std::uint32_t> diff;
    std::set_symmetric_difference(a.seqs().begin(), a.seqs().end(), b.seqs().begin(),
                                  b.seqs().end(), std::back_inserter(diff));
    if (diff.empty()) throw EmptyCombination("xor_combine cancelled to the empty set");
    return CodedPacket(a.source_ap(), std::move(diff));
}

JncPacket::JncPacket(CodedPacket layer1, CodedPacket layer2)
    : layer1_(std::move(layer1)), layer2_(std::move(layer2)) {
    if (layer1_.source_ap() != kAp1 || layer2_.source_ap() != kAp2) {
        throw DomainError("JncPacket layers must be (AP1, AP2) in that order");
    }
}

CodedPacket anc_decode(const JncPacket& jp, const CodedPacket& known) {
    if (known == jp.layer1()) return jp.layer2();
    if (known == jp.layer2()) return jp.layer1();
    throw UnknownLayer("known packet matches neither layer of the collision");
}

std::string packet_label(PacketId id, std::uint32_t batch_size) {
    const std::uint32_t global = (id.ap - 1) * batch_size + id.seq;
    return "c" + std::to_string(global);
}

std::string coded_label(const CodedPacket& cp, std::uint32_t batch_size) {
    std::string out;
    for (std::size_t i = 0; i < cp.seqs().size(); ++i) {
        if (i > 0) out += "⊕";
        out += packet_label(PacketId{cp.source_ap(), cp.seqs()[i]}, batch_size);
    }
    return out;
}

std::string jnc_label(const JncPacket& jp, std::uint32_t batch_size) {
    return "(" + coded_label(jp.layer1(), batch_size) + ")⊙(" +
           coded_label(jp.layer2(), batch_size) + ")";
}

}  // namespace jncsim
