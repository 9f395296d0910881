// Network configuration and receiver placement. Geometry reduces to overlap
// membership: each AP's M lowest-indexed receivers sit in the interference
// region and hear both APs.
#pragma once

#include <cstdint>
#include <vector>

#include "jncsim/packet.hpp"

namespace jncsim {

struct NetworkConfig {
    std::uint32_t receivers_per_ap = 1;  // N
    std::uint32_t overlap_per_ap = 1;    // M, 1 <= M <= N
    double loss_prob = 0.0;              // p
    std::uint32_t batch_size = 1;        // B
    std::uint64_t seed = 0;

    // Throws ConfigError when any invariant fails.
    void validate() const;
};

struct ReceiverProfile {
    std::uint32_t id = 1;  // 1..2N; ids 1..N belong to AP1
    ApIndex home_ap = kAp1;
    bool in_overlap = false;

    friend bool operator==(const ReceiverProfile&, const ReceiverProfile&) = default;
};

// Deterministic layout: per AP, the M lowest local indices are in overlap.
std::vector<ReceiverProfile> build_topology(const NetworkConfig& cfg);

// Immutable lookup wrapper around the receiver list.
class Topology {
public:
    explicit Topology(const NetworkConfig& cfg);

    const NetworkConfig& config() const { return cfg_; }
    const std::vector<ReceiverProfile>& receivers() const { return receivers_; }
    std::uint32_t receiver_count() const { return static_cast<std::uint32_t>(receivers_.size()); }
    const ReceiverProfile& receiver(std::uint32_t id) const { return receivers_[id - 1]; }

    // In range of tx_ap: its home receivers plus the interferer's overlap receivers.
    bool in_range(std::uint32_t id, ApIndex tx_ap) const {
        const ReceiverProfile& r = receiver(id);
        return r.home_ap == tx_ap || r.in_overlap;
    }

    std::vector<std::uint32_t> home_ids(ApIndex ap) const;
    std::vector<std::uint32_t> overlap_home_ids(ApIndex ap) const;
    std::vector<std::uint32_t> overlap_ids() const;  // all 2M, ascending

private:
    NetworkConfig cfg_;
    std::vector<ReceiverProfile> receivers_;
};

}  // namespace jncsim
