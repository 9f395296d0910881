#include "jncsim/topology.hpp"

#include <cmath>
#include <string>

#include "jncsim/errors.hpp"

namespace jncsim {

void NetworkConfig::validate() const {
    if (receivers_per_ap < 1) throw ConfigError("N must be >= 1");
    if (overlap_per_ap < 1 || overlap_per_ap > receivers_per_ap) {
        throw ConfigError("M must satisfy 1 <= M <= N (got M=" +
                          std::to_string(overlap_per_ap) + ", N=" +
                          std::to_string(receivers_per_ap) + ")");
    }
    if (std::isnan(loss_prob) || loss_prob < 0.0 || loss_prob > 1.0) {
        throw ConfigError("p must lie in [0, 1]");
    }
    if (batch_size < 1) throw ConfigError("B must be >= 1");
}

std::vector<ReceiverProfile> build_topology(const NetworkConfig& cfg) {
    cfg.validate();
    std::vector<ReceiverProfile> out;
    out.reserve(2 * cfg.receivers_per_ap);
    for (ApIndex ap : {kAp1, kAp2}) {
        for (std::uint32_t local = 1; local <= cfg.receivers_per_ap; ++local) {
            const std::uint32_t id = (ap - 1) * cfg.receivers_per_ap + local;
            out.push_back(ReceiverProfile{id, ap, local <= cfg.overlap_per_ap});
        }
    }
    return out;
}

Topology::Topology(const NetworkConfig& cfg) : cfg_(cfg), receivers_(build_topology(cfg)) {}

std::vector<std::uint32_t> Topology::home_ids(ApIndex ap) const {
    std::vector<std::uint32_t> out;
    for (const ReceiverProfile& r : receivers_) {
        if (r.home_ap == ap) out.push_back(r.id);
    }
    return out;
}

std::vector<std::uint32_t> Topology::overlap_home_ids(ApIndex ap) const {
    std::vector<std::uint32_t> out;
    for (const ReceiverProfile& r : receivers_) {
        if (r.home_ap == ap && r.in_overlap) out.push_back(r.id);
    }
    return out;
}

std::vector<std::uint32_t> Topology::overlap_ids() const {
    std::vector<std::uint32_t> out;
    for (const ReceiverProfile& r : receivers_) {
        if (r.in_overlap) out.push_back(r.id);
    }
    return out;
}

}  // namespace jncsim
