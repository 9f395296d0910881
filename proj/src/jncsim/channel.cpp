#include "jncsim/channel.hpp"

#include <cmath>
#include <string>

#include "jncsim/errors.hpp"

namespace jncsim {

Channel::Channel(double loss_prob) : p_(loss_prob) {
    if (std::isnan(p_) || p_ < 0.0 || p_ > 1.0) throw ConfigError("p must lie in [0, 1]");
}

std::vector<std::uint8_t> deliver_clean(const Topology& topo, ApIndex tx_ap,
                                        std::span<const std::uint32_t> targets,
                                        const Channel& chan, Rng& rng) {
    std::vector<std::uint8_t> out;
    out.reserve(targets.size());
    for (std::uint32_t id : targets) {
        if (!topo.in_range(id, tx_ap)) {
            throw DomainError("receiver " + std::to_string(id) + " is out of AP" +
                              std::to_string(tx_ap) + "'s range");
        }
        out.push_back(chan.draw_clean(rng) ? 1 : 0);
    }
    return out;
}

std::vector<std::uint8_t> deliver_collided(const Topology& topo,
                                           std::span<const std::uint32_t> targets,
                                           const Channel& chan, Rng& rng) {
    std::vector<std::uint8_t> out;
    out.reserve(targets.size());
    for (std::uint32_t id : targets) {
        if (!topo.receiver(id).in_overlap) {
            throw DomainError("receiver " + std::to_string(id) +
                              " is outside the interference region");
        }
        out.push_back(chan.draw_collided(rng) ? 1 : 0);
    }
    return out;
}

}  // namespace jncsim
