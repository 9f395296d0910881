// Bernoulli erasure channel. Clean packets arrive with probability (1-p);
// a collided packet needs both components, so overlap receivers see it with
// probability (1-p)^2. Draws are independent across receivers and slots.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "jncsim/rng.hpp"
#include "jncsim/topology.hpp"

namespace jncsim {

class Channel {
public:
    explicit Channel(double loss_prob);

    double loss_prob() const { return p_; }
    double clean_prob() const { return 1.0 - p_; }
    double collided_prob() const { return (1.0 - p_) * (1.0 - p_); }

    bool draw_clean(Rng& rng) const { return rng.bernoulli(clean_prob()); }
    bool draw_collided(Rng& rng) const { return rng.bernoulli(collided_prob()); }

private:
    double p_;
};

// Per-target independent clean deliveries from tx_ap. Every target must be
// within tx_ap's range (DomainError otherwise).
std::vector<std::uint8_t> deliver_clean(const Topology& topo, ApIndex tx_ap,
                                        std::span<const std::uint32_t> targets,
                                        const Channel& chan, Rng& rng);

// Per-target independent collided deliveries; targets must be overlap
// receivers (DomainError otherwise).
std::vector<std::uint8_t> deliver_collided(const Topology& topo,
                                           std::span<const std::uint32_t> targets,
                                           const Channel& chan, Rng& rng);

}  // namespace jncsim
