// Reception-matrix replay format: first line "N M B", then one line per
// receiver with its id followed by 2B symbols from {0,1,-} — AP1's batch
// first, then AP2's. '0' received, '1' lost, '-' out of range.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "jncsim/knowledge.hpp"
#include "jncsim/topology.hpp"

namespace jncsim {

struct ReceptionMatrix {
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    std::uint32_t b = 0;
    // entries[id-1][col], col = (ap-1)*B + (seq-1).
    enum : std::uint8_t { kReceived = 0, kLost = 1, kOutOfRange = 2 };
    std::vector<std::vector<std::uint8_t>> entries;

    NetworkConfig config() const {
        return NetworkConfig{n, m, 0.0, b, 0};
    }
};

// Throws ParseError on malformed input, bad dimensions, or '-' placement
// inconsistent with the overlap layout.
ReceptionMatrix parse_matrix(std::istream& in);
ReceptionMatrix load_matrix(const std::string& path);

// Builds per-receiver knowledge from the matrix ('0' on interferer columns
// of an overlap receiver counts as overheard).
std::vector<KnowledgeState> seed_knowledge(const ReceptionMatrix& m, const Topology& topo);

}  // namespace jncsim
