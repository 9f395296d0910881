// GF(2) span machinery: innovation checks and the Gaussian-elimination
// decoding oracle the peeling decoder is validated against.
#pragma once

#include <cstdint>
#include <vector>

#include "jncsim/packet.hpp"

namespace jncsim {
namespace gf2 {

// Bit vector over packet coordinates. PacketId (ap, seq) maps to bit
// 2*seq + (ap-1), so vectors from both batches share one space without
// knowing the batch size.
using Vec = std::vector<std::uint64_t>;

std::size_t bit_index(PacketId id);
PacketId id_from_bit(std::size_t bit);

Vec to_vec(const CodedPacket& cp);
Vec unit_vec(PacketId id);

bool is_zero(const Vec& v);
void set_bit(Vec& v, std::size_t bit);
bool test_bit(const Vec& v, std::size_t bit);
void xor_into(Vec& dst, const Vec& src);
// Highest set bit, or -1 for the zero vector.
int leading_bit(const Vec& v);
std::size_t popcount(const Vec& v);

// Incremental row-echelon basis keyed by leading bit.
class Basis {
public:
    // Reduces v against the basis; stores the residual if nonzero.
    // Returns true when v was independent (rank grew).
    bool insert(Vec v);
    // Span membership.
    bool contains(Vec v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    // Rows sorted by descending leading bit, all leading bits distinct.
    std::vector<Vec> rows_;
    void reduce(Vec& v) const;
};

}  // namespace gf2

// Full GF(2) elimination over everything received: returns exactly the
// native packets whose unit vectors lie in the span, sorted by (ap, seq).
std::vector<PacketId> gf2_decodable_set(const std::vector<CodedPacket>& received);

}  // namespace jncsim
