#include "jncsim/gf2.hpp"

#include <algorithm>
#include <bit>

namespace jncsim {
namespace gf2 {

std::size_t bit_index(PacketId id) {
    return static_cast<std::size_t>(id.seq) * 2 + (id.ap - 1);
}

PacketId id_from_bit(std::size_t bit) {
    return PacketId{static_cast<ApIndex>(bit % 2 + 1), static_cast<std::uint32_t>(bit / 2)};
}

void set_bit(Vec& v, std::size_t bit) {
    const std::size_t word = bit / 64;
    if (v.size() <= word) v.resize(word + 1, 0);
    v[word] |= std::uint64_t{1} << (bit % 64);
}

bool test_bit(const Vec& v, std::size_t bit) {
    const std::size_t word = bit / 64;
    if (v.size() <= word) return false;
    return (v[word] >> (bit % 64)) & 1;
}

Vec to_vec(const CodedPacket& cp) {
    Vec v;
    for (std::uint32_t s : cp.seqs()) set_bit(v, bit_index(PacketId{cp.source_ap(), s}));
    return v;
}

Vec unit_vec(PacketId id) {
    Vec v;
    set_bit(v, bit_index(id));
    return v;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint64_t w) { return w == 0; });
}

void xor_into(Vec& dst, const Vec& src) {
    if (dst.size() < src.size()) dst.resize(src.size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] ^= src[i];
}

int leading_bit(const Vec& v) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] != 0) {
            return static_cast<int>(i * 64 + 63 - std::countl_zero(v[i]));
        }
    }
    return -1;
}

std::size_t popcount(const Vec& v) {
    std::size_t n = 0;
    for (std::uint64_t w : v) n += std::popcount(w);
    return n;
}

void Basis::reduce(Vec& v) const {
    for (const Vec& row : rows_) {
        const int lead = leading_bit(v);
        if (lead < 0) return;
        const int row_lead = leading_bit(row);
        if (row_lead > lead) continue;
        if (row_lead == lead) xor_into(v, row);
    }
}

bool Basis::insert(Vec v) {
    reduce(v);
    const int lead = leading_bit(v);
    if (lead < 0) return false;
    auto pos = std::find_if(rows_.begin(), rows_.end(),
                            [lead](const Vec& r) { return leading_bit(r) < lead; });
    rows_.insert(pos, std::move(v));
    return true;
}

bool Basis::contains(Vec v) const {
    reduce(v);
    return leading_bit(v) < 0;
}

}  // namespace gf2

std::vector<PacketId> gf2_decodable_set(const std::vector<CodedPacket>& received) {
    using gf2::Vec;
    // Forward elimination into echelon form.
    std::vector<Vec> rows;
    for (const CodedPacket& cp : received) {
        Vec v = gf2::to_vec(cp);
        for (const Vec& row : rows) {
            if (gf2::leading_bit(v) == gf2::leading_bit(row)) gf2::xor_into(v, row);
        }
        if (!gf2::is_zero(v)) {
            rows.push_back(std::move(v));
            std::sort(rows.begin(), rows.end(), [](const Vec& a, const Vec& b) {
                return gf2::leading_bit(a) > gf2::leading_bit(b);
            });
        }
    }
    // Back-substitution: clear every pivot bit from the rows above it.
    for (std::size_t i = rows.size(); i-- > 0;) {
        const int pivot = gf2::leading_bit(rows[i]);
        for (std::size_t j = 0; j < i; ++j) {
            if (gf2::test_bit(rows[j], static_cast<std::size_t>(pivot))) {
                gf2::xor_into(rows[j], rows[i]);
            }
        }
    }
    // In reduced form a unit vector is in the span iff it appears as a row.
    std::vector<PacketId> out;
    for (const Vec& row : rows) {
        if (gf2::popcount(row) == 1) {
            out.push_back(gf2::id_from_bit(static_cast<std::size_t>(gf2::leading_bit(row))));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace jncsim
