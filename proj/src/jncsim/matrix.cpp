#include "jncsim/matrix.hpp"

#include <fstream>
#include <sstream>

#include "jncsim/errors.hpp"

namespace jncsim {

ReceptionMatrix parse_matrix(std::istream& in) {
    ReceptionMatrix m;
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty matrix file");
    {
        std::istringstream head(line);
        long long n = 0, mm = 0, b = 0;
        if (!(head >> n >> mm >> b) || n < 1 || mm < 1 || b < 1) {
            throw ParseError("header must be 'N M B' with positive values");
        }
        std::string extra;
        if (head >> extra) throw ParseError("unexpected token after header: " + extra);
        m.n = static_cast<std::uint32_t>(n);
        m.m = static_cast<std::uint32_t>(mm);
        m.b = static_cast<std::uint32_t>(b);
    }
    NetworkConfig cfg = m.config();
    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        throw ParseError(std::string("invalid header: ") + e.what());
    }
    const Topology topo(cfg);
    const std::uint32_t rows = 2 * m.n;
    const std::uint32_t cols = 2 * m.b;
    m.entries.assign(rows, {});
    std::vector<bool> seen(rows, false);
    std::uint32_t parsed = 0;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string tok;
        if (!(row >> tok)) continue;  // blank line
        if (tok.front() == 'R' || tok.front() == 'r') tok.erase(0, 1);
        std::uint32_t id = 0;
        try {
            id = static_cast<std::uint32_t>(std::stoul(tok));
        } catch (...) {
            throw ParseError("bad receiver id: " + tok);
        }
        if (id < 1 || id > rows) throw ParseError("receiver id out of range: " + tok);
        if (seen[id - 1]) throw ParseError("duplicate row for receiver " + tok);
        seen[id - 1] = true;
        ++parsed;
        std::vector<std::uint8_t>& entries = m.entries[id - 1];
        std::string sym;
        while (row >> sym) {
            if (sym == "0") {
                entries.push_back(ReceptionMatrix::kReceived);
            } else if (sym == "1") {
                entries.push_back(ReceptionMatrix::kLost);
            } else if (sym == "-") {
                entries.push_back(ReceptionMatrix::kOutOfRange);
            } else {
                throw ParseError("bad symbol '" + sym + "' in row " + tok);
            }
        }
        if (entries.size() != cols) {
            throw ParseError("row " + tok + " has " + std::to_string(entries.size()) +
                             " symbols, expected " + std::to_string(cols));
        }
        for (std::uint32_t col = 0; col < cols; ++col) {
            const ApIndex ap = col < m.b ? kAp1 : kAp2;
            const bool in_range = topo.in_range(id, ap);
            const bool marked_out = entries[col] == ReceptionMatrix::kOutOfRange;
            if (in_range == marked_out) {
                throw ParseError("row " + tok + ", column " + std::to_string(col + 1) +
                                 ": '-' must appear exactly outside transmission range");
            }
        }
    }
    if (parsed != rows) {
        throw ParseError("expected " + std::to_string(rows) + " receiver rows, got " +
                         std::to_string(parsed));
    }
    return m;
}

ReceptionMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    return parse_matrix(in);
}

std::vector<KnowledgeState> seed_knowledge(const ReceptionMatrix& m, const Topology& topo) {
    std::vector<KnowledgeState> know(topo.receiver_count());
    for (std::uint32_t id = 1; id <= topo.receiver_count(); ++id) {
        for (std::uint32_t col = 0; col < 2 * m.b; ++col) {
            if (m.entries[id - 1][col] != ReceptionMatrix::kReceived) continue;
            const ApIndex ap = col < m.b ? kAp1 : kAp2;
            const std::uint32_t seq = (col % m.b) + 1;
            know[id - 1].add_decoded(PacketId{ap, seq});
        }
    }
    return know;
}

}  // namespace jncsim
