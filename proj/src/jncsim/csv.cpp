#include "jncsim/csv.hpp"

#include <cstdio>
#include <fstream>

#include "jncsim/errors.hpp"

namespace jncsim {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

std::string csv_header() {
    return "protocol,p,N,M,B,seed,trials,mean_retx,ci95,mean_tx_per_packet,"
           "slots_stage1,slots_stage2";
}

std::string csv_row(const AggregateStats& s) {
    std::string row;
    row += protocol_name(s.protocol);
    row += ',';
    row += num(s.config.loss_prob);
    row += ',';
    row += std::to_string(s.config.receivers_per_ap);
    row += ',';
    row += std::to_string(s.config.overlap_per_ap);
    row += ',';
    row += std::to_string(s.config.batch_size);
    row += ',';
    row += std::to_string(s.config.seed);
    row += ',';
    row += std::to_string(s.trials);
    row += ',';
    row += num(s.mean_retx);
    row += ',';
    row += num(s.ci95);
    row += ',';
    row += num(s.mean_tx_per_packet);
    row += ',';
    row += num(s.mean_stage1);
    row += ',';
    row += num(s.mean_stage2);
    return row;
}

std::string to_csv(std::span<const AggregateStats> rows) {
    std::string out = csv_header() + "\n";
    for (const AggregateStats& s : rows) out += csv_row(s) + "\n";
    return out;
}

void write_csv(const std::string& path, std::span<const AggregateStats> rows) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open for writing: " + path);
    f << to_csv(rows);
}

}  // namespace jncsim
