// Trial driver and experiment aggregation: runs a full trial (initial phase
// plus retransmission stages) per protocol, sweeps grids with paired seeds,
// and replays forced reception matrices.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jncsim/matrix.hpp"
#include "jncsim/protocols.hpp"
#include "jncsim/topology.hpp"

namespace jncsim {

struct TrialResult {
    std::uint64_t initial_slots = 0;  // 2B for stochastic trials, 0 for replay
    std::uint64_t stage1_slots = 0;   // all retransmissions for ARQ/DNC
    std::uint64_t stage2_slots = 0;   // cooperative stage (jnc only)
    std::uint64_t retransmissions = 0;  // stage1 + stage2
    bool completed = false;

    friend bool operator==(const TrialResult&, const TrialResult&) = default;
};

struct AggregateStats {
    Protocol protocol = Protocol::JncCr;
    NetworkConfig config;
    std::uint64_t trials = 0;
    double mean_retx = 0.0;
    double ci95 = 0.0;  // normal approximation, half-width
    double mean_tx_per_packet = 0.0;  // (initial + retransmissions) / (2B)
    double mean_stage1 = 0.0;
    double mean_stage2 = 0.0;
};

// Runs one complete trial. Deterministic given (cfg, protocol, rng stream).
// Throws BudgetExceeded past `slot_budget` total slots.
TrialResult run_trial(const NetworkConfig& cfg, Protocol protocol, Rng& rng,
                      std::vector<std::string>* trace = nullptr,
                      std::vector<std::vector<CodedPacket>>* audit = nullptr,
                      std::uint64_t slot_budget = kDefaultSlotBudget);

// Convenience: trial `index` with the stream derived from cfg.seed.
TrialResult run_trial_indexed(const NetworkConfig& cfg, Protocol protocol,
                              std::uint64_t index);

// Runs `trials` independent trials per (grid point, protocol); trial t uses
// stream base_seed XOR t, so protocol comparisons are paired. Trials may run
// on several worker threads (capped by max_threads, the JNCSIM_THREADS
// environment variable and hardware concurrency); aggregation is by trial
// index, hence identical regardless of the thread count.
std::vector<AggregateStats> run_experiment(std::span<const NetworkConfig> points,
                                           std::span<const Protocol> protocols,
                                           std::uint64_t trials, std::uint64_t base_seed,
                                           unsigned max_threads = 0);

// Retransmission-only replay of a forced reception matrix over a lossless
// channel. '0' entries seed decoded packets (overheard ones for overlap
// receivers); initial_slots is reported as 0.
TrialResult replay_matrix(const ReceptionMatrix& m, Protocol protocol,
                          std::vector<std::string>* trace = nullptr);

enum class OverheadScheme { Jnc, Xor, DncQ };

// Per-packet coding overhead in bits: Jnc -> 128 + 2N, Xor -> N,
// DncQ -> ceil(B log2 q) with q >= 2.
std::uint64_t overhead_bits(OverheadScheme scheme, std::uint32_t n, std::uint32_t b,
                            std::uint64_t q = 0);

}  // namespace jncsim
