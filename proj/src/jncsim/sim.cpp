#include "jncsim/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "jncsim/errors.hpp"

namespace jncsim {

namespace {

// q = infinity baseline: both APs retransmit always-innovative coded
// packets in alternating collision-free slots until each of their receivers
// has collected B receptions (the initial phase counts toward those).
TrialResult run_dnc(TrialState& st, std::uint64_t slot_budget) {
    const NetworkConfig& cfg = st.topo->config();
    const std::uint32_t b = cfg.batch_size;
    const Channel& chan = st.channel;
    std::uint64_t retx = 0;
    std::vector<std::uint32_t> deficit[2];
    for (ApIndex ap : {kAp1, kAp2}) {
        for (std::uint32_t id : st.topo->home_ids(ap)) {
            const std::uint32_t got =
                static_cast<std::uint32_t>(st.knowledge[id - 1].decoded_count(ap));
            deficit[ap - 1].push_back(b - std::min(b, got));
        }
    }
    const auto ap_done = [&](ApIndex ap) {
        return std::all_of(deficit[ap - 1].begin(), deficit[ap - 1].end(),
                           [](std::uint32_t d) { return d == 0; });
    };
    ApIndex turn = kAp1;
    while (!ap_done(kAp1) || !ap_done(kAp2)) {
        if (ap_done(turn)) turn = other_ap(turn);
        for (std::uint32_t& d : deficit[turn - 1]) {
            if (d > 0 && chan.draw_clean(*st.rng)) --d;
        }
        ++retx;
        ++st.slots_used;
        if (st.trace) {
            st.trace->push_back("slot " + std::to_string(st.slots_used) + " [dnc] AP" +
                                std::to_string(turn) + " transmits coded packet");
        }
        if (st.slots_used > slot_budget) {
            throw BudgetExceeded("dnc retransmission exceeded the slot budget");
        }
        turn = other_ap(turn);
    }
    TrialResult res;
    res.stage1_slots = retx;
    res.retransmissions = retx;
    res.completed = true;
    return res;
}

TrialResult run_jnc(TrialState& st, std::uint64_t slot_budget) {
    TrialResult res;
    while (!st.all_nonoverlap_complete()) {
        if (!jnccr_stage1_slot(st)) break;
        ++res.stage1_slots;
        if (st.slots_used > slot_budget) {
            throw BudgetExceeded("stage 1 exceeded the slot budget");
        }
    }
    while (!st.all_overlap_complete()) {
        if (!jnccr_stage2_slot(st)) break;
        ++res.stage2_slots;
        if (st.slots_used > slot_budget) {
            throw BudgetExceeded("stage 2 exceeded the slot budget");
        }
    }
    res.retransmissions = res.stage1_slots + res.stage2_slots;
    res.completed = st.all_complete();
    return res;
}

}  // namespace

TrialResult run_trial(const NetworkConfig& cfg, Protocol protocol, Rng& rng,
                      std::vector<std::string>* trace,
                      std::vector<std::vector<CodedPacket>>* audit,
                      std::uint64_t slot_budget) {
    cfg.validate();
    const Topology topo(cfg);
    TrialState st = make_trial_state(topo, rng);
    st.trace = trace;
    st.audit = audit;
    if (audit) audit->assign(topo.receiver_count(), {});

    initial_phase(st);
    const std::uint64_t initial = st.slots_used;

    TrialResult res;
    switch (protocol) {
        case Protocol::Arq: {
            const std::uint64_t retx = run_arq(st, slot_budget);
            res.stage1_slots = retx;
            res.retransmissions = retx;
            res.completed = st.all_complete();
            break;
        }
        case Protocol::DncSim:
            res = run_dnc(st, slot_budget);
            break;
        case Protocol::JncCr:
            res = run_jnc(st, slot_budget);
            break;
    }
    res.initial_slots = initial;
    return res;
}

TrialResult run_trial_indexed(const NetworkConfig& cfg, Protocol protocol,
                              std::uint64_t index) {
    Rng rng = Rng::for_trial(cfg.seed, index);
    return run_trial(cfg, protocol, rng);
}

namespace {

unsigned worker_count(std::uint64_t trials, unsigned max_threads) {
    unsigned n = max_threads > 0 ? max_threads : std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("JNCSIM_THREADS")) {
        const long v = std::atol(env);
        if (v >= 1) n = std::min(n, static_cast<unsigned>(v));
    }
    return static_cast<unsigned>(std::min<std::uint64_t>(n, trials));
}

}  // namespace

std::vector<AggregateStats> run_experiment(std::span<const NetworkConfig> points,
                                           std::span<const Protocol> protocols,
                                           std::uint64_t trials, std::uint64_t base_seed,
                                           unsigned max_threads) {
    if (trials < 1) throw ConfigError("trials must be >= 1");
    std::vector<AggregateStats> out;
    for (const NetworkConfig& point : points) {
        NetworkConfig cfg = point;
        cfg.seed = base_seed;
        cfg.validate();
        for (Protocol protocol : protocols) {
            std::vector<TrialResult> results(trials);
            const unsigned workers = worker_count(trials, max_threads);
            std::atomic<std::uint64_t> next{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            auto body = [&]() {
                for (;;) {
                    const std::uint64_t t = next.fetch_add(1);
                    if (t >= trials) return;
                    try {
                        results[t] = run_trial_indexed(cfg, protocol, t);
                    } catch (const BudgetExceeded& e) {
                        std::lock_guard<std::mutex> lk(failure_mutex);
                        if (!failure) {
                            failure = std::make_exception_ptr(BudgetExceeded(
                                std::string(e.what()) + " (p=" + std::to_string(cfg.loss_prob) +
                                ", N=" + std::to_string(cfg.receivers_per_ap) +
                                ", M=" + std::to_string(cfg.overlap_per_ap) +
                                ", B=" + std::to_string(cfg.batch_size) + ", protocol=" +
                                protocol_name(protocol) + ", trial=" + std::to_string(t) + ")"));
                        }
                        return;
                    } catch (...) {
                        std::lock_guard<std::mutex> lk(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        return;
                    }
                }
            };
            if (workers <= 1) {
                body();
            } else {
                std::vector<std::thread> pool;
                pool.reserve(workers);
                for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
                for (std::thread& th : pool) th.join();
            }
            if (failure) std::rethrow_exception(failure);

            AggregateStats stats;
            stats.protocol = protocol;
            stats.config = cfg;
            stats.trials = trials;
            double sum = 0.0, sum_sq = 0.0, sum_tx = 0.0, sum_s1 = 0.0, sum_s2 = 0.0;
            const double per_batch = 2.0 * cfg.batch_size;
            for (const TrialResult& r : results) {
                const double retx = static_cast<double>(r.retransmissions);
                sum += retx;
                sum_sq += retx * retx;
                sum_tx += (static_cast<double>(r.initial_slots) + retx) / per_batch;
                sum_s1 += static_cast<double>(r.stage1_slots);
                sum_s2 += static_cast<double>(r.stage2_slots);
            }
            const double n = static_cast<double>(trials);
            stats.mean_retx = sum / n;
            stats.mean_tx_per_packet = sum_tx / n;
            stats.mean_stage1 = sum_s1 / n;
            stats.mean_stage2 = sum_s2 / n;
            if (trials > 1) {
                const double var =
                    std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0));
                stats.ci95 = 1.96 * std::sqrt(var / n);
            }
            out.push_back(stats);
        }
    }
    return out;
}

namespace {

// Lossless q = infinity replay: every slot clears one unit of deficit at
// every incomplete home receiver of the transmitting AP.
TrialResult replay_dnc(const Topology& topo, const ReceptionMatrix& m,
                       std::vector<KnowledgeState>& know, std::vector<std::string>* trace) {
    std::vector<std::uint32_t> deficit[2];
    for (ApIndex ap : {kAp1, kAp2}) {
        for (std::uint32_t id : topo.home_ids(ap)) {
            deficit[ap - 1].push_back(
                static_cast<std::uint32_t>(know[id - 1].missing_seqs(ap, m.b).size()));
        }
    }
    const auto ap_done = [&](ApIndex ap) {
        return std::all_of(deficit[ap - 1].begin(), deficit[ap - 1].end(),
                           [](std::uint32_t d) { return d == 0; });
    };
    std::uint64_t slots = 0;
    ApIndex turn = kAp1;
    while (!ap_done(kAp1) || !ap_done(kAp2)) {
        if (ap_done(turn)) turn = other_ap(turn);
        for (std::uint32_t& d : deficit[turn - 1]) {
            if (d > 0) --d;
        }
        ++slots;
        if (trace) {
            trace->push_back("slot " + std::to_string(slots) + " [dnc] AP" +
                             std::to_string(turn) + " transmits coded packet");
        }
        turn = other_ap(turn);
    }
    TrialResult res;
    res.stage1_slots = slots;
    res.retransmissions = slots;
    res.completed = true;
    return res;
}

}  // namespace

TrialResult replay_matrix(const ReceptionMatrix& m, Protocol protocol,
                          std::vector<std::string>* trace) {
    const NetworkConfig cfg = m.config();
    cfg.validate();
    const Topology topo(cfg);
    Rng rng(0);
    TrialState st = make_trial_state(topo, rng);
    st.knowledge = seed_knowledge(m, topo);
    st.trace = trace;

    TrialResult res;
    switch (protocol) {
        case Protocol::Arq: {
            const std::uint64_t retx = run_arq(st);
            res.stage1_slots = retx;
            res.retransmissions = retx;
            res.completed = st.all_complete();
            break;
        }
        case Protocol::DncSim:
            res = replay_dnc(topo, m, st.knowledge, trace);
            break;
        case Protocol::JncCr:
            res = run_jnc(st, kDefaultSlotBudget);
            break;
    }
    res.initial_slots = 0;
    return res;
}

std::uint64_t overhead_bits(OverheadScheme scheme, std::uint32_t n, std::uint32_t b,
                            std::uint64_t q) {
    if (n < 1) throw DomainError("overhead_bits needs N >= 1");
    switch (scheme) {
        case OverheadScheme::Jnc:
            return 128 + 2ULL * n;
        case OverheadScheme::Xor:
            return n;
        case OverheadScheme::DncQ: {
            if (b < 1) throw DomainError("overhead_bits needs B >= 1");
            if (q < 2) throw DomainError("overhead_bits needs q >= 2 for DNC_Q");
            const double bits = b * std::log2(static_cast<double>(q));
            return static_cast<std::uint64_t>(std::ceil(bits - 1e-9));
        }
    }
    throw DomainError("unknown overhead scheme");
}

}  // namespace jncsim
