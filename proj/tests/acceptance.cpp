// Acceptance suite: one line per criterion, PASS or FAIL, with the measured
// quantities. Exits nonzero when any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "jncsim/channel.hpp"
#include "jncsim/csv.hpp"
#include "jncsim/errors.hpp"
#include "jncsim/gf2.hpp"
#include "jncsim/protocols.hpp"
#include "jncsim/sim.hpp"
#include "jncsim/sweep.hpp"

using namespace jncsim;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& msg) {
        if (!cond) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + msg;
        }
    }
    void note(const std::string& msg) {
        detail += (detail.empty() ? "" : "; ") + msg;
    }
};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

// ---- criterion 1: worked-example replay --------------------------------

Outcome criterion_table1() {
    Outcome out;
    const ReceptionMatrix m = load_matrix(std::string(JNCSIM_DATA_DIR) + "/table1.txt");
    const auto arq = replay_matrix(m, Protocol::Arq).retransmissions;
    const auto dnc = replay_matrix(m, Protocol::DncSim).retransmissions;
    const auto jnc = replay_matrix(m, Protocol::JncCr).retransmissions;
    out.require(arq == 4, "arq=" + std::to_string(arq) + " want 4");
    out.require(dnc == 2, "dnc=" + std::to_string(dnc) + " want 2");
    out.require(jnc == 1, "jnc=" + std::to_string(jnc) + " want 1");
    out.note("arq=" + std::to_string(arq) + " dnc=" + std::to_string(dnc) +
             " jnc=" + std::to_string(jnc));
    return out;
}

// ---- criterion 2: analytic vs Monte Carlo ------------------------------

Outcome criterion_dnc_oracle() {
    Outcome out;
    const struct {
        std::uint32_t n, b;
        double p;
    } cases[] = {{5, 20, 0.1}, {10, 20, 0.2}};
    Rng rng(424242);
    for (const auto& c : cases) {
        const double analytic = dnc_expected_transmissions(c.n, c.b, c.p);
        const std::uint64_t trials = 100000;
        std::uint64_t total = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            total += rlnc_inf_simulate(c.n, c.b, c.p, rng);
        }
        const double mc = static_cast<double>(total) / static_cast<double>(trials);
        const double rel = std::abs(mc - analytic) / analytic;
        out.require(rel < 0.005, "N=" + std::to_string(c.n) + ": rel err " + fmt(rel));
        out.note("N=" + std::to_string(c.n) + " analytic=" + fmt(analytic) +
                 " mc=" + fmt(mc) + " rel=" + fmt(rel));
    }
    return out;
}

// ---- criterion 3: closed form at N=1 -----------------------------------

Outcome criterion_closed_form() {
    Outcome out;
    const std::uint32_t b = 20;
    for (double p : {0.0, 0.1, 0.5}) {
        const double got = dnc_expected_transmissions(1, b, p);
        const double want = b / (1.0 - p);
        out.require(std::abs(got - want) < 1e-9,
                    "p=" + fmt(p) + ": " + fmt(got) + " vs " + fmt(want));
    }
    out.note("B/(1-p) reproduced at p=0, 0.1, 0.5");
    return out;
}

// ---- criterion 4: channel calibration ----------------------------------

Outcome criterion_calibration() {
    Outcome out;
    const Topology topo(NetworkConfig{2, 1, 0.0, 1, 0});
    const std::vector<std::uint32_t> one{1};
    const std::uint64_t draws = 100000;
    Rng rng(777);
    for (double p : {0.1, 0.3}) {
        const Channel chan(p);
        std::uint64_t clean = 0, collided = 0;
        for (std::uint64_t i = 0; i < draws; ++i) {
            clean += deliver_clean(topo, kAp1, one, chan, rng)[0];
            collided += deliver_collided(topo, one, chan, rng)[0];
        }
        const double crate = static_cast<double>(clean) / static_cast<double>(draws);
        const double xrate = static_cast<double>(collided) / static_cast<double>(draws);
        const double cw = 1.0 - p;
        const double xw = cw * cw;
        const double csig = std::sqrt(cw * (1 - cw) / static_cast<double>(draws));
        const double xsig = std::sqrt(xw * (1 - xw) / static_cast<double>(draws));
        out.require(std::abs(crate - cw) <= 3 * csig, "clean rate off at p=" + fmt(p));
        out.require(std::abs(xrate - xw) <= 3 * xsig, "collided rate off at p=" + fmt(p));
        out.note("p=" + fmt(p) + " clean=" + fmt(crate) + "/" + fmt(cw) + " collided=" +
                 fmt(xrate) + "/" + fmt(xw));
    }
    return out;
}

// ---- criterion 5: opportunistic decode law -----------------------------

Outcome criterion_decode_law() {
    Outcome out;
    const double p = 0.1;
    const std::uint64_t trials = 100000;
    Rng seeds(99991);
    for (std::uint32_t k : {1u, 2u, 3u}) {
        std::uint64_t decoded = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            const NetworkConfig cfg{k, 1, p, k, 0};
            const Topology topo(cfg);
            Rng rng(seeds.next());
            TrialState st = make_trial_state(topo, rng);
            // R1 misses a1 and holds the rest of AP1's batch; other AP1
            // homes are complete; AP2's receiver j misses exactly packet j.
            for (std::uint32_t s = 2; s <= k; ++s) st.knowledge[0].add_decoded({kAp1, s});
            for (std::uint32_t id = 2; id <= k; ++id) {
                for (std::uint32_t s = 1; s <= k; ++s) st.knowledge[id - 1].add_decoded({kAp1, s});
            }
            for (std::uint32_t id = k + 1; id <= 2 * k; ++id) {
                for (std::uint32_t s = 1; s <= k; ++s) {
                    if (s != id - k) st.knowledge[id - 1].add_decoded({kAp2, s});
                }
            }
            // Each interferer constituent is overheard in exactly one prior slot.
            const Channel chan(p);
            const std::vector<std::uint32_t> r1{1};
            for (std::uint32_t s = 1; s <= k; ++s) {
                if (deliver_clean(topo, kAp2, r1, chan, rng)[0]) {
                    st.knowledge[0].absorb_and_peel(CodedPacket::native({kAp2, s}));
                }
            }
            jnccr_stage1_slot(st);
            decoded += st.knowledge[0].has({kAp1, 1}) ? 1 : 0;
        }
        const double want = std::pow(1.0 - p, 2.0 + k);
        const double rate = static_cast<double>(decoded) / static_cast<double>(trials);
        const double sigma = std::sqrt(want * (1 - want) / static_cast<double>(trials));
        out.require(std::abs(rate - want) <= 3 * sigma,
                    "k=" + std::to_string(k) + ": rate " + fmt(rate) + " want " + fmt(want));
        out.note("k=" + std::to_string(k) + " rate=" + fmt(rate) + "/" + fmt(want));
    }
    return out;
}

// ---- criterion 6: peeling vs elimination, exhaustive ---------------------

void exhaust(std::uint32_t depth_left, const KnowledgeState& ks,
             std::vector<CodedPacket>& history, bool reducible,
             const std::vector<CodedPacket>& alphabet, std::uint64_t& histories,
             std::uint64_t& violations) {
    for (const CodedPacket& cp : alphabet) {
        const bool still = reducible && ks.unknown_count(cp) <= 1;
        KnowledgeState next = ks;
        next.absorb_and_peel(cp);
        history.push_back(cp);
        ++histories;
        const auto eliminated = gf2_decodable_set(history);
        std::vector<std::uint32_t> oracle_seqs;
        oracle_seqs.reserve(eliminated.size());
        for (const PacketId& id : eliminated) oracle_seqs.push_back(id.seq);
        const std::vector<std::uint32_t>& peeled = next.decoded(kAp1);
        const bool subset = std::includes(oracle_seqs.begin(), oracle_seqs.end(),
                                          peeled.begin(), peeled.end());
        if (!subset || (still && peeled != oracle_seqs)) ++violations;
        if (depth_left > 1) {
            exhaust(depth_left - 1, next, history, still, alphabet, histories, violations);
        }
        history.pop_back();
    }
}

Outcome criterion_decoder_oracle() {
    Outcome out;
    // History length per batch size, capped to keep the enumeration square
    // with a single-core time budget; exhaustive within each cap.
    const std::uint32_t caps[] = {6, 6, 6, 5, 4, 4};
    std::uint64_t histories = 0, violations = 0;
    for (std::uint32_t b = 1; b <= 6; ++b) {
        std::vector<CodedPacket> alphabet;
        for (std::uint32_t bits = 1; bits < (1u << b); ++bits) {
            std::vector<std::uint32_t> seqs;
            for (std::uint32_t s = 0; s < b; ++s) {
                if (bits & (1u << s)) seqs.push_back(s + 1);
            }
            alphabet.emplace_back(kAp1, std::move(seqs));
        }
        KnowledgeState blank;
        std::vector<CodedPacket> history;
        exhaust(caps[b - 1], blank, history, true, alphabet, histories, violations);
    }
    out.require(violations == 0, std::to_string(violations) + " counterexamples");
    out.note(std::to_string(histories) + " histories, caps 6/6/6/5/4/4, " +
             std::to_string(violations) + " counterexamples");
    return out;
}

// ---- criteria 7-9: trend checks over paired sweeps ----------------------

std::vector<double> means_for(const std::vector<AggregateStats>& rows, Protocol proto,
                              bool per_packet = false) {
    std::vector<double> out;
    for (const auto& r : rows) {
        if (r.protocol == proto) {
            out.push_back(per_packet ? r.mean_tx_per_packet : r.mean_retx);
        }
    }
    return out;
}

Outcome criterion_fig2_trend() {
    Outcome out;
    const std::vector<double> ps{0.05, 0.1, 0.2, 0.3};
    const Protocol protocols[] = {Protocol::DncSim, Protocol::JncCr};
    for (std::uint32_t m : {2u, 5u}) {
        std::vector<NetworkConfig> points;
        for (double p : ps) points.push_back(NetworkConfig{5, m, p, 20, 0});
        const auto rows = run_experiment(points, protocols, 10000, 8181);
        const auto dnc = means_for(rows, Protocol::DncSim);
        const auto jnc = means_for(rows, Protocol::JncCr);
        for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
            out.require(dnc[i] < dnc[i + 1], "dnc not increasing at M=" + std::to_string(m));
            out.require(jnc[i] < jnc[i + 1], "jnc not increasing at M=" + std::to_string(m));
        }
        for (std::size_t i = 0; i < ps.size(); ++i) {
            out.require(jnc[i] <= dnc[i], "jnc " + fmt(jnc[i]) + " > dnc " + fmt(dnc[i]) +
                                              " at p=" + fmt(ps[i]) +
                                              " M=" + std::to_string(m));
        }
        out.note("M=" + std::to_string(m) + " dnc=[" + fmt(dnc.front()) + ".." +
                 fmt(dnc.back()) + "] jnc=[" + fmt(jnc.front()) + ".." + fmt(jnc.back()) +
                 "]");
    }
    return out;
}

Outcome criterion_fig3_dip() {
    Outcome out;
    const Protocol protocols[] = {Protocol::JncCr};
    const NetworkConfig points[] = {NetworkConfig{10, 8, 0.1, 20, 0},
                                    NetworkConfig{10, 10, 0.1, 20, 0}};
    const auto rows = run_experiment(points, protocols, 10000, 2929);
    const double m8 = rows[0].mean_retx;
    const double m10 = rows[1].mean_retx;
    out.require(m10 < m8, "no dip: M=10 " + fmt(m10) + " vs M=8 " + fmt(m8));
    out.note("M=8: " + fmt(m8) + ", M=10: " + fmt(m10));
    return out;
}

Outcome criterion_fig45_shapes() {
    Outcome out;
    const Protocol protocols[] = {Protocol::DncSim, Protocol::JncCr};

    std::vector<NetworkConfig> n_points;
    for (std::uint32_t n : {2u, 5u, 10u, 15u}) {
        n_points.push_back(NetworkConfig{n, 2, 0.1, 20, 0});
    }
    const auto n_rows = run_experiment(n_points, protocols, 10000, 3737);
    for (Protocol proto : protocols) {
        const auto m = means_for(n_rows, proto);
        for (std::size_t i = 0; i + 1 < m.size(); ++i) {
            out.require(m[i] < m[i + 1], std::string(protocol_name(proto)) +
                                             " retx not increasing in N");
        }
        const double d1 = m[1] - m[0], d2 = m[2] - m[1], d3 = m[3] - m[2];
        out.require(d1 > d2 && d2 > d3, std::string(protocol_name(proto)) +
                                            " growth not concave: " + fmt(d1) + "," +
                                            fmt(d2) + "," + fmt(d3));
        out.note(std::string(protocol_name(proto)) + " N-growth " + fmt(m[0]) + "->" +
                 fmt(m[3]));
    }

    std::vector<NetworkConfig> b_points;
    for (std::uint32_t b : {10u, 20u, 40u, 80u}) {
        b_points.push_back(NetworkConfig{5, 2, 0.1, b, 0});
    }
    const auto b_rows = run_experiment(b_points, protocols, 10000, 4848);
    for (Protocol proto : protocols) {
        const auto m = means_for(b_rows, proto, true);
        for (std::size_t i = 0; i + 1 < m.size(); ++i) {
            out.require(m[i] > m[i + 1], std::string(protocol_name(proto)) +
                                             " tx/packet not decreasing in B");
        }
        out.note(std::string(protocol_name(proto)) + " tx/pkt " + fmt(m.front()) + "->" +
                 fmt(m.back()));
    }
    return out;
}

// ---- criterion 10: overhead --------------------------------------------

Outcome criterion_overhead() {
    Outcome out;
    const std::uint64_t bits = overhead_bits(OverheadScheme::Jnc, 5, 20);
    out.require(bits == 138, "jnc overhead " + std::to_string(bits) + " want 138");
    out.note("jnc N=5 overhead = " + std::to_string(bits) + " bits");
    return out;
}

// ---- criterion 11: determinism ------------------------------------------

Outcome criterion_determinism() {
    Outcome out;
    const SweepSpec spec = sweep_preset("fig2");
    const std::string csv1 = to_csv(run_sweep(spec));
    const std::string csv2 = to_csv(run_sweep(spec));
    out.require(csv1 == csv2, "fig2 CSV differs between runs");
    out.note(std::to_string(csv1.size()) + " bytes, byte-identical");
    return out;
}

struct Criterion {
    int id;
    const char* name;
    double time_limit_s;  // 0: none
    std::function<Outcome()> fn;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "worked-example replay (arq/dnc/jnc = 4/2/1)", 1.0, criterion_table1},
        {2, "analytic vs Monte Carlo lower bound (0.5%)", 30.0, criterion_dnc_oracle},
        {3, "closed form B/(1-p) at N=1 (1e-9)", 0.0, criterion_closed_form},
        {4, "channel calibration (1-p), (1-p)^2 (3 sigma)", 0.0, criterion_calibration},
        {5, "opportunistic decode law (1-p)^(2+k) (3 sigma)", 0.0, criterion_decode_law},
        {6, "peeling vs elimination, exhaustive histories", 0.0, criterion_decoder_oracle},
        {7, "loss sweep: monotone and cooperative gain", 300.0, criterion_fig2_trend},
        {8, "full-overlap dip at M=N", 0.0, criterion_fig3_dip},
        {9, "growth in N concave; tx/packet falls in B", 0.0, criterion_fig45_shapes},
        {10, "collision header overhead (128+2N)", 0.0, criterion_overhead},
        {11, "byte-identical preset CSV", 0.0, criterion_determinism},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.fn();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && secs > c.time_limit_s) {
            out.pass = false;
            out.detail += (out.detail.empty() ? "" : "; ") + std::string("over time limit ") +
                          fmt(c.time_limit_s) + "s";
        }
        if (!out.pass) ++failures;
        std::printf("%s %2d. %s [%s] (%.1fs)\n", out.pass ? "PASS" : "FAIL", c.id, c.name,
                    out.detail.c_str(), secs);
        std::fflush(stdout);
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
