// Retransmission protocols: ARQ, the q=infinity coded lower bound (analytic
// and simulated), and the two-stage cooperative collision-coding scheme with
// its greedy XOR selection and collide-vs-solo decision rule.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jncsim/channel.hpp"
#include "jncsim/knowledge.hpp"
#include "jncsim/packet.hpp"
#include "jncsim/rng.hpp"
#include "jncsim/topology.hpp"

namespace jncsim {

enum class Protocol { Arq, DncSim, JncCr };

const char* protocol_name(Protocol p);
std::optional<Protocol> protocol_from_name(const std::string& name);

// Receiver view handed to coding decisions: id plus (read-only) knowledge.
struct ReceiverView {
    std::uint32_t id = 0;
    const KnowledgeState* know = nullptr;
};
using ReceiverViews = std::vector<ReceiverView>;

// Per-slot transmit decision for the cooperative stage.
struct Decision {
    enum class Kind { Collide, SoloXor };
    Kind kind = Kind::SoloXor;
    ApIndex solo_ap = kAp1;             // meaningful for SoloXor
    std::vector<CodedPacket> payloads;  // two for Collide (AP1 first), one for SoloXor
};

// AP-side view assembled from feedback after every slot. Both APs always
// hold identical overlap views (reliable superimposed acknowledgements).
struct ApState {
    ApIndex ap = kAp1;
    // Own-packet reception of the N home receivers, by ascending id:
    // missing_home[i] holds the seqs the i-th home receiver still lacks.
    std::vector<std::vector<std::uint32_t>> missing_home;
    // Knowledge snapshots of all 2M overlap receivers, by ascending id.
    std::vector<std::uint32_t> overlap_ids;
    std::vector<KnowledgeState> overlap_knowledge;
};

ApState build_ap_state(const Topology& topo, ApIndex ap,
                       const std::vector<KnowledgeState>& ground_truth);

// Greedy coding-set selection: visit receivers in the order given; a receiver
// missing packets contributes its lowest-index missing packet when the grown
// set stays immediately decodable (exactly one unknown constituent) for it
// and every receiver already targeted. Returns nothing when no receiver is
// missing anything.
struct BenefitSelection {
    CodedPacket packet;
    std::vector<std::uint32_t> targeted_ids;
};
std::optional<BenefitSelection> benefit_select(ApIndex ap, std::uint32_t batch_size,
                                               const ReceiverViews& homes);

// Collide-vs-solo rule. n1/n2 are the counts of receivers for which each
// candidate is innovative. A receiver counts toward collision decoding when
// it can reconstruct exactly one layer and the other layer is innovative
// for it. Pure function; both APs evaluating the same inputs agree.
Decision ancr_decide(const CodedPacket& cand1, const CodedPacket& cand2,
                     const ReceiverViews& overlap, double p, std::uint32_t n1,
                     std::uint32_t n2);

// Expected slots until all n receivers, each hearing i.i.d. Bernoulli(1-p)
// deliveries of always-innovative packets, have collected b of them:
// sum over t >= 0 of 1 - F(t)^n with F(t) = P(Binomial(t, 1-p) >= b).
// Throws DivergentExpectation for p = 1.
double dnc_expected_transmissions(std::uint32_t n, std::uint32_t b, double p);

// Monte-Carlo counterpart: first slot at which all n receivers hold b.
std::uint64_t rlnc_inf_simulate(std::uint32_t n, std::uint32_t b, double p, Rng& rng);

inline constexpr std::uint64_t kDefaultSlotBudget = 10'000'000;

// Mutable state of one trial, shared by the slot-level operations.
struct TrialState {
    const Topology* topo = nullptr;
    Channel channel{0.0};
    Rng* rng = nullptr;
    std::vector<KnowledgeState> knowledge;  // by receiver id - 1
    std::uint64_t slots_used = 0;           // every transmission, initial phase included

    std::vector<std::string>* trace = nullptr;             // optional per-slot lines
    std::vector<std::vector<CodedPacket>>* audit = nullptr;  // optional absorbed log

    bool receiver_complete(std::uint32_t id) const;
    bool all_nonoverlap_complete() const;
    bool all_overlap_complete() const;
    bool all_complete() const;

    ReceiverViews home_views(ApIndex ap) const;
    ReceiverViews overlap_home_views(ApIndex ap) const;
    ReceiverViews overlap_views() const;
    // Stage-1 coding order: non-overlap homes first (ascending id), then
    // overlap homes. Keeps a clean-reception receiver targeted in every
    // slot, which is what makes stage 1 terminate with probability 1.
    ReceiverViews stage1_views(ApIndex ap) const;
};

TrialState make_trial_state(const Topology& topo, Rng& rng);

// Initial multicast phase: each AP sends its B natives, APs alternating,
// 2B slots total. Home receivers hear cleanly; the interferer's overlap
// receivers overhear.
void initial_phase(TrialState& st);

// One non-cooperative slot: both APs code independently over all their home
// receivers and transmit (simultaneously when both have work). Returns false
// when neither AP had anything to send.
bool jnccr_stage1_slot(TrialState& st);

// One cooperative slot: candidates are coded over each AP's own overlap
// receivers, then the collide-vs-solo rule picks the transmission. Returns
// the decision taken, or nothing when no overlap receiver needs anything.
std::optional<Decision> jnccr_stage2_slot(TrialState& st);

// Individual retransmission of every lost (receiver, packet) pair, APs
// alternating, each pair repeated until its receiver has the packet.
// Returns retransmission slots used. Throws BudgetExceeded.
std::uint64_t run_arq(TrialState& st, std::uint64_t slot_budget = kDefaultSlotBudget);

}  // namespace jncsim
