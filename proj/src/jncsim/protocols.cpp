#include "jncsim/protocols.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>

#include "jncsim/errors.hpp"

namespace jncsim {

const char* protocol_name(Protocol p) {
    switch (p) {
        case Protocol::Arq: return "arq";
        case Protocol::DncSim: return "dnc";
        case Protocol::JncCr: return "jnc";
    }
    return "?";
}

std::optional<Protocol> protocol_from_name(const std::string& name) {
    if (name == "arq") return Protocol::Arq;
    if (name == "dnc") return Protocol::DncSim;
    if (name == "jnc") return Protocol::JncCr;
    return std::nullopt;
}

ApState build_ap_state(const Topology& topo, ApIndex ap,
                       const std::vector<KnowledgeState>& ground_truth) {
    ApState st;
    st.ap = ap;
    const std::uint32_t b = topo.config().batch_size;
    for (std::uint32_t id : topo.home_ids(ap)) {
        st.missing_home.push_back(ground_truth[id - 1].missing_seqs(ap, b));
    }
    for (std::uint32_t id : topo.overlap_ids()) {
        st.overlap_ids.push_back(id);
        st.overlap_knowledge.push_back(ground_truth[id - 1]);
    }
    return st;
}

namespace {

std::size_t unknowns_in(const std::vector<std::uint32_t>& seqs, ApIndex ap,
                        const KnowledgeState& ks) {
    std::size_t n = 0;
    for (std::uint32_t s : seqs) {
        if (!ks.has(PacketId{ap, s})) ++n;
    }
    return n;
}

}  // namespace

std::optional<BenefitSelection> benefit_select(ApIndex ap, std::uint32_t batch_size,
                                               const ReceiverViews& homes) {
    std::vector<std::uint32_t> cset;  // sorted seqs
    std::vector<const KnowledgeState*> targeted;
    std::vector<std::uint32_t> targeted_ids;
    for (const ReceiverView& v : homes) {
        const std::vector<std::uint32_t> missing = v.know->missing_seqs(ap, batch_size);
        if (missing.empty()) continue;
        std::vector<std::uint32_t> grown = cset;
        auto pos = std::lower_bound(grown.begin(), grown.end(), missing.front());
        if (pos == grown.end() || *pos != missing.front()) grown.insert(pos, missing.front());
        bool ok = unknowns_in(grown, ap, *v.know) == 1;
        for (const KnowledgeState* t : targeted) {
            if (!ok) break;
            ok = unknowns_in(grown, ap, *t) == 1;
        }
        if (ok) {
            cset = std::move(grown);
            targeted.push_back(v.know);
            targeted_ids.push_back(v.id);
        }
    }
    if (cset.empty()) return std::nullopt;
    return BenefitSelection{CodedPacket(ap, std::move(cset)), std::move(targeted_ids)};
}

Decision ancr_decide(const CodedPacket& cand1, const CodedPacket& cand2,
                     const ReceiverViews& overlap, double p, std::uint32_t n1,
                     std::uint32_t n2) {
    std::uint32_t collision_decoding = 0;
    for (const ReceiverView& v : overlap) {
        const bool r1 = v.know->can_reconstruct(cand1);
        const bool r2 = v.know->can_reconstruct(cand2);
        if (r1 == r2) continue;  // both layers known (useless) or neither (undecodable)
        const CodedPacket& other = r1 ? cand2 : cand1;
        if (v.know->is_innovative(other)) ++collision_decoding;
    }
    const double q = 1.0 - p;
    const double jnc_benefit = collision_decoding * q * q;
    const double benefit1 = n1 * q;
    const double benefit2 = n2 * q;
    if (jnc_benefit > std::max(benefit1, benefit2)) {
        return Decision{Decision::Kind::Collide, kAp1, {cand1, cand2}};
    }
    if (benefit1 >= benefit2) {
        return Decision{Decision::Kind::SoloXor, kAp1, {cand1}};
    }
    return Decision{Decision::Kind::SoloXor, kAp2, {cand2}};
}

double dnc_expected_transmissions(std::uint32_t n, std::uint32_t b, double p) {
    if (n < 1 || b < 1) throw ConfigError("n and b must be >= 1");
    if (std::isnan(p) || p < 0.0 || p > 1.0) throw ConfigError("p must lie in [0, 1]");
    if (p == 1.0) throw DivergentExpectation("expected transmissions diverge at p = 1");
    const double q = 1.0 - p;
    double cdf = 0.0;   // P(one receiver done by slot t)
    double pmf = 0.0;   // P(one receiver finishes exactly at slot t)
    double expect = 0.0;
    constexpr std::uint64_t kMaxIter = 50'000'000;
    for (std::uint64_t t = 0;; ++t) {
        if (t == b) {
            pmf = std::pow(q, static_cast<double>(b));
        } else if (t > b) {
            pmf *= p * static_cast<double>(t - 1) / static_cast<double>(t - b);
        }
        cdf = std::min(cdf + pmf, 1.0);
        const double term = 1.0 - std::pow(cdf, static_cast<double>(n));
        expect += term;
        if (t >= b && term < 1e-12) break;
        if (t > kMaxIter) throw DivergentExpectation("series did not converge");
    }
    return expect;
}

std::uint64_t rlnc_inf_simulate(std::uint32_t n, std::uint32_t b, double p, Rng& rng) {
    if (n < 1 || b < 1) throw ConfigError("n and b must be >= 1");
    const Channel chan(p);
    std::vector<std::uint32_t> have(n, 0);
    std::uint64_t slot = 0;
    std::uint32_t done = 0;
    while (done < n) {
        ++slot;
        if (slot > kDefaultSlotBudget) {
            throw BudgetExceeded("rlnc simulation exceeded the slot budget");
        }
        for (std::uint32_t j = 0; j < n; ++j) {
            if (have[j] >= b) continue;
            if (chan.draw_clean(rng) && ++have[j] == b) ++done;
        }
    }
    return slot;
}

bool TrialState::receiver_complete(std::uint32_t id) const {
    const ReceiverProfile& r = topo->receiver(id);
    return knowledge[id - 1].complete(r.home_ap, topo->config().batch_size);
}

bool TrialState::all_nonoverlap_complete() const {
    for (const ReceiverProfile& r : topo->receivers()) {
        if (!r.in_overlap && !receiver_complete(r.id)) return false;
    }
    return true;
}

bool TrialState::all_overlap_complete() const {
    for (const ReceiverProfile& r : topo->receivers()) {
        if (r.in_overlap && !receiver_complete(r.id)) return false;
    }
    return true;
}

bool TrialState::all_complete() const {
    for (const ReceiverProfile& r : topo->receivers()) {
        if (!receiver_complete(r.id)) return false;
    }
    return true;
}

ReceiverViews TrialState::home_views(ApIndex ap) const {
    ReceiverViews out;
    for (std::uint32_t id : topo->home_ids(ap)) out.push_back({id, &knowledge[id - 1]});
    return out;
}

ReceiverViews TrialState::overlap_home_views(ApIndex ap) const {
    ReceiverViews out;
    for (std::uint32_t id : topo->overlap_home_ids(ap)) out.push_back({id, &knowledge[id - 1]});
    return out;
}

ReceiverViews TrialState::overlap_views() const {
    ReceiverViews out;
    for (std::uint32_t id : topo->overlap_ids()) out.push_back({id, &knowledge[id - 1]});
    return out;
}

ReceiverViews TrialState::stage1_views(ApIndex ap) const {
    ReceiverViews out;
    for (std::uint32_t id : topo->home_ids(ap)) {
        if (!topo->receiver(id).in_overlap) out.push_back({id, &knowledge[id - 1]});
    }
    for (std::uint32_t id : topo->overlap_home_ids(ap)) out.push_back({id, &knowledge[id - 1]});
    return out;
}

TrialState make_trial_state(const Topology& topo, Rng& rng) {
    TrialState st;
    st.topo = &topo;
    st.channel = Channel(topo.config().loss_prob);
    st.rng = &rng;
    st.knowledge.assign(topo.receiver_count(), KnowledgeState{});
    return st;
}

namespace {

std::string decode_note(const std::vector<PacketId>& newly, const CodedPacket& cp,
                        const KnowledgeState& ks, std::uint32_t b) {
    if (!newly.empty()) {
        std::string s = "decodes {";
        for (std::size_t i = 0; i < newly.size(); ++i) {
            if (i > 0) s += ",";
            s += packet_label(newly[i], b);
        }
        return s + "}";
    }
    return ks.unknown_count(cp) == 0 ? "redundant" : "buffers";
}

// Records and absorbs one received coded packet, appending a trace segment.
void absorb_into(TrialState& st, std::uint32_t rid, const CodedPacket& cp,
                 const char* verb, std::string& segs) {
    if (st.audit) (*st.audit)[rid - 1].push_back(cp);
    const std::vector<PacketId> newly = st.knowledge[rid - 1].absorb_and_peel(cp);
    if (st.trace) {
        const std::uint32_t b = st.topo->config().batch_size;
        if (!segs.empty()) segs += "; ";
        segs += "R" + std::to_string(rid) + " " + verb + " " + coded_label(cp, b) + ", " +
                decode_note(newly, cp, st.knowledge[rid - 1], b);
    }
}

void push_trace(TrialState& st, std::uint64_t slot, const char* tag, std::string head,
                const std::string& segs) {
    if (!st.trace) return;
    std::string line = "slot " + std::to_string(slot) + " [" + tag + "] " + std::move(head);
    line += segs.empty() ? " | (no receptions)" : " | " + segs;
    st.trace->push_back(std::move(line));
}

// One collision-free transmission by tx_ap, heard by its home receivers and
// overheard by the interferer's overlap receivers.
void transmit_solo(TrialState& st, ApIndex tx_ap, const CodedPacket& payload,
                   const char* tag) {
    ++st.slots_used;
    std::string segs;
    for (const ReceiverProfile& r : st.topo->receivers()) {
        if (!st.topo->in_range(r.id, tx_ap)) continue;
        if (!st.channel.draw_clean(*st.rng)) continue;
        absorb_into(st, r.id, payload, r.home_ap == tx_ap ? "receives" : "overhears", segs);
    }
    push_trace(st, st.slots_used, tag,
               "AP" + std::to_string(tx_ap) + " transmits " +
                   coded_label(payload, st.topo->config().batch_size),
               segs);
}

// Simultaneous transmission by both APs: non-overlap receivers hear their
// own AP's packet cleanly, overlap receivers face the collision and decode
// opportunistically (one layer reconstructable, the other gained).
void transmit_simultaneous(TrialState& st, const CodedPacket& c1, const CodedPacket& c2,
                           const char* tag) {
    ++st.slots_used;
    const JncPacket jp(c1, c2);
    const std::uint32_t b = st.topo->config().batch_size;
    std::string segs;
    for (const ReceiverProfile& r : st.topo->receivers()) {
        if (!r.in_overlap) {
            const CodedPacket& own = jp.layer(r.home_ap);
            if (st.channel.draw_clean(*st.rng)) absorb_into(st, r.id, own, "receives", segs);
            continue;
        }
        if (!st.channel.draw_collided(*st.rng)) continue;
        KnowledgeState& ks = st.knowledge[r.id - 1];
        const bool k1 = ks.can_reconstruct(jp.layer1());
        const bool k2 = ks.can_reconstruct(jp.layer2());
        if (k1 == k2) {
            // Both layers reconstructable (nothing new) or neither (the
            // collided waveform cannot be stored); either way discard.
            if (st.trace) {
                if (!segs.empty()) segs += "; ";
                segs += "R" + std::to_string(r.id) + " receives collision, discards";
            }
            continue;
        }
        const CodedPacket& known = k1 ? jp.layer1() : jp.layer2();
        absorb_into(st, r.id, anc_decode(jp, known), "anc-decodes", segs);
    }
    push_trace(st, st.slots_used, tag, "AP1+AP2 collide " + jnc_label(jp, b), segs);
}

}  // namespace

void initial_phase(TrialState& st) {
    const std::uint32_t b = st.topo->config().batch_size;
    for (std::uint32_t seq = 1; seq <= b; ++seq) {
        for (ApIndex ap : {kAp1, kAp2}) {
            transmit_solo(st, ap, CodedPacket::native(PacketId{ap, seq}), "initial");
        }
    }
}

namespace {

// An AP takes part in the non-cooperative stage while any of its
// non-interference receivers is incomplete; the interference region is the
// cooperative stage's job, so an AP whose non-overlap receivers are done
// stays silent and lets the interferer's packets arrive collision free.
bool stage1_work(const TrialState& st, ApIndex ap) {
    for (const ReceiverProfile& r : st.topo->receivers()) {
        if (r.home_ap == ap && !r.in_overlap && !st.receiver_complete(r.id)) return true;
    }
    return false;
}

}  // namespace

bool jnccr_stage1_slot(TrialState& st) {
    const std::uint32_t b = st.topo->config().batch_size;
    const bool work1 = stage1_work(st, kAp1);
    const bool work2 = stage1_work(st, kAp2);
    if (!work1 && !work2) return false;
    if (work1 && work2) {
        const auto s1 = benefit_select(kAp1, b, st.stage1_views(kAp1));
        const auto s2 = benefit_select(kAp2, b, st.stage1_views(kAp2));
        transmit_simultaneous(st, s1->packet, s2->packet, "stage1");
    } else {
        const ApIndex ap = work1 ? kAp1 : kAp2;
        const auto sel = benefit_select(ap, b, st.stage1_views(ap));
        transmit_solo(st, ap, sel->packet, "stage1");
    }
    return true;
}

std::optional<Decision> jnccr_stage2_slot(TrialState& st) {
    const std::uint32_t b = st.topo->config().batch_size;
    const auto s1 = benefit_select(kAp1, b, st.overlap_home_views(kAp1));
    const auto s2 = benefit_select(kAp2, b, st.overlap_home_views(kAp2));
    if (!s1 && !s2) return std::nullopt;
    Decision dec;
    if (s1 && s2) {
        // n_i: innovation of AP_i's candidate over the interference-region
        // receivers that still need to recover packets (an innovative
        // reception at a finished receiver carries no benefit).
        const ReceiverViews views = st.overlap_views();
        std::uint32_t n1 = 0;
        std::uint32_t n2 = 0;
        for (const ReceiverView& v : views) {
            if (st.receiver_complete(v.id)) continue;
            if (v.know->is_innovative(s1->packet)) ++n1;
            if (v.know->is_innovative(s2->packet)) ++n2;
        }
        dec = ancr_decide(s1->packet, s2->packet, views, st.channel.loss_prob(), n1, n2);
    } else if (s1) {
        dec = Decision{Decision::Kind::SoloXor, kAp1, {s1->packet}};
    } else {
        dec = Decision{Decision::Kind::SoloXor, kAp2, {s2->packet}};
    }
    if (dec.kind == Decision::Kind::Collide) {
        transmit_simultaneous(st, dec.payloads[0], dec.payloads[1], "stage2");
    } else {
        transmit_solo(st, dec.solo_ap, dec.payloads[0], "stage2");
    }
    return dec;
}

std::uint64_t run_arq(TrialState& st, std::uint64_t slot_budget) {
    const std::uint32_t b = st.topo->config().batch_size;
    std::deque<std::pair<std::uint32_t, std::uint32_t>> pending[2];  // (receiver, seq)
    for (ApIndex ap : {kAp1, kAp2}) {
        for (std::uint32_t id : st.topo->home_ids(ap)) {
            for (std::uint32_t s : st.knowledge[id - 1].missing_seqs(ap, b)) {
                pending[ap - 1].emplace_back(id, s);
            }
        }
    }
    const auto drop_satisfied = [&](ApIndex ap) {
        auto& q = pending[ap - 1];
        while (!q.empty() && st.knowledge[q.front().first - 1].has(PacketId{ap, q.front().second})) {
            q.pop_front();
        }
    };
    std::uint64_t slots = 0;
    ApIndex turn = kAp1;
    while (true) {
        drop_satisfied(kAp1);
        drop_satisfied(kAp2);
        if (pending[0].empty() && pending[1].empty()) break;
        if (pending[turn - 1].empty()) turn = other_ap(turn);
        const auto [rid, seq] = pending[turn - 1].front();
        transmit_solo(st, turn, CodedPacket::native(PacketId{turn, seq}), "arq");
        ++slots;
        if (st.slots_used > slot_budget) {
            throw BudgetExceeded("arq retransmission exceeded the slot budget");
        }
        (void)rid;
        turn = other_ap(turn);
    }
    return slots;
}

}  // namespace jncsim
