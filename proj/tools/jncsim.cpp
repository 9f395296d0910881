// Command-line front end: single runs, parameter sweeps (with figure
// presets), the analytic lower bound, and reception-matrix replay.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jncsim/csv.hpp"
#include "jncsim/errors.hpp"
#include "jncsim/sim.hpp"
#include "jncsim/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDiverged = 3;

std::string fmt6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

jncsim::Protocol parse_protocol(const std::string& name) {
    const auto p = jncsim::protocol_from_name(name);
    if (!p) throw jncsim::ConfigError("unknown protocol: " + name + " (arq, dnc or jnc)");
    return *p;
}

std::vector<jncsim::Protocol> parse_protocols(const std::vector<std::string>& names) {
    std::vector<jncsim::Protocol> out;
    for (const std::string& n : names) out.push_back(parse_protocol(n));
    return out;
}

void emit(const std::string& csv, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw jncsim::Error("cannot open for writing: " + out_path);
        f << csv;
    }
}

int cmd_run(const jncsim::NetworkConfig& cfg, const std::string& protocol_name,
            std::uint64_t trials, const std::string& out_path) {
    cfg.validate();
    const jncsim::Protocol protocol = parse_protocol(protocol_name);
    const jncsim::NetworkConfig points[] = {cfg};
    const jncsim::Protocol protocols[] = {protocol};
    const auto stats = jncsim::run_experiment(points, protocols, trials, cfg.seed);
    const auto& s = stats.front();
    std::cout << "protocol " << protocol_name << ": N=" << cfg.receivers_per_ap
              << " M=" << cfg.overlap_per_ap << " p=" << fmt6(cfg.loss_prob)
              << " B=" << cfg.batch_size << " seed=" << cfg.seed << " trials=" << trials
              << "\n";
    std::cout << "  mean retransmission slots: " << fmt6(s.mean_retx) << " +/- "
              << fmt6(s.ci95) << " (95% CI)\n";
    std::cout << "  mean transmissions per packet: " << fmt6(s.mean_tx_per_packet) << "\n";
    std::cout << "  mean stage slots: stage1 " << fmt6(s.mean_stage1) << ", stage2 "
              << fmt6(s.mean_stage2) << "\n";
    emit(jncsim::to_csv(stats), out_path);
    return kExitOk;
}

int cmd_sweep(jncsim::SweepSpec spec, const std::string& out_path,
              const std::string& svg_path) {
    const auto rows = jncsim::run_sweep(spec);
    emit(jncsim::to_csv(rows), out_path);
    if (!svg_path.empty()) {
        jncsim::write_sweep_chart(svg_path, spec, rows);
        std::cerr << "chart written to " << svg_path << "\n";
    }
    return kExitOk;
}

int cmd_analytic(std::uint32_t n, std::uint32_t b, double p) {
    const double expected = jncsim::dnc_expected_transmissions(n, b, p);
    std::cout << "expected transmissions per AP (q=inf lower bound): " << fmt6(expected)
              << "\n";
    std::cout << "expected retransmissions per AP: " << fmt6(expected - b) << "\n";
    std::cout << "overhead bits per coded packet:\n";
    std::cout << "  jnc (two XOR layers + collision header): "
              << jncsim::overhead_bits(jncsim::OverheadScheme::Jnc, n, b) << "\n";
    std::cout << "  xor (single layer):                      "
              << jncsim::overhead_bits(jncsim::OverheadScheme::Xor, n, b) << "\n";
    for (std::uint64_t q : {2ULL, 16ULL, 256ULL}) {
        std::cout << "  dnc over GF(" << q << "):                         "
                  << jncsim::overhead_bits(jncsim::OverheadScheme::DncQ, n, b, q) << "\n";
    }
    return kExitOk;
}

int cmd_replay(const std::string& path, const std::string& protocol_name) {
    const jncsim::ReceptionMatrix m = jncsim::load_matrix(path);
    const jncsim::Protocol protocol = parse_protocol(protocol_name);
    std::vector<std::string> trace;
    const jncsim::TrialResult res = jncsim::replay_matrix(m, protocol, &trace);
    for (const std::string& line : trace) std::cout << line << "\n";
    std::cout << "total retransmission slots: " << res.retransmissions << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"jncsim: two-AP multicast retransmission simulator"};
    app.require_subcommand(1);

    jncsim::NetworkConfig cfg;
    cfg.receivers_per_ap = 5;
    cfg.overlap_per_ap = 2;
    cfg.loss_prob = 0.1;
    cfg.batch_size = 20;
    cfg.seed = 42;
    std::uint64_t trials = 10000;
    std::string protocol = "jnc";
    std::string out_path;
    std::string svg_path;

    CLI::App* run = app.add_subcommand("run", "run one grid point");
    run->add_option("--n", cfg.receivers_per_ap, "receivers per AP");
    run->add_option("--m", cfg.overlap_per_ap, "overlap receivers per AP");
    run->add_option("--p", cfg.loss_prob, "packet loss probability");
    run->add_option("--b", cfg.batch_size, "batch size per AP");
    run->add_option("--protocol", protocol, "arq, dnc or jnc");
    run->add_option("--trials", trials, "trial count");
    run->add_option("--seed", cfg.seed, "base RNG seed");
    run->add_option("--out", out_path, "CSV output path (stdout otherwise)");

    std::string preset_name;
    std::string sweep_param = "p";
    std::vector<double> sweep_values;
    std::vector<std::string> sweep_protocols = {"dnc", "jnc"};

    CLI::App* sweep = app.add_subcommand("sweep", "sweep one parameter");
    sweep->add_option("--preset", preset_name, "fig2, fig3, fig4 or fig5");
    sweep->add_option("--param", sweep_param, "swept parameter: p, m, n or b");
    sweep->add_option("--values", sweep_values, "swept values")->delimiter(',');
    sweep->add_option("--n", cfg.receivers_per_ap, "fixed receivers per AP");
    sweep->add_option("--m", cfg.overlap_per_ap, "fixed overlap receivers per AP");
    sweep->add_option("--p", cfg.loss_prob, "fixed loss probability");
    sweep->add_option("--b", cfg.batch_size, "fixed batch size");
    sweep->add_option("--protocols", sweep_protocols, "protocol list")->delimiter(',');
    sweep->add_option("--trials", trials, "trial count");
    sweep->add_option("--seed", cfg.seed, "base RNG seed");
    sweep->add_option("--out", out_path, "CSV output path (stdout otherwise)");
    sweep->add_option("--svg", svg_path, "also write a line chart");

    std::uint32_t an_n = 1;
    std::uint32_t an_b = 20;
    double an_p = 0.1;
    CLI::App* analytic = app.add_subcommand("analytic", "q=inf lower bound and overheads");
    analytic->add_option("--n", an_n, "receivers per AP")->required();
    analytic->add_option("--b", an_b, "batch size")->required();
    analytic->add_option("--p", an_p, "loss probability")->required();

    std::string matrix_path;
    CLI::App* replay = app.add_subcommand("replay", "replay a reception matrix");
    replay->add_option("matrix", matrix_path, "matrix file")->required();
    replay->add_option("--protocol", protocol, "arq, dnc or jnc");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run->parsed()) return cmd_run(cfg, protocol, trials, out_path);
        if (sweep->parsed()) {
            jncsim::SweepSpec spec;
            if (!preset_name.empty()) {
                spec = jncsim::sweep_preset(preset_name);
                if (sweep->count("--trials")) spec.trials = trials;
                if (sweep->count("--seed")) spec.base.seed = cfg.seed;
                if (sweep->count("--m")) spec.base.overlap_per_ap = cfg.overlap_per_ap;
                if (sweep->count("--protocols")) spec.protocols = parse_protocols(sweep_protocols);
            } else {
                spec.param = jncsim::sweep_param_from_name(sweep_param);
                spec.values = sweep_values;
                spec.base = cfg;
                spec.protocols = parse_protocols(sweep_protocols);
                spec.trials = trials;
            }
            return cmd_sweep(std::move(spec), out_path, svg_path);
        }
        if (analytic->parsed()) return cmd_analytic(an_n, an_b, an_p);
        if (replay->parsed()) return cmd_replay(matrix_path, protocol);
    } catch (const jncsim::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDiverged;
    } catch (const jncsim::DivergentExpectation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDiverged;
    } catch (const jncsim::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const jncsim::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
