#include "jncsim/sweep.hpp"

#include <cmath>

#include "jncsim/errors.hpp"
#include "jncsim/svg.hpp"

namespace jncsim {

const char* sweep_param_name(SweepParam p) {
    switch (p) {
        case SweepParam::P: return "p";
        case SweepParam::M: return "M";
        case SweepParam::N: return "N";
        case SweepParam::B: return "B";
    }
    return "?";
}

SweepParam sweep_param_from_name(const std::string& name) {
    if (name == "p" || name == "P") return SweepParam::P;
    if (name == "m" || name == "M") return SweepParam::M;
    if (name == "n" || name == "N") return SweepParam::N;
    if (name == "b" || name == "B") return SweepParam::B;
    throw ConfigError("unknown sweep parameter: " + name);
}

namespace {

NetworkConfig apply_value(const NetworkConfig& base, SweepParam param, double v) {
    NetworkConfig cfg = base;
    const auto as_count = [&](const char* what) {
        if (v < 1 || std::floor(v) != v) {
            throw ConfigError(std::string(what) + " sweep values must be positive integers");
        }
        return static_cast<std::uint32_t>(v);
    };
    switch (param) {
        case SweepParam::P: cfg.loss_prob = v; break;
        case SweepParam::M: cfg.overlap_per_ap = as_count("M"); break;
        case SweepParam::N: cfg.receivers_per_ap = as_count("N"); break;
        case SweepParam::B: cfg.batch_size = as_count("B"); break;
    }
    return cfg;
}

}  // namespace

void SweepSpec::validate() const {
    if (values.empty()) throw ConfigError("sweep value list is empty");
    if (protocols.empty()) throw ConfigError("sweep protocol list is empty");
    if (trials < 1) throw ConfigError("trials must be >= 1");
    for (double v : values) apply_value(base, param, v).validate();
}

std::vector<NetworkConfig> SweepSpec::grid_points() const {
    validate();
    std::vector<NetworkConfig> out;
    out.reserve(values.size());
    for (double v : values) out.push_back(apply_value(base, param, v));
    return out;
}

SweepSpec sweep_preset(const std::string& name) {
    SweepSpec spec;
    spec.protocols = {Protocol::DncSim, Protocol::JncCr};
    spec.base.seed = 42;
    if (name == "fig2") {
        spec.param = SweepParam::P;
        spec.values = {0.05, 0.10, 0.15, 0.20, 0.25, 0.30};
        spec.base.receivers_per_ap = 5;
        spec.base.overlap_per_ap = 2;
        spec.base.batch_size = 20;
        spec.base.loss_prob = 0.1;
    } else if (name == "fig3") {
        spec.param = SweepParam::M;
        spec.values = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
        spec.base.receivers_per_ap = 10;
        spec.base.overlap_per_ap = 1;
        spec.base.batch_size = 20;
        spec.base.loss_prob = 0.1;
    } else if (name == "fig4") {
        spec.param = SweepParam::N;
        spec.values = {2, 5, 10, 15};
        spec.base.receivers_per_ap = 5;
        spec.base.overlap_per_ap = 2;
        spec.base.batch_size = 20;
        spec.base.loss_prob = 0.1;
    } else if (name == "fig5") {
        spec.param = SweepParam::B;
        spec.values = {10, 20, 40, 80};
        spec.base.receivers_per_ap = 5;
        spec.base.overlap_per_ap = 2;
        spec.base.batch_size = 20;
        spec.base.loss_prob = 0.1;
    } else {
        throw ConfigError("unknown preset: " + name +
                          " (expected fig2, fig3, fig4 or fig5)");
    }
    return spec;
}

std::vector<AggregateStats> run_sweep(const SweepSpec& spec, unsigned max_threads) {
    const std::vector<NetworkConfig> points = spec.grid_points();
    return run_experiment(points, spec.protocols, spec.trials, spec.base.seed, max_threads);
}

void write_sweep_chart(const std::string& path, const SweepSpec& spec,
                       const std::vector<AggregateStats>& rows) {
    const bool per_packet = spec.param == SweepParam::B;
    std::vector<Series> series;
    for (Protocol proto : spec.protocols) {
        Series s;
        s.name = protocol_name(proto);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].protocol != proto) continue;
            const std::size_t point = i / spec.protocols.size();
            SeriesPoint pt;
            pt.x = spec.values[point];
            if (per_packet) {
                pt.y = rows[i].mean_tx_per_packet;
                pt.ci = 0.0;
            } else {
                pt.y = rows[i].mean_retx;
                pt.ci = rows[i].ci95;
            }
            s.points.push_back(pt);
        }
        series.push_back(std::move(s));
    }
    const std::string y_label =
        per_packet ? "mean transmissions per packet" : "mean retransmission slots";
    const std::string title = std::string("sweep of ") + sweep_param_name(spec.param);
    write_line_chart(path, title, sweep_param_name(spec.param), y_label, series);
}

}  // namespace jncsim
