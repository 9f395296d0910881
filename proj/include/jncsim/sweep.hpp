// Parameter sweeps: one swept parameter, fixed values for the rest, and the
// figure presets that reproduce the standard experiment grids.
#pragma once

#include <string>
#include <vector>

#include "jncsim/sim.hpp"

namespace jncsim {

enum class SweepParam { P, M, N, B };

const char* sweep_param_name(SweepParam p);
SweepParam sweep_param_from_name(const std::string& name);  // ConfigError on unknown

struct SweepSpec {
    SweepParam param = SweepParam::P;
    std::vector<double> values;  // integer-valued for M/N/B
    NetworkConfig base;          // fixed values; seed is the base seed
    std::vector<Protocol> protocols;
    std::uint64_t trials = 10000;

    // Throws ConfigError on an empty value list or any invalid grid point.
    void validate() const;
    std::vector<NetworkConfig> grid_points() const;
};

// Presets: fig2 sweeps p {0.05..0.30} at N=5, M=2, B=20; fig3 sweeps
// M 1..10 at N=10, p=0.1, B=20; fig4 sweeps N {2,5,10,15} at p=0.1, M=2,
// B=20; fig5 sweeps B {10,20,40,80} at p=0.1, N=5, M=2. All run dnc and jnc.
SweepSpec sweep_preset(const std::string& name);

std::vector<AggregateStats> run_sweep(const SweepSpec& spec, unsigned max_threads = 0);

// Chart helper: x = swept value, one series per protocol, y = mean_retx
// with ci95 whiskers (mean_tx_per_packet when sweeping B).
void write_sweep_chart(const std::string& path, const SweepSpec& spec,
                       const std::vector<AggregateStats>& rows);

}  // namespace jncsim
