// CSV emission for experiment results. The header is part of the output
// contract; values are written with 12 significant digits.
#pragma once

#include <span>
#include <string>

#include "jncsim/sim.hpp"

namespace jncsim {

std::string csv_header();
std::string csv_row(const AggregateStats& s);
std::string to_csv(std::span<const AggregateStats> rows);
void write_csv(const std::string& path, std::span<const AggregateStats> rows);

}  // namespace jncsim
