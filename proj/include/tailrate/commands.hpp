#pragma once

#include "tailrate/hypergraph.hpp"
#include "tailrate/serialize.hpp"

#include <string>

namespace tailrate {

// A parsed graph together with the spec it came from (closed forms need the family).
struct GraphInput {
  Hypergraph graph;
  std::string spec;
};

GraphInput load_graph_input(const std::string& spec);

// Commands: info, labelings, rate, check, lp, density, nmf, sweep.
// Options (all optional unless the command needs them): delta, method, n, p,
// seed, jobs, format, budget, cap, weights, from, to, steps, scale.
// Returns JSON text, or CSV for sweep with format=csv.
std::string run_command(const std::string& command, const GraphInput& input, const Json& options);

}  // namespace tailrate
