#pragma once

#include "tailrate/hypergraph.hpp"
#include "tailrate/labelings.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace tailrate {

inline constexpr std::uint64_t kVg2NodeBudget = 10'000'000;

// Edge indices below are edges of the checked graph f.
struct Vg1Witness {
  Vertex vertex = 0;
  std::vector<std::size_t> edges;  // k pairwise disjoint edges avoiding vertex
};

struct Vg2Witness {
  Vertex vertex = 0;
  std::vector<std::size_t> edges;  // the k+1 edges of F'
  std::vector<LoosePath> paths;    // in F' local edge indices
};

struct VgResult {
  bool holds = false;
  std::optional<Vertex> failing_vertex;
  std::vector<Vg1Witness> vg1;
  std::vector<Vg2Witness> vg2;
};

struct GoodnessReport {
  Hypergraph subject;
  int delta = 0;
  std::optional<int> k;  // |E|/delta when integral
  int tau = 0;
  bool is_good = false;
  VertexSet transversal;                  // the unique minimal transversal when good
  std::vector<VertexSet> counter_witness; // two distinct minimal transversals, if that is the failure
  std::optional<bool> vg1;                // unset when not evaluated
  std::optional<bool> vg2;
  VgResult vg1_detail;
  VgResult vg2_detail;
  bool is_very_good = false;
};

// delta <= 0 means Delta(f).
GoodnessReport check_good(const Hypergraph& f, int delta = 0);
VgResult check_vg1(const Hypergraph& f, const VertexSet& s);
// Throws CapacityError once the search explores more than `budget` nodes.
VgResult check_vg2(const Hypergraph& f, const VertexSet& s,
                   std::uint64_t budget = kVg2NodeBudget);
// Good, then VG1 and VG2 when good.
GoodnessReport check_very_good(const Hypergraph& f, int delta = 0,
                               std::uint64_t budget = kVg2NodeBudget);

struct AssumptionReport {
  bool holds = false;
  std::vector<Subgraph> critical;         // F_crit
  std::vector<GoodnessReport> reports;    // parallel to critical
  std::optional<std::size_t> counter_witness;  // index into critical
  // F_crit == F_star, evaluated when every critical subgraph is good.
  std::optional<bool> crit_equals_star;
  // Minimal transversals of h pairwise disjoint, evaluated when additionally
  // tau(h) = |E(h)|/Delta(h).
  std::optional<bool> transversals_disjoint;
};

AssumptionReport check_assumption(const Hypergraph& h, std::size_t cap = kDefaultEnumerationCap,
                                  std::uint64_t budget = kVg2NodeBudget);

}  // namespace tailrate
