#pragma once

#include "tailrate/hypergraph.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tailrate {

// Symmetric weights on the r-subsets of [n]. One default value plus sparse
// overrides keyed by colex rank.
class WeightedRGraph {
 public:
  WeightedRGraph() = default;
  WeightedRGraph(int n, int r, double default_q);

  int n() const { return n_; }
  int r() const { return r_; }
  double default_q() const { return default_q_; }
  // C(n, r).
  std::uint64_t slot_count() const { return slots_; }

  double q(const Edge& sorted_set) const;
  double q_rank(std::uint64_t rank) const;
  void set(const Edge& sorted_set, double q);
  void set_rank(std::uint64_t rank, double q);
  const std::map<std::uint64_t, double>& overrides() const { return overrides_; }

  std::uint64_t rank(const Edge& sorted_set) const;
  Edge unrank(std::uint64_t rank) const;

  std::vector<double> to_dense() const;
  static WeightedRGraph from_dense(int n, int r, double default_q, const std::vector<double>& q);

 private:
  int n_ = 0;
  int r_ = 2;
  double default_q_ = 0;
  std::uint64_t slots_ = 0;
  std::map<std::uint64_t, double> overrides_;
};

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

// Dense tensor over [n]^vars, first variable fastest.
struct Factor {
  std::vector<int> vars;
  std::vector<double> table;
};

struct ContractionPlan {
  std::vector<int> order;                  // eliminated variables
  std::vector<std::vector<int>> supports;  // union of variables at each step (incl. the eliminated one)
  std::size_t width = 0;                   // max support size
};

// Greedy minimum fill over the co-occurrence graph; variables in `keep` are not eliminated.
ContractionPlan make_plan(int variable_count, const std::vector<std::vector<int>>& factor_vars,
                          const std::vector<int>& keep = {});
// Sum over all variables not in keep of the product of factors; result over keep, in
// keep's order. Variables touched by no factor still contribute their n-fold sum.
Factor contract(int n, int variable_count, std::vector<Factor> factors,
                const std::vector<int>& keep = {});

// Kernel tensor G on [n]^r: q of the underlying set on distinct tuples, 0 otherwise.
std::vector<double> kernel_tensor(const WeightedRGraph& q);

double t_density(const Hypergraph& h, const WeightedRGraph& q);
// d t / d q_S for every r-set S, indexed by colex rank.
std::vector<double> t_gradient(const Hypergraph& h, const WeightedRGraph& q);
// Brute-force sum over [n]^{V(h)}; for testing at small n.
double t_density_bruteforce(const Hypergraph& h, const WeightedRGraph& q);

double i_p(double q, double p);
double j_p(double x, double p);
double entropy_Ip(const WeightedRGraph& q, double p);

// 0/1-valued; bit for the r-set of colex rank i depends only on (seed, i).
WeightedRGraph sample_gnp(int n, double p, int r, std::uint64_t seed);

struct Planted {
  WeightedRGraph graph;
  double cost = 0;  // I_p
};
// Weight 1 on r-sets inside `vertices`; the first m vertices when `vertices` is empty.
Planted plant_clique(int n, int r, double p, int m, VertexSet vertices = {});
// Weight 1 on r-sets meeting `hubs`.
Planted plant_hubs(int n, int r, double p, const VertexSet& hubs);

struct NmfOptions {
  std::uint64_t budget = 2000;  // gradient evaluations
};

struct NmfResult {
  WeightedRGraph graph;
  double value = 0;     // I_p of graph
  double density = 0;   // t(h, graph)
  double target = 0;    // (1 + delta) p^{|E(h)|}
  bool feasible = false;
  double swept_value = 0;
  std::string swept_construction;  // "clique:m" or "hubs:s"
  std::uint64_t gradient_evaluations = 0;
};
NmfResult nmf_upper_bound(const Hypergraph& h, int n, double p, double delta,
                          const NmfOptions& options = {});

struct FinnerResult {
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
};
// tables[e] is a function on X^r, |X| = s, indexed with edge e's vertices in
// stored order. lambda_e = 0 means the sup norm.
FinnerResult finner_check(const Hypergraph& f, int s, const std::vector<std::vector<double>>& tables,
                          const std::vector<double>& lambda);
// One table for every edge with weights 1/Delta(f).
FinnerResult finner_corollary(const Hypergraph& f, int s, const std::vector<double>& table);

}  // namespace tailrate
