#pragma once

#include "tailrate/hypergraph.hpp"
#include "tailrate/labelings.hpp"
#include "tailrate/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tailrate {

// xi(t) for nonzero label values t; xi(0) = 1 is implicit.
using CompatibilityAssignment = std::map<Rational, double>;

struct RateResult {
  double value = 0;
  std::string branch;
  std::string solver;  // "structured", "generic", "closed_form", "formula"
  double residual = 0;
};

// A monomial coefficient * prod xi(t)^power over nonzero t.
struct Monomial {
  std::uint64_t coefficient = 0;
  std::vector<std::pair<Rational, int>> powers;  // ascending in t; empty for the constant

  friend bool operator==(const Monomial&, const Monomial&) = default;
};
using Polynomial = std::vector<Monomial>;  // sorted by powers
std::string format_polynomial(const Polynomial& p);

// L_H, T_H and the value alphabet, computed once per graph.
struct RateModel {
  Hypergraph graph;
  LabelingSet labelings;
  TupleSet tuples;
  std::vector<Rational> values;  // distinct nonzero label values, ascending
  bool single_valued = true;     // every nonzero stable labeling takes one nonzero value
};
RateModel build_rate_model(const Hypergraph& h, std::size_t cap = kDefaultEnumerationCap);

Polynomial p_H_symbolic(const RateModel& m);
Polynomial vol_H_symbolic(const RateModel& m);
// Throw InputError when xi misses a value or is negative.
double p_H(const RateModel& m, const CompatibilityAssignment& xi);
double vol_H(const RateModel& m, const CompatibilityAssignment& xi);

struct BetaResult {
  double beta = 0;
  double residual = 0;  // |i_{H*}(beta) - (1 + delta)|
};
BetaResult beta_H_detail(const Hypergraph& h, double delta);
double beta_H(const Hypergraph& h, double delta);

enum class RhoMethod { automatic, structured, generic };

struct GenericOptions {
  int starts = 64;
  double tolerance = 1e-8;
  std::uint64_t seed = 0x7a11a7e5;
};

RateResult rho_LZ(const RateModel& m, double delta, RhoMethod method = RhoMethod::automatic,
                  const GenericOptions& options = {});
RateResult rho_LZ(const Hypergraph& h, double delta, RhoMethod method = RhoMethod::automatic,
                  std::size_t cap = kDefaultEnumerationCap);
RateResult rho_bi(const Hypergraph& h, double delta);
RateResult rho_new(const Hypergraph& h, double delta);

struct ClosedFormParams {
  int r = 3;
  int k = 0;                    // clique size
  int m = 0;                    // regular part size
  std::vector<int> parts;       // rpartite_min part sizes
  int length = 0;               // cycle length
  std::optional<Hypergraph> subgraph;  // cycle_subgraph
};
// family in {clique, rpartite_regular, rpartite_min, cycle, cycle_subgraph, fano, fano_minus_edge}
RateResult closed_form(const std::string& family, const ClosedFormParams& params, double delta);

struct SeparableResult {
  double value = 0;
  std::size_t index = 0;
  double argument = 0;  // h_index^{-1}(a)
};
// min_k c_k * h_k^{-1}(a) for convex increasing h_k with h_k(0) = 0.
SeparableResult minimize_separable(const std::vector<double>& costs,
                                   const std::vector<std::function<double(double)>>& h,
                                   double a);

// Tight cycle lengths with i(r-1) < l <= ir for some i >= 2.
bool in_cycle_family(int r, int length);
// Exact check that min_k C(r, rk/d) C(d,k)^{-r/l} equals 1, d = gcd(l, r).
bool cycle_constant_is_one(int length, int r);
double cycle_constant(int length, int r);

}  // namespace tailrate
