#pragma once

#include "tailrate/hypergraph.hpp"
#include "tailrate/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tailrate {

// Mutually certifying optimal solutions of the fractional matching LP
//   max sum_e w_e  s.t.  sum_{e ni v} w_e <= 1,  w >= 0
// and its dual, the fractional transversal LP
//   min sum_v y_v  s.t.  sum_{v in e} y_v >= 1,  y >= 0.
struct LPCertificate {
  Rational value;
  std::vector<Rational> primal_weights;  // indexed by edge
  std::vector<Rational> dual_weights;    // indexed by vertex
};

// nu*(h), solved by exact rational simplex with Bland's rule.
LPCertificate fractional_matching_number(const Hypergraph& h);

// Exact re-check of feasibility of both sides and equality of objectives.
bool verify_certificate(const Hypergraph& h, const LPCertificate& cert);

int transversal_number(const Hypergraph& h);

inline constexpr std::size_t kTransversalListCap = 1'000'000;
// Every transversal of size exactly tau(h), each sorted, the list sorted.
// Throws CapacityError beyond `cap` results.
std::vector<VertexSet> minimal_transversals(const Hypergraph& h,
                                            std::size_t cap = kTransversalListCap);

int matching_number(const Hypergraph& h);
// nu of h with every edge through v removed.
int max_matching_avoiding(const Hypergraph& h, Vertex v);
// k pairwise disjoint edges (edge indices) avoiding v; nullopt when none exist.
std::optional<std::vector<std::size_t>> find_matching_avoiding(const Hypergraph& h, Vertex v,
                                                               int k);

}  // namespace tailrate
