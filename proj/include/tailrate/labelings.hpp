#pragma once

#include "tailrate/hypergraph.hpp"
#include "tailrate/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace tailrate {

// Vertex weights in [0,1], indexed by vertex of the owning graph.
struct Labeling {
  std::vector<Rational> values;

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

struct LabelingSet {
  Hypergraph owner;
  std::vector<Labeling> labelings;  // sorted by value vector; contains the zero labeling
};

inline constexpr std::size_t kDefaultEnumerationCap = 14;

// Edge sums in {0,1} and zero off the maximum-degree vertices.
bool is_labeling(const Hypergraph& h, const Labeling& l);
bool is_strict(const Hypergraph& h, const Labeling& l);
// Rank test on the level-set partition of l.
bool is_stable(const Hypergraph& h, const Labeling& l);

// Throws CapacityError when |V*| exceeds cap.
LabelingSet enumerate_stable_labelings(const Hypergraph& h,
                                       std::size_t cap = kDefaultEnumerationCap);

// Both criteria are evaluated; a disagreement throws std::logic_error.
bool has_strict_stable_labeling(const Hypergraph& h, std::size_t cap = kDefaultEnumerationCap);
bool strict_by_lp(const Hypergraph& h);

// Edges summing to 1, on the vertices they cover.
Subgraph supporting_subgraph(const Hypergraph& h, const Labeling& l);
Labeling restrict_labeling(const Labeling& l, const Subgraph& f);

// Distinct nonzero values, ascending.
std::vector<Rational> nonzero_values(const Labeling& l);
// The common nonzero value when there is exactly one.
std::optional<Rational> single_value(const Labeling& l);
std::size_t support_size(const Labeling& l);

// One sorted representative per orbit of r-tuples under coordinate permutations.
struct TupleClass {
  std::vector<Rational> tuple;  // nondecreasing
  std::uint64_t orbit_size = 1;  // r! / prod(multiplicity!)
};
struct TupleSet {
  std::vector<TupleClass> classes;  // sorted; includes the zero tuple when some edge sums to 0

  // T'_H: drops the all-zero tuple.
  std::vector<TupleClass> nonzero() const;
  std::uint64_t nonzero_cardinality() const;
};
TupleSet tuple_set(const LabelingSet& set);

// Proper, nonempty subgraphs F (as edge subgraphs of h) with Delta(F) = Delta(h)
// and nu*(F) = |E(F)|/Delta(h). Sorted by parent edge list.
std::vector<Subgraph> critical_subgraphs(const Hypergraph& h,
                                         std::size_t cap = kDefaultEnumerationCap);
// Independent sets of H*, in parent vertex ids.
std::vector<VertexSet> star_independent_sets(const Hypergraph& h);
// {F_S : S in I_{H*}, S nonempty} minus h itself. Sorted by parent edge list.
std::vector<Subgraph> f_star_family(const Hypergraph& h);
std::vector<VertexSet> spanning_independent_sets(const Hypergraph& h);

}  // namespace tailrate
