#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace tailrate {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;
// Sorted list of distinct vertex ids.
using VertexSet = std::vector<Vertex>;

// An r-uniform hypergraph on vertices 0..n-1. Edges are sorted r-sets stored in
// lexicographic order, so two values are equal iff their fields are.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Sorts each edge and the edge list. Throws InputError on r < 2, a wrong
  // edge size, repeated or out-of-range vertices, or a duplicate edge.
  static Hypergraph from_edges(int r, std::size_t n_vertices, std::vector<Edge> edges);

  int uniformity() const { return r_; }
  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  int degree(Vertex v) const;
  int max_degree() const { return max_degree_; }
  const std::vector<int>& degrees() const { return degrees_; }
  bool is_regular() const;
  // Edge indices containing v, ascending.
  const std::vector<std::size_t>& incident_edges(Vertex v) const;
  bool is_isolated(Vertex v) const { return degree(v) == 0; }
  // Vertices of positive degree, ascending.
  VertexSet covered_vertices() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int r_ = 2;
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
  std::vector<std::vector<std::size_t>> incidence_;
  int max_degree_ = 0;
};

// A subgraph relabeled onto 0..k-1, with maps back into its parent.
struct Subgraph {
  Hypergraph graph;
  std::vector<Vertex> to_parent;           // local vertex -> parent vertex
  std::vector<std::size_t> parent_edges;   // local edge i -> parent edge index, ascending
};

// Generators.
Hypergraph complete_r_partite(int r, const std::vector<int>& part_sizes);
Hypergraph complete_hypergraph(int r, int k);
Hypergraph tight_cycle(int r, int length);
Hypergraph fano();
Hypergraph fano_minus_edge();
Hypergraph edgeless(int r, std::size_t n_vertices);

// Induced subgraph H[U]; keeps every vertex of U, including isolated ones.
Subgraph induced(const Hypergraph& h, const VertexSet& vertices);
// H* = H[V*], V* the vertices of maximum degree.
Subgraph star_core(const Hypergraph& h);
// Subgraph formed by the given parent edges on the vertices they cover.
Subgraph edge_subgraph(const Hypergraph& h, std::vector<std::size_t> edge_indices);
// N_H(S): vertices other than u sharing an edge with some u in S.
VertexSet neighborhood(const Hypergraph& h, const VertexSet& s);
// F_S: edges meeting S on the vertex set S u N_H(S).
Subgraph star_of_set(const Hypergraph& h, const VertexSet& s);

bool is_independent(const Hypergraph& h, const VertexSet& s);
// Visits every independent set (including the empty set) in increasing
// lexicographic order of the backtracking tree. Vertex ids ascending.
void for_each_independent_set(const Hypergraph& h,
                              const std::function<void(const VertexSet&)>& visit);
std::vector<VertexSet> independent_sets(const Hypergraph& h);
// c_k = number of independent sets of size k; c_0 = 1.
std::vector<std::uint64_t> independence_polynomial(const Hypergraph& h);

struct LoosePath {
  std::vector<std::size_t> edges;  // edge indices in path order
  VertexSet joints;                // the degree-2 vertices w_1..w_{l-1}, in path order
};
// Succeeds iff the graph, ignoring isolated vertices, is a vertex-disjoint union
// of loose paths. A single edge is a path of length 1.
std::optional<std::vector<LoosePath>> loose_path_decomposition(const Hypergraph& h);

bool contains_edge(const Edge& e, Vertex v);

}  // namespace tailrate
