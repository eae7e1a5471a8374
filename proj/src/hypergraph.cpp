#include "tailrate/hypergraph.hpp"

#include "tailrate/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tailrate {

Hypergraph Hypergraph::from_edges(int r, std::size_t n_vertices, std::vector<Edge> edges) {
  if (r < 2) throw InputError("uniformity must be at least 2, got " + std::to_string(r));
  for (auto& e : edges) {
    if (static_cast<int>(e.size()) != r) {
      throw InputError("edge of size " + std::to_string(e.size()) + " in a " +
                       std::to_string(r) + "-graph");
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InputError("edge with a repeated vertex");
    }
    if (e.back() >= n_vertices) {
      throw InputError("vertex " + std::to_string(e.back()) + " out of range for " +
                       std::to_string(n_vertices) + " vertices");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InputError("duplicate edge");
  }

  Hypergraph h;
  h.r_ = r;
  h.n_ = n_vertices;
  h.edges_ = std::move(edges);
  h.degrees_.assign(n_vertices, 0);
  h.incidence_.assign(n_vertices, {});
  for (std::size_t i = 0; i < h.edges_.size(); ++i) {
    for (Vertex v : h.edges_[i]) {
      ++h.degrees_[v];
      h.incidence_[v].push_back(i);
    }
  }
  h.max_degree_ = h.degrees_.empty() ? 0 : *std::max_element(h.degrees_.begin(), h.degrees_.end());
  return h;
}

int Hypergraph::degree(Vertex v) const {
  if (v >= n_) throw InputError("vertex " + std::to_string(v) + " out of range");
  return degrees_[v];
}

bool Hypergraph::is_regular() const {
  return std::all_of(degrees_.begin(), degrees_.end(), [&](int d) { return d == max_degree_; });
}

const std::vector<std::size_t>& Hypergraph::incident_edges(Vertex v) const {
  if (v >= n_) throw InputError("vertex " + std::to_string(v) + " out of range");
  return incidence_[v];
}

VertexSet Hypergraph::covered_vertices() const {
  VertexSet out;
  for (Vertex v = 0; v < n_; ++v) {
    if (degrees_[v] > 0) out.push_back(v);
  }
  return out;
}

bool contains_edge(const Edge& e, Vertex v) {
  return std::binary_search(e.begin(), e.end(), v);
}

// ---------------------------------------------------------------------------
// Generators

Hypergraph complete_r_partite(int r, const std::vector<int>& part_sizes) {
  if (r < 2) throw InputError("uniformity must be at least 2");
  if (static_cast<int>(part_sizes.size()) != r) {
    throw InputError("complete r-partite graph needs exactly r part sizes");
  }
  std::vector<Vertex> offset(r + 1, 0);
  for (int i = 0; i < r; ++i) {
    if (part_sizes[i] < 1) throw InputError("part sizes must be at least 1");
    offset[i + 1] = offset[i] + static_cast<Vertex>(part_sizes[i]);
  }
  std::vector<Edge> edges;
  std::vector<int> pick(r, 0);
  while (true) {
    Edge e(r);
    for (int i = 0; i < r; ++i) e[i] = offset[i] + static_cast<Vertex>(pick[i]);
    edges.push_back(std::move(e));
    int i = r - 1;
    while (i >= 0 && ++pick[i] == part_sizes[i]) {
      pick[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return Hypergraph::from_edges(r, offset[r], std::move(edges));
}

Hypergraph complete_hypergraph(int r, int k) {
  if (r < 2 || k < r) throw InputError("complete r-graph needs k >= r >= 2");
  std::vector<Edge> edges;
  std::vector<bool> mask(k, false);
  std::fill(mask.begin(), mask.begin() + r, true);
  do {
    Edge e;
    for (int i = 0; i < k; ++i) {
      if (mask[i]) e.push_back(static_cast<Vertex>(i));
    }
    edges.push_back(std::move(e));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return Hypergraph::from_edges(r, static_cast<std::size_t>(k), std::move(edges));
}

Hypergraph tight_cycle(int r, int length) {
  if (r < 2) throw InputError("uniformity must be at least 2");
  if (length <= r) throw InputError("tight cycle needs more vertices than the uniformity");
  std::vector<Edge> edges;
  for (int v = 0; v < length; ++v) {
    Edge e;
    for (int j = 0; j < r; ++j) e.push_back(static_cast<Vertex>((v + j) % length));
    edges.push_back(std::move(e));
  }
  return Hypergraph::from_edges(r, static_cast<std::size_t>(length), std::move(edges));
}

namespace {

std::vector<Edge> fano_lines() {
  return {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 0}, {5, 6, 1}, {6, 0, 2}};
}

}  // namespace

Hypergraph fano() { return Hypergraph::from_edges(3, 7, fano_lines()); }

Hypergraph fano_minus_edge() {
  auto lines = fano_lines();
  lines.pop_back();  // drops {0,2,6}
  return Hypergraph::from_edges(3, 7, std::move(lines));
}

Hypergraph edgeless(int r, std::size_t n_vertices) { return Hypergraph::from_edges(r, n_vertices, {}); }

// ---------------------------------------------------------------------------
// Subgraphs

namespace {

void check_vertex_set(const Hypergraph& h, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= h.vertex_count()) {
      throw InputError("vertex " + std::to_string(s[i]) + " out of range");
    }
    if (i > 0 && s[i] <= s[i - 1]) throw InputError("vertex set must be sorted and distinct");
  }
}

Subgraph relabel(const Hypergraph& h, const VertexSet& vertices,
                 const std::vector<std::size_t>& edge_indices) {
  std::vector<Vertex> to_local(h.vertex_count(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) to_local[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  edges.reserve(edge_indices.size());
  for (std::size_t idx : edge_indices) {
    Edge e;
    for (Vertex v : h.edge(idx)) e.push_back(to_local[v]);
    edges.push_back(std::move(e));
  }
  Subgraph out;
  out.graph = Hypergraph::from_edges(h.uniformity(), vertices.size(), std::move(edges));
  out.to_parent = vertices;
  // Relabeling is monotone, so local edge order matches ascending parent index.
  out.parent_edges = edge_indices;
  return out;
}

}  // namespace

Subgraph induced(const Hypergraph& h, const VertexSet& vertices) {
  check_vertex_set(h, vertices);
  std::vector<bool> inside(h.vertex_count(), false);
  for (Vertex v : vertices) inside[v] = true;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return inside[v]; })) kept.push_back(i);
  }
  return relabel(h, vertices, kept);
}

Subgraph star_core(const Hypergraph& h) {
  VertexSet top;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) == h.max_degree()) top.push_back(v);
  }
  return induced(h, top);
}

Subgraph edge_subgraph(const Hypergraph& h, std::vector<std::size_t> edge_indices) {
  std::sort(edge_indices.begin(), edge_indices.end());
  edge_indices.erase(std::unique(edge_indices.begin(), edge_indices.end()), edge_indices.end());
  VertexSet vertices;
  for (std::size_t idx : edge_indices) {
    if (idx >= h.edge_count()) throw InputError("edge index out of range");
    vertices.insert(vertices.end(), h.edge(idx).begin(), h.edge(idx).end());
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return relabel(h, vertices, edge_indices);
}

VertexSet neighborhood(const Hypergraph& h, const VertexSet& s) {
  check_vertex_set(h, s);
  std::vector<bool> mark(h.vertex_count(), false);
  for (Vertex u : s) {
    for (std::size_t idx : h.incident_edges(u)) {
      for (Vertex w : h.edge(idx)) {
        if (w != u) mark[w] = true;
      }
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (mark[v]) out.push_back(v);
  }
  return out;
}

Subgraph star_of_set(const Hypergraph& h, const VertexSet& s) {
  check_vertex_set(h, s);
  VertexSet vertices = neighborhood(h, s);
  vertices.insert(vertices.end(), s.begin(), s.end());
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<bool> in_s(h.vertex_count(), false);
  for (Vertex v : s) in_s[v] = true;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return in_s[v]; })) kept.push_back(i);
  }
  return relabel(h, vertices, kept);
}

// ---------------------------------------------------------------------------
// Independent sets

bool is_independent(const Hypergraph& h, const VertexSet& s) {
  check_vertex_set(h, s);
  std::vector<bool> in_s(h.vertex_count(), false);
  for (Vertex v : s) in_s[v] = true;
  for (const auto& e : h.edges()) {
    int hits = 0;
    for (Vertex v : e) hits += in_s[v] ? 1 : 0;
    if (hits > 1) return false;
  }
  return true;
}

void for_each_independent_set(const Hypergraph& h,
                              const std::function<void(const VertexSet&)>& visit) {
  const std::size_t n = h.vertex_count();
  // blocked[v] > 0 once some chosen vertex shares an edge with v.
  std::vector<int> blocked(n, 0);
  VertexSet current;

  std::function<void(Vertex)> extend = [&](Vertex next) {
    visit(current);
    for (Vertex v = next; v < n; ++v) {
      if (blocked[v] > 0) continue;
      current.push_back(v);
      for (std::size_t idx : h.incident_edges(v)) {
        for (Vertex w : h.edge(idx)) ++blocked[w];
      }
      extend(v + 1);
      for (std::size_t idx : h.incident_edges(v)) {
        for (Vertex w : h.edge(idx)) --blocked[w];
      }
      current.pop_back();
    }
  };
  extend(0);
}

std::vector<VertexSet> independent_sets(const Hypergraph& h) {
  std::vector<VertexSet> out;
  for_each_independent_set(h, [&](const VertexSet& s) { out.push_back(s); });
  return out;
}

std::vector<std::uint64_t> independence_polynomial(const Hypergraph& h) {
  std::vector<std::uint64_t> coeffs(1, 0);
  for_each_independent_set(h, [&](const VertexSet& s) {
    if (coeffs.size() <= s.size()) coeffs.resize(s.size() + 1, 0);
    ++coeffs[s.size()];
  });
  return coeffs;
}

// ---------------------------------------------------------------------------
// Loose paths

std::optional<std::vector<LoosePath>> loose_path_decomposition(const Hypergraph& h) {
  const std::size_t m = h.edge_count();
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) > 2) return std::nullopt;
  }
  // With degrees at most 2, each shared vertex links exactly two edges.
  std::vector<std::vector<std::pair<std::size_t, Vertex>>> links(m);
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    const auto& inc = h.incident_edges(v);
    if (inc.size() == 2) {
      links[inc[0]].emplace_back(inc[1], v);
      links[inc[1]].emplace_back(inc[0], v);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (links[i].size() > 2) return std::nullopt;
    if (links[i].size() == 2 && links[i][0].first == links[i][1].first) {
      return std::nullopt;  // two edges sharing two vertices: not linear
    }
  }

  std::vector<bool> seen(m, false);
  std::vector<LoosePath> paths;
  auto walk_from = [&](std::size_t start) {
    LoosePath path;
    std::size_t prev = m;
    std::size_t cur = start;
    while (true) {
      seen[cur] = true;
      path.edges.push_back(cur);
      std::optional<std::pair<std::size_t, Vertex>> step;
      for (const auto& link : links[cur]) {
        if (link.first != prev) step = link;
      }
      if (!step) break;
      if (seen[step->first]) return std::optional<LoosePath>{};  // cycle
      path.joints.push_back(step->second);
      prev = cur;
      cur = step->first;
    }
    return std::optional<LoosePath>{std::move(path)};
  };

  for (std::size_t i = 0; i < m; ++i) {
    if (seen[i] || links[i].size() > 1) continue;
    auto path = walk_from(i);
    if (!path) return std::nullopt;
    paths.push_back(std::move(*path));
  }
  // Anything left unvisited lies on a cycle of edges.
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) return std::nullopt;
  return paths;
}

}  // namespace tailrate
