#include "tailrate/error.hpp"
#include "tailrate/graph_spec.hpp"
#include "tailrate/hypergraph.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <set>

using namespace tailrate;

TEST_CASE("degrees") {
  for (Vertex v = 0; v < 7; ++v) CHECK(fano().degree(v) == 3);
  for (Vertex v = 0; v < 7; ++v) CHECK(tight_cycle(3, 7).degree(v) == 3);
  auto e = edgeless(3, 4);
  CHECK(e.degree(2) == 0);
  CHECK(e.max_degree() == 0);
}

TEST_CASE("generators") {
  auto k = complete_r_partite(3, {2, 2, 2});
  CHECK(k.vertex_count() == 6);
  CHECK(k.edge_count() == 8);
  CHECK(k.is_regular());
  CHECK(k.max_degree() == 4);

  auto c = tight_cycle(3, 5);
  CHECK(c.vertex_count() == 5);
  CHECK(c.edge_count() == 5);
  CHECK(c.is_regular());
  CHECK(c.max_degree() == 3);

  auto f = fano();
  CHECK(f.vertex_count() == 7);
  CHECK(f.edge_count() == 7);
  for (Vertex a = 0; a < 7; ++a) {
    for (Vertex b = a + 1; b < 7; ++b) {
      int together = 0;
      for (const auto& e : f.edges()) together += contains_edge(e, a) && contains_edge(e, b);
      CHECK(together == 1);
    }
  }
  CHECK(fano_minus_edge().edge_count() == 6);
  CHECK(complete_hypergraph(3, 5).edge_count() == 10);
}

TEST_CASE("from_edges validation") {
  CHECK_THROWS_AS(Hypergraph::from_edges(3, 4, {{0, 1}}), InputError);
  CHECK_THROWS_AS(Hypergraph::from_edges(2, 3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Hypergraph::from_edges(2, 3, {{0, 5}}), InputError);
  CHECK_THROWS_AS(Hypergraph::from_edges(2, 3, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Hypergraph::from_edges(1, 3, {}), InputError);
  auto h = Hypergraph::from_edges(2, 3, {{2, 1}, {1, 0}});
  CHECK(h.edge(0) == Edge{0, 1});
  CHECK(h.edge(1) == Edge{1, 2});
}

TEST_CASE("star core") {
  CHECK(star_core(fano()).graph == fano());

  auto s = star_core(complete_r_partite(3, {1, 2, 2}));
  CHECK(s.graph.vertex_count() == 1);
  CHECK(s.graph.edge_count() == 0);
  CHECK(s.to_parent == std::vector<Vertex>{0});

  auto path = Hypergraph::from_edges(3, 5, {{0, 1, 2}, {2, 3, 4}});
  auto p = star_core(path);
  CHECK(p.graph.vertex_count() == 1);
  CHECK(p.graph.edge_count() == 0);
  CHECK(p.to_parent == std::vector<Vertex>{2});
}

TEST_CASE("subgraph operations") {
  auto k = complete_r_partite(3, {2, 2, 2});
  auto st = star_of_set(k, {0});
  CHECK(st.graph.edge_count() == 4);
  for (const auto& e : st.graph.edges()) {
    bool has = false;
    for (auto v : e) has = has || st.to_parent[v] == 0;
    CHECK(has);
  }
  CHECK(induced(fano(), {0, 1, 2, 3, 4, 5, 6}).graph == fano());
  CHECK(neighborhood(tight_cycle(3, 7), {0}) == VertexSet{1, 2, 5, 6});

  auto sub = edge_subgraph(fano(), {3, 1, 1});
  CHECK(sub.parent_edges == std::vector<std::size_t>{1, 3});
  CHECK(sub.graph.edge_count() == 2);
}

TEST_CASE("independence polynomial") {
  CHECK(independence_polynomial(tight_cycle(3, 5)) == std::vector<std::uint64_t>{1, 5});
  CHECK(independence_polynomial(edgeless(3, 4)) == std::vector<std::uint64_t>{1, 4, 6, 4, 1});
  for (int m = 1; m <= 3; ++m) {
    // 1 + 3[(1+x)^m - 1]
    auto got = independence_polynomial(complete_r_partite(3, {m, m, m}));
    std::vector<std::uint64_t> want(m + 1, 0);
    want[0] = 1;
    for (int j = 1; j <= m; ++j) {
      std::uint64_t b = 1;
      for (int i = 1; i <= j; ++i) b = b * (m - j + i) / i;
      want[j] = 3 * b;
    }
    CHECK(got == want);
  }
  std::size_t count = 0;
  for_each_independent_set(fano(), [&](const VertexSet& s) {
    CHECK(is_independent(fano(), s));
    ++count;
  });
  CHECK(count == 8);
}

TEST_CASE("loose paths") {
  auto single = Hypergraph::from_edges(3, 3, {{0, 1, 2}});
  auto d = loose_path_decomposition(single);
  REQUIRE(d);
  CHECK(d->size() == 1);
  CHECK((*d)[0].edges.size() == 1);
  CHECK((*d)[0].joints.empty());

  auto two = Hypergraph::from_edges(3, 5, {{0, 1, 2}, {2, 3, 4}});
  d = loose_path_decomposition(two);
  REQUIRE(d);
  CHECK(d->size() == 1);
  CHECK((*d)[0].joints == VertexSet{2});

  CHECK_FALSE(loose_path_decomposition(fano()));
  // two edges sharing two vertices are not loose
  CHECK_FALSE(loose_path_decomposition(Hypergraph::from_edges(3, 4, {{0, 1, 2}, {1, 2, 3}})));
  // a loose cycle is not a path
  CHECK_FALSE(loose_path_decomposition(
      Hypergraph::from_edges(3, 6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}})));
}

TEST_CASE("graph spec parser") {
  CHECK(parse_graph_spec("fano") == fano());
  CHECK(parse_graph_spec("fano-minus-edge") == fano_minus_edge());
  CHECK(parse_graph_spec("clique:3:4") == complete_hypergraph(3, 4));
  CHECK(parse_graph_spec("partite:3:1,2,2") == complete_r_partite(3, {1, 2, 2}));
  CHECK(parse_graph_spec("cycle:3:7") == tight_cycle(3, 7));
  CHECK_THROWS_AS(parse_graph_spec("cycle:3"), InputError);
  CHECK_THROWS_AS(parse_graph_spec("partite:3:1,,2"), InputError);
  CHECK_THROWS_AS(parse_graph_spec("cube"), InputError);
  CHECK_THROWS_AS(parse_graph_spec("clique:3:x"), InputError);
  try {
    parse_graph_spec("clique:3:x");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("graph files round trip") {
  const auto path = std::filesystem::temp_directory_path() / "tailrate_unit_graph.json";
  save_graph_file(fano_minus_edge(), path.string());
  CHECK(load_graph_file(path.string()) == fano_minus_edge());
  CHECK(parse_graph_spec("file:" + path.string()) == fano_minus_edge());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_graph_file("/nonexistent/graph.json"), InputError);
}
