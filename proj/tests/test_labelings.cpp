#include "corpus.hpp"

#include "tailrate/error.hpp"
#include "tailrate/fractional.hpp"
#include "tailrate/labelings.hpp"

#include <doctest.h>

#include <map>

using namespace tailrate;

namespace {

std::map<Rational, int> value_histogram(const LabelingSet& set) {
  std::map<Rational, int> h;
  for (const auto& l : set.labelings) {
    if (auto v = single_value(l)) ++h[*v];
  }
  return h;
}

Labeling constant(std::size_t n, Rational v) { return {std::vector<Rational>(n, v)}; }

}  // namespace

TEST_CASE("enumeration counts") {
  auto f = enumerate_stable_labelings(fano());
  CHECK(f.labelings.size() == 16);
  auto hist = value_histogram(f);
  CHECK(hist[Rational(1)] == 7);
  CHECK(hist[Rational(1, 2)] == 7);
  CHECK(hist[Rational(1, 3)] == 1);

  CHECK(enumerate_stable_labelings(complete_r_partite(3, {2, 2, 2})).labelings.size() == 14);
  auto c = enumerate_stable_labelings(tight_cycle(3, 5));
  CHECK(c.labelings.size() == 7);
  CHECK(value_histogram(c)[Rational(1, 3)] == 1);
  CHECK(value_histogram(c)[Rational(1)] == 5);

  CHECK(enumerate_stable_labelings(edgeless(3, 3)).labelings.size() == 1);
  CHECK_THROWS_AS(enumerate_stable_labelings(complete_hypergraph(2, 6), 5), CapacityError);
}

TEST_CASE("labeling predicates") {
  auto c = tight_cycle(3, 5);
  auto third = constant(5, Rational(1, 3));
  CHECK(is_labeling(c, third));
  CHECK(is_stable(c, third));
  CHECK(is_strict(c, third));

  Labeling point{std::vector<Rational>(7, 0)};
  point.values[0] = 1;
  CHECK(is_labeling(fano(), point));
  CHECK_FALSE(is_strict(fano(), point));

  Labeling bad{std::vector<Rational>(5, 0)};
  bad.values[0] = Rational(1, 2);
  CHECK_FALSE(is_labeling(c, bad));

  // a constant 1/4 on K4^(2) is a labeling only if edge sums are 0 or 1; 1/2 is not
  CHECK_FALSE(is_labeling(complete_hypergraph(2, 4), constant(4, Rational(1, 4))));
  CHECK(is_labeling(complete_hypergraph(2, 4), constant(4, Rational(1, 2))));
  CHECK(is_stable(complete_hypergraph(2, 4), constant(4, Rational(1, 2))));

  CHECK(has_strict_stable_labeling(fano()));
  CHECK(has_strict_stable_labeling(complete_r_partite(3, {1, 2, 2})));
  CHECK_FALSE(has_strict_stable_labeling(Hypergraph::from_edges(2, 4, {{0, 1}, {1, 2}, {2, 3}})));
}

TEST_CASE("strict labeling criterion agrees with the LP") {
  for (const auto& [name, h] : corpus::graphs()) {
    CAPTURE(name);
    const auto nu = fractional_matching_number(h).value;
    CHECK(has_strict_stable_labeling(h) == (nu * h.max_degree() == Rational(h.edge_count())));
  }
}

TEST_CASE("supporting subgraphs") {
  auto zero = constant(7, 0);
  CHECK(supporting_subgraph(fano(), zero).graph.edge_count() == 0);

  const auto f = fano();
  auto set = enumerate_stable_labelings(f);
  int halves = 0;
  for (const auto& l : set.labelings) {
    if (single_value(l) != Rational(1, 2)) continue;
    ++halves;
    auto s = supporting_subgraph(f, l);
    CHECK(s.graph.edge_count() == 6);
    CHECK(s.parent_edges.size() == 6);
    // the removed line misses every labeled point
    for (std::size_t e = 0; e < 7; ++e) {
      if (std::find(s.parent_edges.begin(), s.parent_edges.end(), e) != s.parent_edges.end()) continue;
      for (auto v : f.edge(e)) CHECK(l.values[v] == 0);
    }
    auto r = restrict_labeling(l, s);
    CHECK(is_strict(s.graph, r));
  }
  CHECK(halves == 7);

  auto c = tight_cycle(3, 6);
  CHECK(supporting_subgraph(c, constant(6, Rational(1, 3))).graph.edge_count() == 6);
}

TEST_CASE("tuple sets") {
  auto t = tuple_set(enumerate_stable_labelings(fano()));
  auto nz = t.nonzero();
  REQUIRE(nz.size() == 3);
  CHECK(nz[0].tuple == std::vector<Rational>{0, 0, 1});
  CHECK(nz[0].orbit_size == 3);
  CHECK(nz[1].tuple == std::vector<Rational>{0, Rational(1, 2), Rational(1, 2)});
  CHECK(nz[1].orbit_size == 3);
  CHECK(nz[2].tuple == std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  CHECK(nz[2].orbit_size == 1);
  CHECK(t.nonzero_cardinality() == 7);

  auto p = tuple_set(enumerate_stable_labelings(complete_r_partite(3, {1, 2, 2}))).nonzero();
  REQUIRE(p.size() == 1);
  CHECK(p[0].tuple == std::vector<Rational>{0, 0, 1});
  CHECK(p[0].orbit_size == 3);

  CHECK(tuple_set(enumerate_stable_labelings(edgeless(3, 4))).nonzero().empty());
}

TEST_CASE("critical and star families") {
  auto crit = critical_subgraphs(fano());
  int six = 0;
  for (const auto& f : crit) six += f.parent_edges.size() == 6;
  CHECK(six == 7);

  auto c = tight_cycle(3, 7);
  auto a = critical_subgraphs(c);
  auto b = f_star_family(c);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].parent_edges == b[i].parent_edges);

  CHECK(critical_subgraphs(Hypergraph::from_edges(3, 3, {{0, 1, 2}})).empty());
  // the constant 1/3 labeling spans the cycle, so no independent set does
  for (const auto& s : spanning_independent_sets(c)) CHECK(star_of_set(c, s).parent_edges.size() == 7);
}
