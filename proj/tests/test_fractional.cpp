#include "corpus.hpp"

#include "tailrate/error.hpp"
#include "tailrate/fractional.hpp"
#include "tailrate/hypergraph.hpp"

#include <doctest.h>

#include <algorithm>

using namespace tailrate;

namespace {

// Smallest cover size by subset enumeration.
int brute_tau(const Hypergraph& h) {
  const auto n = h.vertex_count();
  int best = static_cast<int>(n);
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    bool covers = true;
    for (const auto& e : h.edges()) {
      bool hit = false;
      for (auto v : e) hit = hit || (mask >> v & 1);
      covers = covers && hit;
    }
    if (covers) best = std::min(best, std::popcount(mask));
  }
  return best;
}

int brute_nu(const Hypergraph& h) {
  int best = 0;
  const auto m = h.edge_count();
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    std::uint64_t used = 0;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (auto v : h.edge(i)) {
        if (used >> v & 1) ok = false;
        used |= 1ull << v;
      }
    }
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

}  // namespace

TEST_CASE("fractional matching examples") {
  auto tri = fractional_matching_number(complete_hypergraph(2, 3));
  CHECK(tri.value == Rational(3, 2));
  for (const auto& w : tri.primal_weights) CHECK(w == Rational(1, 2));

  auto f = fractional_matching_number(fano());
  CHECK(f.value == Rational(7, 3));
  for (const auto& w : f.primal_weights) CHECK(w == Rational(1, 3));

  CHECK(fractional_matching_number(Hypergraph::from_edges(3, 3, {{0, 1, 2}})).value == 1);
  CHECK(fractional_matching_number(edgeless(2, 3)).value == 0);
}

TEST_CASE("LP bounds on the corpus") {
  for (const auto& [name, h] : corpus::graphs()) {
    CAPTURE(name);
    auto cert = fractional_matching_number(h);
    CHECK(verify_certificate(h, cert));
    const int tau = transversal_number(h);
    const int nu = matching_number(h);
    CHECK(tau == brute_tau(h));
    CHECK(nu == brute_nu(h));
    // nu <= nu* <= tau, |E|/Delta <= nu* <= |V|/r
    CHECK(Rational(nu) <= cert.value);
    CHECK(cert.value <= Rational(tau));
    if (h.max_degree() > 0) CHECK(Rational(h.edge_count(), h.max_degree()) <= cert.value);
    CHECK(cert.value <= Rational(h.vertex_count(), h.uniformity()));
  }
}

TEST_CASE("certificate rejects tampering") {
  auto cert = fractional_matching_number(fano());
  cert.dual_weights[0] = 0;
  CHECK_FALSE(verify_certificate(fano(), cert));
}

TEST_CASE("transversals") {
  CHECK(transversal_number(fano()) == 3);
  CHECK(transversal_number(fano_minus_edge()) == 3);
  auto st = star_of_set(complete_r_partite(3, {2, 2, 2}), {0});
  CHECK(transversal_number(st.graph) == 1);
  auto mins = minimal_transversals(st.graph);
  REQUIRE(mins.size() == 1);
  CHECK(st.graph.degree(mins[0][0]) == 4);
  CHECK(minimal_transversals(fano()).size() == 7);  // the lines
  CHECK_THROWS_AS(minimal_transversals(fano(), 3), CapacityError);
}

TEST_CASE("matchings") {
  CHECK(matching_number(tight_cycle(3, 7)) == 2);
  CHECK(matching_number(fano()) == 1);
  auto e = Hypergraph::from_edges(3, 3, {{0, 1, 2}});
  CHECK(max_matching_avoiding(e, 0) == 0);
  auto c = tight_cycle(3, 7);
  auto m = find_matching_avoiding(c, 0, 2);
  REQUIRE(m);
  CHECK(m->size() == 2);
  for (auto i : *m) CHECK_FALSE(contains_edge(c.edge(i), 0));
  CHECK_FALSE(find_matching_avoiding(c, 0, 3));
}
