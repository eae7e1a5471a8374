#include "corpus.hpp"

#include "tailrate/density.hpp"
#include "tailrate/error.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

using namespace tailrate;

namespace {

double injective_fraction(int n, int k) {
  double f = 1;
  for (int i = 0; i < k; ++i) f *= static_cast<double>(n - i) / n;
  return f;
}

}  // namespace

TEST_CASE("colex ranks") {
  WeightedRGraph q(7, 3, 0.2);
  CHECK(q.slot_count() == 35);
  for (std::uint64_t i = 0; i < q.slot_count(); ++i) CHECK(q.rank(q.unrank(i)) == i);
  CHECK(q.rank({0, 1, 2}) == 0);
  CHECK(q.rank({0, 1, 3}) == 1);
  q.set({1, 4, 6}, 0.9);
  CHECK(q.q({1, 4, 6}) == 0.9);
  CHECK(q.q({1, 4, 5}) == 0.2);
  auto dense = q.to_dense();
  auto back = WeightedRGraph::from_dense(7, 3, 0.2, dense);
  CHECK(back.overrides() == q.overrides());
  CHECK(binomial_u64(60, 3) == 34220);
}

TEST_CASE("densities of constant graphs") {
  // single edge: injective pairs times p
  const auto edge = Hypergraph::from_edges(2, 2, {{0, 1}});
  for (int n : {2, 5, 9}) {
    WeightedRGraph q(n, 2, 0.3);
    CHECK(t_density(edge, q) == doctest::Approx(2.0 * (n * (n - 1) / 2) * 0.3 / (n * n)));
  }
  WeightedRGraph ones(8, 3, 1.0);
  CHECK(t_density(fano(), ones) == doctest::Approx(t_density_bruteforce(fano(), ones)).epsilon(1e-12));
  CHECK(t_density(fano(), WeightedRGraph(6, 3, 0.0)) == 0);
}

TEST_CASE("injectivity correction at n = 50") {
  for (const auto& [name, h] : corpus::graphs()) {
    if (h.vertex_count() > 5) continue;
    CAPTURE(name);
    const double q = 0.4;
    const int n = 50;
    const double t = t_density(h, WeightedRGraph(n, h.uniformity(), q));
    const double limit = std::pow(q, static_cast<double>(h.edge_count()));
    const double v = static_cast<double>(h.vertex_count());
    CHECK(std::abs(t - limit) / limit <= 2 * v * v / n);
    // for constant weights the count is exact: injective maps are the only ones
    // that can fail, and edges only see their own vertices
    if (h.covered_vertices().size() == h.vertex_count()) {
      CHECK(t <= limit);
    }
  }
  const auto k3 = complete_hypergraph(2, 3);
  CHECK(t_density(k3, WeightedRGraph(10, 2, 0.5)) ==
        doctest::Approx(injective_fraction(10, 3) * 0.125).epsilon(1e-12));
}

TEST_CASE("contraction plan") {
  auto plan = make_plan(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(plan.order.size() == 4);
  CHECK(plan.width == 3);
  auto kept = make_plan(4, {{0, 1}, {1, 2}, {2, 3}}, {0, 3});
  CHECK(kept.order.size() == 2);

  // free variables contribute their n-fold sum
  Factor f{{0}, {1, 2, 3}};
  auto r = contract(3, 2, {f});
  CHECK(r.table.at(0) == doctest::Approx(18.0));
}

TEST_CASE("gradient matches finite differences") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  auto h = complete_hypergraph(2, 3);
  WeightedRGraph q(6, 2, 0);
  for (std::uint64_t s = 0; s < q.slot_count(); ++s) q.set_rank(s, u(rng));
  auto g = t_gradient(h, q);
  for (std::uint64_t s = 0; s < q.slot_count(); ++s) {
    auto up = q, down = q;
    up.set_rank(s, q.q_rank(s) + 1e-6);
    down.set_rank(s, q.q_rank(s) - 1e-6);
    CHECK(g[s] == doctest::Approx((t_density(h, up) - t_density(h, down)) / 2e-6).epsilon(1e-6));
  }
}

TEST_CASE("entropy") {
  CHECK(i_p(0.2, 0.2) == 0);
  CHECK(i_p(1, 0.2) == doctest::Approx(std::log(5.0)));
  CHECK(i_p(0, 0.2) == doctest::Approx(std::log(1 / 0.8)));
  CHECK(j_p(0.8, 0.2) == doctest::Approx(1.0));
  CHECK_THROWS_AS(i_p(0.5, 0), InputError);
  CHECK_THROWS_AS(j_p(0.9, 0.2), InputError);
  WeightedRGraph q(6, 2, 0.1);
  q.set({0, 1}, 1.0);
  q.set({2, 3}, 0.1);
  CHECK(entropy_Ip(q, 0.1) == doctest::Approx(std::log(10.0)));
}

TEST_CASE("sampler") {
  auto empty = sample_gnp(10, 0.0, 3, 1);
  auto full = sample_gnp(10, 1.0, 3, 1);
  double e = 0, f = 0;
  for (std::uint64_t s = 0; s < empty.slot_count(); ++s) {
    e += empty.q_rank(s);
    f += full.q_rank(s);
  }
  CHECK(e == 0);
  CHECK(f == 120);

  // edge count over 2000 samples
  double sum = 0, sum2 = 0;
  const int samples = 2000;
  for (int s = 0; s < samples; ++s) {
    auto g = sample_gnp(10, 0.3, 3, static_cast<std::uint64_t>(s));
    double c = 0;
    for (std::uint64_t i = 0; i < g.slot_count(); ++i) c += g.q_rank(i);
    sum += c;
    sum2 += c * c;
  }
  const double mean = sum / samples;
  const double sigma = std::sqrt(120 * 0.3 * 0.7 / samples);
  CHECK(std::abs(mean - 36) <= 3 * sigma);

  auto a = sample_gnp(12, 0.4, 2, 99), b = sample_gnp(12, 0.4, 2, 99);
  CHECK(a.to_dense() == b.to_dense());
}

TEST_CASE("planted constructions") {
  auto none = plant_clique(10, 3, 0.2, 0);
  CHECK(none.cost == 0);
  CHECK(plant_hubs(10, 3, 0.2, {}).cost == 0);
  auto c = plant_clique(10, 2, 0.2, 4);
  CHECK(c.cost == doctest::Approx(6 * std::log(5.0)));
  CHECK(c.graph.q({0, 3}) == 1.0);
  CHECK(c.graph.q({0, 4}) == 0.2);
  auto h = plant_hubs(10, 2, 0.2, {7});
  CHECK(h.cost == doctest::Approx(9 * std::log(5.0)));
}

TEST_CASE("nmf upper bound") {
  auto tri = complete_hypergraph(2, 3);
  auto zero = nmf_upper_bound(tri, 12, 0.2, 0.0);
  CHECK(zero.value == 0);
  CHECK(zero.graph.overrides().empty());

  auto r = nmf_upper_bound(tri, 20, 0.1, 1.0);
  CHECK(r.feasible);
  CHECK(r.density >= r.target - 1e-12);
  CHECK(r.value <= r.swept_value * 1.01);
  CHECK(r.value == doctest::Approx(entropy_Ip(r.graph, 0.1)).epsilon(1e-9));
  CHECK(r.gradient_evaluations <= 2000);
}

TEST_CASE("Finner") {
  auto m = Hypergraph::from_edges(2, 4, {{0, 1}, {2, 3}});
  std::vector<double> t{0.1, 0.5, 0.7, 0.2};
  auto eq = finner_check(m, 2, {t, t}, {1, 1});
  CHECK(eq.lhs == doctest::Approx(eq.rhs));

  std::vector<double> c(8, 0.6);
  auto k = finner_corollary(fano(), 2, c);
  CHECK(k.lhs == doctest::Approx(std::pow(0.6, 7)));
  CHECK(k.rhs == doctest::Approx(std::pow(0.6, 7)));
  CHECK(k.holds);

  CHECK_THROWS_AS(finner_check(m, 2, {t, t}, {1, 1.5}), InputError);
  auto path = Hypergraph::from_edges(2, 3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(finner_check(path, 2, {t, t}, {0.7, 0.7}), InputError);
}
