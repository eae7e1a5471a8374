#include "corpus.hpp"

#include "tailrate/error.hpp"
#include "tailrate/ratefn.hpp"

#include <doctest.h>

#include <cmath>

using namespace tailrate;

TEST_CASE("Fano polynomials") {
  auto m = build_rate_model(fano());
  CHECK(format_polynomial(p_H_symbolic(m)) == "1 + xi(1/3)^7 + 7*xi(1/2)^4 + 7*xi(1)");
  const double x = 0.3, y = 0.7, z = 1.4;
  CompatibilityAssignment xi{{Rational(1), x}, {Rational(1, 2), y}, {Rational(1, 3), z}};
  CHECK(p_H(m, xi) == doctest::Approx(1 + 7 * x + 7 * std::pow(y, 4) + std::pow(z, 7)).epsilon(1e-14));
  CHECK(vol_H(m, xi) == doctest::Approx(3 * x + 3 * y * y + z * z * z).epsilon(1e-14));
  CompatibilityAssignment off{{Rational(1), 0}, {Rational(1, 2), 0}, {Rational(1, 3), 0}};
  CHECK(p_H(m, off) == 1);
  CHECK(vol_H(m, off) == 0);
  CHECK_THROWS_AS(p_H(m, {{Rational(1), 1}}), InputError);
}

TEST_CASE("regular partite polynomial") {
  for (int mm = 1; mm <= 3; ++mm) {
    auto model = build_rate_model(complete_r_partite(3, {mm, mm, mm}));
    const double a = 0.4, b = 0.9, c = 1.1;
    CompatibilityAssignment xi{{Rational(1), a}, {Rational(1, 2), b}, {Rational(1, 3), c}};
    for (const auto& v : model.values) CHECK(xi.count(v) == 1);
    // 1 + 3[(1+xi(1))^m - 1] + sum_{k=2,3} C(3,k) xi(1/k)^{km}
    const double want = 1 + 3 * (std::pow(1 + a, mm) - 1) + 3 * std::pow(b, 2 * mm) + std::pow(c, 3 * mm);
    CHECK(p_H(model, xi) == doctest::Approx(want).epsilon(1e-13));
  }
}

TEST_CASE("beta") {
  for (double d : {0.01, 0.5, 1.0, 7.0, 100.0}) {
    CHECK(beta_H(tight_cycle(3, 5), d) == doctest::Approx(d / 5).epsilon(1e-12));
    CHECK(beta_H(complete_r_partite(3, {2, 2, 2}), d) ==
          doctest::Approx(std::sqrt(1 + d / 3) - 1).epsilon(1e-12));
    CHECK(beta_H_detail(fano(), d).residual <= 1e-12);
  }
  CHECK(beta_H(fano(), 0) == 0);
  CHECK_THROWS_AS(beta_H(fano(), -1), InputError);
}

TEST_CASE("rho_LZ examples") {
  for (double d : {0.1, 1.0, 5.0, 50.0}) {
    CHECK(rho_LZ(fano(), d).value ==
          doctest::Approx(std::min(3 * d / 7, std::pow(d, 3.0 / 7))).epsilon(1e-12));
  }
  auto k = rho_LZ(complete_r_partite(3, {2, 2, 2}), 1.0);
  CHECK(k.value == doctest::Approx(2 * std::sqrt(3.0) - 3).epsilon(1e-12));
  CHECK(k.solver == "structured");
  CHECK(rho_LZ(fano(), 0).value == 0);
  CHECK_THROWS_AS(rho_LZ(fano(), -0.5), InputError);
  auto f1 = rho_LZ(fano(), 1.0);
  CHECK(f1.branch == "value 1");
  auto f100 = rho_LZ(fano(), 100.0);
  CHECK(f100.branch == "value 1/3");
}

TEST_CASE("generic solver agrees with the structured one") {
  for (const char* name : {"K4(3)", "K222(3)", "C6(3)", "K4", "bowtie"}) {
    for (const auto& [n, h] : corpus::graphs()) {
      if (n != name) continue;
      auto model = build_rate_model(h);
      for (double d : {0.05, 1.0, 20.0}) {
        CAPTURE(n);
        CAPTURE(d);
        auto s = rho_LZ(model, d, RhoMethod::structured);
        auto g = rho_LZ(model, d, RhoMethod::generic);
        CHECK(g.solver == "generic");
        CHECK(g.value == doctest::Approx(s.value).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("generic seed is reproducible") {
  auto model = build_rate_model(fano());
  GenericOptions a, b;
  a.seed = b.seed = 42;
  CHECK(rho_LZ(model, 3.0, RhoMethod::generic, a).value == rho_LZ(model, 3.0, RhoMethod::generic, b).value);
}

TEST_CASE("rho_bi and rho_new") {
  auto k4 = complete_hypergraph(3, 4);
  for (double d : {0.2, 1.0, 9.0}) {
    CHECK(rho_bi(k4, d).value == doctest::Approx(std::min(std::pow(d, 0.75), 0.75 * d)).epsilon(1e-12));
    CHECK(rho_bi(complete_r_partite(3, {1, 2, 2}), d).value == doctest::Approx(3 * d).epsilon(1e-12));
  }
  // regular with a strict stable labeling
  for (const auto& h : {tight_cycle(3, 7), complete_r_partite(3, {2, 2, 2}), fano()}) {
    for (double d : {0.3, 3.0}) CHECK(rho_new(h, d).value == doctest::Approx(rho_bi(h, d).value));
  }
}

TEST_CASE("closed forms") {
  ClosedFormParams c;
  c.r = 3;
  c.k = 4;
  CHECK(closed_form("clique", c, 1.0).value == doctest::Approx(0.75));
  ClosedFormParams f;
  CHECK(closed_form("fano", f, 7.0).value == doctest::Approx(std::pow(7.0, 3.0 / 7)).epsilon(1e-12));
  CHECK(closed_form("fano_minus_edge", f, 4.0).value == doctest::Approx(0.5));
  ClosedFormParams m;
  m.r = 3;
  m.m = 2;
  CHECK(closed_form("rpartite_regular", m, 1.0).value == doctest::Approx(2 * std::sqrt(3.0) - 3));
  ClosedFormParams p;
  p.r = 3;
  p.parts = {1, 2, 2};
  CHECK(closed_form("rpartite_min", p, 2.0).value == doctest::Approx(6.0));
  p.parts = {2, 2, 2};
  CHECK_THROWS_AS(closed_form("rpartite_min", p, 2.0), InputError);
  ClosedFormParams cy;
  cy.r = 3;
  cy.length = 7;
  CHECK(closed_form("cycle", cy, 2.0).value ==
        doctest::Approx(std::min(std::pow(2.0, 3.0 / 7), 3 * beta_H(tight_cycle(3, 7), 2.0))));
  cy.length = 4;
  CHECK_THROWS_AS(closed_form("cycle", cy, 2.0), InputError);
  ClosedFormParams sub;
  sub.r = 3;
  sub.length = 6;
  sub.subgraph = Hypergraph::from_edges(3, 6, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {0, 4, 5}});
  CHECK(closed_form("cycle_subgraph", sub, 1.5).value ==
        doctest::Approx(3 * beta_H(*sub.subgraph, 1.5)));
  CHECK_THROWS_AS(closed_form("torus", c, 1.0), InputError);
}

TEST_CASE("separable minimisation") {
  // the Fano reduction
  std::vector<double> costs{1, 3, 3};
  std::vector<std::function<double(double)>> h{
      [](double a) { return std::pow(a, 7.0 / 3); },
      [](double a) { return 7 * a * a; },
      [](double a) { return 7 * a; },
  };
  for (double d : {0.5, 3.0, 30.0}) {
    CHECK(minimize_separable(costs, h, d).value ==
          doctest::Approx(std::min(3 * d / 7, std::pow(d, 3.0 / 7))).epsilon(1e-10));
  }
  CHECK(minimize_separable(costs, h, 0).value == 0);
  std::vector<std::function<double(double)>> bumpy{[](double a) { return 2 * std::sin(3 * a); }};
  CHECK_THROWS_AS(minimize_separable({1.0}, bumpy, 0.5), InputError);
}

TEST_CASE("cycle family") {
  CHECK(in_cycle_family(3, 5));
  CHECK(in_cycle_family(3, 9));
  CHECK_FALSE(in_cycle_family(3, 4));
  CHECK(in_cycle_family(4, 7));
  CHECK(in_cycle_family(5, 9));
  CHECK_FALSE(in_cycle_family(5, 11));
  CHECK(cycle_constant_is_one(7, 3));
  CHECK(cycle_constant(7, 3) == doctest::Approx(1.0));
}
