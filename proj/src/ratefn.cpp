#include "tailrate/ratefn.hpp"

#include "tailrate/error.hpp"
#include "tailrate/fractional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace tailrate {

namespace {

using Real = long double;

void check_delta(double delta) {
  if (!(delta >= 0) || !std::isfinite(delta)) {
    throw InputError("delta must be a finite nonnegative number");
  }
}

// Invert an increasing function with g(0) = 0 by bracket doubling and bisection.
Real invert_increasing(const std::function<Real(Real)>& g, Real target) {
  if (target <= 0) return 0;
  Real lo = 0;
  Real hi = 1;
  int grow = 0;
  while (g(hi) < target) {
    lo = hi;
    hi *= 2;
    if (++grow > 4000) throw InputError("function does not reach the target");
  }
  for (int it = 0; it < 400; ++it) {
    const Real mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (g(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

std::string value_branch(const Rational& v) { return "value " + format_rational_compact(v); }

// Smaller value wins; exact ties go to the lexicographically smaller descriptor.
void consider(RateResult& best, bool& have, const RateResult& candidate) {
  if (!have || candidate.value < best.value ||
      (candidate.value == best.value && candidate.branch < best.branch)) {
    best = candidate;
    have = true;
  }
}

Real pow_rational(Real base, const Rational& exponent) {
  if (base == 0) return exponent == 0 ? 1 : 0;
  return std::pow(base, to_long_double(exponent));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

BigInt big_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Polynomials

std::string format_polynomial(const Polynomial& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& mono : p) {
    if (!first) os << " + ";
    first = false;
    if (mono.powers.empty()) {
      os << mono.coefficient;
      continue;
    }
    if (mono.coefficient != 1) os << mono.coefficient << "*";
    for (std::size_t i = 0; i < mono.powers.size(); ++i) {
      if (i > 0) os << "*";
      os << "xi(" << format_rational_compact(mono.powers[i].first) << ")";
      if (mono.powers[i].second != 1) os << "^" << mono.powers[i].second;
    }
  }
  if (first) os << "0";
  return os.str();
}

namespace {

Polynomial collect(std::map<std::vector<std::pair<Rational, int>>, std::uint64_t> terms) {
  Polynomial out;
  for (auto& [powers, coefficient] : terms) out.push_back({coefficient, powers});
  return out;
}

std::vector<std::pair<Rational, int>> signature(const std::vector<Rational>& values) {
  std::map<Rational, int> counts;
  for (const auto& x : values) {
    if (x != 0) ++counts[x];
  }
  return {counts.begin(), counts.end()};
}

Real evaluate(const Polynomial& p, const std::function<Real(const Rational&)>& xi) {
  Real total = 0;
  for (const auto& mono : p) {
    Real term = static_cast<Real>(mono.coefficient);
    for (const auto& [t, power] : mono.powers) term *= std::pow(xi(t), static_cast<Real>(power));
    total += term;
  }
  return total;
}

Real lookup(const CompatibilityAssignment& xi, const Rational& t) {
  auto it = xi.find(t);
  if (it == xi.end()) {
    throw InputError("compatibility assignment has no value for " + format_rational(t));
  }
  if (!(it->second >= 0) || !std::isfinite(it->second)) {
    throw InputError("compatibility values must be finite and nonnegative");
  }
  return it->second;
}

}  // namespace

RateModel build_rate_model(const Hypergraph& h, std::size_t cap) {
  RateModel m;
  m.graph = h;
  m.labelings = enumerate_stable_labelings(h, cap);
  m.tuples = tuple_set(m.labelings);
  std::vector<Rational> values;
  for (const auto& l : m.labelings.labelings) {
    auto vs = nonzero_values(l);
    if (vs.size() > 1) m.single_valued = false;
    values.insert(values.end(), vs.begin(), vs.end());
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  m.values = std::move(values);
  return m;
}

Polynomial p_H_symbolic(const RateModel& m) {
  std::map<std::vector<std::pair<Rational, int>>, std::uint64_t> terms;
  for (const auto& l : m.labelings.labelings) ++terms[signature(l.values)];
  return collect(std::move(terms));
}

Polynomial vol_H_symbolic(const RateModel& m) {
  std::map<std::vector<std::pair<Rational, int>>, std::uint64_t> terms;
  for (const auto& c : m.tuples.nonzero()) terms[signature(c.tuple)] += c.orbit_size;
  return collect(std::move(terms));
}

double p_H(const RateModel& m, const CompatibilityAssignment& xi) {
  return static_cast<double>(
      evaluate(p_H_symbolic(m), [&](const Rational& t) { return lookup(xi, t); }));
}

double vol_H(const RateModel& m, const CompatibilityAssignment& xi) {
  return static_cast<double>(
      evaluate(vol_H_symbolic(m), [&](const Rational& t) { return lookup(xi, t); }));
}

// ---------------------------------------------------------------------------
// beta_H

BetaResult beta_H_detail(const Hypergraph& h, double delta) {
  check_delta(delta);
  BetaResult out;
  if (delta == 0) return out;
  const auto coeffs = independence_polynomial(star_core(h).graph);
  auto poly = [&](Real x) {
    Real acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + static_cast<Real>(coeffs[i]);
    return acc;
  };
  const Real target = 1 + static_cast<Real>(delta);
  Real lo = 0;
  Real hi = std::max<Real>(1, delta);
  if (poly(hi) < target) throw std::logic_error("beta bracket does not enclose the root");
  Real mid = 0;
  for (int it = 0; it < 400; ++it) {
    mid = lo + (hi - lo) / 2;
    const Real value = poly(mid);
    if (std::fabs(value - target) <= 1e-13L) break;
    if (mid <= lo || mid >= hi) break;
    if (value < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.beta = static_cast<double>(mid);
  out.residual = static_cast<double>(std::fabs(poly(mid) - target));
  return out;
}

double beta_H(const Hypergraph& h, double delta) { return beta_H_detail(h, delta).beta; }

// ---------------------------------------------------------------------------
// rho_LZ

namespace {

RateResult rho_structured(const RateModel& m, double delta) {
  const int r = m.graph.uniformity();
  const auto nonzero_tuples = m.tuples.nonzero();
  RateResult best;
  bool have = false;
  for (const auto& v : m.values) {
    // h_v(alpha) = sum over labelings with value v of alpha^{v |supp|}.
    std::vector<Rational> exponents;
    for (const auto& l : m.labelings.labelings) {
      auto sv = single_value(l);
      if (sv && *sv == v) exponents.push_back(v * static_cast<long long>(support_size(l)));
    }
    std::uint64_t cost = 0;
    for (const auto& c : nonzero_tuples) {
      const bool pure = std::all_of(c.tuple.begin(), c.tuple.end(),
                                    [&](const Rational& t) { return t == 0 || t == v; });
      if (pure) cost += c.orbit_size;
    }
    // Each edge summing to 1 carries exactly 1/v copies of v.
    if (cost != binomial(static_cast<std::uint64_t>(r),
                         static_cast<std::uint64_t>((1 / v).convert_to<long long>()))) {
      throw std::logic_error("tuple orbit count inconsistent with label value");
    }
    auto hv = [&](Real a) {
      Real s = 0;
      for (const auto& e : exponents) s += pow_rational(a, e);
      return s;
    };
    const Real alpha = invert_increasing(hv, static_cast<Real>(delta));
    RateResult cand;
    cand.value = static_cast<double>(static_cast<Real>(cost) * alpha);
    cand.branch = value_branch(v);
    cand.solver = "structured";
    cand.residual = static_cast<double>(std::fabs(hv(alpha) - static_cast<Real>(delta)));
    consider(best, have, cand);
  }
  if (!have) {
    best.value = delta == 0 ? 0 : std::numeric_limits<double>::infinity();
    best.branch = "zero";
    best.solver = "structured";
  }
  return best;
}

class GenericSolver {
 public:
  GenericSolver(const RateModel& m, double delta)
      : values_(m.values), p_(p_H_symbolic(m)), vol_(vol_H_symbolic(m)),
        target_(1 + static_cast<Real>(delta)) {}

  std::size_t dim() const { return values_.size(); }

  // Shift s with P(exp(x + s)) = 1 + delta; P is increasing in s.
  Real feasible_shift(const std::vector<Real>& x) const {
    const Real top = *std::max_element(x.begin(), x.end());
    Real lo = -top - 60;
    while (p_at(x, lo) > target_) lo -= 60;
    Real hi = -top + 1;
    while (p_at(x, hi) < target_) hi += std::max<Real>(1, hi - lo);
    for (int it = 0; it < 200; ++it) {
      const Real mid = lo + (hi - lo) / 2;
      if (mid <= lo || mid >= hi) break;
      if (p_at(x, mid) < target_) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return hi;
  }

  Real objective(const std::vector<Real>& x) const {
    const Real s = feasible_shift(x);
    return evaluate(vol_, [&](const Rational& t) { return std::exp(x[index(t)] + s); });
  }

  Real residual(const std::vector<Real>& x) const {
    return std::fabs(p_at(x, feasible_shift(x)) - target_);
  }

  // Branch: the value carrying the largest xi at the optimum.
  std::string branch(const std::vector<Real>& x) const {
    return value_branch(values_[static_cast<std::size_t>(
        std::max_element(x.begin(), x.end()) - x.begin())]);
  }

 private:
  std::size_t index(const Rational& t) const {
    return static_cast<std::size_t>(std::lower_bound(values_.begin(), values_.end(), t) -
                                    values_.begin());
  }
  Real p_at(const std::vector<Real>& x, Real s) const {
    return evaluate(p_, [&](const Rational& t) { return std::exp(x[index(t)] + s); });
  }

  std::vector<Rational> values_;
  Polynomial p_;
  Polynomial vol_;
  Real target_;
};

struct NelderMeadResult {
  std::vector<Real> x;
  Real f = 0;
};

NelderMeadResult nelder_mead(const std::function<Real(const std::vector<Real>&)>& f,
                             std::vector<Real> start, double tolerance, int max_iter) {
  const std::size_t d = start.size();
  std::vector<std::vector<Real>> simplex(d + 1, start);
  for (std::size_t i = 0; i < d; ++i) simplex[i + 1][i] += 1;
  std::vector<Real> fv(d + 1);
  for (std::size_t i = 0; i <= d; ++i) fv[i] = f(simplex[i]);

  auto blend = [&](const std::vector<Real>& a, const std::vector<Real>& b, Real t) {
    std::vector<Real> out(d);
    for (std::size_t i = 0; i < d; ++i) out[i] = a[i] + t * (b[i] - a[i]);
    return out;
  };

  for (int iter = 0; iter < max_iter; ++iter) {
    std::vector<std::size_t> order(d + 1);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[d - 1];
    if (fv[worst] - fv[best] <= static_cast<Real>(tolerance) * 1e-4L * (1 + std::fabs(fv[best]))) {
      break;
    }
    std::vector<Real> centroid(d, 0);
    for (std::size_t i = 0; i <= d; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < d; ++j) centroid[j] += simplex[i][j] / static_cast<Real>(d);
    }
    auto reflected = blend(centroid, simplex[worst], -1);
    const Real fr = f(reflected);
    if (fr < fv[best]) {
      auto expanded = blend(centroid, simplex[worst], -2);
      const Real fe = f(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        fv[worst] = fe;
      } else {
        simplex[worst] = reflected;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second]) {
      simplex[worst] = reflected;
      fv[worst] = fr;
      continue;
    }
    const bool outside = fr < fv[worst];
    auto contracted = blend(centroid, outside ? reflected : simplex[worst], 0.5);
    const Real fc = f(contracted);
    if (fc < std::min(fr, fv[worst])) {
      simplex[worst] = contracted;
      fv[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= d; ++i) {
      if (i == best) continue;
      simplex[i] = blend(simplex[best], simplex[i], 0.5);
      fv[i] = f(simplex[i]);
    }
  }
  const std::size_t best =
      static_cast<std::size_t>(std::min_element(fv.begin(), fv.end()) - fv.begin());
  return {simplex[best], fv[best]};
}

RateResult rho_generic(const RateModel& m, double delta, const GenericOptions& options) {
  RateResult out;
  out.solver = "generic";
  if (m.values.empty()) {
    out.value = delta == 0 ? 0 : std::numeric_limits<double>::infinity();
    out.branch = "zero";
    return out;
  }
  if (delta == 0) {
    out.branch = value_branch(m.values.front());
    return out;
  }
  GenericSolver solver(m, delta);
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unif(std::log(1e-4), std::log(1e2));
  auto f = [&](const std::vector<Real>& x) { return solver.objective(x); };
  NelderMeadResult best;
  bool have = false;
  for (int s = 0; s < options.starts; ++s) {
    std::vector<Real> x0(solver.dim());
    for (auto& x : x0) x = unif(rng);
    auto res = nelder_mead(f, x0, options.tolerance, 4000 * static_cast<int>(solver.dim()));
    if (!have || res.f < best.f) {
      best = res;
      have = true;
    }
  }
  out.value = static_cast<double>(best.f);
  out.branch = solver.branch(best.x);
  out.residual = static_cast<double>(solver.residual(best.x));
  return out;
}

}  // namespace

RateResult rho_LZ(const RateModel& m, double delta, RhoMethod method,
                  const GenericOptions& options) {
  check_delta(delta);
  switch (method) {
    case RhoMethod::structured:
      if (!m.single_valued) {
        throw InputError("structured solver needs single-valued stable labelings");
      }
      return rho_structured(m, delta);
    case RhoMethod::generic:
      return rho_generic(m, delta, options);
    case RhoMethod::automatic:
      break;
  }
  return m.single_valued ? rho_structured(m, delta) : rho_generic(m, delta, options);
}

RateResult rho_LZ(const Hypergraph& h, double delta, RhoMethod method, std::size_t cap) {
  check_delta(delta);
  return rho_LZ(build_rate_model(h, cap), delta, method);
}

namespace {

RateResult two_branch(const Hypergraph& h, double delta, bool with_clique) {
  check_delta(delta);
  const BetaResult beta = beta_H_detail(h, delta);
  RateResult hub{h.uniformity() * beta.beta, "hub", "formula", beta.residual};
  if (!with_clique || h.edge_count() == 0) return hub;
  const double exponent = static_cast<double>(h.max_degree()) / static_cast<double>(h.edge_count());
  RateResult clique{std::pow(delta, exponent), "clique", "formula", 0};
  RateResult best;
  bool have = false;
  consider(best, have, clique);
  consider(best, have, hub);
  return best;
}

}  // namespace

RateResult rho_bi(const Hypergraph& h, double delta) {
  return two_branch(h, delta, h.is_regular());
}

RateResult rho_new(const Hypergraph& h, double delta) {
  if (h.edge_count() == 0) return two_branch(h, delta, false);
  const Rational nu = fractional_matching_number(h).value;
  const Rational ratio(static_cast<long long>(h.edge_count()), h.max_degree());
  return two_branch(h, delta, nu == ratio);
}

// ---------------------------------------------------------------------------
// Closed forms

RateResult closed_form(const std::string& family, const ClosedFormParams& p, double delta) {
  check_delta(delta);
  RateResult best;
  bool have = false;
  auto both = [&](double clique, double hub) {
    consider(best, have, {clique, "clique", "closed_form", 0});
    consider(best, have, {hub, "hub", "closed_form", 0});
    return best;
  };
  const double d = delta;
  if (family == "clique") {
    if (p.r < 2 || p.k <= p.r) throw InputError("clique needs k > r >= 2");
    return both(std::pow(d, double(p.r) / p.k), p.r * d / p.k);
  }
  if (family == "rpartite_regular") {
    if (p.r < 2 || p.m < 2) throw InputError("rpartite_regular needs r >= 2, m >= 2");
    return both(std::pow(d, 1.0 / p.m), p.r * (std::pow(1 + d / p.r, 1.0 / p.m) - 1));
  }
  if (family == "rpartite_min") {
    if (static_cast<int>(p.parts.size()) != p.r || p.r < 2) {
      throw InputError("rpartite_min needs r part sizes");
    }
    const int m1 = p.parts.front();
    if (m1 < 1 || std::any_of(p.parts.begin() + 1, p.parts.end(), [&](int x) { return x <= m1; })) {
      throw InputError("rpartite_min needs 1 <= m_1 < m_i for i >= 2");
    }
    return {p.r * (std::pow(1 + d, 1.0 / m1) - 1), "hub", "closed_form", 0};
  }
  if (family == "cycle") {
    if (!in_cycle_family(p.r, p.length)) {
      throw InputError("cycle length " + std::to_string(p.length) +
                       " outside the admissible set for r = " + std::to_string(p.r));
    }
    const Hypergraph h = tight_cycle(p.r, p.length);
    const BetaResult beta = beta_H_detail(h, d);
    consider(best, have, {std::pow(d, double(p.r) / p.length), "clique", "closed_form", 0});
    consider(best, have, {p.r * beta.beta, "hub", "closed_form", beta.residual});
    return best;
  }
  if (family == "cycle_subgraph") {
    if (!p.subgraph) throw InputError("cycle_subgraph needs the subgraph");
    if (!in_cycle_family(p.r, p.length)) throw InputError("cycle length outside the admissible set");
    const Hypergraph& h = *p.subgraph;
    if (h.uniformity() != p.r || h.vertex_count() != static_cast<std::size_t>(p.length) ||
        h.max_degree() != p.r) {
      throw InputError("cycle_subgraph must be on the cycle's vertices with maximum degree r");
    }
    const Hypergraph cycle = tight_cycle(p.r, p.length);
    for (const auto& e : h.edges()) {
      if (!std::binary_search(cycle.edges().begin(), cycle.edges().end(), e)) {
        throw InputError("cycle_subgraph has an edge outside the tight cycle");
      }
    }
    if (h.edge_count() == cycle.edge_count()) throw InputError("cycle_subgraph must be proper");
    const BetaResult beta = beta_H_detail(h, d);
    return {p.r * beta.beta, "hub", "closed_form", beta.residual};
  }
  if (family == "fano") return both(std::pow(d, 3.0 / 7.0), 3 * d / 7);
  if (family == "fano_minus_edge") return both(std::sqrt(d) / 2, d / 8);
  throw InputError("unknown closed-form family '" + family + "'");
}

// ---------------------------------------------------------------------------

SeparableResult minimize_separable(const std::vector<double>& costs,
                                   const std::vector<std::function<double(double)>>& h,
                                   double a) {
  if (costs.size() != h.size() || costs.empty()) {
    throw InputError("minimize_separable needs matching nonempty cost and function lists");
  }
  if (!(a >= 0)) throw InputError("target must be nonnegative");
  SeparableResult best;
  bool have = false;
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (!(costs[k] >= 0)) throw InputError("costs must be nonnegative");
    auto g = [&](Real x) { return static_cast<Real>(h[k](static_cast<double>(x))); };
    const Real x = invert_increasing(g, a);
    // Sampled monotonicity check on [0, 2x].
    const Real top = std::max<Real>(2 * x, 1);
    Real prev = g(0);
    for (int i = 1; i <= 64; ++i) {
      const Real cur = g(top * i / 64);
      if (cur < prev) throw InputError("separable component is not increasing");
      prev = cur;
    }
    const double value = costs[k] * static_cast<double>(x);
    if (!have || value < best.value) {
      best = {value, k, static_cast<double>(x)};
      have = true;
    }
  }
  return best;
}

bool in_cycle_family(int r, int length) {
  if (r < 2 || length <= r) return false;
  for (int i = 2; i * (r - 1) < length; ++i) {
    if (length <= i * r) return true;
  }
  return false;
}

namespace {

// k range from 1 + [r | l] to d.
std::pair<int, int> cycle_k_range(int length, int r) {
  const int d = std::gcd(length, r);
  return {1 + (length % r == 0 ? 1 : 0), d};
}

}  // namespace

bool cycle_constant_is_one(int length, int r) {
  const int d = std::gcd(length, r);
  const auto [lo, hi] = cycle_k_range(length, r);
  if (lo > hi) return false;
  bool attained = false;
  for (int k = lo; k <= hi; ++k) {
    // C(r, rk/d)^l vs C(d,k)^r.
    const BigInt left = boost::multiprecision::pow(big_binomial(r, r * k / d),
                                                   static_cast<unsigned>(length));
    const BigInt right = boost::multiprecision::pow(big_binomial(d, k), static_cast<unsigned>(r));
    if (left < right) return false;
    if (left == right) attained = true;
  }
  return attained;
}

double cycle_constant(int length, int r) {
  const int d = std::gcd(length, r);
  const auto [lo, hi] = cycle_k_range(length, r);
  double best = std::numeric_limits<double>::infinity();
  for (int k = lo; k <= hi; ++k) {
    const double term = std::exp(std::log(big_binomial(r, r * k / d).convert_to<double>()) -
                                 double(r) / length *
                                     std::log(big_binomial(d, k).convert_to<double>()));
    best = std::min(best, term);
  }
  return best;
}

}  // namespace tailrate
