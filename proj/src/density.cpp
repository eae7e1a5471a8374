#include "tailrate/density.hpp"

#include "tailrate/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

namespace tailrate {

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

namespace {

void check_q(double q) {
  if (!(q >= 0 && q <= 1)) throw InputError("edge weight must lie in [0,1]");
}

std::uint64_t checked_power(int n, std::size_t k) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (out > (std::uint64_t{1} << 34) / static_cast<std::uint64_t>(std::max(n, 1))) {
      throw CapacityError("contraction tensor too large");
    }
    out *= static_cast<std::uint64_t>(n);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// WeightedRGraph

WeightedRGraph::WeightedRGraph(int n, int r, double default_q)
    : n_(n), r_(r), default_q_(default_q) {
  if (r < 1 || n < 0) throw InputError("weighted graph needs r >= 1 and n >= 0");
  check_q(default_q);
  slots_ = binomial_u64(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r));
}

std::uint64_t WeightedRGraph::rank(const Edge& e) const {
  if (static_cast<int>(e.size()) != r_) throw InputError("r-set has the wrong size");
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] >= static_cast<Vertex>(n_) || (i > 0 && e[i] <= e[i - 1])) {
      throw InputError("r-set must be sorted, distinct and in range");
    }
    out += binomial_u64(e[i], i + 1);
  }
  return out;
}

Edge WeightedRGraph::unrank(std::uint64_t rank) const {
  if (rank >= slots_) throw InputError("rank out of range");
  Edge e(static_cast<std::size_t>(r_));
  std::uint64_t c = static_cast<std::uint64_t>(n_);
  for (int i = r_; i >= 1; --i) {
    while (binomial_u64(c, static_cast<std::uint64_t>(i)) > rank) --c;
    e[static_cast<std::size_t>(i - 1)] = static_cast<Vertex>(c);
    rank -= binomial_u64(c, static_cast<std::uint64_t>(i));
  }
  return e;
}

double WeightedRGraph::q(const Edge& e) const { return q_rank(rank(e)); }

double WeightedRGraph::q_rank(std::uint64_t rank) const {
  auto it = overrides_.find(rank);
  return it == overrides_.end() ? default_q_ : it->second;
}

void WeightedRGraph::set(const Edge& e, double q) { set_rank(rank(e), q); }

void WeightedRGraph::set_rank(std::uint64_t rank, double q) {
  if (rank >= slots_) throw InputError("rank out of range");
  check_q(q);
  if (q == default_q_) {
    overrides_.erase(rank);
  } else {
    overrides_[rank] = q;
  }
}

std::vector<double> WeightedRGraph::to_dense() const {
  std::vector<double> out(static_cast<std::size_t>(slots_), default_q_);
  for (const auto& [k, v] : overrides_) out[static_cast<std::size_t>(k)] = v;
  return out;
}

WeightedRGraph WeightedRGraph::from_dense(int n, int r, double default_q,
                                          const std::vector<double>& q) {
  WeightedRGraph g(n, r, default_q);
  if (q.size() != g.slots_) throw InputError("dense weight vector has the wrong length");
  for (std::size_t i = 0; i < q.size(); ++i) g.set_rank(i, q[i]);
  return g;
}

// ---------------------------------------------------------------------------
// Contraction

ContractionPlan make_plan(int variable_count, const std::vector<std::vector<int>>& factor_vars,
                          const std::vector<int>& keep) {
  const auto nv = static_cast<std::size_t>(variable_count);
  std::vector<std::set<int>> adj(nv);
  for (const auto& vars : factor_vars) {
    for (int a : vars) {
      for (int b : vars) {
        if (a != b) adj[static_cast<std::size_t>(a)].insert(b);
      }
    }
  }
  std::vector<char> alive(nv, 1);
  std::vector<char> kept(nv, 0);
  for (int v : keep) kept[static_cast<std::size_t>(v)] = 1;

  ContractionPlan plan;
  plan.width = keep.size();
  std::size_t remaining = 0;
  for (std::size_t v = 0; v < nv; ++v) remaining += kept[v] ? 0 : 1;
  while (remaining-- > 0) {
    int best = -1;
    std::size_t best_fill = 0;
    std::size_t best_deg = 0;
    for (std::size_t v = 0; v < nv; ++v) {
      if (!alive[v] || kept[v]) continue;
      std::size_t fill = 0;
      for (int a : adj[v]) {
        for (int b : adj[v]) {
          if (a < b && !adj[static_cast<std::size_t>(a)].count(b)) ++fill;
        }
      }
      if (best < 0 || fill < best_fill || (fill == best_fill && adj[v].size() < best_deg)) {
        best = static_cast<int>(v);
        best_fill = fill;
        best_deg = adj[v].size();
      }
    }
    const auto bv = static_cast<std::size_t>(best);
    std::vector<int> support{best};
    support.insert(support.end(), adj[bv].begin(), adj[bv].end());
    for (int a : adj[bv]) {
      for (int b : adj[bv]) {
        if (a != b) adj[static_cast<std::size_t>(a)].insert(b);
      }
      adj[static_cast<std::size_t>(a)].erase(best);
    }
    adj[bv].clear();
    alive[bv] = 0;
    plan.order.push_back(best);
    plan.width = std::max(plan.width, support.size());
    plan.supports.push_back(std::move(support));
  }
  return plan;
}

namespace {

// Multiply factors over `order` and sum out the first `summed` positions.
Factor product_sum(int n, const std::vector<const Factor*>& factors, const std::vector<int>& order,
                   std::size_t summed) {
  const std::size_t u = order.size();
  const std::uint64_t total = checked_power(n, u);
  const std::uint64_t block = checked_power(n, summed);
  const std::size_t k = factors.size();
  std::vector<std::vector<std::uint64_t>> stride(k, std::vector<std::uint64_t>(u, 0));
  for (std::size_t f = 0; f < k; ++f) {
    std::uint64_t s = 1;
    for (int var : factors[f]->vars) {
      const auto pos = static_cast<std::size_t>(std::find(order.begin(), order.end(), var) - order.begin());
      stride[f][pos] = s;
      s *= static_cast<std::uint64_t>(n);
    }
  }
  Factor out;
  out.vars.assign(order.begin() + static_cast<std::ptrdiff_t>(summed), order.end());
  out.table.assign(static_cast<std::size_t>(total / block), 0.0);
  std::vector<int> digit(u, 0);
  std::vector<std::uint64_t> idx(k, 0);
  const auto nn = static_cast<std::uint64_t>(n);
  for (std::uint64_t flat = 0; flat < total; ++flat) {
    double prod = 1;
    for (std::size_t f = 0; f < k && prod != 0; ++f) prod *= factors[f]->table[idx[f]];
    out.table[static_cast<std::size_t>(flat / block)] += prod;
    for (std::size_t j = 0; j < u; ++j) {
      if (++digit[j] < n) {
        for (std::size_t f = 0; f < k; ++f) idx[f] += stride[f][j];
        break;
      }
      digit[j] = 0;
      for (std::size_t f = 0; f < k; ++f) idx[f] -= stride[f][j] * (nn - 1);
    }
  }
  return out;
}

}  // namespace

Factor contract(int n, int variable_count, std::vector<Factor> factors, const std::vector<int>& keep) {
  std::vector<std::vector<int>> vars;
  for (const auto& f : factors) vars.push_back(f.vars);
  const ContractionPlan plan = make_plan(variable_count, vars, keep);
  std::vector<Factor> pool = std::move(factors);
  for (int v : plan.order) {
    std::vector<Factor> touching;
    std::vector<Factor> rest;
    for (auto& f : pool) {
      if (std::find(f.vars.begin(), f.vars.end(), v) != f.vars.end()) {
        touching.push_back(std::move(f));
      } else {
        rest.push_back(std::move(f));
      }
    }
    std::set<int> others;
    for (const auto& f : touching) {
      for (int w : f.vars) {
        if (w != v) others.insert(w);
      }
    }
    std::vector<int> order{v};
    order.insert(order.end(), others.begin(), others.end());
    std::vector<const Factor*> ptrs;
    for (const auto& f : touching) ptrs.push_back(&f);
    rest.push_back(product_sum(n, ptrs, order, 1));
    pool = std::move(rest);
  }
  std::vector<const Factor*> ptrs;
  for (const auto& f : pool) ptrs.push_back(&f);
  return product_sum(n, ptrs, keep, 0);
}

namespace {

// For each flat index of [n]^r: colex rank of the underlying set, or -1.
std::vector<std::int64_t> flat_ranks(const WeightedRGraph& q) {
  const int n = q.n();
  const int r = q.r();
  const std::uint64_t total = checked_power(n, static_cast<std::size_t>(r));
  std::vector<std::int64_t> out(static_cast<std::size_t>(total), -1);
  std::vector<Vertex> digits(static_cast<std::size_t>(r), 0);
  for (std::uint64_t flat = 0; flat < total; ++flat) {
    std::uint64_t x = flat;
    for (int i = 0; i < r; ++i) {
      digits[static_cast<std::size_t>(i)] = static_cast<Vertex>(x % static_cast<std::uint64_t>(n));
      x /= static_cast<std::uint64_t>(n);
    }
    Edge e = digits;
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) continue;
    out[static_cast<std::size_t>(flat)] = static_cast<std::int64_t>(q.rank(e));
  }
  return out;
}

void check_uniformity(const Hypergraph& h, const WeightedRGraph& q) {
  if (h.uniformity() != q.r()) throw InputError("uniformity mismatch between pattern and weights");
  if (q.n() < 1) throw InputError("weighted graph needs n >= 1");
}

std::vector<Factor> edge_factors(const Hypergraph& h, const std::vector<double>& kernel,
                                 std::optional<std::size_t> skip = std::nullopt) {
  std::vector<Factor> out;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    if (skip && *skip == i) continue;
    Factor f;
    for (Vertex v : h.edge(i)) f.vars.push_back(static_cast<int>(v));
    f.table = kernel;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::vector<double> kernel_tensor(const WeightedRGraph& q) {
  const auto ranks = flat_ranks(q);
  const auto dense = q.to_dense();
  std::vector<double> out(ranks.size(), 0.0);
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] >= 0) out[i] = dense[static_cast<std::size_t>(ranks[i])];
  }
  return out;
}

double t_density(const Hypergraph& h, const WeightedRGraph& q) {
  check_uniformity(h, q);
  const auto kernel = kernel_tensor(q);
  const int nv = static_cast<int>(h.vertex_count());
  Factor total = contract(q.n(), nv, edge_factors(h, kernel));
  return total.table.at(0) / std::pow(static_cast<double>(q.n()), nv);
}

std::vector<double> t_gradient(const Hypergraph& h, const WeightedRGraph& q) {
  check_uniformity(h, q);
  const auto ranks = flat_ranks(q);
  const auto kernel = kernel_tensor(q);
  const int nv = static_cast<int>(h.vertex_count());
  const double norm = std::pow(static_cast<double>(q.n()), nv);
  std::vector<double> grad(static_cast<std::size_t>(q.slot_count()), 0.0);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    std::vector<int> keep;
    for (Vertex v : h.edge(i)) keep.push_back(static_cast<int>(v));
    Factor m = contract(q.n(), nv, edge_factors(h, kernel, i), keep);
    for (std::size_t flat = 0; flat < ranks.size(); ++flat) {
      if (ranks[flat] >= 0) grad[static_cast<std::size_t>(ranks[flat])] += m.table[flat];
    }
  }
  for (auto& g : grad) g /= norm;
  return grad;
}

double t_density_bruteforce(const Hypergraph& h, const WeightedRGraph& q) {
  check_uniformity(h, q);
  const int n = q.n();
  const std::size_t nv = h.vertex_count();
  const std::uint64_t total = checked_power(n, nv);
  const auto dense = q.to_dense();
  std::vector<Vertex> x(nv, 0);
  double sum = 0;
  for (std::uint64_t flat = 0; flat < total; ++flat) {
    std::uint64_t y = flat;
    for (std::size_t i = 0; i < nv; ++i) {
      x[i] = static_cast<Vertex>(y % static_cast<std::uint64_t>(n));
      y /= static_cast<std::uint64_t>(n);
    }
    double prod = 1;
    for (const auto& e : h.edges()) {
      Edge img;
      for (Vertex v : e) img.push_back(x[v]);
      std::sort(img.begin(), img.end());
      if (std::adjacent_find(img.begin(), img.end()) != img.end()) {
        prod = 0;
        break;
      }
      prod *= dense[static_cast<std::size_t>(q.rank(img))];
      if (prod == 0) break;
    }
    sum += prod;
  }
  return sum / std::pow(static_cast<double>(n), static_cast<double>(nv));
}

// ---------------------------------------------------------------------------
// Entropies

double i_p(double q, double p) {
  if (!(p > 0 && p < 1)) throw InputError("p must lie in (0,1)");
  if (!(q >= 0 && q <= 1)) throw InputError("q must lie in [0,1]");
  double out = 0;
  if (q > 0) out += q * std::log(q / p);
  if (q < 1) out += (1 - q) * std::log((1 - q) / (1 - p));
  return out;
}

double j_p(double x, double p) {
  if (!(p > 0 && p < 1)) throw InputError("p must lie in (0,1)");
  if (!(x >= -p && x <= 1 - p)) throw InputError("x must lie in [-p, 1-p]");
  const double q = std::clamp(p + x, 0.0, 1.0);
  return i_p(q, p) / std::log(1 / p);
}

double entropy_Ip(const WeightedRGraph& q, double p) {
  const double defaults =
      static_cast<double>(q.slot_count() - q.overrides().size()) * i_p(q.default_q(), p);
  double over = 0;
  for (const auto& [rank, value] : q.overrides()) over += i_p(value, p);
  return defaults + over;
}

// ---------------------------------------------------------------------------
// Sampling and planted constructions

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

WeightedRGraph sample_gnp(int n, double p, int r, std::uint64_t seed) {
  if (!(p >= 0 && p <= 1)) throw InputError("p must lie in [0,1]");
  WeightedRGraph g(n, r, p == 1 ? 1.0 : 0.0);
  if (p == 0 || p == 1) return g;
  const std::uint64_t base = splitmix64(seed);
  for (std::uint64_t i = 0; i < g.slot_count(); ++i) {
    const std::uint64_t bits = splitmix64(base ^ splitmix64(i));
    const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
    if (u < p) g.set_rank(i, 1.0);
  }
  return g;
}

Planted plant_clique(int n, int r, double p, int m, VertexSet vertices) {
  if (!(p > 0 && p < 1)) throw InputError("p must lie in (0,1)");
  if (m < 0 || m > n) throw InputError("clique size must lie in [0, n]");
  if (vertices.empty()) {
    for (int v = 0; v < m; ++v) vertices.push_back(static_cast<Vertex>(v));
  }
  std::sort(vertices.begin(), vertices.end());
  if (static_cast<int>(vertices.size()) != m ||
      std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end() ||
      (!vertices.empty() && vertices.back() >= static_cast<Vertex>(n))) {
    throw InputError("clique vertex set must have m distinct vertices in range");
  }
  Planted out{WeightedRGraph(n, r, p), 0};
  if (m >= r) {
    std::vector<std::size_t> pick(static_cast<std::size_t>(r));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      Edge e;
      for (std::size_t i : pick) e.push_back(vertices[i]);
      out.graph.set(e, 1.0);
      int i = r - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == static_cast<std::size_t>(m - r + i)) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < r; ++j) {
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  out.cost = entropy_Ip(out.graph, p);
  return out;
}

Planted plant_hubs(int n, int r, double p, const VertexSet& hubs) {
  if (!(p > 0 && p < 1)) throw InputError("p must lie in (0,1)");
  std::vector<char> is_hub(static_cast<std::size_t>(n), 0);
  for (Vertex v : hubs) {
    if (v >= static_cast<Vertex>(n)) throw InputError("hub vertex out of range");
    is_hub[v] = 1;
  }
  Planted out{WeightedRGraph(n, r, p), 0};
  for (std::uint64_t i = 0; i < out.graph.slot_count(); ++i) {
    const Edge e = out.graph.unrank(i);
    if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return is_hub[v] != 0; })) {
      out.graph.set_rank(i, 1.0);
    }
  }
  out.cost = entropy_Ip(out.graph, p);
  return out;
}

// ---------------------------------------------------------------------------
// NMF upper bound

namespace {

constexpr double kFeasSlack = 1e-12;
constexpr double kUpper = 1 - 1e-9;

double dense_entropy(const std::vector<double>& y, double p) {
  double s = 0;
  for (double q : y) s += i_p(q, p);
  return s;
}

}  // namespace

NmfResult nmf_upper_bound(const Hypergraph& h, int n, double p, double delta,
                          const NmfOptions& options) {
  const int r = h.uniformity();
  if (n < r) throw InputError("n must be at least r");
  if (!(p > 0 && p < 1)) throw InputError("p must lie in (0,1)");
  if (!(delta >= 0) || !std::isfinite(delta)) throw InputError("delta must be nonnegative");
  if (h.edge_count() == 0) throw InputError("pattern graph needs at least one edge");

  NmfResult out;
  out.target = (1 + delta) * std::pow(p, static_cast<double>(h.edge_count()));
  if (delta == 0) {
    out.graph = WeightedRGraph(n, r, p);
    out.density = t_density(h, out.graph);
    out.feasible = true;
    out.swept_construction = "constant";
    return out;
  }

  // Sweep planted cliques and hubs; costs grow with size, so stop at the first feasible.
  std::optional<Planted> best;
  Planted densest{WeightedRGraph(n, r, p), 0};
  double densest_t = -1;
  auto consider = [&](Planted cand, const std::string& name) {
    const double t = t_density(h, cand.graph);
    if (t > densest_t) {
      densest_t = t;
      densest = cand;
    }
    if (t < out.target - kFeasSlack) return false;
    if (!best || cand.cost < best->cost) {
      best = std::move(cand);
      out.swept_construction = name;
    }
    return true;
  };
  for (int m = r; m <= n; ++m) {
    if (consider(plant_clique(n, r, p, m), "clique:" + std::to_string(m))) break;
  }
  VertexSet hubs;
  for (int s = 1; s <= n; ++s) {
    hubs.push_back(static_cast<Vertex>(s - 1));
    if (consider(plant_hubs(n, r, p, hubs), "hubs:" + std::to_string(s))) break;
  }
  out.swept_value = best ? best->cost : std::numeric_limits<double>::infinity();

  const Planted& start = best ? *best : densest;
  std::vector<double> y = start.graph.to_dense();
  for (auto& q : y) q = std::clamp(q, p, kUpper);
  const double scale = std::max(start.cost, 1e-12);

  std::optional<std::vector<double>> best_y;
  double best_value = std::numeric_limits<double>::infinity();
  double best_t = 0;
  std::vector<double> closest = y;
  double closest_gap = std::numeric_limits<double>::infinity();

  auto density_of = [&](const std::vector<double>& v) {
    return t_density(h, WeightedRGraph::from_dense(n, r, p, v));
  };
  auto record = [&](const std::vector<double>& v, double t) {
    const double cost = dense_entropy(v, p);
    if (t >= out.target - kFeasSlack) {
      if (cost < best_value) {
        best_value = cost;
        best_y = v;
        best_t = t;
      }
    } else if (out.target - t < closest_gap) {
      closest_gap = out.target - t;
      closest = v;
    }
  };

  double lambda = 0;
  double mu = 10;
  double eta = 1e-2;
  double prev_violation = std::numeric_limits<double>::infinity();
  auto lagrangian = [&](const std::vector<double>& v, double t) {
    const double g = 1 - t / out.target;
    const double shifted = std::max(0.0, g + lambda / mu);
    return dense_entropy(v, p) / scale + 0.5 * mu * shifted * shifted;
  };

  double t_now = density_of(y);
  record(y, t_now);
  while (out.gradient_evaluations < options.budget) {
    for (int inner = 0; inner < 50 && out.gradient_evaluations < options.budget; ++inner) {
      const auto gt = t_gradient(h, WeightedRGraph::from_dense(n, r, p, y));
      ++out.gradient_evaluations;
      const double g = 1 - t_now / out.target;
      const double shifted = std::max(0.0, g + lambda / mu);
      std::vector<double> grad(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) {
        const double di = std::log(y[i] * (1 - p) / (p * (1 - y[i])));
        grad[i] = di / scale - mu * shifted * gt[i] / out.target;
      }
      const double l_now = lagrangian(y, t_now);
      bool moved = false;
      std::vector<double> trial(y.size());
      double t_trial = t_now;
      double step = 0;
      for (int ls = 0; ls < 40; ++ls) {
        step = 0;
        for (std::size_t i = 0; i < y.size(); ++i) {
          trial[i] = std::clamp(y[i] - eta * grad[i], p, kUpper);
          step += (trial[i] - y[i]) * (trial[i] - y[i]);
        }
        t_trial = density_of(trial);
        if (lagrangian(trial, t_trial) <= l_now - 1e-4 / eta * step) {
          moved = true;
          break;
        }
        eta /= 2;
      }
      if (!moved) break;
      y = trial;
      t_now = t_trial;
      record(y, t_now);
      eta *= 2;
      if (std::sqrt(step) < 1e-12) break;
    }
    const double g = 1 - t_now / out.target;
    lambda = std::max(0.0, lambda + mu * g);
    const double violation = std::max(0.0, g);
    if (violation > 0.25 * prev_violation) mu *= 2;
    prev_violation = violation;
    if (mu > 1e12) break;
  }

  if (best && best->cost <= best_value) {
    out.graph = best->graph;
    out.value = best->cost;
    out.density = t_density(h, best->graph);
    out.feasible = true;
  } else if (best_y) {
    out.graph = WeightedRGraph::from_dense(n, r, p, *best_y);
    out.value = best_value;
    out.density = best_t;
    out.feasible = true;
  } else {
    out.graph = WeightedRGraph::from_dense(n, r, p, closest);
    out.value = dense_entropy(closest, p);
    out.density = density_of(closest);
    out.feasible = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Finner

FinnerResult finner_check(const Hypergraph& f, int s, const std::vector<std::vector<double>>& tables,
                          const std::vector<double>& lambda) {
  const std::size_t m = f.edge_count();
  if (s < 1) throw InputError("ground set must be nonempty");
  if (tables.size() != m || lambda.size() != m) {
    throw InputError("need one table and one weight per edge");
  }
  const std::uint64_t cells = checked_power(s, static_cast<std::size_t>(f.uniformity()));
  for (const auto& t : tables) {
    if (t.size() != cells) throw InputError("table has the wrong size");
    for (double x : t) {
      if (!(x >= 0) || !std::isfinite(x)) throw InputError("tables must be finite and nonnegative");
    }
  }
  for (double l : lambda) {
    if (!(l >= 0 && l <= 1)) throw InputError("weights must lie in [0,1]");
  }
  for (Vertex v = 0; v < f.vertex_count(); ++v) {
    double load = 0;
    for (std::size_t e : f.incident_edges(v)) load += lambda[e];
    if (load > 1 + 1e-12) throw InputError("weights exceed 1 at a vertex");
  }

  std::vector<Factor> factors;
  for (std::size_t e = 0; e < m; ++e) {
    Factor fac;
    for (Vertex v : f.edge(e)) fac.vars.push_back(static_cast<int>(v));
    fac.table = tables[e];
    factors.push_back(std::move(fac));
  }
  const int nv = static_cast<int>(f.vertex_count());
  FinnerResult out;
  out.lhs = contract(s, nv, std::move(factors)).table.at(0) / std::pow(double(s), nv);
  out.rhs = 1;
  for (std::size_t e = 0; e < m; ++e) {
    // scaled by the max so large exponents do not underflow
    const double top = *std::max_element(tables[e].begin(), tables[e].end());
    double norm = top;
    if (lambda[e] > 0 && top > 0) {
      double acc = 0;
      for (double x : tables[e]) acc += std::pow(x / top, 1 / lambda[e]);
      norm = top * std::pow(acc / static_cast<double>(cells), lambda[e]);
    }
    out.rhs *= norm;
  }
  out.holds = out.lhs <= out.rhs + 1e-10;
  return out;
}

FinnerResult finner_corollary(const Hypergraph& f, int s, const std::vector<double>& table) {
  if (f.max_degree() == 0) throw InputError("pattern needs an edge");
  std::vector<std::vector<double>> tables(f.edge_count(), table);
  std::vector<double> lambda(f.edge_count(), 1.0 / f.max_degree());
  return finner_check(f, s, tables, lambda);
}

}  // namespace tailrate
