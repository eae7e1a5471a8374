#include "tailrate/fractional.hpp"

#include "tailrate/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tailrate {

namespace mp = boost::multiprecision;

// ---------------------------------------------------------------------------
// Exact simplex

namespace {

// Dense tableau for max c^T x s.t. A x <= b, x >= 0 with b >= 0, so the slack
// basis is feasible and no phase one is needed.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational> c)
      : rows_(a.size()), structural_(c.size()), rhs_(std::move(b)) {
    const std::size_t cols = structural_ + rows_;
    body_.assign(rows_, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < structural_; ++j) body_[i][j] = a[i][j];
      body_[i][structural_ + i] = 1;
    }
    reduced_.assign(cols, Rational(0));
    for (std::size_t j = 0; j < structural_; ++j) reduced_[j] = c[j];
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) basis_[i] = structural_ + i;
  }

  void solve() {
    while (true) {
      // Bland: lowest-index improving column, then lowest-index basic variable on ties.
      std::size_t enter = reduced_.size();
      for (std::size_t j = 0; j < reduced_.size(); ++j) {
        if (reduced_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == reduced_.size()) return;

      std::size_t leave = rows_;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (body_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / body_[i][enter];
        if (leave == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_) throw std::logic_error("fractional matching LP reported unbounded");
      pivot(leave, enter);
    }
  }

  Rational objective() const { return objective_; }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(structural_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < structural_) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

  // Dual prices read off the slack columns of the final objective row.
  std::vector<Rational> dual() const {
    std::vector<Rational> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) y[i] = -reduced_[structural_ + i];
    return y;
  }

 private:
  void pivot(std::size_t row, std::size_t col) {
    const Rational p = body_[row][col];
    for (auto& x : body_[row]) x /= p;
    rhs_[row] /= p;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || body_[i][col] == 0) continue;
      const Rational f = body_[i][col];
      for (std::size_t j = 0; j < body_[i].size(); ++j) {
        if (body_[row][j] != 0) body_[i][j] -= f * body_[row][j];
      }
      rhs_[i] -= f * rhs_[row];
    }
    const Rational f = reduced_[col];
    for (std::size_t j = 0; j < reduced_.size(); ++j) {
      if (body_[row][j] != 0) reduced_[j] -= f * body_[row][j];
    }
    objective_ += f * rhs_[row];
    basis_[row] = col;
  }

  std::size_t rows_;
  std::size_t structural_;
  std::vector<std::vector<Rational>> body_;
  std::vector<Rational> rhs_;
  std::vector<Rational> reduced_;
  std::vector<std::size_t> basis_;
  Rational objective_ = 0;
};

}  // namespace

LPCertificate fractional_matching_number(const Hypergraph& h) {
  LPCertificate cert;
  cert.primal_weights.assign(h.edge_count(), Rational(0));
  cert.dual_weights.assign(h.vertex_count(), Rational(0));
  if (h.edge_count() == 0) return cert;

  std::vector<std::vector<Rational>> a(h.vertex_count(),
                                       std::vector<Rational>(h.edge_count(), Rational(0)));
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    for (Vertex v : h.edge(e)) a[v][e] = 1;
  }
  Tableau t(std::move(a), std::vector<Rational>(h.vertex_count(), Rational(1)),
            std::vector<Rational>(h.edge_count(), Rational(1)));
  t.solve();
  cert.value = t.objective();
  cert.primal_weights = t.primal();
  cert.dual_weights = t.dual();
  if (!verify_certificate(h, cert)) {
    throw std::logic_error("simplex produced an inconsistent duality certificate");
  }
  return cert;
}

bool verify_certificate(const Hypergraph& h, const LPCertificate& cert) {
  if (cert.primal_weights.size() != h.edge_count() ||
      cert.dual_weights.size() != h.vertex_count()) {
    return false;
  }
  std::vector<Rational> load(h.vertex_count(), Rational(0));
  Rational primal_total = 0;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const Rational& w = cert.primal_weights[e];
    if (w < 0) return false;
    primal_total += w;
    for (Vertex v : h.edge(e)) load[v] += w;
  }
  for (const auto& l : load) {
    if (l > 1) return false;
  }
  Rational dual_total = 0;
  for (const auto& y : cert.dual_weights) {
    if (y < 0) return false;
    dual_total += y;
  }
  for (const auto& e : h.edges()) {
    Rational s = 0;
    for (Vertex v : e) s += cert.dual_weights[v];
    if (s < 1) return false;
  }
  return primal_total == cert.value && dual_total == cert.value;
}

// ---------------------------------------------------------------------------
// Transversals

namespace {

class TransversalSearch {
 public:
  explicit TransversalSearch(const Hypergraph& h) : h_(h), hits_(h.edge_count(), 0) {
    order_.resize(h.vertex_count());
    for (Vertex v = 0; v < h.vertex_count(); ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
    rank_.resize(h.vertex_count());
    for (std::size_t i = 0; i < order_.size(); ++i) rank_[order_[i]] = i;
  }

  // Greedy count of pairwise disjoint uncovered edges; each needs its own vertex.
  int lower_bound() const {
    std::vector<char> used(h_.vertex_count(), 0);
    int count = 0;
    for (std::size_t e = 0; e < h_.edge_count(); ++e) {
      if (hits_[e] > 0) continue;
      const auto& edge = h_.edge(e);
      if (std::any_of(edge.begin(), edge.end(), [&](Vertex v) { return used[v] != 0; })) continue;
      for (Vertex v : edge) used[v] = 1;
      ++count;
    }
    return count;
  }

  std::size_t first_uncovered() const {
    for (std::size_t e = 0; e < h_.edge_count(); ++e) {
      if (hits_[e] == 0) return e;
    }
    return h_.edge_count();
  }

  void add(Vertex v) {
    chosen_.push_back(v);
    for (std::size_t e : h_.incident_edges(v)) ++hits_[e];
  }
  void remove(Vertex v) {
    chosen_.pop_back();
    for (std::size_t e : h_.incident_edges(v)) --hits_[e];
  }

  // Branch vertices of an edge, highest degree first.
  std::vector<Vertex> branch_order(std::size_t e) const {
    std::vector<Vertex> vs = h_.edge(e);
    std::sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) { return rank_[a] < rank_[b]; });
    return vs;
  }

  const std::vector<Vertex>& chosen() const { return chosen_; }

 private:
  const Hypergraph& h_;
  std::vector<int> hits_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> rank_;
  std::vector<Vertex> chosen_;
};

int ceil_rational(const Rational& x) {
  BigInt q = mp::numerator(x) / mp::denominator(x);
  if (q * mp::denominator(x) < mp::numerator(x)) ++q;
  return q.convert_to<int>();
}

}  // namespace

int transversal_number(const Hypergraph& h) {
  if (h.edge_count() == 0) return 0;
  const int root_bound = ceil_rational(fractional_matching_number(h).value);
  TransversalSearch search(h);
  int best = static_cast<int>(h.vertex_count());

  std::function<void()> dfs = [&]() {
    if (best == root_bound) return;
    const std::size_t e = search.first_uncovered();
    const int size = static_cast<int>(search.chosen().size());
    if (e == h.edge_count()) {
      best = std::min(best, size);
      return;
    }
    if (size + search.lower_bound() >= best) return;
    for (Vertex v : search.branch_order(e)) {
      search.add(v);
      dfs();
      search.remove(v);
    }
  };
  dfs();
  return best;
}

std::vector<VertexSet> minimal_transversals(const Hypergraph& h, std::size_t cap) {
  if (h.edge_count() == 0) return {VertexSet{}};
  const int tau = transversal_number(h);
  TransversalSearch search(h);
  std::set<VertexSet> found;

  std::function<void()> dfs = [&]() {
    const std::size_t e = search.first_uncovered();
    const int size = static_cast<int>(search.chosen().size());
    if (e == h.edge_count()) {
      if (size == tau) {
        VertexSet s = search.chosen();
        std::sort(s.begin(), s.end());
        found.insert(std::move(s));
        if (found.size() > cap) throw CapacityError("minimal transversal list exceeds cap");
      }
      return;
    }
    if (size + search.lower_bound() > tau) return;
    for (Vertex v : search.branch_order(e)) {
      search.add(v);
      dfs();
      search.remove(v);
    }
  };
  dfs();
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// Matchings

namespace {

class MatchingSearch {
 public:
  MatchingSearch(const Hypergraph& h, std::vector<std::size_t> candidates)
      : h_(h), candidates_(std::move(candidates)), used_(h.vertex_count(), 0) {}

  // Largest matching, stopping early once `target` edges are found.
  std::vector<std::size_t> run(int target) {
    best_.clear();
    target_ = target;
    current_.clear();
    dfs(0);
    return best_;
  }

 private:
  void dfs(std::size_t from) {
    if (current_.size() > best_.size()) best_ = current_;
    if (static_cast<int>(best_.size()) >= target_) return;
    // Bound by the free vertices still reachable.
    std::size_t free = 0;
    for (auto u : used_) free += u == 0 ? 1 : 0;
    const std::size_t reachable =
        std::min(candidates_.size() - from, free / static_cast<std::size_t>(h_.uniformity()));
    if (current_.size() + reachable <= best_.size()) return;
    for (std::size_t i = from; i < candidates_.size(); ++i) {
      const auto& e = h_.edge(candidates_[i]);
      if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return used_[v] != 0; })) continue;
      for (Vertex v : e) used_[v] = 1;
      current_.push_back(candidates_[i]);
      dfs(i + 1);
      current_.pop_back();
      for (Vertex v : e) used_[v] = 0;
      if (static_cast<int>(best_.size()) >= target_) return;
    }
  }

  const Hypergraph& h_;
  std::vector<std::size_t> candidates_;
  std::vector<char> used_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  int target_ = 0;
};

std::vector<std::size_t> edges_avoiding(const Hypergraph& h, std::optional<Vertex> v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    if (!v || !contains_edge(h.edge(i), *v)) out.push_back(i);
  }
  return out;
}

}  // namespace

int matching_number(const Hypergraph& h) {
  MatchingSearch search(h, edges_avoiding(h, std::nullopt));
  return static_cast<int>(search.run(static_cast<int>(h.edge_count())).size());
}

int max_matching_avoiding(const Hypergraph& h, Vertex v) {
  if (v >= h.vertex_count()) throw InputError("vertex out of range");
  MatchingSearch search(h, edges_avoiding(h, v));
  return static_cast<int>(search.run(static_cast<int>(h.edge_count())).size());
}

std::optional<std::vector<std::size_t>> find_matching_avoiding(const Hypergraph& h, Vertex v,
                                                               int k) {
  if (v >= h.vertex_count()) throw InputError("vertex out of range");
  if (k <= 0) return std::vector<std::size_t>{};
  MatchingSearch search(h, edges_avoiding(h, v));
  auto found = search.run(k);
  if (static_cast<int>(found.size()) < k) return std::nullopt;
  found.resize(static_cast<std::size_t>(k));
  return found;
}

}  // namespace tailrate
