#include "tailrate/labelings.hpp"

#include "tailrate/error.hpp"
#include "tailrate/fractional.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace tailrate {

namespace {

// ---------------------------------------------------------------------------
// Fraction-free Gauss-Jordan (Bareiss) on an integer system with `unknowns`
// columns plus one right-hand side column. On full column rank and a
// consistent system, fills num/den with x_i = num[i]/den, den > 0.

template <typename T>
bool bareiss_solve(std::vector<std::vector<T>>& a, std::size_t unknowns, std::vector<T>& num,
                   T& den) {
  const std::size_t rows = a.size();
  if (rows < unknowns) return false;
  T prev = 1;
  for (std::size_t k = 0; k < unknowns; ++k) {
    std::size_t pivot = k;
    while (pivot < rows && a[pivot][k] == 0) ++pivot;
    if (pivot == rows) return false;  // rank deficient
    if (pivot != k) std::swap(a[pivot], a[k]);
    const T p = a[k][k];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == k) continue;
      const T f = a[i][k];
      for (std::size_t j = 0; j <= unknowns; ++j) {
        if (j == k) continue;
        T v = p * a[i][j] - f * a[k][j];
        if (v % prev != 0) throw std::logic_error("inexact Bareiss division");
        a[i][j] = v / prev;
      }
      a[i][k] = 0;
    }
    prev = p;
  }
  for (std::size_t i = unknowns; i < rows; ++i) {
    if (a[i][unknowns] != 0) return false;  // inconsistent
  }
  den = prev;
  num.resize(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i) {
    if (a[i][i] != den) throw std::logic_error("Bareiss diagonal mismatch");
    num[i] = a[i][unknowns];
  }
  if (den < 0) {
    den = -den;
    for (auto& x : num) x = -x;
  }
  return true;
}

BigInt to_big(__int128 x) {
  const bool negative = x < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(x + 1)) + 1
                                 : static_cast<unsigned __int128>(x);
  BigInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return negative ? BigInt(-out) : out;
}

BigInt to_big(const BigInt& x) { return x; }

// Equation rows over block variables 1..blocks-1: one row per edge not inside
// the zero block, coefficient = number of edge vertices in that block, rhs 1.
struct BlockSystem {
  std::vector<std::vector<int>> rows;  // last entry is the rhs
  std::size_t unknowns = 0;
};

BlockSystem build_system(const Hypergraph& h, const std::vector<int>& block_of, int blocks) {
  BlockSystem sys;
  sys.unknowns = static_cast<std::size_t>(blocks - 1);
  for (const auto& e : h.edges()) {
    std::vector<int> row(sys.unknowns + 1, 0);
    bool any = false;
    for (Vertex v : e) {
      if (block_of[v] > 0) {
        ++row[static_cast<std::size_t>(block_of[v] - 1)];
        any = true;
      }
    }
    if (!any) continue;
    row[sys.unknowns] = 1;
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

// Unique solution with values in (0,1], pairwise distinct.
std::optional<std::vector<Rational>> solve_block_system(const BlockSystem& sys) {
  if (sys.unknowns == 0) return std::vector<Rational>{};
  // Hadamard-type bound on every minor of the augmented matrix.
  double log2_bound = 0;
  for (std::size_t j = 0; j <= sys.unknowns; ++j) {
    double sq = 0;
    for (const auto& row : sys.rows) sq += double(row[j]) * double(row[j]);
    if (sq > 1) log2_bound += 0.5 * std::log2(sq);
  }

  std::vector<BigInt> num;
  BigInt den;
  auto run = [&](auto zero) {
    using T = decltype(zero);
    std::vector<std::vector<T>> a(sys.rows.size(), std::vector<T>(sys.unknowns + 1));
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
      for (std::size_t j = 0; j <= sys.unknowns; ++j) a[i][j] = sys.rows[i][j];
    }
    std::vector<T> n;
    T d = 0;
    if (!bareiss_solve(a, sys.unknowns, n, d)) return false;
    // Cheap screening before leaving the fixed-width type.
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i] <= 0 || n[i] > d) return false;
      for (std::size_t j = 0; j < i; ++j) {
        if (n[i] == n[j]) return false;
      }
    }
    num.clear();
    for (const auto& x : n) num.push_back(to_big(x));
    den = to_big(d);
    return true;
  };
  const bool ok = log2_bound < 60 ? run(static_cast<__int128>(0)) : run(BigInt(0));
  if (!ok) return std::nullopt;
  std::vector<Rational> out;
  out.reserve(num.size());
  for (const auto& x : num) out.emplace_back(x, den);
  return out;
}

// Level-set partition of a labeling: block 0 is the zero set, then nonzero
// values in ascending order.
std::pair<std::vector<int>, std::vector<Rational>> level_partition(const Labeling& l) {
  std::vector<Rational> values = nonzero_values(l);
  std::vector<int> block_of(l.values.size(), 0);
  for (std::size_t v = 0; v < l.values.size(); ++v) {
    if (l.values[v] == 0) continue;
    auto it = std::lower_bound(values.begin(), values.end(), l.values[v]);
    block_of[v] = static_cast<int>(it - values.begin()) + 1;
  }
  return {block_of, values};
}

bool lexicographic_less(const Labeling& a, const Labeling& b) {
  return std::lexicographical_compare(a.values.begin(), a.values.end(), b.values.begin(),
                                      b.values.end());
}

}  // namespace

// ---------------------------------------------------------------------------

bool is_labeling(const Hypergraph& h, const Labeling& l) {
  if (l.values.size() != h.vertex_count()) return false;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (l.values[v] < 0 || l.values[v] > 1) return false;
    if (h.degree(v) < h.max_degree() && l.values[v] != 0) return false;
  }
  for (const auto& e : h.edges()) {
    Rational s = 0;
    for (Vertex v : e) s += l.values[v];
    if (s != 0 && s != 1) return false;
  }
  return true;
}

bool is_strict(const Hypergraph& h, const Labeling& l) {
  if (!is_labeling(h, l)) return false;
  for (const auto& e : h.edges()) {
    Rational s = 0;
    for (Vertex v : e) s += l.values[v];
    if (s != 1) return false;
  }
  return true;
}

bool is_stable(const Hypergraph& h, const Labeling& l) {
  if (!is_labeling(h, l)) return false;
  auto [block_of, values] = level_partition(l);
  const BlockSystem sys = build_system(h, block_of, static_cast<int>(values.size()) + 1);
  // The edge-sum pattern must be the forced one: sum 0 exactly on edges inside the zero set.
  for (const auto& e : h.edges()) {
    Rational s = 0;
    for (Vertex v : e) s += l.values[v];
    const bool inside_zero =
        std::all_of(e.begin(), e.end(), [&](Vertex v) { return block_of[v] == 0; });
    if (inside_zero != (s == 0)) return false;
  }
  auto solved = solve_block_system(sys);
  return solved && *solved == values;
}

LabelingSet enumerate_stable_labelings(const Hypergraph& h, std::size_t cap) {
  LabelingSet out;
  out.owner = h;
  const std::size_t n = h.vertex_count();
  std::vector<Vertex> top;
  if (h.max_degree() > 0) {
    for (Vertex v = 0; v < n; ++v) {
      if (h.degree(v) == h.max_degree()) top.push_back(v);
    }
  }
  if (top.size() > cap) {
    throw CapacityError("stable labeling enumeration: " + std::to_string(top.size()) +
                        " maximum-degree vertices exceed cap " + std::to_string(cap));
  }

  // Restricted growth strings over [zero sentinel, top...]; the sentinel's block
  // is the zero block.
  std::vector<int> block_of(n, 0);
  std::vector<Labeling> found;

  auto leaf = [&](int blocks) {
    const BlockSystem sys = build_system(h, block_of, blocks);
    auto solved = solve_block_system(sys);
    if (!solved) return;
    Labeling l;
    l.values.assign(n, Rational(0));
    for (Vertex v : top) {
      if (block_of[v] > 0) l.values[v] = (*solved)[static_cast<std::size_t>(block_of[v] - 1)];
    }
    found.push_back(std::move(l));
  };

  auto recurse = [&](auto&& self, std::size_t i, int blocks) -> void {
    if (i == top.size()) {
      leaf(blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block_of[top[i]] = b;
      self(self, i + 1, b == blocks ? blocks + 1 : blocks);
    }
    block_of[top[i]] = 0;
  };
  recurse(recurse, 0, 1);

  std::sort(found.begin(), found.end(), lexicographic_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (const auto& l : found) {
    if (!is_labeling(h, l)) throw std::logic_error("enumerated labeling violates edge constraints");
  }
  out.labelings = std::move(found);
  return out;
}

bool strict_by_lp(const Hypergraph& h) {
  const Rational nu = fractional_matching_number(h).value;
  return nu * h.max_degree() == Rational(static_cast<long long>(h.edge_count()));
}

bool has_strict_stable_labeling(const Hypergraph& h, std::size_t cap) {
  const LabelingSet set = enumerate_stable_labelings(h, cap);
  const bool by_scan = std::any_of(set.labelings.begin(), set.labelings.end(),
                                   [&](const Labeling& l) { return is_strict(h, l); });
  const bool by_lp = strict_by_lp(h);
  if (by_scan != by_lp) {
    throw std::logic_error("strict stable labeling scan disagrees with the LP criterion");
  }
  return by_scan;
}

Subgraph supporting_subgraph(const Hypergraph& h, const Labeling& l) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    Rational s = 0;
    for (Vertex v : h.edge(i)) s += l.values[v];
    if (s == 1) kept.push_back(i);
  }
  return edge_subgraph(h, std::move(kept));
}

Labeling restrict_labeling(const Labeling& l, const Subgraph& f) {
  Labeling out;
  for (Vertex v : f.to_parent) out.values.push_back(l.values[v]);
  return out;
}

std::vector<Rational> nonzero_values(const Labeling& l) {
  std::vector<Rational> out;
  for (const auto& x : l.values) {
    if (x != 0) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Rational> single_value(const Labeling& l) {
  auto values = nonzero_values(l);
  if (values.size() != 1) return std::nullopt;
  return values.front();
}

std::size_t support_size(const Labeling& l) {
  return static_cast<std::size_t>(
      std::count_if(l.values.begin(), l.values.end(), [](const Rational& x) { return x != 0; }));
}

// ---------------------------------------------------------------------------

std::vector<TupleClass> TupleSet::nonzero() const {
  std::vector<TupleClass> out;
  for (const auto& c : classes) {
    if (std::any_of(c.tuple.begin(), c.tuple.end(), [](const Rational& x) { return x != 0; })) {
      out.push_back(c);
    }
  }
  return out;
}

std::uint64_t TupleSet::nonzero_cardinality() const {
  std::uint64_t total = 0;
  for (const auto& c : nonzero()) total += c.orbit_size;
  return total;
}

TupleSet tuple_set(const LabelingSet& set) {
  const Hypergraph& h = set.owner;
  std::set<std::vector<Rational>> reps;
  for (const auto& l : set.labelings) {
    for (const auto& e : h.edges()) {
      std::vector<Rational> t;
      for (Vertex v : e) t.push_back(l.values[v]);
      std::sort(t.begin(), t.end());
      reps.insert(std::move(t));
    }
  }
  TupleSet out;
  for (const auto& t : reps) {
    std::uint64_t orbit = 1;
    for (std::uint64_t i = 2; i <= t.size(); ++i) orbit *= i;
    std::size_t i = 0;
    while (i < t.size()) {
      std::size_t j = i;
      while (j < t.size() && t[j] == t[i]) ++j;
      for (std::uint64_t k = 2; k <= j - i; ++k) orbit /= k;
      i = j;
    }
    out.classes.push_back({t, orbit});
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Subgraph> critical_subgraphs(const Hypergraph& h, std::size_t cap) {
  const LabelingSet set = enumerate_stable_labelings(h, cap);
  std::set<std::vector<std::size_t>> seen;
  std::vector<Subgraph> out;
  for (const auto& l : set.labelings) {
    Subgraph f = supporting_subgraph(h, l);
    const std::size_t m = f.parent_edges.size();
    if (m == 0 || m == h.edge_count()) continue;
    if (!seen.insert(f.parent_edges).second) continue;
    if (f.graph.max_degree() != h.max_degree()) continue;
    const Rational nu = fractional_matching_number(f.graph).value;
    if (nu * h.max_degree() != Rational(static_cast<long long>(m))) continue;
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(),
            [](const Subgraph& a, const Subgraph& b) { return a.parent_edges < b.parent_edges; });
  return out;
}

std::vector<VertexSet> star_independent_sets(const Hypergraph& h) {
  const Subgraph core = star_core(h);
  std::vector<VertexSet> out;
  for_each_independent_set(core.graph, [&](const VertexSet& s) {
    VertexSet mapped;
    for (Vertex v : s) mapped.push_back(core.to_parent[v]);
    std::sort(mapped.begin(), mapped.end());
    out.push_back(std::move(mapped));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgraph> f_star_family(const Hypergraph& h) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<Subgraph> out;
  if (h.max_degree() == 0) return out;
  for (const auto& s : star_independent_sets(h)) {
    if (s.empty()) continue;
    Subgraph f = star_of_set(h, s);
    if (f.parent_edges.size() == h.edge_count()) continue;
    if (!seen.insert(f.parent_edges).second) continue;
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(),
            [](const Subgraph& a, const Subgraph& b) { return a.parent_edges < b.parent_edges; });
  return out;
}

std::vector<VertexSet> spanning_independent_sets(const Hypergraph& h) {
  std::vector<VertexSet> out;
  if (h.max_degree() == 0) return out;
  for (const auto& s : star_independent_sets(h)) {
    if (star_of_set(h, s).parent_edges.size() == h.edge_count()) out.push_back(s);
  }
  return out;
}

}  // namespace tailrate
