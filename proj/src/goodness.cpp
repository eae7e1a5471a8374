#include "tailrate/goodness.hpp"

#include "tailrate/error.hpp"
#include "tailrate/fractional.hpp"

#include <algorithm>
#include <stdexcept>

namespace tailrate {

GoodnessReport check_good(const Hypergraph& f, int delta) {
  GoodnessReport rep;
  rep.subject = f;
  rep.delta = delta > 0 ? delta : f.max_degree();
  rep.tau = transversal_number(f);
  const auto m = static_cast<int>(f.edge_count());
  if (rep.delta == 0) {
    if (m == 0) rep.k = 0;
  } else if (m % rep.delta == 0) {
    rep.k = m / rep.delta;
  }
  if (!rep.k || rep.tau != *rep.k) return rep;

  auto all = minimal_transversals(f);
  if (all.size() != 1) {
    rep.counter_witness = {all[0], all[1]};
    return rep;
  }
  rep.is_good = true;
  rep.transversal = all.front();
  // A transversal of size |E|/Delta is independent and sits on maximum-degree vertices.
  if (!is_independent(f, rep.transversal)) {
    throw std::logic_error("good subgraph with a non-independent minimal transversal");
  }
  for (Vertex v : rep.transversal) {
    if (f.degree(v) != rep.delta) {
      throw std::logic_error("good subgraph transversal vertex below maximum degree");
    }
  }
  return rep;
}

VgResult check_vg1(const Hypergraph& f, const VertexSet& s) {
  VgResult out;
  out.holds = true;
  const int k = static_cast<int>(s.size());
  for (Vertex v = 0; v < f.vertex_count(); ++v) {
    if (std::binary_search(s.begin(), s.end(), v)) continue;
    auto found = find_matching_avoiding(f, v, k);
    if (!found) {
      out.holds = false;
      out.failing_vertex = v;
      return out;
    }
    out.vg1.push_back({v, *found});
  }
  return out;
}

namespace {

// Every edge of f meets the independent transversal s exactly once, so F'
// takes two edges at v and one at every other member of s.
class Vg2Search {
 public:
  Vg2Search(const Hypergraph& f, const VertexSet& s, std::uint64_t budget)
      : f_(f), s_(s), budget_(budget), deg_(f.vertex_count(), 0) {
    in_s_.assign(f.vertex_count(), 0);
    for (Vertex u : s) in_s_[u] = 1;
  }

  std::optional<Vg2Witness> run(Vertex v) {
    order_.clear();
    order_.push_back(v);
    for (Vertex u : s_) {
      if (u != v) order_.push_back(u);
    }
    std::fill(deg_.begin(), deg_.end(), 0);
    chosen_.clear();
    v_ = v;
    const auto& star = f_.incident_edges(v);
    for (std::size_t a = 0; a < star.size(); ++a) {
      if (!try_add(star[a])) continue;
      for (std::size_t b = a + 1; b < star.size(); ++b) {
        if (!try_add(star[b])) continue;
        if (auto w = descend(1)) return w;
        remove(star[b]);
      }
      remove(star[a]);
    }
    return std::nullopt;
  }

 private:
  void tick() {
    if (++nodes_ > budget_) throw CapacityError("VG2 search budget exceeded");
  }

  std::size_t shared(std::size_t a, std::size_t b) const {
    const auto& x = f_.edge(a);
    const auto& y = f_.edge(b);
    std::size_t count = 0;
    for (Vertex u : x) count += contains_edge(y, u) ? 1 : 0;
    return count;
  }

  bool try_add(std::size_t e) {
    tick();
    for (Vertex u : f_.edge(e)) {
      const int next = deg_[u] + 1;
      if (next > 2) return false;
      if (next == 2 && u != v_ && in_s_[u]) return false;
    }
    for (std::size_t c : chosen_) {
      if (c == e || shared(c, e) > 1) return false;
    }
    for (Vertex u : f_.edge(e)) ++deg_[u];
    chosen_.push_back(e);
    return true;
  }

  void remove(std::size_t e) {
    for (Vertex u : f_.edge(e)) --deg_[u];
    chosen_.pop_back();
  }

  std::optional<Vg2Witness> descend(std::size_t i) {
    if (i == order_.size()) return verify();
    const Vertex u = order_[i];
    if (deg_[u] == 1) return std::nullopt;  // already hit; would double-count
    for (std::size_t e : f_.incident_edges(u)) {
      if (!try_add(e)) continue;
      if (auto w = descend(i + 1)) return w;
      remove(e);
    }
    return std::nullopt;
  }

  std::optional<Vg2Witness> verify() const {
    Subgraph sub = edge_subgraph(f_, chosen_);
    auto paths = loose_path_decomposition(sub.graph);
    if (!paths) return std::nullopt;
    for (Vertex u : s_) {
      if (deg_[u] == 0) return std::nullopt;
    }
    if (deg_[v_] != 2) return std::nullopt;
    Vg2Witness w;
    w.vertex = v_;
    w.edges = sub.parent_edges;
    w.paths = std::move(*paths);
    return w;
  }

  const Hypergraph& f_;
  const VertexSet& s_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> deg_;
  std::vector<char> in_s_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> chosen_;
  Vertex v_ = 0;
};

}  // namespace

VgResult check_vg2(const Hypergraph& f, const VertexSet& s, std::uint64_t budget) {
  VgResult out;
  out.holds = true;
  Vg2Search search(f, s, budget);
  for (Vertex v : s) {
    auto w = search.run(v);
    if (!w) {
      out.holds = false;
      out.failing_vertex = v;
      return out;
    }
    out.vg2.push_back(std::move(*w));
  }
  return out;
}

GoodnessReport check_very_good(const Hypergraph& f, int delta, std::uint64_t budget) {
  GoodnessReport rep = check_good(f, delta);
  if (!rep.is_good) return rep;
  rep.vg1_detail = check_vg1(f, rep.transversal);
  rep.vg1 = rep.vg1_detail.holds;
  rep.vg2_detail = check_vg2(f, rep.transversal, budget);
  rep.vg2 = rep.vg2_detail.holds;
  rep.is_very_good = *rep.vg1 && *rep.vg2;
  return rep;
}

AssumptionReport check_assumption(const Hypergraph& h, std::size_t cap, std::uint64_t budget) {
  AssumptionReport out;
  out.critical = critical_subgraphs(h, cap);
  out.holds = true;
  bool all_good = true;
  for (std::size_t i = 0; i < out.critical.size(); ++i) {
    GoodnessReport rep = check_very_good(out.critical[i].graph, h.max_degree(), budget);
    all_good = all_good && rep.is_good;
    if (!rep.is_very_good && out.holds) {
      out.holds = false;
      out.counter_witness = i;
    }
    out.reports.push_back(std::move(rep));
  }
  if (all_good) {
    auto star = f_star_family(h);
    bool same = star.size() == out.critical.size();
    for (std::size_t i = 0; same && i < star.size(); ++i) {
      same = star[i].parent_edges == out.critical[i].parent_edges;
    }
    out.crit_equals_star = same;
    const auto m = static_cast<int>(h.edge_count());
    if (h.max_degree() > 0 && m % h.max_degree() == 0 &&
        transversal_number(h) == m / h.max_degree()) {
      auto all = minimal_transversals(h);
      bool disjoint = true;
      for (std::size_t a = 0; a < all.size() && disjoint; ++a) {
        for (std::size_t b = a + 1; b < all.size() && disjoint; ++b) {
          VertexSet common;
          std::set_intersection(all[a].begin(), all[a].end(), all[b].begin(), all[b].end(),
                                std::back_inserter(common));
          disjoint = common.empty();
        }
      }
      out.transversals_disjoint = disjoint;
    }
  }
  return out;
}

}  // namespace tailrate
