#include "tailrate/serialize.hpp"

#include "tailrate/error.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace tailrate {

std::string format12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json number12(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(format12(x).c_str(), nullptr);
}

Json graph_to_json(const Hypergraph& h) {
  return {{"r", h.uniformity()}, {"vertices", h.vertex_count()}, {"edges", h.edges()}};
}

Hypergraph graph_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw InputError("graph JSON must be an object");
    const int r = j.at("r").get<int>();
    const auto n = j.at("vertices").get<std::int64_t>();
    if (n < 0) throw InputError("vertex count must be nonnegative");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      Edge edge;
      for (const auto& v : e) {
        const auto x = v.get<std::int64_t>();
        if (x < 0) throw InputError("negative vertex id in graph JSON");
        edge.push_back(static_cast<Vertex>(x));
      }
      edges.push_back(std::move(edge));
    }
    return Hypergraph::from_edges(r, static_cast<std::size_t>(n), std::move(edges));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
}

Json certificate_to_json(const LPCertificate& cert) {
  Json primal = Json::array();
  for (const auto& w : cert.primal_weights) primal.push_back(format_rational(w));
  Json dual = Json::array();
  for (const auto& y : cert.dual_weights) dual.push_back(format_rational(y));
  return {{"value", format_rational(cert.value)}, {"primal_weights", primal}, {"dual_weights", dual}};
}

Json labeling_to_json(const Labeling& l) {
  Json out = Json::object();
  for (std::size_t v = 0; v < l.values.size(); ++v) out[std::to_string(v)] = format_rational(l.values[v]);
  return out;
}

Json tuple_set_to_json(const TupleSet& t) {
  Json out = Json::array();
  for (const auto& c : t.classes) {
    Json tuple = Json::array();
    for (const auto& x : c.tuple) tuple.push_back(format_rational(x));
    out.push_back({{"tuple", tuple}, {"orbit_size", c.orbit_size}});
  }
  return out;
}

Json subgraph_to_json(const Subgraph& s) {
  return {{"graph", graph_to_json(s.graph)}, {"vertex_map", s.to_parent}, {"parent_edges", s.parent_edges}};
}

namespace {

Json paths_to_json(const std::vector<LoosePath>& paths) {
  Json out = Json::array();
  for (const auto& p : paths) out.push_back({{"edges", p.edges}, {"joints", p.joints}});
  return out;
}

}  // namespace

Json goodness_to_json(const GoodnessReport& rep) {
  Json out = {{"delta", rep.delta},
              {"tau", rep.tau},
              {"k", rep.k ? Json(*rep.k) : Json(nullptr)},
              {"good", rep.is_good},
              {"very_good", rep.is_very_good}};
  if (rep.is_good) out["transversal"] = rep.transversal;
  if (!rep.counter_witness.empty()) out["counter_witness"] = rep.counter_witness;
  if (rep.vg1) {
    Json w = Json::array();
    for (const auto& x : rep.vg1_detail.vg1) w.push_back({{"vertex", x.vertex}, {"edges", x.edges}});
    out["vg1"] = {{"holds", *rep.vg1}, {"witnesses", w}};
    if (rep.vg1_detail.failing_vertex) out["vg1"]["failing_vertex"] = *rep.vg1_detail.failing_vertex;
  }
  if (rep.vg2) {
    Json w = Json::array();
    for (const auto& x : rep.vg2_detail.vg2) {
      w.push_back({{"vertex", x.vertex}, {"edges", x.edges}, {"paths", paths_to_json(x.paths)}});
    }
    out["vg2"] = {{"holds", *rep.vg2}, {"witnesses", w}};
    if (rep.vg2_detail.failing_vertex) out["vg2"]["failing_vertex"] = *rep.vg2_detail.failing_vertex;
  }
  return out;
}

Json assumption_to_json(const AssumptionReport& rep) {
  Json crit = Json::array();
  for (std::size_t i = 0; i < rep.critical.size(); ++i) {
    Json entry = subgraph_to_json(rep.critical[i]);
    entry["report"] = goodness_to_json(rep.reports[i]);
    crit.push_back(std::move(entry));
  }
  Json out = {{"assumption", rep.holds}, {"critical_count", rep.critical.size()}, {"critical", crit}};
  if (rep.counter_witness) {
    Json w = subgraph_to_json(rep.critical[*rep.counter_witness]);
    w["report"] = goodness_to_json(rep.reports[*rep.counter_witness]);
    out["counter_witness"] = std::move(w);
  } else {
    out["counter_witness"] = nullptr;
  }
  out["crit_equals_star"] = rep.crit_equals_star ? Json(*rep.crit_equals_star) : Json(nullptr);
  out["transversals_disjoint"] =
      rep.transversals_disjoint ? Json(*rep.transversals_disjoint) : Json(nullptr);
  return out;
}

Json rate_to_json(const RateResult& r) {
  return {{"value", number12(r.value)},
          {"branch", r.branch},
          {"solver", r.solver},
          {"residual", number12(r.residual)}};
}

Json weighted_to_json(const WeightedRGraph& q) {
  Json over = Json::array();
  for (const auto& [rank, value] : q.overrides()) over.push_back({q.unrank(rank), number12(value)});
  return {{"n", q.n()}, {"r", q.r()}, {"default_q", number12(q.default_q())}, {"overrides", over}};
}

WeightedRGraph weighted_from_json(const Json& j) {
  try {
    WeightedRGraph q(j.at("n").get<int>(), j.at("r").get<int>(), j.at("default_q").get<double>());
    for (const auto& entry : j.value("overrides", Json::array())) {
      if (!entry.is_array() || entry.size() != 2) throw InputError("override must be [edge, q]");
      Edge e;
      for (const auto& v : entry[0]) {
        const auto x = v.get<std::int64_t>();
        if (x < 0) throw InputError("negative vertex id in weighted graph");
        e.push_back(static_cast<Vertex>(x));
      }
      std::sort(e.begin(), e.end());
      q.set(e, entry[1].get<double>());
    }
    return q;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed weighted graph JSON: ") + e.what());
  }
}

WeightedRGraph load_weighted_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open weighted graph file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw InputError("weighted graph file '" + path + "' is not valid JSON: " + e.what());
  }
  return weighted_from_json(j);
}

}  // namespace tailrate
