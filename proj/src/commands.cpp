#include "tailrate/commands.hpp"

#include "tailrate/density.hpp"
#include "tailrate/error.hpp"
#include "tailrate/fractional.hpp"
#include "tailrate/goodness.hpp"
#include "tailrate/graph_spec.hpp"
#include "tailrate/labelings.hpp"
#include "tailrate/ratefn.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

namespace tailrate {

GraphInput load_graph_input(const std::string& spec) { return {parse_graph_spec(spec), spec}; }

namespace {

template <typename T>
T option(const Json& options, const char* key, T fallback) {
  if (!options.contains(key) || options[key].is_null()) return fallback;
  try {
    return options[key].get<T>();
  } catch (const Json::exception&) {
    throw InputError(std::string("option '") + key + "' has the wrong type");
  }
}

template <typename T>
T required(const Json& options, const char* key) {
  if (!options.contains(key) || options[key].is_null()) {
    throw InputError(std::string("missing required option '") + key + "'");
  }
  return option<T>(options, key, T{});
}

std::size_t cap_of(const Json& options) {
  const auto cap = option<std::int64_t>(options, "cap", static_cast<std::int64_t>(kDefaultEnumerationCap));
  if (cap < 0) throw InputError("cap must be nonnegative");
  return static_cast<std::size_t>(cap);
}

double delta_of(const Json& options) {
  const double d = required<double>(options, "delta");
  if (!(d >= 0) || !std::isfinite(d)) throw InputError("delta must be a finite nonnegative number");
  return d;
}

std::string polynomial_text(const std::vector<std::uint64_t>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c[k];
      continue;
    }
    if (c[k] != 1) os << c[k];
    os << "x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

// Closed-form family and parameters implied by a spec string.
std::pair<std::string, ClosedFormParams> closed_family(const GraphInput& in) {
  const std::string& s = in.spec;
  ClosedFormParams params;
  params.r = in.graph.uniformity();
  if (s == "fano") return {"fano", params};
  if (s == "fano-minus-edge") return {"fano_minus_edge", params};
  if (s.rfind("clique:", 0) == 0) {
    params.k = static_cast<int>(in.graph.vertex_count());
    return {"clique", params};
  }
  if (s.rfind("cycle:", 0) == 0) {
    params.length = static_cast<int>(in.graph.vertex_count());
    return {"cycle", params};
  }
  if (s.rfind("partite:", 0) == 0) {
    const auto list = s.substr(s.rfind(':') + 1);
    std::vector<int> parts;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(std::stoi(item));
    std::sort(parts.begin(), parts.end());
    if (parts.front() == parts.back()) {
      params.m = parts.front();
      return {"rpartite_regular", params};
    }
    if (parts.size() > 1 && parts[0] < parts[1]) {
      params.parts = parts;
      return {"rpartite_min", params};
    }
  }
  throw InputError("no closed form is known for graph '" + s + "'");
}

RateResult rate_by_method(const std::string& method, const GraphInput& in, const RateModel* model,
                          double delta, const Json& options) {
  GenericOptions generic;
  generic.seed = option<std::uint64_t>(options, "seed", generic.seed);
  if (method == "lz") return rho_LZ(*model, delta, RhoMethod::automatic, generic);
  if (method == "lz-generic") return rho_LZ(*model, delta, RhoMethod::generic, generic);
  if (method == "bi") return rho_bi(in.graph, delta);
  if (method == "new") return rho_new(in.graph, delta);
  if (method == "closed") {
    auto [family, params] = closed_family(in);
    return closed_form(family, params, delta);
  }
  throw InputError("unknown method '" + method + "' (expected lz, lz-generic, bi, new, closed)");
}

bool needs_model(const std::string& method) { return method == "lz" || method == "lz-generic"; }

Json cmd_info(const GraphInput& in) {
  const Hypergraph& h = in.graph;
  const auto cert = fractional_matching_number(h);
  const auto poly = independence_polynomial(star_core(h).graph);
  return {{"graph", in.spec},
          {"r", h.uniformity()},
          {"vertices", h.vertex_count()},
          {"edges", h.edge_count()},
          {"max_degree", h.max_degree()},
          {"regular", h.is_regular()},
          {"nu_star", format_rational(cert.value)},
          {"tau", transversal_number(h)},
          {"nu", matching_number(h)},
          {"star_core_vertices", star_core(h).to_parent},
          {"independence_polynomial", poly},
          {"independence_polynomial_text", polynomial_text(poly)}};
}

Json cmd_labelings(const GraphInput& in, const Json& options) {
  const std::size_t cap = cap_of(options);
  const RateModel model = build_rate_model(in.graph, cap);
  Json labs = Json::array();
  for (const auto& l : model.labelings.labelings) {
    labs.push_back({{"values", labeling_to_json(l)},
                    {"strict", is_strict(in.graph, l)},
                    {"supporting_edges", supporting_subgraph(in.graph, l).parent_edges}});
  }
  Json crit = Json::array();
  for (const auto& f : critical_subgraphs(in.graph, cap)) crit.push_back(subgraph_to_json(f));
  Json star = Json::array();
  for (const auto& f : f_star_family(in.graph)) star.push_back(subgraph_to_json(f));
  Json nonzero = Json::array();
  for (const auto& c : model.tuples.nonzero()) {
    Json tuple = Json::array();
    for (const auto& x : c.tuple) tuple.push_back(format_rational(x));
    nonzero.push_back({{"tuple", tuple}, {"orbit_size", c.orbit_size}});
  }
  return {{"graph", in.spec},
          {"count", model.labelings.labelings.size()},
          {"labelings", labs},
          {"tuples", nonzero},
          {"tuple_count", model.tuples.nonzero_cardinality()},
          {"P_H", format_polynomial(p_H_symbolic(model))},
          {"Vol_H", format_polynomial(vol_H_symbolic(model))},
          {"single_valued", model.single_valued},
          {"critical", crit},
          {"f_star", star},
          {"spanning_independent_sets", spanning_independent_sets(in.graph)}};
}

Json cmd_rate(const GraphInput& in, const Json& options) {
  const double delta = delta_of(options);
  const std::string method = option<std::string>(options, "method", "lz");
  std::optional<RateModel> model;
  if (needs_model(method)) model = build_rate_model(in.graph, cap_of(options));
  Json out = rate_to_json(rate_by_method(method, in, model ? &*model : nullptr, delta, options));
  out["graph"] = in.spec;
  out["delta"] = number12(delta);
  out["method"] = method;
  return out;
}

Json cmd_check(const GraphInput& in, const Json& options) {
  const auto budget = option<std::uint64_t>(options, "budget", kVg2NodeBudget);
  Json out = assumption_to_json(check_assumption(in.graph, cap_of(options), budget));
  out["graph"] = in.spec;
  out["self"] = goodness_to_json(check_very_good(in.graph, 0, budget));
  return out;
}

Json cmd_lp(const GraphInput& in) {
  const auto cert = fractional_matching_number(in.graph);
  Json out = certificate_to_json(cert);
  out["graph"] = in.spec;
  out["verified"] = verify_certificate(in.graph, cert);
  return out;
}

Json cmd_density(const GraphInput& in, const Json& options) {
  WeightedRGraph q;
  if (options.contains("weights") && !options["weights"].is_null()) {
    q = load_weighted_file(options["weights"].get<std::string>());
  } else {
    q = WeightedRGraph(required<int>(options, "n"), in.graph.uniformity(), required<double>(options, "p"));
  }
  std::vector<std::vector<int>> vars;
  for (const auto& e : in.graph.edges()) vars.emplace_back(e.begin(), e.end());
  const auto plan = make_plan(static_cast<int>(in.graph.vertex_count()), vars);
  return {{"graph", in.spec},
          {"n", q.n()},
          {"r", q.r()},
          {"t", number12(t_density(in.graph, q))},
          {"elimination_order", plan.order},
          {"width", plan.width}};
}

Json cmd_nmf(const GraphInput& in, const Json& options) {
  NmfOptions opts;
  opts.budget = option<std::uint64_t>(options, "budget", opts.budget);
  const double delta = delta_of(options);
  const NmfResult res = nmf_upper_bound(in.graph, required<int>(options, "n"),
                                        required<double>(options, "p"), delta, opts);
  Json out = {{"graph", in.spec},
              {"value", number12(res.value)},
              {"density", number12(res.density)},
              {"target", number12(res.target)},
              {"feasible", res.feasible},
              {"swept_value", number12(res.swept_value)},
              {"swept_construction", res.swept_construction},
              {"gradient_evaluations", res.gradient_evaluations},
              {"weights", weighted_to_json(res.graph)}};
  if (!res.feasible) throw BudgetError("nmf solver found no feasible point within budget", out.dump());
  return out;
}

std::string cmd_sweep(const GraphInput& in, const Json& options) {
  const std::string method = option<std::string>(options, "method", "lz");
  const double from = option<double>(options, "from", 1e-2);
  const double to = option<double>(options, "to", 1e2);
  const int steps = option<int>(options, "steps", 50);
  const std::string scale = option<std::string>(options, "scale", "log");
  const std::string format = option<std::string>(options, "format", "json");
  const int jobs = std::max(1, option<int>(options, "jobs", 1));
  if (steps < 1) throw InputError("steps must be positive");
  if (!(from >= 0) || !(to >= from)) throw InputError("need 0 <= from <= to");
  if (scale != "log" && scale != "linear") throw InputError("scale must be log or linear");
  if (scale == "log" && from <= 0) throw InputError("log scale needs from > 0");
  if (format != "json" && format != "csv") throw InputError("format must be json or csv");

  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double t = steps == 1 ? 0.0 : double(i) / (steps - 1);
    grid[static_cast<std::size_t>(i)] =
        scale == "log" ? std::exp(std::log(from) + t * (std::log(to) - std::log(from)))
                       : from + t * (to - from);
  }
  std::optional<RateModel> model;
  if (needs_model(method)) model = build_rate_model(in.graph, cap_of(options));
  // Validate the method once before fanning out.
  rate_by_method(method, in, model ? &*model : nullptr, grid.front(), options);

  std::vector<RateResult> results(grid.size());
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_lock;
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = static_cast<std::size_t>(w); i < grid.size(); i += static_cast<std::size_t>(jobs)) {
          results[i] = rate_by_method(method, in, model ? &*model : nullptr, grid[i], options);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  if (format == "csv") {
    std::ostringstream os;
    os << "delta,value,branch\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      os << format12(grid[i]) << "," << format12(results[i].value) << "," << results[i].branch << "\n";
    }
    return os.str();
  }
  Json points = Json::array();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Json p = rate_to_json(results[i]);
    p["delta"] = number12(grid[i]);
    points.push_back(std::move(p));
  }
  return Json{{"graph", in.spec}, {"method", method}, {"points", points}}.dump();
}

}  // namespace

std::string run_command(const std::string& command, const GraphInput& input, const Json& options) {
  if (!options.is_object() && !options.is_null()) throw InputError("options must be a JSON object");
  const Json opts = options.is_null() ? Json::object() : options;
  if (command == "info") return cmd_info(input).dump();
  if (command == "labelings") return cmd_labelings(input, opts).dump();
  if (command == "rate") return cmd_rate(input, opts).dump();
  if (command == "check") return cmd_check(input, opts).dump();
  if (command == "lp") return cmd_lp(input).dump();
  if (command == "density") return cmd_density(input, opts).dump();
  if (command == "nmf") return cmd_nmf(input, opts).dump();
  if (command == "sweep") return cmd_sweep(input, opts);
  throw InputError("unknown command '" + command + "'");
}

}  // namespace tailrate
