#include "tailrate/tailrate.h"

#include "tailrate/commands.hpp"
#include "tailrate/error.hpp"
#include "tailrate/fractional.hpp"
#include "tailrate/labelings.hpp"
#include "tailrate/ratefn.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct tr_graph {
  tailrate::GraphInput input;
};

namespace {

thread_local std::string last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
tr_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return TR_OK;
  } catch (const tailrate::InputError& e) {
    last_error = e.what();
    return TR_ERR_INPUT;
  } catch (const tailrate::CapacityError& e) {
    last_error = e.what();
    return TR_ERR_CAPACITY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TR_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return TR_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) throw tailrate::InputError(std::string("null ") + what);
}

}  // namespace

extern "C" {

tr_status tr_graph_parse(const char* spec, tr_graph** out) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "output pointer");
    *out = new tr_graph{tailrate::load_graph_input(spec)};
  });
}

tr_status tr_graph_from_edges(int r, size_t vertices, const uint32_t* edges, size_t edge_count,
                              tr_graph** out) {
  return guarded([&] {
    need(out, "output pointer");
    if (edge_count > 0) need(edges, "edge array");
    if (r < 1) throw tailrate::InputError("r must be positive");
    std::vector<tailrate::Edge> list(edge_count);
    for (size_t i = 0; i < edge_count; ++i) {
      list[i].assign(edges + i * static_cast<size_t>(r), edges + (i + 1) * static_cast<size_t>(r));
    }
    *out = new tr_graph{{tailrate::Hypergraph::from_edges(r, vertices, std::move(list)), "edges"}};
  });
}

void tr_graph_free(tr_graph* g) { delete g; }

tr_status tr_graph_shape(const tr_graph* g, int* r, size_t* vertices, size_t* edges, int* max_degree) {
  return guarded([&] {
    need(g, "graph");
    const auto& h = g->input.graph;
    if (r != nullptr) *r = h.uniformity();
    if (vertices != nullptr) *vertices = h.vertex_count();
    if (edges != nullptr) *edges = h.edge_count();
    if (max_degree != nullptr) *max_degree = h.max_degree();
  });
}

tr_status tr_fractional_matching(const tr_graph* g, char** value) {
  return guarded([&] {
    need(g, "graph");
    need(value, "output pointer");
    *value = dup_string(tailrate::format_rational(tailrate::fractional_matching_number(g->input.graph).value));
  });
}

tr_status tr_transversal_number(const tr_graph* g, int* tau) {
  return guarded([&] {
    need(g, "graph");
    need(tau, "output pointer");
    *tau = tailrate::transversal_number(g->input.graph);
  });
}

tr_status tr_stable_labeling_count(const tr_graph* g, size_t cap, size_t* count) {
  return guarded([&] {
    need(g, "graph");
    need(count, "output pointer");
    *count = tailrate::enumerate_stable_labelings(g->input.graph, cap).labelings.size();
  });
}

tr_status tr_beta(const tr_graph* g, double delta, double* beta) {
  return guarded([&] {
    need(g, "graph");
    need(beta, "output pointer");
    *beta = tailrate::beta_H(g->input.graph, delta);
  });
}

tr_status tr_rate(const tr_graph* g, double delta, const char* method, double* value) {
  return guarded([&] {
    need(g, "graph");
    need(method, "method");
    need(value, "output pointer");
    tailrate::Json opts = {{"delta", delta}, {"method", method}};
    auto out = tailrate::Json::parse(tailrate::run_command("rate", g->input, opts));
    *value = out["value"].is_null() ? std::numeric_limits<double>::infinity()
                                    : out["value"].get<double>();
  });
}

tr_status tr_run_command(const char* command, const tr_graph* g, const char* options_json, char** out) {
  return guarded([&] {
    need(command, "command");
    need(g, "graph");
    need(out, "output pointer");
    *out = nullptr;
    tailrate::Json opts = tailrate::Json::object();
    if (options_json != nullptr && *options_json != '\0') {
      try {
        opts = tailrate::Json::parse(options_json);
      } catch (const tailrate::Json::exception& e) {
        throw tailrate::InputError(std::string("options are not valid JSON: ") + e.what());
      }
    }
    try {
      *out = dup_string(tailrate::run_command(command, g->input, opts));
    } catch (const tailrate::BudgetError& e) {
      *out = dup_string(e.payload());
      throw;
    }
  });
}

void tr_string_free(char* s) { std::free(s); }

const char* tr_last_error(void) { return last_error.c_str(); }

const char* tr_version(void) { return "0.1.0"; }

}  // extern "C"
