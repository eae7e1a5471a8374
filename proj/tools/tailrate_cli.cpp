// tailrate command-line front end. Talks to the library only through the C API.
#include "tailrate/tailrate.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;

int fail(int status, const std::string& message) {
  static const char* kinds[] = {"ok", "internal", "input", "capacity"};
  json err = {{"error", message}, {"kind", kinds[status >= 0 && status <= 3 ? status : 1]}, {"status", status}};
  std::cerr << err.dump() << "\n";
  return status;
}

struct Flags {
  std::string graph;
  std::optional<double> delta;
  std::string method = "lz";
  std::optional<int> n;
  std::optional<double> p;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  std::string format = "json";
  std::optional<std::uint64_t> budget;
  std::optional<std::string> weights;
  double from = 1e-2;
  double to = 1e2;
  int steps = 50;
  std::string scale = "log";
};

json options_of(const std::string& command, const Flags& f) {
  json o = json::object();
  if (f.delta) o["delta"] = *f.delta;
  if (f.n) o["n"] = *f.n;
  if (f.p) o["p"] = *f.p;
  if (f.seed) o["seed"] = *f.seed;
  if (f.budget) o["budget"] = *f.budget;
  if (f.weights) o["weights"] = *f.weights;
  if (command == "rate" || command == "sweep") o["method"] = f.method;
  if (command == "sweep") {
    o["jobs"] = f.jobs;
    o["format"] = f.format;
    o["from"] = f.from;
    o["to"] = f.to;
    o["steps"] = f.steps;
    o["scale"] = f.scale;
  }
  if (const char* cap = std::getenv("TAILRATE_CAP")) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(cap, &used);
      if (used != std::string(cap).size() || v < 0) throw std::invalid_argument("cap");
      o["cap"] = v;
    } catch (const std::exception&) {
      throw std::invalid_argument("TAILRATE_CAP must be a nonnegative integer");
    }
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upper-tail rate functions for hypergraph homomorphism counts"};
  app.require_subcommand(1);
  Flags flags;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", flags.graph,
                    "fano | fano-minus-edge | clique:R:K | partite:R:m1,... | cycle:R:L | file:PATH")
        ->required();
  };

  auto* info = app.add_subcommand("info", "size, degrees, nu*, tau, nu and i_{H*}");
  add_graph(info);
  auto* labelings = app.add_subcommand("labelings", "stable labelings, tuple set, critical subgraphs");
  add_graph(labelings);
  auto* rate = app.add_subcommand("rate", "rate function at one delta");
  add_graph(rate);
  rate->add_option("--delta", flags.delta, "relative excess")->required();
  rate->add_option("--method", flags.method, "lz | lz-generic | bi | new | closed");
  rate->add_option("--seed", flags.seed, "seed for randomized solvers");
  auto* check = app.add_subcommand("check", "good / very good certification of critical subgraphs");
  add_graph(check);
  check->add_option("--budget", flags.budget, "search node budget");
  auto* lp = app.add_subcommand("lp", "fractional matching LP with dual certificate");
  add_graph(lp);
  auto* density = app.add_subcommand("density", "homomorphism density in a weighted graph");
  add_graph(density);
  density->add_option("--weights", flags.weights, "weighted graph JSON file");
  density->add_option("--n", flags.n, "vertices of a constant weighted graph");
  density->add_option("--p", flags.p, "constant weight");
  auto* nmf = app.add_subcommand("nmf", "upper bound for the mean-field variational problem");
  add_graph(nmf);
  nmf->add_option("--n", flags.n, "vertices")->required();
  nmf->add_option("--p", flags.p, "edge density")->required();
  nmf->add_option("--delta", flags.delta, "relative excess")->required();
  nmf->add_option("--budget", flags.budget, "gradient evaluations");
  nmf->add_option("--seed", flags.seed, "seed for randomized solvers");
  auto* sweep = app.add_subcommand("sweep", "rate function over a delta grid");
  add_graph(sweep);
  sweep->add_option("--method", flags.method, "lz | lz-generic | bi | new | closed");
  sweep->add_option("--from", flags.from, "first delta");
  sweep->add_option("--to", flags.to, "last delta");
  sweep->add_option("--steps", flags.steps, "grid points");
  sweep->add_option("--scale", flags.scale, "log | linear");
  sweep->add_option("--jobs", flags.jobs, "worker threads");
  sweep->add_option("--format", flags.format, "json | csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(TR_ERR_INPUT, e.what());
  }

  const std::string command = app.get_subcommands().front()->get_name();
  json options;
  try {
    options = options_of(command, flags);
  } catch (const std::exception& e) {
    return fail(TR_ERR_INPUT, e.what());
  }

  tr_graph* graph = nullptr;
  tr_status st = tr_graph_parse(flags.graph.c_str(), &graph);
  if (st != TR_OK) return fail(st, tr_last_error());

  char* out = nullptr;
  st = tr_run_command(command.c_str(), graph, options.dump().c_str(), &out);
  std::string message = st == TR_OK ? "" : tr_last_error();
  if (out != nullptr) {
    std::cout << out;
    if (command != "sweep" || flags.format != "csv") std::cout << "\n";
    tr_string_free(out);
  }
  tr_graph_free(graph);
  if (st != TR_OK) return fail(st, message);
  return 0;
}
