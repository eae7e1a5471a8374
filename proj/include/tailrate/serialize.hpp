#pragma once

#include "tailrate/density.hpp"
#include "tailrate/fractional.hpp"
#include "tailrate/goodness.hpp"
#include "tailrate/hypergraph.hpp"
#include "tailrate/labelings.hpp"
#include "tailrate/ratefn.hpp"

#include <json.hpp>

#include <string>

namespace tailrate {

using Json = nlohmann::json;

// Rounds to 12 significant digits; non-finite values become null.
Json number12(double x);
std::string format12(double x);

Json graph_to_json(const Hypergraph& h);
Hypergraph graph_from_json(const Json& j);

Json certificate_to_json(const LPCertificate& cert);
Json labeling_to_json(const Labeling& l);  // {"0": "1/3", ...}
Json tuple_set_to_json(const TupleSet& t);
Json subgraph_to_json(const Subgraph& s);
Json goodness_to_json(const GoodnessReport& rep);
Json assumption_to_json(const AssumptionReport& rep);
Json rate_to_json(const RateResult& r);

Json weighted_to_json(const WeightedRGraph& q);
WeightedRGraph weighted_from_json(const Json& j);
WeightedRGraph load_weighted_file(const std::string& path);

}  // namespace tailrate
