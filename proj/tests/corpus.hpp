#pragma once

#include "tailrate/hypergraph.hpp"

#include <string>
#include <vector>

namespace corpus {

struct Entry {
  std::string name;
  tailrate::Hypergraph graph;
};

// Small graphs of uniformity 2, 3 and 4, none with more than 8 vertices.
const std::vector<Entry>& graphs();

bool connected(const tailrate::Hypergraph& h);

}  // namespace corpus
