#pragma once

#include <string>
#include <vector>

#include "maxflow/network.hpp"

namespace maxflow {

struct OracleResult {
  std::vector<cap_t> flow;  // per arc of the network, within input capacities
  cap_t value = 0;
};

// Shortest augmenting paths over input arcs only.
OracleResult oracle_max_flow(const Network& net);

struct VerifyReport {
  bool ok = true;
  cap_t value = 0;
  std::vector<std::string> problems;
};

// Capacity bounds against the input graph and conservation at every
// non-terminal node.
VerifyReport verify_flow(const Network& net, const std::vector<cap_t>& flow);

struct CutResult {
  std::vector<char> source_side;
  cap_t capacity = 0;
};

CutResult min_cut(const Network& net, const std::vector<cap_t>& flow);

}  // namespace maxflow
