#pragma once

#include <string>
#include <vector>

#include "maxflow/counters.hpp"
#include "maxflow/network.hpp"

namespace maxflow {

enum class Algorithm { Generic, Lmes, Enhanced };

// How Get-Next-Scaling-Parameter turns a negative excess into a candidate.
enum class Gamma2Mode {
  AsPrinted,   // -eps^3 * e(v), guarded by e(v) > -eps*Delta
  Reciprocal,  // -e(v) / eps^3
};

struct SolveOptions {
  Algorithm algorithm = Algorithm::Enhanced;
  int k = 0;  // 0 picks the per-algorithm default
  bool audit = false;
  bool jumps = true;  // Enhanced only; off forces Delta/k every phase
  Gamma2Mode gamma2 = Gamma2Mode::AsPrinted;
};

struct FlowResult {
  std::vector<cap_t> flow;  // per arc, within input capacities
  cap_t value = 0;
  std::vector<char> source_side;
  cap_t cut_capacity = 0;
  Counters counters;
};

std::string algorithm_name(Algorithm a);
// Accepts "generic", "lmes", "enhanced".
Algorithm parse_algorithm(const std::string& name);

bool is_power_of_two(long long k);
int default_k(Algorithm a, const Network& net);

FlowResult solve(const Network& net, const SolveOptions& opt);

// Strips helper-arc flow from an integral solver flow and fills in value and
// cut from residual reachability.
FlowResult finish_integral(const Network& net, std::vector<cap_t> x, Counters counters);

}  // namespace maxflow
