#pragma once

#include <cstdint>
#include <vector>

#include "maxflow/network.hpp"

namespace maxflow {

// Node 0 is s, node n-1 is t. Arcs join distinct ordered pairs; capacities in
// [1, U]. Rejects m > n(n-1).
Network random_network(int n, int m, cap_t U, std::uint64_t seed);

// s=0, 1, 2, t=3: (s,1) and (1,t) carry k^alpha, (s,2) and (2,t) carry 1.
Network pathological_network(int k, int alpha);

// depth layers of width nodes; s feeds the first layer, the last feeds t.
// Every node links to 1..3 random nodes of the next layer.
Network layered_network(int width, int depth, cap_t U, std::uint64_t seed);

}  // namespace maxflow
