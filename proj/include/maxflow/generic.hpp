#pragma once

#include <string>

#include "maxflow/counters.hpp"
#include "maxflow/network.hpp"
#include "maxflow/solve.hpp"

namespace maxflow {

// Returns a description of the first arc breaking d(i) <= d(j) + 1 on a
// positive-residual arc, or an empty string.
template <class T>
std::string validity_violation(const Network& net, const SolverState<T>& st) {
  if (st.d[net.sink] != 0) return "d(t) = " + std::to_string(st.d[net.sink]);
  for (int a = 0; a < net.m(); ++a) {
    int i = net.arcs[a].tail, j = net.arcs[a].head;
    if (T(0) < residual_capacity(st, a) && st.d[i] > st.d[j] + 1)
      return "arc " + std::to_string(i) + "->" + std::to_string(j) + " with d " + std::to_string(st.d[i]) +
             " > " + std::to_string(st.d[j]) + "+1";
  }
  return {};
}

// Saturates A+(s), d(s) = n, every other label 0.
SolverState<cap_t> gpr_initialize(const Network& net);

// Scans A+(i) from the current arc; returns the first admissible arc and
// leaves the cursor on it, or -1 with the cursor at the end of the list.
int find_admissible(const Network& net, SolverState<cap_t>& st, int i);

// d(i) += 1 and the cursor goes back to the list head.
void gpr_relabel(const Network& net, SolverState<cap_t>& st, int i, Counters& c);

FlowResult gpr_solve(const Network& net, bool audit = false);

}  // namespace maxflow
