#pragma once

#include "maxflow/counters.hpp"
#include "maxflow/network.hpp"
#include "maxflow/selection.hpp"
#include "maxflow/solve.hpp"

namespace maxflow {

// e >= Delta/2 is large, Delta/k <= e < Delta/2 medium.
ExcessClass lmes_excess_class(cap_t e, cap_t delta, int k);

enum class PushKind { Saturating, Large, Medium, Other };

// delta = min{e(i), r_ij, Delta - e(j)}, applied to the state. The push
// kind is returned through `kind`.
cap_t lmes_push(const Network& net, SolverState<cap_t>& st, int a, cap_t delta_param, int k, PushKind& kind);

FlowResult lmes_solve(const Network& net, int k, bool audit = false);

}  // namespace maxflow
