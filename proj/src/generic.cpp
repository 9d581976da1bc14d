#include "maxflow/generic.hpp"

#include <algorithm>
#include <deque>

namespace maxflow {

SolverState<cap_t> gpr_initialize(const Network& net) {
  SolverState<cap_t> st = make_state<cap_t>(net);
  for (int a : net.adj[net.source]) apply_push(net, st, a, residual_capacity(st, a));
  st.d[net.source] = net.n;
  return st;
}

int find_admissible(const Network& net, SolverState<cap_t>& st, int i) {
  const auto& list = net.adj[i];
  for (size_t& c = st.cur[i]; c < list.size(); ++c) {
    int a = list[c];
    if (residual_capacity(st, a) > 0 && st.d[i] == st.d[net.arcs[a].head] + 1) return a;
  }
  return -1;
}

void gpr_relabel(const Network& net, SolverState<cap_t>& st, int i, Counters& c) {
  for (int a : net.adj[i])
    MF_REQUIRE(!(residual_capacity(st, a) > 0 && st.d[i] == st.d[net.arcs[a].head] + 1),
               "gpr_relabel: node has an admissible arc");
  ++st.d[i];
  st.cur[i] = 0;
  record(c, Event::Relabel);
}

FlowResult gpr_solve(const Network& net, bool audit) {
  Counters c;
  c.algorithm = "generic";
  c.n = net.n;
  c.m = net.m();
  SolverState<cap_t> st = gpr_initialize(net);
  std::vector<std::uint64_t> relabels(static_cast<size_t>(net.n), 0);

  auto active = [&](int v) { return !net.is_terminal(v) && st.e[v] > 0; };
  std::deque<int> fifo;
  std::vector<char> queued(static_cast<size_t>(net.n), 0);
  auto enqueue = [&](int v) {
    if (active(v) && !queued[v]) {
      queued[v] = 1;
      fifo.push_back(v);
    }
  };
  for (int v = 0; v < net.n; ++v) enqueue(v);

  auto audit_step = [&] {
    ++c.audits;
    std::string why = validity_violation(net, st);
    if (!why.empty()) c.violation("invariant1", why);
    if (recompute_excess(net, st.x) != st.e) c.violation("excess_consistency", "stored excess differs");
  };

  while (!fifo.empty()) {
    int i = fifo.front();
    fifo.pop_front();
    queued[i] = 0;
    while (active(i)) {
      int a = find_admissible(net, st, i);
      if (a < 0) {
        gpr_relabel(net, st, i, c);
        ++relabels[i];
        if (st.d[i] > net.n + 1)
          c.violation("label_bound", "d(" + std::to_string(i) + ") = " + std::to_string(st.d[i]));
        if (audit) audit_step();
        break;
      }
      cap_t r = residual_capacity(st, a);
      cap_t delta = std::min(st.e[i], r);
      apply_push(net, st, a, delta);
      record(c, delta == r ? Event::SaturatingPush : Event::OtherPush);
      enqueue(net.arcs[a].head);
      if (audit) audit_step();
    }
    enqueue(i);
  }
  for (std::uint64_t r : relabels) c.max_relabels_per_node = std::max(c.max_relabels_per_node, r);
  if (c.relabels >= static_cast<std::uint64_t>(net.n) * net.n)
    c.violation("relabel_total", "relabels >= n^2");
  if (c.pushes_saturating >= static_cast<std::uint64_t>(net.n) * net.m())
    c.violation("saturating_total", "saturating pushes >= nm");
  return finish_integral(net, std::move(st.x), std::move(c));
}

}  // namespace maxflow
