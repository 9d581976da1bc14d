#include "maxflow/oracle.hpp"

#include <deque>

#include "maxflow/flow_utils.hpp"

namespace maxflow {

OracleResult oracle_max_flow(const Network& net) {
  const int m = net.m();
  // Net flow per pair, oriented along the even arc.
  std::vector<cap_t> f(static_cast<size_t>(m / 2), 0);
  auto residual = [&](int a) {
    cap_t net_flow = (a % 2 == 0) ? f[a / 2] : -f[a / 2];
    return net.arcs[a].original_cap() - net_flow;
  };
  OracleResult res;
  for (;;) {
    std::vector<int> via(static_cast<size_t>(net.n), -1);
    std::vector<char> seen(static_cast<size_t>(net.n), 0);
    std::deque<int> q{net.source};
    seen[net.source] = 1;
    while (!q.empty() && !seen[net.sink]) {
      int v = q.front();
      q.pop_front();
      for (int a : net.adj[v]) {
        int w = net.arcs[a].head;
        if (seen[w] || residual(a) <= 0)
          continue;
        seen[w] = 1;
        via[w] = a;
        q.push_back(w);
      }
    }
    if (!seen[net.sink]) break;
    cap_t bottleneck = -1;
    for (int v = net.sink; v != net.source; v = net.arcs[via[v]].tail) {
      cap_t r = residual(via[v]);
      if (bottleneck < 0 || r < bottleneck) bottleneck = r;
    }
    for (int v = net.sink; v != net.source; v = net.arcs[via[v]].tail) {
      int a = via[v];
      if (a % 2 == 0)
        f[a / 2] += bottleneck;
      else
        f[a / 2] -= bottleneck;
    }
    res.value += bottleneck;
  }
  res.flow.assign(static_cast<size_t>(m), 0);
  for (int p = 0; p < m / 2; ++p) {
    if (f[p] > 0)
      res.flow[2 * p] = f[p];
    else
      res.flow[2 * p + 1] = -f[p];
  }
  return res;
}

VerifyReport verify_flow(const Network& net, const std::vector<cap_t>& flow) {
  VerifyReport rep;
  if (flow.size() != net.arcs.size()) {
    rep.ok = false;
    rep.problems.push_back("flow vector has " + std::to_string(flow.size()) + " entries, expected " +
                           std::to_string(net.arcs.size()));
    return rep;
  }
  std::vector<cap_t> excess(static_cast<size_t>(net.n), 0);
  for (int a = 0; a < net.m(); ++a) {
    const Arc& arc = net.arcs[a];
    if (flow[a] < 0 || flow[a] > arc.original_cap()) {
      rep.ok = false;
      rep.problems.push_back("capacity violated on arc " + std::to_string(arc.tail) + "->" +
                             std::to_string(arc.head) + ": flow " + to_string(flow[a]) + ", capacity " +
                             to_string(arc.original_cap()));
    }
    excess[arc.head] += flow[a];
    excess[arc.tail] -= flow[a];
  }
  for (int v = 0; v < net.n; ++v) {
    if (net.is_terminal(v) || excess[v] == 0) continue;
    rep.ok = false;
    rep.problems.push_back("conservation violated at node " + std::to_string(v) + ": excess " +
                           to_string(excess[v]));
  }
  rep.value = excess[net.sink];
  return rep;
}

CutResult min_cut(const Network& net, const std::vector<cap_t>& flow) {
  CutResult c;
  c.source_side = residual_reachable(net, flow);
  c.capacity = cut_capacity(net, c.source_side);
  return c;
}

}  // namespace maxflow
