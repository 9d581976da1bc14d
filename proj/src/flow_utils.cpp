#include "maxflow/flow_utils.hpp"

#include <deque>

namespace maxflow {

std::vector<cap_t> integralize(const Network& net, const std::vector<Quantity>& x) {
  const int P = net.pair_count();
  std::vector<Quantity> f(static_cast<size_t>(P));
  for (int p = 0; p < P; ++p) f[p] = x[2 * p] - x[2 * p + 1];

  // Undirected graph on pairs whose net flow is fractional.
  auto fractional = [&](int p) { return !f[p].is_integer(); };
  for (;;) {
    int start = -1;
    for (int p = 0; p < P && start < 0; ++p)
      if (fractional(p)) start = net.arcs[2 * p].tail;
    if (start < 0) break;

    // Iterative DFS for a cycle; the parent pair is never reused.
    std::vector<int> state(static_cast<size_t>(net.n), 0);  // 0 new, 1 on stack, 2 done
    std::vector<int> via(static_cast<size_t>(net.n), -1);   // arc used to enter node
    std::vector<size_t> pos(static_cast<size_t>(net.n), 0);
    std::vector<int> stack{start};
    state[start] = 1;
    int close_arc = -1;
    while (!stack.empty() && close_arc < 0) {
      int v = stack.back();
      if (pos[v] == net.adj[v].size()) {
        state[v] = 2;
        stack.pop_back();
        continue;
      }
      int a = net.adj[v][pos[v]++];
      int p = a / 2;
      if (!fractional(p) || (via[v] >= 0 && via[v] / 2 == p)) continue;
      int w = net.arcs[a].head;
      if (state[w] == 1) {
        close_arc = a;
      } else if (state[w] == 0) {
        state[w] = 1;
        via[w] = a;
        stack.push_back(w);
      }
    }
    if (close_arc < 0) throw std::logic_error("integralize: flow value is not integral");

    // Cycle: close_arc from v to w, then the tree path from w back down to v.
    std::vector<int> cycle{close_arc};
    int w = net.arcs[close_arc].head;
    for (int z = net.arcs[close_arc].tail; z != w; z = net.arcs[via[z]].tail) cycle.push_back(via[z]);

    Quantity theta;
    bool first = true;
    for (int a : cycle) {
      int p = a / 2;
      Quantity room = (a % 2 == 0) ? f[p].ceil() - f[p] : f[p] - f[p].floor();
      if (first || room < theta) theta = room;
      first = false;
    }
    for (int a : cycle) {
      int p = a / 2;
      if (a % 2 == 0)
        f[p] += theta;
      else
        f[p] -= theta;
    }
  }

  std::vector<cap_t> out(static_cast<size_t>(net.m()), 0);
  for (int p = 0; p < P; ++p) {
    cap_t v = f[p].to_cap();
    if (v >= 0)
      out[2 * p] = v;
    else
      out[2 * p + 1] = -v;
  }
  return out;
}

cap_t cut_capacity(const Network& net, const std::vector<char>& source_side) {
  cap_t c = 0;
  for (const Arc& a : net.arcs)
    if (source_side[a.tail] && !source_side[a.head]) c += a.original_cap();
  return c;
}

std::vector<char> residual_reachable(const Network& net, const std::vector<cap_t>& flow) {
  std::vector<char> seen(static_cast<size_t>(net.n), 0);
  std::deque<int> q{net.source};
  seen[net.source] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int a : net.adj[v]) {
      cap_t r = net.arcs[a].original_cap() + flow[a ^ 1] - flow[a];
      int w = net.arcs[a].head;
      if (r > 0 && !seen[w]) {
        seen[w] = 1;
        q.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace maxflow
