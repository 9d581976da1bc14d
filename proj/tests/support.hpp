#pragma once

// Reference routines that share no code with the library solvers.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "maxflow/network.hpp"

namespace testsupport {

using maxflow::cap_t;

struct Edge {
  int to;
  cap_t cap;
};

// Dinic over the input capacities of net (helper surplus ignored).
class Dinic {
 public:
  explicit Dinic(const maxflow::Network& net) : n_(net.n), g_(static_cast<size_t>(net.n)) {
    for (const auto& a : net.arcs) {
      if (a.orig <= 0) continue;
      g_[a.tail].push_back(static_cast<int>(e_.size()));
      e_.push_back({a.head, a.orig});
      g_[a.head].push_back(static_cast<int>(e_.size()));
      e_.push_back({a.tail, 0});
    }
    s_ = net.source;
    t_ = net.sink;
  }

  cap_t run() {
    cap_t total = 0;
    while (bfs()) {
      it_.assign(static_cast<size_t>(n_), 0);
      while (cap_t f = dfs(s_, std::numeric_limits<cap_t>::max())) total += f;
    }
    return total;
  }

 private:
  bool bfs() {
    level_.assign(static_cast<size_t>(n_), -1);
    std::queue<int> q;
    q.push(s_);
    level_[s_] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int id : g_[v])
        if (e_[id].cap > 0 && level_[e_[id].to] < 0) {
          level_[e_[id].to] = level_[v] + 1;
          q.push(e_[id].to);
        }
    }
    return level_[t_] >= 0;
  }

  cap_t dfs(int v, cap_t f) {
    if (v == t_) return f;
    for (size_t& i = it_[v]; i < g_[v].size(); ++i) {
      int id = g_[v][i];
      Edge& ed = e_[id];
      if (ed.cap <= 0 || level_[ed.to] != level_[v] + 1) continue;
      cap_t got = dfs(ed.to, std::min(f, ed.cap));
      if (got > 0) {
        ed.cap -= got;
        e_[id ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  int n_, s_ = 0, t_ = 0;
  std::vector<Edge> e_;
  std::vector<std::vector<int>> g_;
  std::vector<int> level_;
  std::vector<size_t> it_;
};

inline cap_t dinic_value(const maxflow::Network& net) { return Dinic(net).run(); }

// Minimum over all s-t cuts by enumeration; only for tiny networks.
inline cap_t brute_force_min_cut(const maxflow::Network& net) {
  std::vector<int> free;
  for (int v = 0; v < net.n; ++v)
    if (!net.is_terminal(v)) free.push_back(v);
  cap_t best = std::numeric_limits<cap_t>::max();
  for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
    std::vector<char> side(static_cast<size_t>(net.n), 0);
    side[net.source] = 1;
    for (size_t b = 0; b < free.size(); ++b)
      if (mask >> b & 1u) side[free[b]] = 1;
    cap_t c = 0;
    for (const auto& a : net.arcs)
      if (side[a.tail] && !side[a.head]) c += a.orig;
    best = std::min(best, c);
  }
  return best;
}

// Capacity of (S, N \ S) over input capacities.
inline cap_t cut_of(const maxflow::Network& net, const std::vector<char>& side) {
  cap_t c = 0;
  for (const auto& a : net.arcs)
    if (side[a.tail] && !side[a.head]) c += a.orig;
  return c;
}

// Feasibility against input capacities and conservation; returns the value
// or -1 when the flow is infeasible.
inline cap_t checked_value(const maxflow::Network& net, const std::vector<cap_t>& x) {
  if (x.size() != net.arcs.size()) return -1;
  std::vector<cap_t> ex(static_cast<size_t>(net.n), 0);
  for (int a = 0; a < net.m(); ++a) {
    if (x[a] < 0 || x[a] > net.arcs[a].orig) return -1;
    ex[net.arcs[a].head] += x[a];
    ex[net.arcs[a].tail] -= x[a];
  }
  for (int v = 0; v < net.n; ++v)
    if (!net.is_terminal(v) && ex[v] != 0) return -1;
  return ex[net.sink];
}

}  // namespace testsupport
