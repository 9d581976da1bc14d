#include "maxflow/network.hpp"

#include <map>
#include <numeric>
#include <string>
#include <utility>

namespace maxflow {

int Network::find_arc(int u, int v) const {
  for (int a : adj[u])
    if (arcs[a].head == v) return a;
  return -1;
}

int Network::original_arc_count() const {
  int c = 0;
  for (const Arc& a : arcs)
    if (a.original_cap() > 0) ++c;
  return c;
}

Network build_network(int n, const std::vector<InputArc>& input, int s, int t) {
  if (n < 2) throw std::invalid_argument("network needs at least two nodes");
  if (s < 0 || s >= n || t < 0 || t >= n) throw std::invalid_argument("terminal out of range");
  if (s == t) throw std::invalid_argument("source and sink must differ");

  Network net;
  net.n = n;
  net.source = s;
  net.sink = t;

  cap_t finite_max = 0;
  for (const InputArc& a : input) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      throw std::invalid_argument("arc endpoint out of range");
    if (a.tail == a.head)
      throw std::invalid_argument("self-loop on node " + std::to_string(a.tail));
    if (a.cap < 0) throw std::out_of_range("negative capacity");
    if (a.cap != kInfiniteCapacity) finite_max = std::max(finite_max, a.cap);
  }
  const cap_t infinite = static_cast<cap_t>(n) * std::max<cap_t>(finite_max, 1);

  // One pair per unordered node pair, in order of first appearance.
  std::map<std::pair<int, int>, int> pair_of;
  auto arc_for = [&](int u, int v) {
    auto key = std::minmax(u, v);
    auto it = pair_of.find(key);
    if (it == pair_of.end()) {
      int p = net.pair_count();
      pair_of.emplace(key, p);
      net.arcs.push_back({u, v, 0, 0});
      net.arcs.push_back({v, u, 0, 0});
      return 2 * p;
    }
    int a = 2 * it->second;
    return net.arcs[a].tail == u ? a : a + 1;
  };
  for (const InputArc& in : input) {
    int a = arc_for(in.tail, in.head);
    cap_t c = in.cap == kInfiniteCapacity ? infinite : in.cap;
    net.arcs[a].cap += c;
    net.arcs[a].orig += c;
  }
  for (const Arc& a : net.arcs) net.U = std::max(net.U, a.cap);

  // (j,s) never saturates: j can hand back at most what s sends out.
  const cap_t back = static_cast<cap_t>(n) * std::max<cap_t>(net.U, 1);
  for (int j = 0; j < n; ++j) {
    if (j == s || j == t) continue;
    int a = arc_for(j, s);
    net.arcs[a].cap = std::max(net.arcs[a].cap, back);
    a = arc_for(t, j);
    net.arcs[a].cap = std::max(net.arcs[a].cap, net.U);
  }

  net.adj.assign(static_cast<size_t>(n), {});
  for (int a = 0; a < net.m(); ++a) net.adj[net.arcs[a].tail].push_back(a);
  for (auto& list : net.adj)
    std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
      return net.bi_capacity(a) > net.bi_capacity(b);
    });
  return net;
}

}  // namespace maxflow
