#pragma once

#include <deque>
#include <vector>

#include "maxflow/network.hpp"
#include "maxflow/quantity.hpp"

namespace maxflow {

// Cuts the flow on every arc back to its input capacity (only (j,s) and
// (t,j) arcs can exceed it) while keeping every non-terminal node balanced,
// by cancelling flow along positive-flow paths.
template <class T>
void strip_helper_flow(const Network& net, std::vector<T>& x) {
  std::vector<T> ex(static_cast<size_t>(net.n), T(0));
  for (int a = 0; a < net.m(); ++a) {
    T limit(net.arcs[a].orig);
    if (!(limit < x[a])) continue;
    T over = x[a] - limit;
    ex[net.arcs[a].tail] = ex[net.arcs[a].tail] + over;
    ex[net.arcs[a].head] = ex[net.arcs[a].head] - over;
    x[a] = limit;
  }
  auto find_path = [&](int from, bool backward) {
    // Returns arcs of a positive-flow path between `from` and a terminal or
    // an opposite-signed node, ordered away from `from`.
    std::vector<int> via(static_cast<size_t>(net.n), -1);
    std::vector<char> seen(static_cast<size_t>(net.n), 0);
    std::deque<int> q{from};
    seen[from] = 1;
    int hit = -1;
    while (!q.empty() && hit < 0) {
      int w = q.front();
      q.pop_front();
      for (int b0 : net.adj[w]) {
        int b = backward ? (b0 ^ 1) : b0;  // b enters w when walking backward
        if (!(T(0) < x[b])) continue;
        int z = backward ? net.arcs[b].tail : net.arcs[b].head;
        if (seen[z]) continue;
        seen[z] = 1;
        via[z] = b;
        bool stop = net.is_terminal(z) || (backward ? ex[z] < T(0) : T(0) < ex[z]);
        if (stop) {
          hit = z;
          break;
        }
        q.push_back(z);
      }
    }
    std::vector<int> path;
    if (hit < 0) throw std::logic_error("strip_helper_flow: no cancelling path");
    for (int z = hit; z != from;) {
      int b = via[z];
      path.push_back(b);
      z = backward ? net.arcs[b].head : net.arcs[b].tail;
    }
    return std::pair{hit, path};
  };
  for (int pass = 0; pass < 2; ++pass) {
    bool backward = pass == 0;
    for (int v = 0; v < net.n; ++v) {
      if (net.is_terminal(v)) continue;
      while (backward ? T(0) < ex[v] : ex[v] < T(0)) {
        auto [z, path] = find_path(v, backward);
        T amount = backward ? ex[v] : T(0) - ex[v];
        for (int b : path) amount = std::min(amount, x[b]);
        if (!net.is_terminal(z)) amount = std::min(amount, backward ? T(0) - ex[z] : ex[z]);
        for (int b : path) x[b] = x[b] - amount;
        if (backward) {
          ex[v] = ex[v] - amount;
          if (!net.is_terminal(z)) ex[z] = ex[z] + amount;
        } else {
          ex[v] = ex[v] + amount;
          if (!net.is_terminal(z)) ex[z] = ex[z] - amount;
        }
      }
    }
  }
}

// Rounds a feasible flow with dyadic amounts and integral value to an
// integral feasible flow with the same value.
std::vector<cap_t> integralize(const Network& net, const std::vector<Quantity>& x);

// Capacity of the cut (S, N \ S) in the input graph (helper arcs excluded).
cap_t cut_capacity(const Network& net, const std::vector<char>& source_side);

// Nodes reachable from s in the residual graph of the input arcs.
std::vector<char> residual_reachable(const Network& net, const std::vector<cap_t>& flow);

}  // namespace maxflow
