#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "maxflow/types.hpp"

namespace maxflow {

// Input capacity meaning "unbounded"; replaced by n * U at build time.
inline constexpr cap_t kInfiniteCapacity = std::numeric_limits<cap_t>::max();

struct InputArc {
  int tail;
  int head;
  cap_t cap;
};

struct Arc {
  int tail;
  int head;
  cap_t cap;   // capacity used by the solvers
  cap_t orig;  // capacity in the input graph
  // (j,s) raised to n U and (t,j) to U; the surplus is not real capacity.
  bool helper() const { return cap != orig; }
  cap_t original_cap() const { return orig; }
};

// Arc 2p and 2p+1 are partners.
class Network {
 public:
  int n = 0;
  int source = 0;
  int sink = 1;
  cap_t U = 0;  // largest capacity after the infinite-capacity substitution
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> adj;  // outgoing arcs, non-increasing bi-capacity

  int m() const { return static_cast<int>(arcs.size()); }
  int pair_count() const { return m() / 2; }
  static int rev(int a) { return a ^ 1; }
  cap_t bi_capacity(int a) const { return arcs[a].cap + arcs[a ^ 1].cap; }
  bool is_terminal(int v) const { return v == source || v == sink; }
  // First arc from u to v, or -1.
  int find_arc(int u, int v) const;
  // Number of input arcs with positive original capacity.
  int original_arc_count() const;
};

Network build_network(int n, const std::vector<InputArc>& arcs, int s, int t);

template <class T>
struct SolverState {
  std::vector<T> u;  // capacities in solver units
  std::vector<T> x;  // flow; at most one arc of a pair carries positive flow
  std::vector<T> e;
  std::vector<int> d;
  std::vector<size_t> cur;
};

template <class T>
SolverState<T> make_state(const Network& net) {
  SolverState<T> st;
  st.u.reserve(net.arcs.size());
  for (const Arc& a : net.arcs) st.u.push_back(T(a.cap));
  st.x.assign(net.arcs.size(), T(0));
  st.e.assign(static_cast<size_t>(net.n), T(0));
  st.d.assign(static_cast<size_t>(net.n), 0);
  st.cur.assign(static_cast<size_t>(net.n), 0);
  return st;
}

template <class T>
T residual_capacity(const SolverState<T>& st, int a) {
  return st.u[a] + st.x[a ^ 1] - st.x[a];
}

template <class T>
void apply_push(const Network& net, SolverState<T>& st, int a, const T& delta) {
  MF_REQUIRE(!(delta < T(0)), "apply_push: negative amount");
  MF_REQUIRE(!(residual_capacity(st, a) < delta), "apply_push: amount exceeds residual capacity");
  if (delta == T(0)) return;
  T cancel = std::min(st.x[a ^ 1], delta);
  st.x[a ^ 1] = st.x[a ^ 1] - cancel;
  st.x[a] = st.x[a] + (delta - cancel);
  st.e[net.arcs[a].tail] = st.e[net.arcs[a].tail] - delta;
  st.e[net.arcs[a].head] = st.e[net.arcs[a].head] + delta;
}

template <class T>
T flow_value(const Network& net, const std::vector<T>& x) {
  T v(0);
  for (int a = 0; a < net.m(); ++a) {
    if (net.arcs[a].head == net.sink) v = v + x[a];
    if (net.arcs[a].tail == net.sink) v = v - x[a];
  }
  return v;
}

template <class T>
std::vector<T> recompute_excess(const Network& net, const std::vector<T>& x) {
  std::vector<T> e(static_cast<size_t>(net.n), T(0));
  for (int a = 0; a < net.m(); ++a) {
    e[net.arcs[a].head] = e[net.arcs[a].head] + x[a];
    e[net.arcs[a].tail] = e[net.arcs[a].tail] - x[a];
  }
  return e;
}

}  // namespace maxflow
