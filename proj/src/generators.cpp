#include "maxflow/generators.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace maxflow {

namespace {

cap_t draw_cap(std::mt19937_64& rng, cap_t U) {
  std::uniform_int_distribution<std::uint64_t> d(1, static_cast<std::uint64_t>(U));
  return static_cast<cap_t>(d(rng));
}

}  // namespace

Network random_network(int n, int m, cap_t U, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random network needs n >= 2");
  if (m < 0 || static_cast<long long>(m) > static_cast<long long>(n) * (n - 1))
    throw std::invalid_argument("m exceeds n(n-1)");
  if (U < 1 || U > static_cast<cap_t>(UINT64_MAX)) throw std::invalid_argument("U must lie in [1, 2^64)");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> node(0, n - 1);
  std::set<std::pair<int, int>> used;
  std::vector<InputArc> arcs;
  while (static_cast<int>(arcs.size()) < m) {
    int u = node(rng), v = node(rng);
    if (u == v || !used.insert({u, v}).second) continue;
    arcs.push_back({u, v, draw_cap(rng, U)});
  }
  return build_network(n, arcs, 0, n - 1);
}

Network pathological_network(int k, int alpha) {
  if (k < 2 || alpha < 1) throw std::invalid_argument("pathological family needs k >= 2, alpha >= 1");
  cap_t big = 1;
  for (int i = 0; i < alpha; ++i) {
    if (big > kInfiniteCapacity / 4 / k) throw std::out_of_range("k^alpha too large");
    big *= k;
  }
  return build_network(4, {{0, 1, big}, {1, 3, big}, {0, 2, 1}, {2, 3, 1}}, 0, 3);
}

Network layered_network(int width, int depth, cap_t U, std::uint64_t seed) {
  if (width < 1 || depth < 1) throw std::invalid_argument("layered network needs width, depth >= 1");
  if (U < 1 || U > static_cast<cap_t>(UINT64_MAX)) throw std::invalid_argument("U must lie in [1, 2^64)");
  std::mt19937_64 rng(seed);
  const int n = width * depth + 2, s = 0, t = n - 1;
  auto id = [&](int layer, int i) { return 1 + layer * width + i; };
  std::uniform_int_distribution<int> pick(0, width - 1);
  std::uniform_int_distribution<int> fan(1, std::min(3, width));
  std::vector<InputArc> arcs;
  for (int i = 0; i < width; ++i) {
    arcs.push_back({s, id(0, i), draw_cap(rng, U)});
    arcs.push_back({id(depth - 1, i), t, draw_cap(rng, U)});
  }
  for (int l = 0; l + 1 < depth; ++l)
    for (int i = 0; i < width; ++i) {
      std::set<int> targets;
      int want = fan(rng);
      while (static_cast<int>(targets.size()) < want) targets.insert(pick(rng));
      for (int j : targets) arcs.push_back({id(l, i), id(l + 1, j), draw_cap(rng, U)});
    }
  return build_network(n, arcs, s, t);
}

}  // namespace maxflow
