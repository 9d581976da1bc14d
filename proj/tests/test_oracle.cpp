#include <doctest.h>

#include <algorithm>
#include <random>

#include "maxflow/generators.hpp"
#include "maxflow/oracle.hpp"
#include "support.hpp"

using namespace maxflow;

namespace {

Network diamond() { return build_network(4, {{0, 1, 3}, {0, 2, 2}, {1, 3, 2}, {2, 3, 3}, {1, 2, 1}}, 0, 3); }

}  // namespace

TEST_CASE("oracle on small instances") {
  CHECK(oracle_max_flow(build_network(2, {{0, 1, 7}}, 0, 1)).value == 7);
  Network d = diamond();
  CHECK(oracle_max_flow(d).value == testsupport::brute_force_min_cut(d));
  CHECK(oracle_max_flow(d).value == 5);
  // t has no incoming input arc.
  CHECK(oracle_max_flow(build_network(4, {{0, 1, 5}, {1, 2, 5}}, 0, 3)).value == 0);
}

TEST_CASE("oracle flow passes verification") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Network net = random_network(15, 50, 200, seed);
    OracleResult r = oracle_max_flow(net);
    VerifyReport v = verify_flow(net, r.flow);
    CHECK(v.ok);
    CHECK(v.value == r.value);
    CHECK(r.value == testsupport::dinic_value(net));
  }
}

TEST_CASE("verify_flow itemizes problems") {
  Network net = build_network(3, {{0, 1, 5}, {1, 2, 5}}, 0, 2);
  std::vector<cap_t> x(net.arcs.size(), 0);
  x[net.find_arc(0, 1)] = 3;
  x[net.find_arc(1, 2)] = 2;
  VerifyReport bad = verify_flow(net, x);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.problems.size() == 1);
  CHECK(bad.problems[0].find("conservation violated at node 1") != std::string::npos);

  std::vector<cap_t> over(net.arcs.size(), 0);
  over[net.find_arc(0, 1)] = 6;
  over[net.find_arc(1, 2)] = 6;
  VerifyReport cap = verify_flow(net, over);
  CHECK_FALSE(cap.ok);
  CHECK(cap.problems.size() == 2);
  CHECK(cap.problems[0].find("capacity violated") != std::string::npos);
}

TEST_CASE("min cut equals flow value") {
  Network one = build_network(2, {{0, 1, 7}}, 0, 1);
  CutResult c1 = min_cut(one, oracle_max_flow(one).flow);
  CHECK(c1.capacity == 7);
  CHECK(c1.source_side[0] == 1);
  CHECK(c1.source_side[1] == 0);

  Network d = diamond();
  CutResult cd = min_cut(d, oracle_max_flow(d).flow);
  CHECK(cd.capacity == testsupport::brute_force_min_cut(d));
  CHECK(testsupport::cut_of(d, cd.source_side) == cd.capacity);

  Network p = pathological_network(4, 10);
  cap_t big = 1;
  for (int i = 0; i < 10; ++i) big *= 4;
  CHECK(min_cut(p, oracle_max_flow(p).flow).capacity == big + 1);
  CHECK(testsupport::brute_force_min_cut(p) == big + 1);
}

TEST_CASE("oracle value ignores arc order") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<InputArc> arcs;
    std::uniform_int_distribution<int> node(0, 9);
    std::uniform_int_distribution<int> cap(1, 40);
    while (arcs.size() < 30) {
      int u = node(rng), v = node(rng);
      if (u != v) arcs.push_back({u, v, cap(rng)});
    }
    cap_t base = oracle_max_flow(build_network(10, arcs, 0, 9)).value;
    std::shuffle(arcs.begin(), arcs.end(), rng);
    Network shuffled = build_network(10, arcs, 0, 9);
    CHECK(oracle_max_flow(shuffled).value == base);
    CHECK(testsupport::brute_force_min_cut(shuffled) == base);
  }
}
