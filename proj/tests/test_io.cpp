#include <doctest.h>

#include "maxflow/dimacs.hpp"
#include "maxflow/generators.hpp"
#include "maxflow/oracle.hpp"
#include "maxflow/solve.hpp"
#include "support.hpp"

using namespace maxflow;

namespace {

DimacsError::Kind parse_error_kind(const std::string& text) {
  try {
    parse_dimacs(text);
  } catch (const DimacsError& e) {
    return e.kind();
  }
  FAIL("no error for: " << text);
  return DimacsError::Kind::Parse;
}

int parse_error_line(const std::string& text) {
  try {
    parse_dimacs(text);
  } catch (const DimacsError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("parse minimal DIMACS document") {
  Network net = parse_dimacs("p max 2 1\nn 1 s\nn 2 t\na 1 2 5\n");
  CHECK(net.n == 2);
  CHECK(net.source == 0);
  CHECK(net.sink == 1);
  CHECK(net.arcs[net.find_arc(0, 1)].orig == 5);
  CHECK(oracle_max_flow(net).value == 5);
}

TEST_CASE("comments and blank lines are ignored") {
  Network net = parse_dimacs("c hello\n\np max 3 2\nc mid\nn 1 s\nn 3 t\na 1 2 4\na 2 3 6\n");
  CHECK(oracle_max_flow(net).value == 4);
}

TEST_CASE("DIMACS errors") {
  CHECK(parse_error_kind("p max 2 1\nn 1 s\nn 1 s\nn 2 t\na 1 2 5\n") == DimacsError::Kind::Format);
  CHECK(parse_error_line("p max 2 1\nn 1 s\nn 1 s\nn 2 t\na 1 2 5\n") == 3);
  CHECK(parse_error_kind("p max 2 1\nn 1 s\nn 2 t\na 1 2 -3\n") == DimacsError::Kind::Range);
  CHECK(parse_error_line("p max 2 1\nn 1 s\nn 2 t\na 1 2 -3\n") == 4);
  CHECK(parse_error_kind("n 1 s\n") == DimacsError::Kind::Format);
  CHECK(parse_error_kind("p max 2 1\nn 2 t\na 1 2 5\n") == DimacsError::Kind::Format);
  CHECK(parse_error_kind("") == DimacsError::Kind::Format);
  CHECK(parse_error_kind("p max 2 1\nn 1 s\nn 2 t\na 1 2 five\n") == DimacsError::Kind::Parse);
  CHECK(parse_error_kind("p max 2 1\nn 1 s\nn 2 t\na 1 3 5\n") == DimacsError::Kind::Range);
  CHECK(parse_error_kind("p max 2 1\nn 1 s\nn 2 t\nx 1\n") == DimacsError::Kind::Parse);
  CHECK(parse_error_kind("p max 2 1\nn 1 s\nn 2 t\na 1 2 999999999999999999999999999999999999999999\n") ==
        DimacsError::Kind::Range);
  CHECK(parse_error_kind("p max 2 1\np max 2 1\n") == DimacsError::Kind::Format);
}

TEST_CASE("write_solution format") {
  Network net = parse_dimacs("p max 2 1\nn 1 s\nn 2 t\na 1 2 7\n");
  SolveOptions o;
  o.algorithm = Algorithm::Generic;
  FlowResult r = solve(net, o);
  CHECK(write_solution(net, r.flow, r.value) == "s 7\nf 1 2 7\n");
  std::vector<cap_t> zero(net.arcs.size(), 0);
  CHECK(write_solution(net, zero, 0) == "s 0\n");
}

TEST_CASE("solution round-trips") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Network net = random_network(12, 40, 100, seed);
    OracleResult r = oracle_max_flow(net);
    Solution back = parse_solution(net, write_solution(net, r.flow, r.value));
    CHECK(back.value == r.value);
    CHECK(back.flow == r.flow);
  }
  Network net = parse_dimacs("p max 2 1\nn 1 s\nn 2 t\na 1 2 7\n");
  CHECK_THROWS_AS(parse_solution(net, "f 1 2 3\n"), DimacsError);
  CHECK_THROWS_AS(parse_solution(net, "s 3\nf 2 3 1\n"), DimacsError);
}

TEST_CASE("problem text round-trips") {
  Network net = random_network(15, 60, 500, 8);
  Network back = parse_dimacs(write_dimacs(net));
  CHECK(back.n == net.n);
  CHECK(back.m() == net.m());
  for (int a = 0; a < net.m(); ++a) {
    int b = back.find_arc(net.arcs[a].tail, net.arcs[a].head);
    REQUIRE(b >= 0);
    CHECK(back.arcs[b].orig == net.arcs[a].orig);
    CHECK(back.arcs[b].cap == net.arcs[a].cap);
  }
}

TEST_CASE("pathological generator") {
  Network net = pathological_network(4, 10);
  const cap_t big = static_cast<cap_t>(1) << 20;
  CHECK(net.n == 4);
  CHECK(net.arcs[net.find_arc(0, 1)].orig == big);
  CHECK(net.arcs[net.find_arc(1, 3)].orig == big);
  CHECK(net.arcs[net.find_arc(0, 2)].orig == 1);
  CHECK(net.arcs[net.find_arc(2, 3)].orig == 1);
  CHECK(net.original_arc_count() == 4);
  CHECK(testsupport::brute_force_min_cut(net) == big + 1);
}

TEST_CASE("random generator is deterministic") {
  Network a = random_network(10, 30, 100, 1);
  Network b = random_network(10, 30, 100, 1);
  CHECK(write_dimacs(a) == write_dimacs(b));
  CHECK(a.original_arc_count() == 30);
  CHECK(write_dimacs(random_network(10, 30, 100, 2)) != write_dimacs(a));
  CHECK_THROWS(random_network(4, 13, 10, 1));
}

TEST_CASE("layered generator") {
  Network net = layered_network(3, 4, 50, 2);
  CHECK(net.n == 3 * 4 + 2);
  // s feeds layer 0 only and layer 3 feeds t only.
  for (const Arc& a : net.arcs) {
    if (a.orig <= 0) continue;
    if (a.tail == net.source) CHECK((a.head >= 1 && a.head <= 3));
    if (a.head == net.sink) CHECK((a.tail >= 10 && a.tail <= 12));
  }
  for (int v = 1; v <= 3; ++v) CHECK(net.arcs[net.find_arc(net.source, v)].orig > 0);
  for (int v = 10; v <= 12; ++v) CHECK(net.arcs[net.find_arc(v, net.sink)].orig > 0);
  CHECK(write_dimacs(layered_network(3, 4, 50, 2)) == write_dimacs(net));
}

TEST_CASE("all solvers agree on generated instances") {
  std::vector<Network> nets{pathological_network(8, 6), layered_network(4, 5, 300, 3), random_network(20, 70, 64, 9)};
  for (const Network& net : nets) {
    cap_t want = testsupport::dinic_value(net);
    for (Algorithm alg : {Algorithm::Generic, Algorithm::Lmes, Algorithm::Enhanced}) {
      SolveOptions o;
      o.algorithm = alg;
      CHECK(solve(net, o).value == want);
    }
  }
}
