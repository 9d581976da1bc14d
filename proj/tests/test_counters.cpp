#include <doctest.h>

#include <sstream>

#include "maxflow/counters.hpp"
#include "maxflow/generators.hpp"
#include "maxflow/solve.hpp"

using namespace maxflow;

TEST_CASE("record tallies events") {
  Counters c;
  c.n = 3;
  record(c, Event::LargePush);
  record(c, Event::LargePush);
  record(c, Event::SaturatingPush);
  record(c, Event::FrfPull);
  CHECK(c.pushes_large == 2);
  CHECK(c.pushes_saturating == 1);
  CHECK(c.frf_pulls == 1);
  CHECK(c.total_pushes() == 3);
}

TEST_CASE("contractions beyond n-1 are flagged") {
  Counters c;
  c.n = 3;
  record(c, Event::Contraction);
  record(c, Event::Contraction);
  CHECK(c.total_violations() == 0);
  record(c, Event::Contraction);
  CHECK(c.contractions == 3);
  CHECK(c.violations["contractions_bound"] == 1);
}

TEST_CASE("phase usefulness") {
  Counters c;
  record_phase(c, PhaseRecord{}, false);
  CHECK(c.useless_phases == 1);
  record_phase(c, PhaseRecord{}, true);
  PhaseRecord busy;
  busy.pushes = 3;
  busy.large_pushes = 2;
  busy.flow_ratio = 1.25;
  record_phase(c, busy, false);
  CHECK(c.phases == 3);
  CHECK(c.useful_phases == 2);
  CHECK(c.useless_phases == 1);
  CHECK(c.max_large_pushes_per_phase() == 2);
  CHECK(c.max_flow_ratio() == doctest::Approx(1.25));
}

TEST_CASE("violations keep the first detail") {
  Counters c;
  c.violation("x", "first");
  c.violation("x", "second");
  c.violation("y", "other");
  CHECK(c.total_violations() == 3);
  CHECK(c.first_violation["x"] == "first");
}

TEST_CASE("report is flat key value text") {
  Network net = random_network(12, 40, 300, 4);
  SolveOptions o;
  o.algorithm = Algorithm::Lmes;
  o.k = 4;
  FlowResult r = solve(net, o);
  std::string text = report(r.counters);
  std::istringstream in(text);
  std::string line;
  bool saw_phases = false;
  while (std::getline(in, line)) {
    auto sp = line.find(' ');
    REQUIRE(sp != std::string::npos);
    CHECK(line.find(' ', sp + 1) == std::string::npos);
    saw_phases = saw_phases || line.rfind("phases.total ", 0) == 0;
  }
  CHECK(saw_phases);
  CHECK(text.find("algorithm lmes\n") == 0);
  CHECK(report(solve(net, o).counters) == text);
}

TEST_CASE("per-phase flow ratios stay bounded") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Network net = random_network(20, 80, 1000, seed);
    SolveOptions l;
    l.algorithm = Algorithm::Lmes;
    l.k = 2;
    CHECK(solve(net, l).counters.max_flow_ratio() < 2.0);
    SolveOptions e;
    e.algorithm = Algorithm::Enhanced;
    e.k = 4;
    FlowResult er = solve(net, e);
    CHECK(er.counters.max_flow_ratio() <= 5.0);
    CHECK(er.counters.max_relabels_per_node <= 21u);
  }
}
