// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "maxflow/dimacs.hpp"
#include "maxflow/enhanced.hpp"
#include "maxflow/generators.hpp"
#include "maxflow/oracle.hpp"
#include "maxflow/solve.hpp"
#include "support.hpp"

using namespace maxflow;

namespace {

// Pinned sizes and tolerances.
constexpr int kRandomInstances = 500;
constexpr int kLayeredInstances = 50;
constexpr int kMaxNodes = 40;
constexpr int kMaxArcs = 160;
constexpr cap_t kMaxCapacity = 1024;
constexpr int kAuditedInstances = 50;
constexpr double kRuntimeBudgetSeconds = 120.0;
constexpr int kPathologicalK = 4;
const std::vector<int> kAlphas{10, 20, 40};
// Enhanced phases on the pathological family may differ across alpha by at
// most this much and never exceed the cap.
constexpr std::uint64_t kPhaseSpread = 2;
constexpr std::uint64_t kPhaseCap = 16;
// "Linear in alpha" for the diagnostic: at least half a phase per unit of alpha.
constexpr double kMinSlope = 0.5;
constexpr int kDeterminismInstances = 20;

struct Config {
  Algorithm algorithm;
  int k;
  std::string name;
};

const std::vector<Config> kConfigs{
    {Algorithm::Generic, 0, "generic"},   {Algorithm::Lmes, 2, "lmes/k=2"},
    {Algorithm::Lmes, 4, "lmes/k=4"},     {Algorithm::Lmes, 8, "lmes/k=8"},
    {Algorithm::Enhanced, 4, "enhanced/k=4"}, {Algorithm::Enhanced, 8, "enhanced/k=8"},
    {Algorithm::Enhanced, 16, "enhanced/k=16"},
};

struct Instance {
  std::string name;
  Network net;
};

std::vector<Instance> make_instances() {
  std::vector<Instance> out;
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < kRandomInstances; ++i) {
    int n = std::uniform_int_distribution<int>(4, kMaxNodes)(rng);
    int m = std::uniform_int_distribution<int>(n, std::min(n * (n - 1), kMaxArcs))(rng);
    cap_t U = std::uniform_int_distribution<int>(1, static_cast<int>(kMaxCapacity))(rng);
    out.push_back({"random-" + std::to_string(i), random_network(n, m, U, rng())});
  }
  for (int i = 0; i < kLayeredInstances; ++i) {
    int width = std::uniform_int_distribution<int>(2, 6)(rng);
    int depth = std::uniform_int_distribution<int>(2, 6)(rng);
    cap_t U = std::uniform_int_distribution<int>(1, static_cast<int>(kMaxCapacity))(rng);
    out.push_back({"layered-" + std::to_string(i), layered_network(width, depth, U, rng())});
  }
  return out;
}

SolveOptions options(const Config& c, bool audit) {
  SolveOptions o;
  o.algorithm = c.algorithm;
  o.k = c.k;
  o.audit = audit;
  return o;
}

// Least p with k^p >= 2U.
int lmes_phase_limit(cap_t U, int k) {
  int p = 0;
  cap_t v = 1;
  while (v < 2 * U) {
    v *= k;
    ++p;
  }
  return p + 1;
}

struct Verdict {
  bool ok = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    ok = false;
    if (notes.size() < 8) notes.push_back(why);
  }
};

void print(int id, const std::string& title, const Verdict& v, const std::string& summary) {
  std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << summary << ")\n";
  for (const auto& n : v.notes) std::cout << "    " << n << '\n';
}

const std::vector<std::string> kBoundChecks{"phase_flow", "large_pushes", "relabel_bound", "contractions_bound",
                                            "violating_duration", "contraction_deadline", "label_bound",
                                            "relabel_total", "saturating_total"};
const std::vector<std::string> kAbundanceChecks{"abundance_monotone", "abundant_residual", "abundance_tracking"};

bool is_abundance_check(const std::string& name) {
  return std::find(kAbundanceChecks.begin(), kAbundanceChecks.end(), name) != kAbundanceChecks.end();
}

std::string where(const Instance& inst, const Config& c) { return inst.name + " " + c.name; }

void check_bounds(const Instance& inst, const Config& c, const FlowResult& r, Verdict& v) {
  const Counters& k = r.counters;
  const auto n = static_cast<std::uint64_t>(inst.net.n);
  for (const auto& name : kBoundChecks)
    if (k.violations.count(name)) v.fail(where(inst, c) + ": " + name + ": " + k.first_violation.at(name));
  if (k.max_large_pushes_per_phase() > 4 * n * n) v.fail(where(inst, c) + ": large pushes per phase above 4n^2");
  if (k.max_relabels_per_node > n + 1) v.fail(where(inst, c) + ": a node relabeled more than n+1 times");
  if (k.contractions + 1 > n) v.fail(where(inst, c) + ": more than n-1 contractions");
  if (c.algorithm == Algorithm::Lmes &&
      k.phases > static_cast<std::uint64_t>(lmes_phase_limit(inst.net.U, c.k)))
    v.fail(where(inst, c) + ": " + std::to_string(k.phases) + " LMES phases, limit " +
           std::to_string(lmes_phase_limit(inst.net.U, c.k)));
  if (c.algorithm == Algorithm::Enhanced) {
    EnhancedParams p = derive_params(inst.net.n, c.k);
    if (k.max_violating_phases > static_cast<std::uint64_t>(2 * p.Q + 1))
      v.fail(where(inst, c) + ": violating for " + std::to_string(k.max_violating_phases) + " phases");
  }
}

cap_t power(int k, int alpha) {
  cap_t v = 1;
  for (int i = 0; i < alpha; ++i) v *= k;
  return v;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Instance> instances = make_instances();

  Verdict c1, c2, c3, c4, c5, c6, c7;
  std::uint64_t solves = 0, contracted_runs = 0;
  double max_lmes_ratio = 0, max_enh_ratio = 0;

  // Criteria 1, 2, 4 over the full corpus.
  for (const Instance& inst : instances) {
    const cap_t want = oracle_max_flow(inst.net).value;
    const cap_t cross = testsupport::dinic_value(inst.net);
    if (want != cross) c1.fail(inst.name + ": oracle " + to_string(want) + " but reference Dinic " + to_string(cross));
    for (const Config& c : kConfigs) {
      FlowResult r;
      try {
        r = solve(inst.net, options(c, false));
      } catch (const std::exception& e) {
        c1.fail(where(inst, c) + ": threw " + e.what());
        continue;
      }
      ++solves;
      VerifyReport vr = verify_flow(inst.net, r.flow);
      if (r.value != cross) c1.fail(where(inst, c) + ": value " + to_string(r.value) + " expected " + to_string(cross));
      if (!vr.ok) c1.fail(where(inst, c) + ": verify_flow: " + vr.problems.front());
      if (vr.ok && vr.value != r.value) c1.fail(where(inst, c) + ": reported value differs from flow value");

      const cap_t direct = testsupport::cut_of(inst.net, r.source_side);
      const CutResult mc = min_cut(inst.net, r.flow);
      if (r.cut_capacity != r.value || direct != r.value || mc.capacity != r.value)
        c2.fail(where(inst, c) + ": cut " + to_string(direct) + " vs value " + to_string(r.value));
      contracted_runs += r.counters.contractions > 0;

      check_bounds(inst, c, r, c4);
      double ratio = r.counters.max_flow_ratio();
      if (c.algorithm == Algorithm::Lmes) max_lmes_ratio = std::max(max_lmes_ratio, ratio);
      if (c.algorithm == Algorithm::Enhanced) max_enh_ratio = std::max(max_enh_ratio, ratio);
      for (const auto& [name, count] : r.counters.violations)
        if (is_abundance_check(name)) c6.fail(where(inst, c) + ": " + name + ": " + r.counters.first_violation.at(name));
    }
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > kRuntimeBudgetSeconds) c1.fail("took " + std::to_string(elapsed) + " s");

  // Criteria 3 and 6 in audit mode.
  std::uint64_t audits = 0, enhanced_audits = 0;
  std::map<std::string, std::uint64_t> audit_violations;
  for (int i = 0; i < kAuditedInstances; ++i) {
    const Instance& inst = instances[static_cast<size_t>(i)];
    for (const Config& c : kConfigs) {
      FlowResult r;
      try {
        r = solve(inst.net, options(c, true));
      } catch (const std::exception& e) {
        c3.fail(where(inst, c) + ": threw " + e.what());
        continue;
      }
      audits += r.counters.audits;
      if (c.algorithm == Algorithm::Enhanced) enhanced_audits += r.counters.audits;
      if (r.counters.total_pushes() > 0 && r.counters.audits == 0) c3.fail(where(inst, c) + ": no audits ran");
      for (const auto& [name, count] : r.counters.violations) {
        audit_violations[name] += count;
        c3.fail(where(inst, c) + ": " + name + ": " + r.counters.first_violation.at(name));
        if (is_abundance_check(name)) c6.fail(where(inst, c) + ": " + name + ": " + r.counters.first_violation.at(name));
      }
      check_bounds(inst, c, r, c4);
    }
  }
  if (enhanced_audits == 0) c6.fail("no audited Enhanced runs");

  // Criterion 5.
  std::vector<std::uint64_t> with_jumps, without_jumps, lmes_phases;
  std::uint64_t total_jumps = 0;
  for (int alpha : kAlphas) {
    Network net = pathological_network(kPathologicalK, alpha);
    const cap_t want = power(kPathologicalK, alpha) + 1;
    SolveOptions on;
    on.algorithm = Algorithm::Enhanced;
    on.k = kPathologicalK;
    FlowResult a = solve(net, on);
    SolveOptions off = on;
    off.jumps = false;
    FlowResult b = solve(net, off);
    SolveOptions lm;
    lm.algorithm = Algorithm::Lmes;
    lm.k = kPathologicalK;
    FlowResult l = solve(net, lm);
    if (a.value != want) c5.fail("alpha " + std::to_string(alpha) + ": value " + to_string(a.value));
    if (b.value != want) c5.fail("alpha " + std::to_string(alpha) + ": value without jumps " + to_string(b.value));
    with_jumps.push_back(a.counters.phases);
    without_jumps.push_back(b.counters.phases);
    lmes_phases.push_back(l.counters.phases);
    total_jumps += a.counters.jumps;
  }
  const auto [lo, hi] = std::minmax_element(with_jumps.begin(), with_jumps.end());
  if (*hi - *lo > kPhaseSpread || *hi > kPhaseCap)
    c5.fail("Enhanced phase counts vary with alpha or exceed " + std::to_string(kPhaseCap));
  const double slope = (static_cast<double>(without_jumps.back()) - static_cast<double>(without_jumps.front())) /
                       (kAlphas.back() - kAlphas.front());
  if (slope < kMinSlope) {
    std::ostringstream why;
    why << "jumps disabled: phase slope " << slope << " per unit alpha, need >= " << kMinSlope;
    c5.fail(why.str());
  }

  // Criterion 7.
  for (int i = 0; i < kDeterminismInstances; ++i) {
    const Instance& inst = instances[static_cast<size_t>(i * 25 % instances.size())];
    for (const Config& c : kConfigs) {
      FlowResult a = solve(inst.net, options(c, false));
      FlowResult b = solve(inst.net, options(c, false));
      if (write_solution(inst.net, a.flow, a.value) != write_solution(inst.net, b.flow, b.value))
        c7.fail(where(inst, c) + ": solution text differs");
      if (report(a.counters) != report(b.counters)) c7.fail(where(inst, c) + ": counter report differs");
    }
  }

  auto list = [](const std::vector<std::uint64_t>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  char buf[128];
  std::snprintf(buf, sizeof buf, "%llu solves, %llu with contractions, %.1f s",
                static_cast<unsigned long long>(solves), static_cast<unsigned long long>(contracted_runs), elapsed);
  print(1, "oracle equivalence", c1, buf);
  print(2, "max-flow equals min-cut", c2, std::to_string(solves) + " cuts");
  print(3, "invariant audits", c3, std::to_string(audits) + " audit passes");
  std::snprintf(buf, sizeof buf, "max phase flow ratio lmes %.3f, enhanced %.3f", max_lmes_ratio, max_enh_ratio);
  print(4, "counter bounds", c4, buf);
  print(5, "pathological family", c5,
        "alpha " + std::to_string(kAlphas.front()) + ".." + std::to_string(kAlphas.back()) + ": enhanced phases " +
            list(with_jumps) + ", without jumps " + list(without_jumps) + ", lmes " + list(lmes_phases) +
            ", jumps taken " + std::to_string(total_jumps));
  print(6, "abundance monotonicity", c6, std::to_string(enhanced_audits) + " Enhanced audit passes");
  print(7, "determinism", c7, std::to_string(kDeterminismInstances * kConfigs.size()) + " repeated solves");

  bool all = c1.ok && c2.ok && c3.ok && c4.ok && c5.ok && c6.ok && c7.ok;
  return all ? 0 : 1;
}
