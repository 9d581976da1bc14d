#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace maxflow {

struct PhaseRecord {
  std::string delta;         // exact, in solver units
  double flow_ratio = 0;     // pushed flow / (n^2 * delta)
  std::uint64_t pushes = 0;  // all pushes, FRF flows included
  std::uint64_t large_pushes = 0;
  bool useful = false;
};

struct Counters {
  std::string algorithm;
  int n = 0;
  int m = 0;
  int k = 0;

  std::uint64_t pushes_saturating = 0;
  std::uint64_t pushes_large = 0;
  std::uint64_t pushes_medium = 0;
  std::uint64_t pushes_other = 0;
  std::uint64_t frf_pushes = 0;
  std::uint64_t frf_pulls = 0;
  std::uint64_t relabels = 0;
  std::uint64_t max_relabels_per_node = 0;
  std::uint64_t phases = 0;
  std::uint64_t useful_phases = 0;
  std::uint64_t useless_phases = 0;
  std::uint64_t jumps = 0;
  std::uint64_t contractions = 0;
  std::uint64_t frf_adds = 0;
  std::uint64_t frf_deletes = 0;
  std::uint64_t newly_violating = 0;
  std::uint64_t medium_arc_occurrences = 0;
  std::uint64_t max_violating_phases = 0;
  std::uint64_t audits = 0;

  std::vector<PhaseRecord> phase_log;

  // Invariant or bound failures, by check name. Empty on a clean run.
  std::map<std::string, std::uint64_t> violations;
  std::map<std::string, std::string> first_violation;

  void violation(const std::string& check, const std::string& detail);
  std::uint64_t total_violations() const;
  std::uint64_t total_pushes() const {
    return pushes_saturating + pushes_large + pushes_medium + pushes_other;
  }
  double max_flow_ratio() const;
  std::uint64_t max_large_pushes_per_phase() const;
};

enum class Event {
  SaturatingPush,
  LargePush,
  MediumPush,
  OtherPush,
  FrfPush,
  FrfPull,
  Relabel,
  Contraction,
  FrfAdd,
  FrfDelete,
  NewlyViolating,
  MediumArc,
};

void record(Counters& c, Event ev);
// Closes a phase. A phase is useful when it pushed anything or the
// flow-return forest was non-empty.
void record_phase(Counters& c, PhaseRecord rec, bool forest_nonempty);

// Flat "key value" lines, deterministic order.
std::string report(const Counters& c);

}  // namespace maxflow
