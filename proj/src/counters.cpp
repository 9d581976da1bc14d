#include "maxflow/counters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace maxflow {

void Counters::violation(const std::string& check, const std::string& detail) {
  if (violations[check]++ == 0) first_violation[check] = detail;
}

std::uint64_t Counters::total_violations() const {
  std::uint64_t t = 0;
  for (const auto& [_, c] : violations) t += c;
  return t;
}

double Counters::max_flow_ratio() const {
  double r = 0;
  for (const PhaseRecord& p : phase_log) r = std::max(r, p.flow_ratio);
  return r;
}

std::uint64_t Counters::max_large_pushes_per_phase() const {
  std::uint64_t r = 0;
  for (const PhaseRecord& p : phase_log) r = std::max(r, p.large_pushes);
  return r;
}

void record(Counters& c, Event ev) {
  switch (ev) {
    case Event::SaturatingPush: ++c.pushes_saturating; break;
    case Event::LargePush: ++c.pushes_large; break;
    case Event::MediumPush: ++c.pushes_medium; break;
    case Event::OtherPush: ++c.pushes_other; break;
    case Event::FrfPush: ++c.frf_pushes; break;
    case Event::FrfPull: ++c.frf_pulls; break;
    case Event::Relabel: ++c.relabels; break;
    case Event::Contraction:
      ++c.contractions;
      if (c.contractions > static_cast<std::uint64_t>(std::max(0, c.n - 1)))
        c.violation("contractions_bound", "more than n-1 contractions");
      break;
    case Event::FrfAdd: ++c.frf_adds; break;
    case Event::FrfDelete: ++c.frf_deletes; break;
    case Event::NewlyViolating: ++c.newly_violating; break;
    case Event::MediumArc: ++c.medium_arc_occurrences; break;
  }
}

void record_phase(Counters& c, PhaseRecord rec, bool forest_nonempty) {
  rec.useful = rec.useful || rec.pushes > 0 || forest_nonempty;
  ++c.phases;
  if (rec.useful)
    ++c.useful_phases;
  else
    ++c.useless_phases;
  c.phase_log.push_back(std::move(rec));
}

namespace {

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string report(const Counters& c) {
  std::ostringstream out;
  auto kv = [&](const std::string& key, const auto& value) { out << key << ' ' << value << '\n'; };
  kv("algorithm", c.algorithm.empty() ? std::string("none") : c.algorithm);
  kv("n", c.n);
  kv("m", c.m);
  kv("k", c.k);
  kv("pushes.saturating", c.pushes_saturating);
  kv("pushes.large", c.pushes_large);
  kv("pushes.medium", c.pushes_medium);
  kv("pushes.other", c.pushes_other);
  kv("pushes.frf_push", c.frf_pushes);
  kv("pushes.frf_pull", c.frf_pulls);
  kv("relabels", c.relabels);
  kv("relabels.max_per_node", c.max_relabels_per_node);
  kv("phases.total", c.phases);
  kv("phases.useful", c.useful_phases);
  kv("phases.useless", c.useless_phases);
  kv("phases.jumps", c.jumps);
  kv("contractions", c.contractions);
  kv("frf.adds", c.frf_adds);
  kv("frf.deletes", c.frf_deletes);
  kv("frf.max_violating_phases", c.max_violating_phases);
  kv("newly_violating", c.newly_violating);
  kv("medium_arc_occurrences", c.medium_arc_occurrences);

  double n2 = static_cast<double>(c.n) * c.n;
  double phases = c.phases == 0 ? 1.0 : static_cast<double>(c.phases);
  kv("ratio.large_per_n2_phase", fixed(static_cast<double>(c.pushes_large) / (n2 * phases)));
  double logkn = (c.k >= 2 && c.n >= 2) ? std::log(c.n) / std::log(c.k) : 1.0;
  double mlog = std::max(1.0, c.m * logkn);
  kv("ratio.phases_per_m_logkn", fixed(static_cast<double>(c.phases) / mlog));
  kv("ratio.max_phase_flow_per_n2delta", fixed(c.max_flow_ratio()));
  kv("max_large_pushes_per_phase", c.max_large_pushes_per_phase());
  kv("audits", c.audits);
  kv("violations.total", c.total_violations());
  for (const auto& [name, count] : c.violations) kv("violations." + name, count);
  for (size_t i = 0; i < c.phase_log.size(); ++i) {
    const PhaseRecord& p = c.phase_log[i];
    std::string key = "phase." + std::to_string(i);
    kv(key + ".delta", p.delta);
    kv(key + ".pushes", p.pushes);
    kv(key + ".large", p.large_pushes);
    kv(key + ".flow_ratio", fixed(p.flow_ratio));
    kv(key + ".useful", p.useful ? 1 : 0);
  }
  return out.str();
}

}  // namespace maxflow
