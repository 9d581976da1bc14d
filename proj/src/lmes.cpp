#include "maxflow/lmes.hpp"

#include <algorithm>

#include "maxflow/generic.hpp"

namespace maxflow {

ExcessClass lmes_excess_class(cap_t e, cap_t delta, int k) {
  if (2 * e >= delta) return ExcessClass::Large;
  if (e * k >= delta) return ExcessClass::Medium;
  return ExcessClass::None;
}

cap_t lmes_push(const Network& net, SolverState<cap_t>& st, int a, cap_t delta_param, int k, PushKind& kind) {
  int i = net.arcs[a].tail, j = net.arcs[a].head;
  cap_t r = residual_capacity(st, a);
  MF_REQUIRE(r > 0 && st.d[i] == st.d[j] + 1, "lmes_push: arc is not admissible");
  cap_t room = net.is_terminal(j) ? r : delta_param - st.e[j];
  cap_t delta = std::min({st.e[i], r, room});
  apply_push(net, st, a, delta);
  if (delta == r)
    kind = PushKind::Saturating;
  else if (2 * delta >= delta_param)
    kind = PushKind::Large;
  else if (delta * k >= delta_param)
    kind = PushKind::Medium;
  else
    kind = PushKind::Other;
  return delta;
}

FlowResult lmes_solve(const Network& net, int k, bool audit) {
  MF_REQUIRE(k >= 2 && is_power_of_two(k), "lmes_solve: k must be a power of two >= 2");
  Counters c;
  c.algorithm = "lmes";
  c.n = net.n;
  c.m = net.m();
  c.k = k;
  SolverState<cap_t> st = gpr_initialize(net);
  std::vector<std::uint64_t> relabels(static_cast<size_t>(net.n), 0);

  cap_t delta = 1;
  while (delta <= net.U) delta *= 2;

  Selector sel;
  std::uint64_t events = 0;
  const cap_t n2 = static_cast<cap_t>(net.n) * net.n;
  auto nonzero_excess = [&] {
    for (int v = 0; v < net.n; ++v)
      if (!net.is_terminal(v) && st.e[v] != 0) return true;
    return false;
  };
  auto classify = [&](int v) {
    sel.set(v, net.is_terminal(v) ? ExcessClass::None : lmes_excess_class(st.e[v], delta, k), st.d[v]);
  };
  auto audit_step = [&](int i, int j) {
    ++c.audits;
    std::string why = validity_violation(net, st);
    if (!why.empty()) c.violation("invariant1", why);
    for (int v : {i, j})
      if (v >= 0 && !net.is_terminal(v) && (st.e[v] < 0 || st.e[v] > delta))
        c.violation("excess_bound", "e(" + std::to_string(v) + ") = " + to_string(st.e[v]));
    if (recompute_excess(net, st.x) != st.e) c.violation("excess_consistency", "stored excess differs");
    if (++events % 1000 == 0) {
      std::vector<ExcessClass> cls(static_cast<size_t>(net.n), ExcessClass::None);
      for (int v = 0; v < net.n; ++v)
        if (!net.is_terminal(v)) cls[v] = lmes_excess_class(st.e[v], delta, k);
      std::string bad = sel.audit(cls, st.d);
      if (!bad.empty()) c.violation("selection", bad);
    }
  };

  while (delta >= 1 && nonzero_excess()) {
    PhaseRecord rec;
    rec.delta = to_string(delta);
    cap_t pushed = 0;
    sel.reset(net.n, net.n + 1);
    for (int v = 0; v < net.n; ++v) classify(v);
    for (int i = sel.select(); i >= 0; i = sel.select()) {
      int a = find_admissible(net, st, i);
      if (a < 0) {
        gpr_relabel(net, st, i, c);
        ++relabels[i];
        if (st.d[i] > net.n + 1)
          c.violation("label_bound", "d(" + std::to_string(i) + ") = " + std::to_string(st.d[i]));
        classify(i);
        if (audit) audit_step(i, -1);
        continue;
      }
      int j = net.arcs[a].head;
      PushKind kind;
      cap_t moved = lmes_push(net, st, a, delta, k, kind);
      pushed += moved;
      ++rec.pushes;
      switch (kind) {
        case PushKind::Saturating: record(c, Event::SaturatingPush); break;
        case PushKind::Large: record(c, Event::LargePush); ++rec.large_pushes; break;
        case PushKind::Medium: record(c, Event::MediumPush); break;
        case PushKind::Other: record(c, Event::OtherPush); break;
      }
      classify(i);
      classify(j);
      if (audit) audit_step(i, j);
    }
    for (int v = 0; v < net.n; ++v)
      if (!net.is_terminal(v) && st.e[v] * k >= delta)
        c.violation("phase_end", "e(" + std::to_string(v) + ") >= Delta/k at phase end");
    if (pushed >= 2 * n2 * delta) c.violation("phase_flow", "phase " + rec.delta + " pushed >= 2n^2 Delta");
    if (static_cast<cap_t>(rec.large_pushes) > 4 * n2)
      c.violation("large_pushes", "phase " + rec.delta + " has more than 4n^2 large pushes");
    rec.flow_ratio = static_cast<double>(pushed) / (static_cast<double>(n2) * static_cast<double>(delta));
    record_phase(c, std::move(rec), false);
    delta /= k;
  }
  MF_REQUIRE(!nonzero_excess(), "lmes_solve: excess left after the last phase");
  for (std::uint64_t r : relabels) c.max_relabels_per_node = std::max(c.max_relabels_per_node, r);
  if (c.pushes_saturating >= static_cast<std::uint64_t>(net.n) * net.m())
    c.violation("saturating_total", "saturating pushes >= nm");
  return finish_integral(net, std::move(st.x), std::move(c));
}

}  // namespace maxflow
