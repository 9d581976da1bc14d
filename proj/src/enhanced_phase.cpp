#include <algorithm>

#include "maxflow/enhanced.hpp"

namespace maxflow {

void EnhancedSolver::run_phase() {
  MF_REQUIRE(initialized_ && !done_, "run_phase outside a run");
  start_phase();

  std::vector<int> newly;
  for (int v : alive_nodes())
    if (!terminal(v) && cls_[v] == NodeClass::Violating && !in_f_[v]) newly.push_back(v);
  c_.newly_violating += newly.size();
  for (int v : newly) frf_add(v);

  for (int v : alive_nodes()) {
    in_v_[v] = in_f_[v] && violating_at_start_[v] && needed_[v].sign() > 0 && needed_[v] < delta_k_;
    if (in_f_[v]) phase_forest_ = true;
  }
  for (int v : alive_nodes())
    if (in_f_[v] && cls_[v] == NodeClass::Violating && needed_[v] >= delta_k_) frf_pull(v);
  recursive_delete_and_merge();

  for (int v = sel_.select(); v >= 0; v = sel_.select()) {
    guard_step();
    if (in_f_[v])
      frf_push(v);
    else
      push_relabel(v);
    recursive_delete_and_merge();
  }
  end_phase();
}

void EnhancedSolver::check_special(int v, const char* where) {
  if (cls_[v] != NodeClass::Special) return;
  if (e_[v] < -special_offset_)
    c_.violation("special_lower", std::string(where) + ": node " + std::to_string(v) + " e " + e_[v].str());
  if (ehat(v).mod(delta_k_) > special_offset_.mul_pow2(1))
    c_.violation("special_mod", std::string(where) + ": node " + std::to_string(v) + " ehat " + ehat(v).str());
}

void EnhancedSolver::start_phase() {
  set_phase_thresholds();
  phase_pushed_ = Quantity(0);
  phase_pushes_ = 0;
  phase_large_ = 0;
  phase_forest_ = false;
  std::fill(ehat_cap_.begin(), ehat_cap_.end(), ehat_limit_);
  for (int v = 0; v < net_.n; ++v)
    ehat_start_[v] = c_.phases == 0 && alive_[v] && !terminal(v) ? ehat(v) : Quantity(0);

  std::uint64_t medium_arcs = 0;
  for (int v : alive_nodes()) {
    advance_size_pointers(v);
    medium_arcs += medium_end_[v] - large_end_[v];
  }
  c_.medium_arc_occurrences += medium_arcs / 2;
  drain_buckets();

  for (int a = 0; a < net_.m(); ++a) {
    if (!abundant_[a] || !external(a)) continue;
    if (residual(a) < m_delta_)
      c_.violation("abundance_monotone", "arc " + std::to_string(a) + " residual " + residual(a).str() +
                                             " below M Delta " + m_delta_.str());
  }
  if (opt_.audit) {
    std::string why = abundance_audit();
    if (!why.empty()) c_.violation("abundance_tracking", why);
  }

  const int limit = 2 * p_.Q + 1;
  for (int v : alive_nodes()) {
    if (terminal(v)) continue;
    bool imbalanced = !medium_incident_[v] && imb_[v].abs() > eps4_delta_;
    if (deadline_[v]) {
      if (incident_bi_abundant(v)) {
        deadline_[v].reset();
      } else if (delta_ <= *deadline_[v]) {
        c_.violation("contraction_deadline", "node " + std::to_string(v) + " at Delta " + delta_.str());
        deadline_[v].reset();
      }
    }
    if (imbalanced && !deadline_[v] && !incident_bi_abundant(v)) deadline_[v] = p_.eps_pow(7, delta_);

    NodeClass cl = classify_node(medium_incident_[v] != 0, imb_[v], e_[v], delta_, p_);
    if (in_f_[v] && parent_arc_[v] < 0) cl = NodeClass::Normal;
    cls_[v] = cl;
    violating_at_start_[v] = cl == NodeClass::Violating;
    if (cl == NodeClass::Violating) {
      ++violating_streak_[v];
      c_.max_violating_phases =
          std::max<std::uint64_t>(c_.max_violating_phases, static_cast<std::uint64_t>(violating_streak_[v]));
      if (violating_streak_[v] > limit)
        c_.violation("violating_duration", "node " + std::to_string(v) + " violating for " +
                                               std::to_string(violating_streak_[v]) + " phases");
      if (!(-eps_delta_ < e_[v] && e_[v] < eps_delta_))
        c_.violation("violating_bound", "node " + std::to_string(v) + " e " + e_[v].str());
    } else {
      violating_streak_[v] = 0;
    }
    check_special(v, "phase start");
  }

  for (int v : alive_nodes()) {
    if (!in_f_[v] || terminal(v) || cls_[v] != NodeClass::Violating || needed_[v].sign() != 0) continue;
    needed_[v] = p_.over_k(p_.eps_pow(2, delta_));
    reserve_[root_[v]] += needed_[v];
  }

  sel_.reset(net_.n, net_.n + 2);
  for (int v : alive_nodes()) touch(v);
  if (opt_.audit) audit_now();
}

void EnhancedSolver::push_relabel(int v) {
  MF_REQUIRE(!in_f_[v], "push/relabel on a forest node");
  const auto& list = adj_[v];
  int a = -1;
  for (std::size_t& c = cur_[v]; c < list.size(); ++c) {
    int b = list[c];
    if (residual(b).sign() > 0 && d_[v] == d_[rep_[net_.arcs[b].head]] + 1) {
      a = b;
      break;
    }
  }
  if (a < 0) {
    ++d_[v];
    cur_[v] = 0;
    ++relabels_[v];
    record(c_, Event::Relabel);
    if (relabels_[v] > static_cast<std::uint64_t>(net_.n) + 1)
      c_.violation("relabel_bound", "node " + std::to_string(v) + " relabeled " + std::to_string(relabels_[v]) +
                                        " times");
    touch(v);
    if (opt_.audit) {
      ++c_.audits;
      std::string why = validity_audit();
      if (!why.empty()) c_.violation("invariant1", "after relabel: " + why);
    }
    return;
  }
  int j = rep_[net_.arcs[a].head];
  PushAmount pa = enhanced_push_amount(ehat(v), residual(a), residual(a ^ 1), delta_, p_.k);
  push_arc(a, pa.delta);
  ++phase_pushes_;
  if (pa.line == 4) {
    record(c_, Event::SaturatingPush);
  } else if (pa.delta == half_delta_) {
    record(c_, Event::LargePush);
    ++phase_large_;
  } else if (pa.line == 5 || pa.line == 6) {
    record(c_, Event::MediumPush);
  } else {
    record(c_, Event::OtherPush);
  }
  touch(v);
  touch(j);
  after_flow_audit(a);
}

void EnhancedSolver::end_phase() {
  const Quantity n2(static_cast<long long>(net_.n) * net_.n);
  if (phase_pushed_ > n2 * delta_ * Quantity(5))
    c_.violation("phase_flow", "phase at Delta " + delta_.str() + " pushed " + phase_pushed_.str());
  if (Quantity(static_cast<long long>(phase_large_)) > n2 * Quantity(4))
    c_.violation("large_pushes", "phase at Delta " + delta_.str());
  for (int v : alive_nodes())
    if (in_f_[v]) phase_forest_ = true;

  PhaseRecord rec;
  rec.delta = delta_.str();
  rec.pushes = phase_pushes_;
  rec.large_pushes = phase_large_;
  rec.flow_ratio = phase_pushed_.to_double() / (n2.to_double() * delta_.to_double());
  record_phase(c_, std::move(rec), phase_forest_);

  std::vector<Quantity> excess;
  for (int v : alive_nodes())
    if (!terminal(v)) excess.push_back(e_[v]);
  NextScale next = next_scaling_parameter(excess, delta_, p_, opt_);
  if (next.done) {
    done_ = true;
    return;
  }
  if (next.jump) ++c_.jumps;
  delta_ = next.delta;
}

}  // namespace maxflow
