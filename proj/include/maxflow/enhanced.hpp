#pragma once

#include <climits>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maxflow/counters.hpp"
#include "maxflow/network.hpp"
#include "maxflow/quantity.hpp"
#include "maxflow/selection.hpp"
#include "maxflow/solve.hpp"

namespace maxflow {

struct EnhancedParams {
  int k = 4;
  int log2k = 2;
  int n_eff = 4;  // max(n, 4, k)
  int Q = 1;      // least Q with k^Q >= 4 n_eff
  Quantity eps;   // k^-Q
  Quantity M;     // k^2Q
  int log2_scale = 0;  // capacities are multiplied by 2 k^(2Q+2)

  // eps^p * x for integer p (p may be negative).
  Quantity eps_pow(int p, const Quantity& x) const { return x.mul_pow2(-p * Q * log2k); }
  Quantity over_k(const Quantity& x) const { return x.mul_pow2(-log2k); }
  Quantity times_M(const Quantity& x) const { return x.mul_pow2(2 * Q * log2k); }
};

EnhancedParams derive_params(int n, int k);

enum class ArcSize { Small, Medium, Large };

// Small below eps^5 Delta, Large from 2 M Delta, Medium in between.
ArcSize classify_arc_size(const Quantity& bi_capacity, const Quantity& delta, const EnhancedParams& p);

enum class NodeClass { Special, Normal, Violating };

NodeClass classify_node(bool medium_arc_incident, const Quantity& imbalance, const Quantity& excess,
                        const Quantity& delta, const EnhancedParams& p);

// IMB = e + sum of incoming anti-abundant residuals - sum of outgoing ones.
Quantity imbalance(const Quantity& excess, const std::vector<Quantity>& incoming_anti,
                   const std::vector<Quantity>& outgoing_anti);

struct PushAmount {
  Quantity delta;
  int line = 0;  // pseudo-code line that picked the amount (4..8)
};

// Amount for a push on (i,j) from a node with modified excess ehat.
PushAmount enhanced_push_amount(const Quantity& ehat, const Quantity& r_ij, const Quantity& r_ji,
                                const Quantity& delta, int k);

struct NextScale {
  bool done = false;  // every non-terminal excess is zero
  bool jump = false;
  Quantity delta;
};

// Excesses of the non-terminal nodes at the end of a phase. Throws
// ContractViolation when the printed Gamma2 guard e(v) > -eps Delta fails.
NextScale next_scaling_parameter(const std::vector<Quantity>& excess, const Quantity& delta,
                                 const EnhancedParams& p, const SolveOptions& opt);

class EnhancedSolver {
 public:
  EnhancedSolver(const Network& net, const SolveOptions& opt);

  FlowResult run();

  // Stepwise use, mainly for tests.
  void initialize();
  bool finished() const { return done_; }
  void run_phase();
  FlowResult finish();

  const EnhancedParams& params() const { return p_; }
  const Counters& counters() const { return c_; }
  const Quantity& delta() const { return delta_; }
  int alive_count() const { return alive_count_; }
  int rep(int v) const { return rep_[v]; }
  const Quantity& excess(int v) const { return e_[rep_[v]]; }
  int label(int v) const { return d_[rep_[v]]; }
  bool in_forest(int v) const { return in_f_[rep_[v]] != 0; }
  NodeClass node_class(int v) const { return cls_[rep_[v]]; }
  Quantity modified_excess(int v) const { return ehat(rep_[v]); }
  Quantity residual(int a) const { return u_[a] + x_[a ^ 1] - x_[a]; }
  bool abundant(int a) const { return abundant_[a] != 0; }
  // Runs every from-scratch audit now; returns the number of new violations.
  std::uint64_t audit_now();

 private:
  struct ContractionRecord {
    std::vector<int> cycle_arcs;           // arc i runs from group i to group i+1
    std::vector<std::vector<int>> groups;  // original nodes, cycle order
    Quantity delta;
  };

  // enhanced_solver.cpp
  void set_phase_thresholds();
  void push_arc(int a, const Quantity& amount);
  void touch(int v);
  ExcessClass excess_class(int v) const;
  Quantity ehat(int v) const;
  bool terminal(int v) const { return v == net_.source || v == net_.sink; }
  void guard_step();
  std::vector<int> alive_nodes() const;
  std::string validity_audit() const;
  std::string invariant2_audit() const;
  bool invariant2_holds(int a) const;
  void after_flow_audit(int a);
  void shift_flow(int a, const Quantity& amount);

  // enhanced_phase.cpp
  void start_phase();
  void push_relabel(int v);
  void end_phase();
  void check_special(int v, const char* where);

  // abundance.cpp
  void advance_size_pointers(int v);
  void mark_large_pair(int a);
  void flag_abundant(int a);
  void update_bucket(int a);
  void drain_buckets();
  void after_push_abundance(int a);
  bool is_anti(int a) const { return !abundant_[a] && abundant_[a ^ 1]; }
  bool bi_abundant(int a) const { return abundant_[a] && abundant_[a ^ 1]; }
  bool external(int a) const { return rep_[net_.arcs[a].tail] != rep_[net_.arcs[a].head]; }
  bool incident_bi_abundant(int v) const;
  Quantity imbalance_from_scratch(int v) const;
  std::string abundance_audit();

  // frf.cpp
  void frf_add(int v);
  bool frf_eligible(int a) const;
  bool in_y(int j) const;
  void frf_push(int v);
  void frf_pull(int v);
  void frf_delete(int v);
  void recursive_delete_and_merge();
  void forest_flow(const std::vector<int>& arcs);
  int root_of(int v) const { return root_[v]; }
  bool root_sufficient(int w) const;
  std::string forest_audit() const;
  void leave_forest(int v);

  // contraction.cpp
  int contract(const std::vector<int>& cycle_nodes, const std::vector<int>& cycle_arcs);
  void recompute_labels();
  void queue_pair(int a);
  bool mergeable(int a) const;
  void expand_all();

  const Network& net_;
  SolveOptions opt_;
  EnhancedParams p_;
  Counters c_;
  bool done_ = false;
  bool initialized_ = false;

  std::vector<Quantity> u_, x_, bicap_;
  std::vector<Quantity> e_;
  std::vector<int> d_;
  std::vector<std::size_t> cur_;
  std::vector<int> rep_;
  std::vector<char> alive_;
  std::vector<std::vector<int>> members_;
  std::vector<std::vector<int>> adj_;
  int alive_count_ = 0;
  std::vector<std::uint64_t> relabels_;

  Quantity delta_, delta_k_, half_delta_, eps_delta_, eps4_delta_, eps5_delta_, special_offset_, m_delta_,
      two_m_delta_, ehat_limit_;

  std::vector<std::size_t> large_end_, medium_end_;
  std::vector<char> pair_large_;
  std::vector<char> abundant_;
  std::vector<std::vector<int>> abundant_in_;
  std::vector<int> bucket_key_;
  std::map<int, std::vector<int>, std::greater<int>> buckets_;
  std::vector<Quantity> imb_;

  std::vector<NodeClass> cls_;
  std::vector<char> medium_incident_;
  std::vector<char> violating_at_start_;
  std::vector<int> violating_streak_;
  std::vector<std::optional<Quantity>> deadline_;

  Selector sel_;

  std::vector<char> in_f_;
  std::vector<int> parent_arc_;
  std::vector<std::vector<int>> children_;
  std::vector<int> root_;
  std::vector<Quantity> needed_, reserve_;
  std::vector<char> in_v_;
  std::vector<int> pulls_;

  std::deque<int> merge_queue_;
  std::vector<int> deferred_;
  std::vector<ContractionRecord> records_;
  std::vector<Quantity> ehat_cap_;    // summed over nodes merged this phase
  std::vector<Quantity> ehat_start_;  // ehat left by initialization, first phase only

  Quantity phase_pushed_;
  std::uint64_t phase_pushes_ = 0;
  std::uint64_t phase_large_ = 0;
  bool phase_forest_ = false;
  std::uint64_t steps_ = 0;
  std::uint64_t audit_events_ = 0;
};

FlowResult enhanced_solve(const Network& net, const SolveOptions& opt);

}  // namespace maxflow
