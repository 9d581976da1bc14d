#include <algorithm>
#include <deque>
#include <stdexcept>

#include "maxflow/enhanced.hpp"
#include "maxflow/flow_utils.hpp"

namespace maxflow {

namespace {

constexpr std::uint64_t kStepBudget = 50'000'000;

}  // namespace

EnhancedSolver::EnhancedSolver(const Network& net, const SolveOptions& opt) : net_(net), opt_(opt) {
  int k = opt.k > 0 ? opt.k : default_k(Algorithm::Enhanced, net);
  p_ = derive_params(net.n, k);
  c_.algorithm = "enhanced";
  c_.n = net.n;
  c_.m = net.m();
  c_.k = k;

  const int n = net.n, m = net.m();
  // (j,s) and (t,j) carry up to n U so that Delta/k always fits through (t,j)
  // during initialization.
  const cap_t wide = static_cast<cap_t>(n) * std::max<cap_t>(net.U, 1);
  u_.resize(static_cast<size_t>(m));
  for (int a = 0; a < m; ++a) {
    const Arc& arc = net.arcs[a];
    cap_t c = arc.cap;
    bool to_source = arc.head == net.source && arc.tail != net.sink;
    bool from_sink = arc.tail == net.sink && arc.head != net.source;
    if (to_source || from_sink) c = std::max(c, wide);
    u_[a] = Quantity::from_cap(c).mul_pow2(p_.log2_scale);
  }
  bicap_.resize(static_cast<size_t>(m));
  for (int a = 0; a < m; ++a) bicap_[a] = u_[a] + u_[a ^ 1];
  x_.assign(static_cast<size_t>(m), Quantity(0));
  e_.assign(static_cast<size_t>(n), Quantity(0));
  d_.assign(static_cast<size_t>(n), 0);
  cur_.assign(static_cast<size_t>(n), 0);
  rep_.resize(static_cast<size_t>(n));
  alive_.assign(static_cast<size_t>(n), 1);
  members_.resize(static_cast<size_t>(n));
  adj_.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    rep_[v] = v;
    members_[v] = {v};
    adj_[v] = net.adj[v];
    std::stable_sort(adj_[v].begin(), adj_[v].end(), [&](int a, int b) { return bicap_[a] > bicap_[b]; });
  }
  alive_count_ = n;
  relabels_.assign(static_cast<size_t>(n), 0);

  large_end_.assign(static_cast<size_t>(n), 0);
  medium_end_.assign(static_cast<size_t>(n), 0);
  pair_large_.assign(static_cast<size_t>(m / 2), 0);
  abundant_.assign(static_cast<size_t>(m), 0);
  abundant_in_.assign(static_cast<size_t>(n), {});
  bucket_key_.assign(static_cast<size_t>(m), INT_MIN);
  imb_.assign(static_cast<size_t>(n), Quantity(0));

  cls_.assign(static_cast<size_t>(n), NodeClass::Normal);
  medium_incident_.assign(static_cast<size_t>(n), 0);
  violating_at_start_.assign(static_cast<size_t>(n), 0);
  violating_streak_.assign(static_cast<size_t>(n), 0);
  deadline_.assign(static_cast<size_t>(n), std::nullopt);

  in_f_.assign(static_cast<size_t>(n), 0);
  parent_arc_.assign(static_cast<size_t>(n), -1);
  children_.assign(static_cast<size_t>(n), {});
  root_.assign(static_cast<size_t>(n), -1);
  needed_.assign(static_cast<size_t>(n), Quantity(0));
  reserve_.assign(static_cast<size_t>(n), Quantity(0));
  in_v_.assign(static_cast<size_t>(n), 0);
  pulls_.assign(static_cast<size_t>(n), 0);
  ehat_cap_.assign(static_cast<size_t>(n), Quantity(0));
  ehat_start_.assign(static_cast<size_t>(n), Quantity(0));
}

void EnhancedSolver::set_phase_thresholds() {
  delta_k_ = p_.over_k(delta_);
  half_delta_ = delta_.half();
  eps_delta_ = p_.eps_pow(1, delta_);
  eps4_delta_ = p_.eps_pow(4, delta_);
  eps5_delta_ = p_.eps_pow(5, delta_);
  special_offset_ = eps4_delta_ + eps4_delta_.half();
  m_delta_ = p_.times_M(delta_);
  two_m_delta_ = m_delta_.mul_pow2(1);
  ehat_limit_ = delta_ + eps_delta_ * Quantity(p_.k - 1);
}

void EnhancedSolver::initialize() {
  MF_REQUIRE(!initialized_, "initialize called twice");
  initialized_ = true;
  const int s = net_.source, t = net_.sink;
  for (int a : adj_[s]) push_arc(a, residual(a));
  d_[s] = net_.n;

  Quantity top(0);
  for (int v = 0; v < net_.n; ++v)
    if (v != s && top < e_[v]) top = e_[v];
  if (top.sign() <= 0) {
    done_ = true;
    return;
  }
  delta_ = top.ceil_pow2();
  set_phase_thresholds();

  for (int pr = 0; pr < net_.pair_count(); ++pr) {
    int a = 2 * pr;
    if (residual(a ^ 1) < residual(a)) a ^= 1;
    if (residual(a) < residual(a ^ 1)) push_arc(a, residual(a).mod(delta_k_));
  }
  for (int v = 0; v < net_.n; ++v) {
    if (terminal(v)) continue;
    int a = net_.find_arc(t, v);
    MF_REQUIRE(a >= 0, "missing (t,j) arc");
    while (e_[v] < eps_delta_) push_arc(a, delta_k_);
  }
  c_.phase_log.clear();
  phase_pushed_ = Quantity(0);
  if (opt_.audit) {
    ++c_.audits;
    std::string why = invariant2_audit();
    if (!why.empty()) c_.violation("invariant2", "after initialization: " + why);
    why = validity_audit();
    if (!why.empty()) c_.violation("invariant1", "after initialization: " + why);
  }
  for (int v = 0; v < net_.n; ++v)
    if (!terminal(v) && e_[v] < eps_delta_) c_.violation("init_ehat", "e(" + std::to_string(v) + ") < eps Delta");
}

FlowResult EnhancedSolver::run() {
  initialize();
  while (!done_) run_phase();
  return finish();
}

void EnhancedSolver::push_arc(int a, const Quantity& amount) {
  MF_REQUIRE(amount.sign() >= 0, "push of a negative amount");
  MF_REQUIRE(amount <= residual(a), "push exceeds residual capacity");
  if (amount.is_zero()) return;
  shift_flow(a, amount);
  int i = rep_[net_.arcs[a].tail], j = rep_[net_.arcs[a].head];
  e_[i] -= amount;
  e_[j] += amount;
  imb_[i] -= amount;
  imb_[j] += amount;
  if (is_anti(a)) {
    imb_[j] -= amount;
    imb_[i] += amount;
  }
  if (is_anti(a ^ 1)) {
    imb_[i] += amount;
    imb_[j] -= amount;
  }
  phase_pushed_ += amount;
  after_push_abundance(a);
}

void EnhancedSolver::shift_flow(int a, const Quantity& amount) {
  Quantity cancel = min(x_[a ^ 1], amount);
  x_[a ^ 1] -= cancel;
  x_[a] += amount - cancel;
}

Quantity EnhancedSolver::ehat(int v) const {
  if (cls_[v] == NodeClass::Special) return e_[v] + special_offset_;
  Quantity h = e_[v] - eps_delta_;
  if (in_f_[v] && parent_arc_[v] < 0) h -= reserve_[v];
  return h;
}

ExcessClass EnhancedSolver::excess_class(int v) const {
  if (terminal(v) || !alive_[v]) return ExcessClass::None;
  Quantity h = ehat(v);
  if (h >= half_delta_) return ExcessClass::Large;
  if (h >= delta_k_) return ExcessClass::Medium;
  return ExcessClass::None;
}

void EnhancedSolver::touch(int v) {
  if (!alive_[v] || terminal(v)) {
    sel_.set(v, ExcessClass::None, 0);
    return;
  }
  if (cls_[v] == NodeClass::Violating && e_[v] >= eps_delta_) cls_[v] = NodeClass::Normal;
  sel_.set(v, excess_class(v), d_[v]);
}

void EnhancedSolver::guard_step() {
  if (++steps_ > kStepBudget) throw std::runtime_error("enhanced solver exceeded its step budget");
}

std::vector<int> EnhancedSolver::alive_nodes() const {
  std::vector<int> out;
  for (int v = 0; v < net_.n; ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

std::string EnhancedSolver::validity_audit() const {
  if (d_[net_.sink] != 0) return "d(t) != 0";
  for (int i = 0; i < net_.n; ++i) {
    if (!alive_[i]) continue;
    for (int a : adj_[i]) {
      int j = rep_[net_.arcs[a].head];
      if (residual(a).sign() > 0 && d_[i] > d_[j] + 1)
        return "arc " + std::to_string(net_.arcs[a].tail) + "->" + std::to_string(net_.arcs[a].head) + " d " +
               std::to_string(d_[i]) + " > " + std::to_string(d_[j]) + "+1";
    }
  }
  return {};
}

bool EnhancedSolver::invariant2_holds(int a) const {
  if (!external(a)) return true;
  for (int b : {a, a ^ 1}) {
    if (bi_abundant(b)) continue;
    Quantity r = residual(b);
    if (r < residual(b ^ 1) && !r.mod(delta_k_).is_zero()) return false;
  }
  return true;
}

std::string EnhancedSolver::invariant2_audit() const {
  for (int a = 0; a < net_.m(); a += 2)
    if (!invariant2_holds(a))
      return "pair " + std::to_string(net_.arcs[a].tail) + "-" + std::to_string(net_.arcs[a].head) + " residuals " +
             residual(a).str() + " / " + residual(a ^ 1).str() + " with Delta/k " + delta_k_.str();
  return {};
}

void EnhancedSolver::after_flow_audit(int a) {
  if (!opt_.audit) return;
  ++c_.audits;
  if (!invariant2_holds(a)) c_.violation("invariant2", "after flow on arc " + std::to_string(a));
  std::string why = validity_audit();
  if (!why.empty()) c_.violation("invariant1", why);
  for (int v : {rep_[net_.arcs[a].tail], rep_[net_.arcs[a].head]}) {
    if (terminal(v)) continue;
    if (imb_[v] != imbalance_from_scratch(v)) c_.violation("imbalance", "node " + std::to_string(v));
    check_special(v, "after flow");
    if (!(ehat(v) < ehat_cap_[v] || ehat(v) <= ehat_start_[v])) c_.violation("ehat_bound", "node " + std::to_string(v) + " ehat " + ehat(v).str() + " at Delta " + delta_.str());
  }
  if (abundant_[a] && residual(a).sign() <= 0) c_.violation("abundant_residual", "arc " + std::to_string(a));
  if (abundant_[a ^ 1] && residual(a ^ 1).sign() <= 0)
    c_.violation("abundant_residual", "arc " + std::to_string(a ^ 1));
  if (++audit_events_ % 1000 == 0) audit_now();
}

std::uint64_t EnhancedSolver::audit_now() {
  std::uint64_t before = c_.total_violations();
  ++c_.audits;
  std::string why = validity_audit();
  if (!why.empty()) c_.violation("invariant1", why);
  why = invariant2_audit();
  if (!why.empty()) c_.violation("invariant2", why);
  std::vector<Quantity> ex = recompute_excess(net_, x_);
  std::vector<Quantity> by_rep(static_cast<size_t>(net_.n), Quantity(0));
  for (int v = 0; v < net_.n; ++v) by_rep[rep_[v]] += ex[v];
  for (int v = 0; v < net_.n; ++v) {
    if (!alive_[v]) continue;
    if (by_rep[v] != e_[v]) c_.violation("excess_consistency", "node " + std::to_string(v));
    if (!terminal(v) && imb_[v] != imbalance_from_scratch(v))
      c_.violation("imbalance", "node " + std::to_string(v));
  }
  for (int a = 0; a < net_.m(); ++a)
    if (abundant_[a] && external(a) && residual(a).sign() <= 0)
      c_.violation("abundant_residual", "arc " + std::to_string(a));
  why = forest_audit();
  if (!why.empty()) c_.violation("forest", why);
  std::vector<ExcessClass> cls(static_cast<size_t>(net_.n), ExcessClass::None);
  std::vector<int> labels(static_cast<size_t>(net_.n), 0);
  for (int v = 0; v < net_.n; ++v) {
    cls[v] = excess_class(v);
    labels[v] = d_[v];
  }
  why = sel_.audit(cls, labels);
  if (!why.empty()) c_.violation("selection", why);
  return c_.total_violations() - before;
}

FlowResult EnhancedSolver::finish() {
  FlowResult r;
  std::vector<char> reach(static_cast<size_t>(net_.n), 0);
  std::deque<int> q{rep_[net_.source]};
  reach[rep_[net_.source]] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int a : adj_[v]) {
      int w = rep_[net_.arcs[a].head];
      if (!reach[w] && residual(a).sign() > 0) {
        reach[w] = 1;
        q.push_back(w);
      }
    }
  }
  expand_all();
  std::vector<Quantity> ex = recompute_excess(net_, x_);
  for (int v = 0; v < net_.n; ++v)
    if (!terminal(v) && !ex[v].is_zero())
      throw std::logic_error("enhanced solver left excess " + ex[v].str() + " at node " + std::to_string(v));

  std::vector<Quantity> xs(x_.size());
  for (size_t a = 0; a < x_.size(); ++a) xs[a] = x_[a].mul_pow2(-p_.log2_scale);
  strip_helper_flow(net_, xs);
  r.flow = integralize(net_, xs);
  r.value = flow_value(net_, r.flow);
  r.source_side.assign(static_cast<size_t>(net_.n), 0);
  for (int v = 0; v < net_.n; ++v) r.source_side[v] = reach[rep_[v]];
  r.cut_capacity = cut_capacity(net_, r.source_side);
  for (std::uint64_t x : relabels_) c_.max_relabels_per_node = std::max(c_.max_relabels_per_node, x);
  r.counters = c_;
  return r;
}

FlowResult enhanced_solve(const Network& net, const SolveOptions& opt) {
  EnhancedSolver solver(net, opt);
  return solver.run();
}

}  // namespace maxflow
