#include <algorithm>
#include <deque>
#include <stdexcept>

#include "maxflow/enhanced.hpp"
#include "maxflow/flow_utils.hpp"

namespace maxflow {

void EnhancedSolver::queue_pair(int a) { merge_queue_.push_back(a); }

bool EnhancedSolver::mergeable(int a) const {
  if (!external(a) || !bi_abundant(a)) return false;
  int i = rep_[net_.arcs[a].tail], j = rep_[net_.arcs[a].head];
  // A terminal keeps its own identity, so it only absorbs nodes outside F.
  auto held = [&](int v, int w) { return in_f_[v] && (in_f_[w] || terminal(w)); };
  return !held(i, j) && !held(j, i);
}

int EnhancedSolver::contract(const std::vector<int>& cycle_nodes, const std::vector<int>& cycle_arcs) {
  MF_REQUIRE(cycle_nodes.size() >= 2 && cycle_nodes.size() == cycle_arcs.size(), "malformed cycle");
  for (std::size_t i = 0; i < cycle_nodes.size(); ++i) {
    int a = cycle_arcs[i];
    int from = cycle_nodes[i], to = cycle_nodes[(i + 1) % cycle_nodes.size()];
    MF_REQUIRE(alive_[from], "cycle node must be live");
    MF_REQUIRE(rep_[net_.arcs[a].tail] == from && rep_[net_.arcs[a].head] == to, "cycle arc out of order");
    MF_REQUIRE(abundant_[a], "cycle arc is not abundant");
  }

  int r = -1, forest_nodes = 0, terminals = 0;
  for (int w : cycle_nodes) {
    forest_nodes += in_f_[w];
    terminals += terminal(w);
    if (terminal(w)) r = w;
  }
  MF_REQUIRE(terminals <= 1, "cycle joins s and t");
  MF_REQUIRE(forest_nodes <= 1, "cycle holds two forest nodes");
  MF_REQUIRE(forest_nodes == 0 || terminals == 0 || in_f_[r], "terminal would absorb a forest node");
  for (int w : cycle_nodes)
    if (r < 0 && in_f_[w]) r = w;
  if (r < 0) r = *std::min_element(cycle_nodes.begin(), cycle_nodes.end());

  ContractionRecord rec;
  rec.cycle_arcs = cycle_arcs;
  for (int w : cycle_nodes) rec.groups.push_back(members_[w]);
  rec.delta = delta_;
  records_.push_back(std::move(rec));

  bool was_violating = false;
  std::vector<int> arcs;
  for (int w : cycle_nodes) {
    was_violating = was_violating || cls_[w] == NodeClass::Violating;
    arcs.insert(arcs.end(), adj_[w].begin(), adj_[w].end());
    if (w == r) continue;
    for (int o : members_[w]) rep_[o] = r;
    members_[r].insert(members_[r].end(), members_[w].begin(), members_[w].end());
    members_[w].clear();
    e_[r] += e_[w];
    e_[w] = Quantity(0);
    relabels_[r] = std::max(relabels_[r], relabels_[w]);
    ehat_cap_[r] += ehat_cap_[w];
    ehat_start_[r] += ehat_start_[w];
    abundant_in_[r].insert(abundant_in_[r].end(), abundant_in_[w].begin(), abundant_in_[w].end());
    abundant_in_[w].clear();
    adj_[w].clear();
    alive_[w] = 0;
    sel_.set(w, ExcessClass::None, 0);
    deadline_[w].reset();
    violating_streak_[w] = 0;
  }
  alive_count_ -= static_cast<int>(cycle_nodes.size()) - 1;

  arcs.erase(std::remove_if(arcs.begin(), arcs.end(), [&](int a) { return !external(a); }), arcs.end());
  std::stable_sort(arcs.begin(), arcs.end(), [&](int a, int b) { return bicap_[a] > bicap_[b]; });
  adj_[r] = std::move(arcs);
  std::size_t le = 0;
  while (le < adj_[r].size() && pair_large_[adj_[r][le] / 2]) ++le;
  std::size_t me = le;
  while (me < adj_[r].size() && bicap_[adj_[r][me]] >= eps5_delta_) ++me;
  large_end_[r] = le;
  medium_end_[r] = me;
  medium_incident_[r] = me > le;

  imb_[r] = imbalance_from_scratch(r);
  if (terminal(r)) cls_[r] = NodeClass::Normal;
  else if (!in_f_[r]) cls_[r] = was_violating && e_[r] < eps_delta_ ? NodeClass::Violating : NodeClass::Normal;
  else if (parent_arc_[r] < 0) cls_[r] = NodeClass::Normal;
  deadline_[r].reset();
  violating_streak_[r] = 0;

  record(c_, Event::Contraction);
  recompute_labels();
  if (opt_.audit) {
    ++c_.audits;
    std::string why = validity_audit();
    if (!why.empty()) c_.violation("invariant1", "after contraction: " + why);
  }
  return r;
}

void EnhancedSolver::recompute_labels() {
  const int s = net_.source, t = net_.sink;
  const int far = alive_count_ + 1;
  for (int v = 0; v < net_.n; ++v)
    if (alive_[v]) d_[v] = -1;
  // Reverse breadth-first search from t over positive-residual arcs.
  std::deque<int> q{t};
  d_[t] = 0;
  while (!q.empty()) {
    int j = q.front();
    q.pop_front();
    for (int b : adj_[j]) {
      int a = b ^ 1;  // arc into j
      int i = rep_[net_.arcs[a].tail];
      if (i == s || d_[i] >= 0 || residual(a).sign() <= 0) continue;
      d_[i] = d_[j] + 1;
      q.push_back(i);
    }
  }
  d_[s] = alive_count_;
  for (int v = 0; v < net_.n; ++v) {
    if (!alive_[v]) continue;
    if (d_[v] < 0) d_[v] = far;
    cur_[v] = 0;
  }
  sel_.reset(net_.n, far + 1);
  for (int v = 0; v < net_.n; ++v)
    if (alive_[v]) touch(v);
}

void EnhancedSolver::expand_all() {
  for (auto it = records_.rbegin(); it != records_.rend(); ++it) {
    ContractionRecord rec = *it;
    const std::size_t L = rec.groups.size();
    // A group holding a terminal goes first; it absorbs whatever is left.
    bool absorbing = false;
    for (std::size_t z = 0; z < L && !absorbing; ++z)
      for (int o : rec.groups[z])
        if (net_.is_terminal(o)) {
          std::rotate(rec.groups.begin(), rec.groups.begin() + static_cast<long>(z), rec.groups.end());
          std::rotate(rec.cycle_arcs.begin(), rec.cycle_arcs.begin() + static_cast<long>(z), rec.cycle_arcs.end());
          absorbing = true;
          break;
        }
    std::vector<Quantity> ex = recompute_excess(net_, x_);
    std::vector<Quantity> g(L, Quantity(0));
    for (std::size_t i = 0; i < L; ++i)
      for (int o : rec.groups[i]) g[i] += ex[o];

    // y_i on arc i (group i -> group i+1) equals theta + c_i.
    std::vector<Quantity> c(L, Quantity(0));
    for (std::size_t i = 1; i < L; ++i) c[i] = c[i - 1] + g[i];
    MF_REQUIRE(absorbing || (c[L - 1] + g[0]).is_zero(), "merged node expands with nonzero total excess");

    auto feasible = [&](const Quantity& theta) {
      for (std::size_t i = 0; i < L; ++i) {
        Quantity y = theta + c[i];
        int a = rec.cycle_arcs[i];
        if (y.sign() >= 0 ? y > residual(a) : -y > residual(a ^ 1)) return false;
      }
      return true;
    };
    auto cost = [&](const Quantity& theta) {
      Quantity sum(0);
      for (std::size_t i = 0; i < L; ++i) sum += (theta + c[i]).abs();
      return sum;
    };
    // Spanning tree flows: one cycle arc carries nothing.
    std::optional<Quantity> best;
    Quantity best_cost;
    bool best_nonneg = false;
    for (std::size_t z = 0; z < L; ++z) {
      Quantity theta = -c[z];
      if (!feasible(theta)) continue;
      bool nonneg = true;
      for (std::size_t i = 0; i < L; ++i) nonneg = nonneg && (theta + c[i]).sign() >= 0;
      Quantity cs = cost(theta);
      if (!best || (nonneg && !best_nonneg) || (nonneg == best_nonneg && cs < best_cost)) {
        best = theta;
        best_cost = cs;
        best_nonneg = nonneg;
      }
    }
    if (!best) throw std::logic_error("no feasible expansion for a contracted cycle");

    const Quantity bound = p_.times_M(rec.delta);
    for (std::size_t i = 0; i < L; ++i) {
      Quantity y = *best + c[i];
      int a = rec.cycle_arcs[i];
      if (y.sign() < 0 || y >= bound)
        c_.violation("expansion_bound", "cycle arc " + std::to_string(a) + " correction " + y.str());
      if (y.sign() >= 0)
        shift_flow(a, y);
      else
        shift_flow(a ^ 1, -y);
    }
  }
  records_.clear();
}

}  // namespace maxflow
