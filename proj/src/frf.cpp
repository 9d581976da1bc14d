#include <algorithm>
#include <stdexcept>

#include "maxflow/enhanced.hpp"

namespace maxflow {

bool EnhancedSolver::frf_eligible(int a) const {
  if (!abundant_[a] || !external(a)) return false;
  int i = rep_[net_.arcs[a].tail], j = rep_[net_.arcs[a].head];
  return d_[j] <= d_[i] + 1 && residual(a).sign() > 0;
}

bool EnhancedSolver::in_y(int j) const {
  return in_f_[j] || terminal(j) || cls_[j] == NodeClass::Normal;
}

bool EnhancedSolver::root_sufficient(int w) const { return terminal(w) || ehat(w) >= delta_k_; }

void EnhancedSolver::frf_add(int v) {
  for (;;) {
    guard_step();
    v = rep_[v];
    if (in_f_[v] || cls_[v] != NodeClass::Violating) return;

    // Reverse depth-first search over FRF-eligible arcs into the path.
    std::vector<int> path{v};
    std::vector<int> via;  // via[l] enters path[l] from path[l+1]
    std::vector<std::size_t> pos(static_cast<size_t>(net_.n), 0);
    std::vector<int> depth(static_cast<size_t>(net_.n), -1);  // index on the path, -1 off it
    std::vector<char> dead(static_cast<size_t>(net_.n), 0);
    depth[v] = 0;
    int hit = -1, closing = -1;
    while (!path.empty()) {
      int i = path.back();
      const auto& list = abundant_in_[i];
      int b = -1;
      while (pos[i] < list.size()) {
        int cand = list[pos[i]++];
        if (rep_[net_.arcs[cand].head] != i || !frf_eligible(cand)) continue;
        int j = rep_[net_.arcs[cand].tail];
        if (dead[j]) continue;
        b = cand;
        break;
      }
      if (b < 0) {
        dead[i] = 1;
        depth[i] = -1;
        path.pop_back();
        if (!via.empty()) via.pop_back();
        continue;
      }
      int j = rep_[net_.arcs[b].tail];
      if (in_y(j)) {
        hit = j;
        closing = b;
        break;
      }
      if (depth[j] >= 0) {
        hit = j;
        closing = b;
        break;
      }
      depth[j] = static_cast<int>(path.size());
      path.push_back(j);
      via.push_back(b);
    }
    if (hit < 0) throw std::logic_error("FRF reverse search found no eligible path to violating node " +
                                        std::to_string(v));

    if (!in_y(hit)) {
      // Cycle: hit = path[l]; closing arc runs hit -> path.back().
      int l = depth[hit];
      std::vector<int> nodes{hit};
      std::vector<int> arcs{closing};
      for (int z = static_cast<int>(path.size()) - 1; z > l; --z) {
        nodes.push_back(path[z]);
        arcs.push_back(via[z - 1]);
      }
      contract(nodes, arcs);
      continue;
    }

    // Path from hit down to v: hit -> path.back() -> ... -> path[0].
    int root;
    if (in_f_[hit]) {
      root = root_[hit];
    } else {
      in_f_[hit] = 1;
      parent_arc_[hit] = -1;
      root_[hit] = hit;
      reserve_[hit] = Quantity(0);
      needed_[hit] = Quantity(0);
      children_[hit].clear();
      if (!terminal(hit)) cls_[hit] = NodeClass::Normal;
      root = hit;
    }
    int prev = hit;
    int arc = closing;
    for (int z = static_cast<int>(path.size()) - 1; z >= 0; --z) {
      int node = path[z];
      in_f_[node] = 1;
      pulls_[node] = 0;
      parent_arc_[node] = arc;
      root_[node] = root;
      children_[node].clear();
      children_[prev].push_back(node);
      if (cls_[node] == NodeClass::Violating && needed_[node].sign() == 0) {
        needed_[node] = p_.over_k(p_.eps_pow(2, delta_));
        reserve_[root] += needed_[node];
      }
      prev = node;
      if (z > 0) arc = via[z - 1];
    }
    record(c_, Event::FrfAdd);
    phase_forest_ = true;
    touch(root);
    for (int node : path) touch(node);
    if (opt_.audit) {
      ++c_.audits;
      std::string why = forest_audit();
      if (!why.empty()) c_.violation("forest", "after add: " + why);
    }
    return;
  }
}

void EnhancedSolver::forest_flow(const std::vector<int>& arcs) {
  for (int a : arcs) {
    push_arc(a, delta_k_);
    ++phase_pushes_;
  }
  for (int a : arcs) after_flow_audit(a);
}

void EnhancedSolver::frf_push(int v) {
  MF_REQUIRE(in_f_[v] && !children_[v].empty(), "FRF push from a leaf or non-forest node");
  std::vector<int> arcs;
  int z = v;
  while (!children_[z].empty()) {
    int c = children_[z].front();
    arcs.push_back(parent_arc_[c]);
    z = c;
  }
  if (cls_[z] != NodeClass::Violating) c_.violation("frf_push_leaf", "leaf " + std::to_string(z) + " not violating");
  forest_flow(arcs);
  record(c_, Event::FrfPush);
  touch(v);
  touch(z);
  if (cls_[z] == NodeClass::Violating)
    c_.violation("frf_push_leaf", "leaf " + std::to_string(z) + " still violating after push");
  if (opt_.audit) {
    std::string why = forest_audit();
    if (!why.empty()) c_.violation("forest", "after push: " + why);
  }
}

void EnhancedSolver::frf_pull(int v) {
  int w = root_[v];
  MF_REQUIRE(w >= 0 && w != v, "FRF pull needs a forest node below a root");
  if (!terminal(w) && ehat(w) + needed_[v] < delta_k_)
    c_.violation("root_ehat", "root " + std::to_string(w) + " cannot cover a pull");
  std::vector<int> arcs;
  for (int z = v; z != w; z = rep_[net_.arcs[parent_arc_[z]].tail]) arcs.push_back(parent_arc_[z]);
  std::reverse(arcs.begin(), arcs.end());
  forest_flow(arcs);
  record(c_, Event::FrfPull);
  if (++pulls_[v] > 2) c_.violation("pull_count", "node " + std::to_string(v) + " pulled more than twice in one stay in F");
  reserve_[w] -= needed_[v];
  needed_[v] = Quantity(0);
  touch(w);
  touch(v);
  if (!terminal(w) && ehat(w).sign() < 0) c_.violation("root_ehat", "root " + std::to_string(w) + " after pull");
  if (opt_.audit) {
    std::string why = forest_audit();
    if (!why.empty()) c_.violation("forest", "after pull: " + why);
  }
}

void EnhancedSolver::frf_delete(int v) {
  MF_REQUIRE(in_f_[v] && children_[v].empty(), "FRF delete of a non-leaf");
  int w = root_[v];
  Quantity owed = needed_[v];
  needed_[v] = Quantity(0);
  reserve_[w] -= owed;
  if (v != w && in_v_[v] && root_sufficient(w)) {
    std::vector<int> arcs;
    for (int z = v; z != w; z = rep_[net_.arcs[parent_arc_[z]].tail]) arcs.push_back(parent_arc_[z]);
    std::reverse(arcs.begin(), arcs.end());
    forest_flow(arcs);
    record(c_, Event::FrfPull);
    if (++pulls_[v] > 2) c_.violation("pull_count", "node " + std::to_string(v) + " pulled more than twice in one stay in F");
  }
  in_v_[v] = 0;
  if (parent_arc_[v] >= 0) {
    auto& siblings = children_[rep_[net_.arcs[parent_arc_[v]].tail]];
    siblings.erase(std::find(siblings.begin(), siblings.end(), v));
  }
  leave_forest(v);
  record(c_, Event::FrfDelete);
  if (w != v) touch(w);
  touch(v);
  if (w != v && !terminal(w) && ehat(w).sign() < 0)
    c_.violation("root_ehat", "root " + std::to_string(w) + " after delete");
}

void EnhancedSolver::leave_forest(int v) {
  if (parent_arc_[v] < 0 && !reserve_[v].is_zero())
    c_.violation("forest", "root " + std::to_string(v) + " leaves with reserve " + reserve_[v].str());
  in_f_[v] = 0;
  parent_arc_[v] = -1;
  root_[v] = -1;
  children_[v].clear();
  reserve_[v] = Quantity(0);
  needed_[v] = Quantity(0);
  for (int a : deferred_) merge_queue_.push_back(a);
  deferred_.clear();
}

void EnhancedSolver::recursive_delete_and_merge() {
  for (;;) {
    guard_step();
    int leaf = -1;
    for (int v = 0; v < net_.n && leaf < 0; ++v)
      if (alive_[v] && in_f_[v] && children_[v].empty() && (terminal(v) || cls_[v] != NodeClass::Violating))
        leaf = v;
    if (leaf >= 0) {
      frf_delete(leaf);
      continue;
    }
    bool merged = false;
    while (!merge_queue_.empty() && !merged) {
      int a = merge_queue_.front();
      merge_queue_.pop_front();
      if (!external(a) || !bi_abundant(a)) continue;
      if (!mergeable(a)) {
        deferred_.push_back(a);
        continue;
      }
      contract({rep_[net_.arcs[a].tail], rep_[net_.arcs[a].head]}, {a, a ^ 1});
      merged = true;
    }
    if (!merged) break;
  }
  if (opt_.audit) {
    ++c_.audits;
    std::string why = forest_audit();
    if (!why.empty()) c_.violation("forest", why);
    for (int v = 0; v < net_.n; ++v)
      if (alive_[v] && in_f_[v] && children_[v].empty() && cls_[v] != NodeClass::Violating)
        c_.violation("forest", "non-violating leaf " + std::to_string(v) + " survived");
  }
}

std::string EnhancedSolver::forest_audit() const {
  std::vector<Quantity> below(static_cast<size_t>(net_.n), Quantity(0));
  for (int v = 0; v < net_.n; ++v) {
    if (!in_f_[v]) continue;
    std::string id = std::to_string(v);
    if (!alive_[v]) return "dead node " + id + " in forest";
    int r = root_[v];
    if (r < 0 || !in_f_[r] || root_[r] != r || parent_arc_[r] >= 0) return "bad root for node " + id;
    below[r] += needed_[v];
    int z = v, steps = 0;
    while (parent_arc_[z] >= 0) {
      int a = parent_arc_[z];
      if (rep_[net_.arcs[a].head] != z) return "parent arc of " + std::to_string(z) + " does not enter it";
      if (!frf_eligible(a)) return "forest arc into " + std::to_string(z) + " is not eligible";
      int p = rep_[net_.arcs[a].tail];
      if (!in_f_[p] || root_[p] != r) return "parent of " + std::to_string(z) + " outside its tree";
      const auto& ch = children_[p];
      if (std::find(ch.begin(), ch.end(), z) == ch.end()) return "child list of " + std::to_string(p) + " misses a node";
      z = p;
      if (++steps > net_.n) return "cycle above node " + id;
    }
    if (z != r) return "node " + id + " does not reach its root";
    if (parent_arc_[v] < 0 && !terminal(v) && cls_[v] != NodeClass::Normal) return "root " + id + " is not normal";
  }
  for (int v = 0; v < net_.n; ++v) {
    if (!in_f_[v] || parent_arc_[v] >= 0) continue;
    if (below[v] != reserve_[v])
      return "reserve of " + std::to_string(v) + " is " + reserve_[v].str() + ", descendants need " + below[v].str();
    if (!terminal(v) && ehat(v).sign() < 0) return "root " + std::to_string(v) + " has negative modified excess";
  }
  return {};
}

}  // namespace maxflow
