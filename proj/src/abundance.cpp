#include "maxflow/enhanced.hpp"

namespace maxflow {

void EnhancedSolver::advance_size_pointers(int v) {
  const auto& list = adj_[v];
  std::size_t& le = large_end_[v];
  while (le < list.size() && bicap_[list[le]] >= two_m_delta_) {
    mark_large_pair(list[le]);
    ++le;
  }
  std::size_t& me = medium_end_[v];
  me = std::max(me, le);
  while (me < list.size() && bicap_[list[me]] >= eps5_delta_) ++me;
  medium_incident_[v] = me > le;
}

void EnhancedSolver::mark_large_pair(int a) {
  if (pair_large_[a / 2]) return;
  pair_large_[a / 2] = 1;
  for (int b : {a, a ^ 1})
    if (residual(b) >= m_delta_) flag_abundant(b);
  for (int b : {a, a ^ 1})
    if (!abundant_[b]) update_bucket(b);
}

void EnhancedSolver::flag_abundant(int a) {
  if (abundant_[a]) return;
  auto contribution = [&](int b, int sign) {
    if (!is_anti(b)) return;
    Quantity r = residual(b);
    if (sign < 0) r = -r;
    imb_[rep_[net_.arcs[b].head]] += r;
    imb_[rep_[net_.arcs[b].tail]] -= r;
  };
  contribution(a, -1);
  contribution(a ^ 1, -1);
  abundant_[a] = 1;
  contribution(a, +1);
  contribution(a ^ 1, +1);
  abundant_in_[rep_[net_.arcs[a].head]].push_back(a);
  bucket_key_[a] = INT_MIN;
  if (abundant_[a ^ 1]) {
    bucket_key_[a ^ 1] = INT_MIN;
    queue_pair(a);
  } else {
    update_bucket(a ^ 1);
  }
}

void EnhancedSolver::update_bucket(int a) {
  if (!is_anti(a)) return;
  Quantity r = residual(a);
  int key = r.sign() > 0 ? r.mul_pow2(-2 * p_.Q * p_.log2k).floor_log2() : INT_MIN;
  if (key == bucket_key_[a]) return;
  bucket_key_[a] = key;
  if (key != INT_MIN) buckets_[key].push_back(a);
}

void EnhancedSolver::drain_buckets() {
  const int level = delta_.log2_exact();
  while (!buckets_.empty() && buckets_.begin()->first >= level) {
    int key = buckets_.begin()->first;
    std::vector<int> arcs = std::move(buckets_.begin()->second);
    buckets_.erase(buckets_.begin());
    for (int a : arcs) {
      if (bucket_key_[a] != key || !external(a) || !is_anti(a)) continue;
      MF_REQUIRE(residual(a) >= m_delta_, "bucket key out of step with the residual");
      flag_abundant(a);
    }
  }
}

void EnhancedSolver::after_push_abundance(int a) {
  if (!external(a)) return;
  for (int b : {a, a ^ 1}) {
    if (!is_anti(b)) continue;
    if (residual(b) >= m_delta_)
      flag_abundant(b);
    else
      update_bucket(b);
  }
}

bool EnhancedSolver::incident_bi_abundant(int v) const {
  for (int a : adj_[v])
    if (bi_abundant(a)) return true;
  return false;
}

Quantity EnhancedSolver::imbalance_from_scratch(int v) const {
  std::vector<Quantity> in, out;
  for (int a : adj_[v]) {
    if (is_anti(a)) out.push_back(residual(a));
    if (is_anti(a ^ 1)) in.push_back(residual(a ^ 1));
  }
  return imbalance(e_[v], in, out);
}

std::string EnhancedSolver::abundance_audit() {
  // Brute-force rescan against the pointers and buckets.
  for (int a = 0; a < net_.m(); ++a) {
    if (!external(a)) continue;
    bool large = bicap_[a] >= two_m_delta_;
    if (large != (pair_large_[a / 2] != 0)) return "size pointer disagrees on arc " + std::to_string(a);
    if (large && !abundant_[a] && residual(a) >= m_delta_) return "arc " + std::to_string(a) + " missed abundance";
  }
  for (int v : alive_nodes()) {
    bool medium = false;
    for (int a : adj_[v])
      if (bicap_[a] >= eps5_delta_ && bicap_[a] < two_m_delta_) medium = true;
    if (medium != (medium_incident_[v] != 0)) return "medium incidence wrong at node " + std::to_string(v);
  }
  return {};
}

}  // namespace maxflow
