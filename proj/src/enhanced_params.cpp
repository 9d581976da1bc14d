#include "maxflow/enhanced.hpp"

#include <algorithm>

namespace maxflow {

EnhancedParams derive_params(int n, int k) {
  MF_REQUIRE(k >= 4 && is_power_of_two(k), "Enhanced LMES needs k a power of two >= 4");
  EnhancedParams p;
  p.k = k;
  p.log2k = 0;
  while ((1 << p.log2k) < k) ++p.log2k;
  p.n_eff = std::max({n, 4, k});
  p.Q = 0;
  Quantity kq(1);
  while (kq < Quantity(4) * Quantity(p.n_eff)) {
    kq = kq.mul_pow2(p.log2k);
    ++p.Q;
  }
  p.eps = Quantity::pow2(-p.Q * p.log2k);
  p.M = Quantity::pow2(2 * p.Q * p.log2k);
  p.log2_scale = 1 + (2 * p.Q + 2) * p.log2k;
  return p;
}

ArcSize classify_arc_size(const Quantity& bi_capacity, const Quantity& delta, const EnhancedParams& p) {
  if (bi_capacity < p.eps_pow(5, delta)) return ArcSize::Small;
  if (bi_capacity < p.times_M(delta).mul_pow2(1)) return ArcSize::Medium;
  return ArcSize::Large;
}

NodeClass classify_node(bool medium_arc_incident, const Quantity& imbalance, const Quantity& excess,
                        const Quantity& delta, const EnhancedParams& p) {
  if (!medium_arc_incident && imbalance.abs() <= p.eps_pow(4, delta)) return NodeClass::Special;
  if (excess >= p.eps_pow(1, delta)) return NodeClass::Normal;
  return NodeClass::Violating;
}

Quantity imbalance(const Quantity& excess, const std::vector<Quantity>& incoming_anti,
                   const std::vector<Quantity>& outgoing_anti) {
  Quantity r = excess;
  for (const Quantity& q : incoming_anti) r += q;
  for (const Quantity& q : outgoing_anti) r -= q;
  return r;
}

PushAmount enhanced_push_amount(const Quantity& ehat, const Quantity& r_ij, const Quantity& r_ji,
                                const Quantity& delta, int k) {
  int log2k = Quantity(k).log2_exact();
  Quantity dk = delta.mul_pow2(-log2k);
  Quantity half = delta.half();
  Quantity D = ehat >= half ? half : ehat - ehat.mod(dk);
  MF_REQUIRE(D >= dk, "enhanced push from a node without medium or large modified excess");
  if (r_ij < D) return {r_ij, 4};
  if (r_ij - r_ji >= D.mul_pow2(1)) return {D, 5};
  if (r_ij < r_ji) return {D, 6};
  if (r_ij == r_ji) {
    // Largest amount <= D leaving r_ij a multiple of Delta/k.
    Quantity m = r_ij.mod(dk);
    return {m.is_zero() ? D : D - dk + m, 8};
  }
  return {(r_ij - r_ji).half(), 7};
}

NextScale next_scaling_parameter(const std::vector<Quantity>& excess, const Quantity& delta,
                                 const EnhancedParams& p, const SolveOptions& opt) {
  NextScale out;
  Quantity gamma;
  bool any = false;
  for (const Quantity& e : excess) {
    if (e.is_zero()) continue;
    Quantity g;
    if (e.sign() > 0) {
      g = e;
    } else if (opt.gamma2 == Gamma2Mode::AsPrinted) {
      if (e <= -p.eps_pow(1, delta))
        throw ContractViolation("Gamma2 guard: excess " + e.str() + " <= -eps*Delta with Delta " + delta.str());
      g = p.eps_pow(3, -e);
    } else {
      g = p.eps_pow(-3, -e);
    }
    if (!any || gamma < g) gamma = g;
    any = true;
  }
  if (!any) {
    out.done = true;
    return out;
  }
  Quantity rounded = gamma.ceil_pow2();
  Quantity threshold = p.over_k(delta).mul_pow2(-2 * p.Q * p.log2k);
  if (opt.jumps && rounded < threshold) {
    out.jump = true;
    out.delta = rounded;
  } else {
    out.delta = p.over_k(delta);
  }
  return out;
}

}  // namespace maxflow
