#include "maxflow/solve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "maxflow/enhanced.hpp"
#include "maxflow/flow_utils.hpp"
#include "maxflow/generic.hpp"
#include "maxflow/lmes.hpp"

namespace maxflow {

namespace {

int ceil_pow2(double x) {
  int k = 1;
  while (k < x) k *= 2;
  return k;
}

}  // namespace

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Generic:
      return "generic";
    case Algorithm::Lmes:
      return "lmes";
    case Algorithm::Enhanced:
      return "enhanced";
  }
  return "unknown";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "generic") return Algorithm::Generic;
  if (name == "lmes") return Algorithm::Lmes;
  if (name == "enhanced") return Algorithm::Enhanced;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

bool is_power_of_two(long long k) { return k > 0 && (k & (k - 1)) == 0; }

int default_k(Algorithm a, const Network& net) {
  switch (a) {
    case Algorithm::Generic:
      return 0;
    case Algorithm::Lmes: {
      double U = static_cast<double>(net.U);
      if (U < 16) return 2;
      return std::max(2, ceil_pow2(2 + std::log(U) / std::log(std::log(U))));
    }
    case Algorithm::Enhanced: {
      double n = std::max(net.n, 2);
      double loglog = std::log2(std::max(1.0, std::log2(n)));
      double density = static_cast<double>(net.original_arc_count()) / n;
      return ceil_pow2(std::max({loglog, density, 4.0}));
    }
  }
  return 0;
}

FlowResult solve(const Network& net, const SolveOptions& opt) {
  if (opt.algorithm != Algorithm::Generic && opt.k != 0 && !is_power_of_two(opt.k))
    throw std::invalid_argument("k must be a power of two, got " + std::to_string(opt.k));
  switch (opt.algorithm) {
    case Algorithm::Generic:
      return gpr_solve(net, opt.audit);
    case Algorithm::Lmes: {
      int k = opt.k > 0 ? opt.k : default_k(Algorithm::Lmes, net);
      if (k < 2) throw std::invalid_argument("LMES needs k >= 2");
      return lmes_solve(net, k, opt.audit);
    }
    case Algorithm::Enhanced: {
      if (opt.k != 0 && opt.k < 4) throw std::invalid_argument("Enhanced LMES needs k >= 4");
      return enhanced_solve(net, opt);
    }
  }
  throw std::invalid_argument("unknown algorithm");
}

FlowResult finish_integral(const Network& net, std::vector<cap_t> x, Counters counters) {
  strip_helper_flow(net, x);
  FlowResult r;
  r.value = flow_value(net, x);
  r.source_side = residual_reachable(net, x);
  r.cut_capacity = cut_capacity(net, r.source_side);
  r.flow = std::move(x);
  r.counters = std::move(counters);
  return r;
}

}  // namespace maxflow
