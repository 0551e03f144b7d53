#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "minsing/errors.hpp"
#include "minsing/root_system.hpp"
#include "minsing/weyl.hpp"

namespace minsing {

/// kappa + h_dual = p / q with p >= 2, q >= 1, gcd(p, q) = 1.
struct LevelParam {
  int p = 2;
  int q = 1;

  static LevelParam make(int p, int q) {
    if (p < 2) throw DomainError("p must be >= 2");
    if (q < 1) throw DomainError("q must be >= 1");
    if (std::gcd(p, q) != 1) throw DomainError("gcd(p, q) must be 1");
    return {p, q};
  }
  // kappa = p/q - h_dual
  Rational kappa(int dual_coxeter) const { return Rational(p, q) - dual_coxeter; }
};

using Pair = std::pair<std::int64_t, std::int64_t>;
using PairSet = std::set<Pair>;

/// {(a, b) : ab = pD, p | b}, by divisor scan of pD.
inline PairSet pairs_p(int p, int d) {
  if (p < 2 || d < 1) throw DomainError("pairs_p needs p >= 2 and D >= 1");
  const std::int64_t prod = static_cast<std::int64_t>(p) * d;
  PairSet out;
  for (std::int64_t b = p; b <= prod; b += p)
    if (prod % b == 0) out.emplace(prod / b, b);
  return out;
}

/// P minus its transpose.
inline PairSet antisym_reduce(const PairSet& pairs) {
  PairSet out;
  for (const auto& [a, b] : pairs)
    if (!pairs.contains({b, a})) out.emplace(a, b);
  return out;
}

/// E_{a,b} = sum over roots of height a - b of E^rho(-a alpha).
inline FormalSum e_ab(const RootSystem& rs, std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw DomainError("e_ab needs a, b >= 1");
  FormalSum out;
  const std::int64_t h = a - b;
  if (h > rs.max_height() || h < -rs.max_height()) return out;
  for (const auto& alpha : rs.roots_of_height(static_cast<int>(h)))
    out.add(e_rho(rs, -a * alpha));
  return out;
}

enum class PairReduction { Reduced, Full };

/// Layer sum M_{p,D} = sum over pairs_p(p, D) of E_{a,b}.
inline FormalSum m_pd(const RootSystem& rs, int p, int d, PairReduction mode = PairReduction::Reduced) {
  PairSet pairs = pairs_p(p, d);
  if (mode == PairReduction::Reduced) pairs = antisym_reduce(pairs);
  FormalSum out;
  for (const auto& [a, b] : pairs) out += e_ab(rs, a, b);
  return out;
}

struct OracleResult {
  int d_p = 0;
  FormalSum weights;
};

/// Default search cap: the integrable answer when p >= h_dual, otherwise
/// 4 h_dual + 8.
inline int default_d_max(const RootSystem& rs, int p) {
  const int h = rs.dual_coxeter();
  return p >= h ? p - h + 1 : 4 * h + 8;
}

/// Smallest D in [1, d_max] with M_{p,D} != 0. Coefficients at the minimum
/// must all be positive.
inline OracleResult oracle_find_dp(const RootSystem& rs, int p, std::optional<int> d_max = std::nullopt) {
  if (p < 2) throw DomainError("p must be >= 2");
  const int cap = d_max.value_or(default_d_max(rs, p));
  for (int d = 1; d <= cap; ++d) {
    FormalSum m = m_pd(rs, p, d);
    if (m.empty()) continue;
    if (!m.all_positive())
      throw InternalConsistencyError("nonpositive coefficient in the minimal layer of " + rs.label() +
                                     " p=" + std::to_string(p) + " D=" + std::to_string(d));
    return {d, std::move(m)};
  }
  throw SearchExhausted("no nonzero layer for " + rs.label() + " p=" + std::to_string(p) +
                            " with D <= " + std::to_string(cap),
                        cap);
}

}  // namespace minsing
