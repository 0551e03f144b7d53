#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "minsing/errors.hpp"
#include "minsing/root_system.hpp"
#include "minsing/weight.hpp"

namespace minsing {

/// Value of the alternating shifted-orbit sum E^rho(lambda): either zero or
/// sign * E^rho(dominant) with dominant + rho strictly dominant.
class ERhoValue {
 public:
  static ERhoValue zero() { return ERhoValue(); }
  static ERhoValue term(Weight dominant, int sign) {
    ERhoValue v;
    v.dominant_ = std::move(dominant);
    v.sign_ = sign;
    return v;
  }

  bool is_zero() const noexcept { return !dominant_.has_value(); }
  const Weight& dominant() const { return dominant_.value(); }
  int sign() const noexcept { return sign_; }

  ERhoValue negated() const {
    ERhoValue v = *this;
    v.sign_ = -v.sign_;
    return v;
  }

  friend bool operator==(const ERhoValue&, const ERhoValue&) = default;

 private:
  std::optional<Weight> dominant_;
  int sign_ = 0;
};

struct DescentResult {
  ERhoValue value;
  std::size_t reflections = 0;
};

/// Reduce lambda to its dominant shifted-orbit representative by simple
/// reflections, always taking the lowest-index simple root with negative
/// pairing. Zero is decided at the terminal chamber only.
inline DescentResult e_rho_descent(const RootSystem& rs, const Weight& lambda) {
  rs.require_weight(lambda);
  Weight mu = lambda + rs.rho();
  const auto& simple = rs.simple_roots();
  int sign = 1;
  std::size_t steps = 0;
  const std::size_t bound = rs.positive_roots().size();
  for (;;) {
    std::size_t i = 0;
    while (i < simple.size() && inner4(mu, simple[i]) >= 0) ++i;
    if (i == simple.size()) break;
    mu = reflect(mu, simple[i]);
    sign = -sign;
    if (++steps > bound) throw InternalConsistencyError("descent exceeded |positive roots| steps");
  }
  for (const auto& a : simple)
    if (inner4(mu, a) == 0) return {ERhoValue::zero(), steps};
  return {ERhoValue::term(mu - rs.rho(), sign), steps};
}

inline ERhoValue e_rho(const RootSystem& rs, const Weight& lambda) {
  return e_rho_descent(rs, lambda).value;
}

namespace detail {

// Parity of the permutation that sorts keys strictly descending (keys distinct).
inline int inversion_parity(const std::vector<std::int64_t>& keys) {
  int inv = 0;
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = i + 1; j < keys.size(); ++j)
      if (keys[i] < keys[j]) ++inv;
  return inv % 2;
}

}  // namespace detail

/// Type A shortcut: sort the shifted tuple descending.
inline ERhoValue e_rho_fast_a(const RootSystem& rs, const Weight& lambda) {
  if (rs.type() != LieType::A) throw DomainError("e_rho_fast_a needs a type A root system");
  rs.require_weight(lambda);
  const Weight mu = lambda + rs.rho();
  std::vector<std::int64_t> t(mu.doubled().begin(), mu.doubled().end());
  std::vector<std::int64_t> sorted = t;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return ERhoValue::zero();
  const int sign = detail::inversion_parity(t) ? -1 : 1;
  return ERhoValue::term(Weight::from_doubled(std::move(sorted)) - rs.rho(), sign);
}

/// Type D shortcut: sort absolute values descending, parity of negations
/// absorbed into the last coordinate.
inline ERhoValue e_rho_fast_d(const RootSystem& rs, const Weight& lambda) {
  if (rs.type() != LieType::D) throw DomainError("e_rho_fast_d needs a type D root system");
  rs.require_weight(lambda);
  const Weight mu = lambda + rs.rho();
  std::vector<std::int64_t> abs_vals;
  std::size_t negatives = 0;
  bool has_zero = false;
  for (auto v : mu.doubled()) {
    abs_vals.push_back(v < 0 ? -v : v);
    negatives += v < 0;
    has_zero = has_zero || v == 0;
  }
  std::vector<std::int64_t> sorted = abs_vals;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return ERhoValue::zero();

  // Flips come in pairs: an odd count either parks one minus sign on the
  // smallest entry or pairs with a flip of the zero entry.
  std::size_t flips = negatives;
  if (negatives % 2 == 1) {
    if (has_zero) {
      ++flips;
    } else {
      --flips;
      sorted.back() = -sorted.back();
    }
  }
  const int perm_sign = detail::inversion_parity(abs_vals) ? -1 : 1;
  const int flip_sign = flips % 2 ? -1 : 1;
  return ERhoValue::term(Weight::from_doubled(std::move(sorted)) - rs.rho(), perm_sign * flip_sign);
}

/// Formal sum  sum_i a_i E^rho(lambda_i)  over strictly shift-dominant lambda_i.
class FormalSum {
 public:
  using Map = std::map<Weight, std::int64_t>;

  void add(const ERhoValue& v, std::int64_t multiplier = 1) {
    if (v.is_zero() || multiplier == 0) return;
    auto [it, inserted] = terms_.try_emplace(v.dominant(), 0);
    it->second += multiplier * v.sign();
    if (it->second == 0) terms_.erase(it);
  }
  void add(const Weight& dominant, std::int64_t coefficient) {
    add(ERhoValue::term(dominant, 1), coefficient);
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator-(const FormalSum& a) { return FormalSum() - a; }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Map& terms() const noexcept { return terms_; }
  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }

  std::int64_t coefficient(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }
  bool all_positive() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
  }
  std::vector<Weight> support() const {
    std::vector<Weight> out;
    for (const auto& [w, c] : terms_) out.push_back(w);
    return out;
  }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  Map terms_;
};

inline FormalSum formal_add(FormalSum acc, const ERhoValue& v, std::int64_t multiplier) {
  acc.add(v, multiplier);
  return acc;
}

}  // namespace minsing
