#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "minsing/errors.hpp"

namespace minsing {

/// F_{N,p,M}(s) = (|N - s p| + M) s
inline std::int64_t f_value(std::int64_t n, std::int64_t p, std::int64_t m, std::int64_t s) {
  return (std::llabs(n - s * p) + m) * s;
}

inline std::int64_t floor_div(std::int64_t n, std::int64_t p) { return n / p; }
inline std::int64_t ceil_div(std::int64_t n, std::int64_t p) { return (n + p - 1) / p; }

struct FMinResult {
  std::int64_t value = 0;
  std::vector<std::int64_t> argmins;  // sorted, the full set of minimizers over s >= 1
  bool shortcut = false;              // two-point evaluation {s1, s2} was used
};

/// Minimum of F_{N,p,M} over s >= 1 (requires N >= p >= 1).
///
/// The minimum sits in {1, s1, s2} with s1 = floor(N/p), s2 = ceil(N/p).
/// For M = 1, N > p >= 3 and (p, N) != (3, 8) the point s = 1 can be dropped.
inline FMinResult f_min(std::int64_t n, std::int64_t p, std::int64_t m) {
  if (p < 1 || n < p) throw DomainError("f_min needs N >= p >= 1");
  if (m < 1) throw DomainError("f_min needs M >= 1");
  const std::int64_t s1 = floor_div(n, p);
  const std::int64_t s2 = ceil_div(n, p);
  FMinResult r;
  r.shortcut = m == 1 && n > p && p >= 3 && !(p == 3 && n == 8);
  std::vector<std::int64_t> cands{s1, s2};
  if (!r.shortcut) cands.push_back(1);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  r.value = f_value(n, p, m, cands.front());
  for (auto s : cands) r.value = std::min(r.value, f_value(n, p, m, s));
  for (auto s : cands)
    if (f_value(n, p, m, s) == r.value) r.argmins.push_back(s);
  return r;
}

enum class HBranch { F, G };

inline const char* to_string(HBranch b) { return b == HBranch::F ? "F" : "G"; }

struct HCandidate {
  std::int64_t s = 0;
  std::int64_t value = 0;
  HBranch branch = HBranch::F;
};

/// H(s) with F = F_{N,p,2} and G = F_{N,p,1} / 2: the smaller of the two on
/// {s <= s1, p even, s odd} and {s >= s2, s even}, F elsewhere.
inline HCandidate h_value(std::int64_t n, std::int64_t p, std::int64_t s) {
  const std::int64_t s1 = floor_div(n, p);
  const std::int64_t s2 = ceil_div(n, p);
  const bool mixed = (s <= s1 && p % 2 == 0 && s % 2 == 1) || (s >= s2 && s % 2 == 0);
  const std::int64_t f = f_value(n, p, 2, s);
  if (!mixed) return {s, f, HBranch::F};
  const std::int64_t g2 = f_value(n, p, 1, s);
  if (g2 % 2 != 0) throw InternalConsistencyError("G(s) not integral on its branch");
  const std::int64_t g = g2 / 2;
  return g < f ? HCandidate{s, g, HBranch::G} : HCandidate{s, f, HBranch::F};
}

struct HMinResult {
  std::int64_t value = 0;
  std::vector<HCandidate> candidates;  // H at s in {1, s1, s2}
  std::vector<std::int64_t> argmins;
};

/// Minimum of H over s >= 1; requires N > p >= 2 with N odd.
inline HMinResult h_min(std::int64_t n, std::int64_t p) {
  if (n % 2 == 0) throw DomainError("h_min needs odd N");
  if (!(n > p && p >= 2)) throw DomainError("h_min needs N > p >= 2");
  std::vector<std::int64_t> pts{1, floor_div(n, p), ceil_div(n, p)};
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  HMinResult r;
  for (auto s : pts) r.candidates.push_back(h_value(n, p, s));
  r.value = r.candidates.front().value;
  for (const auto& c : r.candidates) r.value = std::min(r.value, c.value);
  for (const auto& c : r.candidates)
    if (c.value == r.value) r.argmins.push_back(c.s);
  return r;
}

}  // namespace minsing
