#pragma once

// Independent reference computations used only by the test suites.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "minsing/minsing.hpp"

namespace oracle {

using minsing::Weight;

// Integer matrix acting on doubled coordinates; valid when every root is
// integral (types A and D).
struct IntMatrix {
  std::size_t n = 0;
  std::vector<std::int64_t> a;

  static IntMatrix identity(std::size_t n) {
    IntMatrix m{n, std::vector<std::int64_t>(n * n, 0)};
    for (std::size_t i = 0; i < n; ++i) m.a[i * n + i] = 1;
    return m;
  }
  // I - alpha alpha^T for an integral root of norm 2.
  static IntMatrix reflection(const Weight& alpha) {
    IntMatrix m = identity(alpha.dim());
    for (std::size_t i = 0; i < m.n; ++i)
      for (std::size_t j = 0; j < m.n; ++j) m.a[i * m.n + j] -= (alpha.doubled(i) / 2) * (alpha.doubled(j) / 2);
    return m;
  }
  IntMatrix operator*(const IntMatrix& o) const {
    IntMatrix m{n, std::vector<std::int64_t>(n * n, 0)};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) m.a[i * n + j] += a[i * n + k] * o.a[k * n + j];
    return m;
  }
  Weight apply(const Weight& w) const {
    std::vector<std::int64_t> out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i] += a[i * n + j] * w.doubled(j);
    return Weight::from_doubled(std::move(out));
  }
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;
};

struct GroupElement {
  IntMatrix m;
  int length = 0;
};

// Every Weyl group element with its length, by breadth-first search on the
// Cayley graph generated by the simple reflections.
inline std::vector<GroupElement> weyl_group(const std::vector<Weight>& simple) {
  const std::size_t n = simple.front().dim();
  std::vector<IntMatrix> gens;
  for (const auto& s : simple) gens.push_back(IntMatrix::reflection(s));
  std::map<IntMatrix, int> seen{{IntMatrix::identity(n), 0}};
  std::deque<IntMatrix> queue{IntMatrix::identity(n)};
  while (!queue.empty()) {
    IntMatrix cur = queue.front();
    queue.pop_front();
    const int len = seen.at(cur);
    for (const auto& g : gens) {
      IntMatrix next = g * cur;
      if (seen.emplace(next, len + 1).second) queue.push_back(next);
    }
  }
  std::vector<GroupElement> out;
  for (auto& [m, len] : seen) out.push_back({m, len});
  return out;
}

inline bool strictly_dominant(const std::vector<Weight>& simple, const Weight& mu) {
  for (const auto& a : simple)
    if (minsing::inner4(mu, a) <= 0) return false;
  return true;
}

// E^rho(lambda) from the full alternating orbit sum over the group.
struct OrbitAnswer {
  std::map<Weight, std::int64_t> alternating;  // w(lambda + rho) -> summed sign
  std::optional<Weight> dominant;             // strictly dominant orbit point (shifted back)
  int sign = 0;
  int hits = 0;  // group elements taking lambda + rho to the strictly dominant chamber
};

inline OrbitAnswer orbit_answer(const std::vector<GroupElement>& group, const std::vector<Weight>& simple,
                                const Weight& rho, const Weight& lambda) {
  OrbitAnswer ans;
  const Weight mu = lambda + rho;
  for (const auto& g : group) {
    const Weight x = g.m.apply(mu);
    const int sign = g.length % 2 ? -1 : 1;
    auto& slot = ans.alternating[x];
    slot += sign;
    if (strictly_dominant(simple, x)) {
      ++ans.hits;
      ans.dominant = x - rho;
      ans.sign = sign;
    }
  }
  for (auto it = ans.alternating.begin(); it != ans.alternating.end();)
    it = it->second == 0 ? ans.alternating.erase(it) : std::next(it);
  return ans;
}

// Orbit of a point under simple reflections, tracking reflection-count
// parity. Returns nullopt when a reflection fixes an orbit point (singular).
struct OrbitPoint {
  Weight dominant;
  int sign;
  std::size_t orbit_size;
};

inline std::optional<OrbitPoint> regular_orbit(const std::vector<Weight>& simple, const Weight& mu) {
  std::map<Weight, int> parity{{mu, 0}};
  std::deque<Weight> queue{mu};
  std::optional<OrbitPoint> found;
  while (!queue.empty()) {
    Weight x = queue.front();
    queue.pop_front();
    const int par = parity.at(x);
    if (strictly_dominant(simple, x)) found = OrbitPoint{x, par ? -1 : 1, 0};
    for (const auto& a : simple) {
      Weight y = minsing::reflect(x, a);
      if (y == x) return std::nullopt;
      auto [it, inserted] = parity.emplace(y, 1 - par);
      if (inserted) {
        queue.push_back(y);
      } else if (it->second == par) {
        return std::nullopt;  // inconsistent parity: stabilizer is nontrivial
      }
    }
  }
  if (found) found->orbit_size = parity.size();
  return found;
}

// F_{N,p,M}(s) and H(s) evaluated directly from their definitions.
inline std::int64_t F(std::int64_t n, std::int64_t p, std::int64_t m, std::int64_t s) {
  const std::int64_t d = n - s * p;
  return ((d < 0 ? -d : d) + m) * s;
}

inline std::int64_t H(std::int64_t n, std::int64_t p, std::int64_t s) {
  const std::int64_t s1 = n / p;
  const std::int64_t s2 = (n + p - 1) / p;
  const std::int64_t f = F(n, p, 2, s);
  const bool use_min = (s <= s1 && p % 2 == 0 && s % 2 == 1) || (s >= s2 && s % 2 == 0);
  if (!use_min) return f;
  const std::int64_t g2 = F(n, p, 1, s);
  return 2 * f < g2 ? f : g2 / 2;
}

struct BruteMin {
  std::int64_t value;
  std::set<std::int64_t> argmins;
};

template <class Fn>
BruteMin brute_min(std::int64_t upto, Fn fn) {
  BruteMin b{fn(1), {}};
  for (std::int64_t s = 1; s <= upto; ++s) b.value = std::min(b.value, fn(s));
  for (std::int64_t s = 1; s <= upto; ++s)
    if (fn(s) == b.value) b.argmins.insert(s);
  return b;
}

}  // namespace oracle
