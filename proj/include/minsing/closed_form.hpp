#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "minsing/e_tables.hpp"
#include "minsing/errors.hpp"
#include "minsing/minimizers.hpp"
#include "minsing/root_system.hpp"
#include "minsing/weight.hpp"

namespace minsing {

static_assert(tables::all_tables_checksum() == tables::kTablesChecksum,
              "E-type tables were modified");

/// Closed-form answer: minimal layer D_p and the dominant weights lambda
/// (epsilon-basis) of the minimal singular vectors.
struct ClosedForm {
  int d_p = 0;
  std::vector<Weight> weights;
  std::string case_label;
  bool tie = false;  // several branches attain the minimum
  std::vector<std::string> notes;
};

namespace detail {

// sum_k c_k alpha_k for alpha_k = e_k - e_{k+1} in dimension n.
inline Weight type_a_from_alpha(std::size_t n, const std::vector<std::int64_t>& c) {
  if (c.size() + 1 != n) throw DomainError("type A needs n-1 simple-root coefficients");
  std::vector<std::int64_t> eps(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t cur = k < c.size() ? c[k] : 0;
    const std::int64_t prev = k > 0 ? c[k - 1] : 0;
    eps[k] = cur - prev;
  }
  return Weight::from_integers(eps);
}

// Coefficients min(k, r, n - k) on alpha_1..alpha_{n-1}:
// 1, 2, ..., r, r, ..., r, r-1, ..., 1.
inline std::vector<std::int64_t> staircase(std::size_t n, std::int64_t r) {
  std::vector<std::int64_t> c(n - 1);
  for (std::size_t k = 1; k < n; ++k)
    c[k - 1] = std::min<std::int64_t>({static_cast<std::int64_t>(k), r, static_cast<std::int64_t>(n - k)});
  return c;
}

inline std::vector<std::int64_t> constant(std::size_t len, std::int64_t v) {
  return std::vector<std::int64_t>(len, v);
}

// e_1 + ... + e_k scaled, in dimension n.
inline Weight eps_prefix(std::size_t n, std::size_t k, std::int64_t scale = 1) {
  if (k > n) throw InternalConsistencyError("prefix longer than the ambient dimension");
  Weight w(n);
  for (std::size_t i = 0; i < k; ++i) w.doubled_mut(i) = 2 * scale;
  return w;
}

inline void add_unique(std::vector<Weight>& ws, Weight w) {
  if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(std::move(w));
}

}  // namespace detail

/// sl_n at kappa + n = p/q.
inline ClosedForm closed_form_a(int n, int p) {
  if (n < 2 || p < 2) throw DomainError("closed_form_a needs n >= 2 and p >= 2");
  const auto un = static_cast<std::size_t>(n);
  ClosedForm out;
  auto from_alpha = [&](const std::vector<std::int64_t>& c) { return detail::type_a_from_alpha(un, c); };

  if (p >= n) {
    out.case_label = "A.integrable";
    out.d_p = p - n + 1;
    out.weights.push_back(from_alpha(detail::constant(un - 1, out.d_p)));
    return out;
  }
  if (p == 2) {
    out.case_label = "A.p2";
    if (n % 2 == 0) {
      out.d_p = n / 2;
      out.weights.push_back(from_alpha(detail::constant(un - 1, 1)));
    } else {
      out.d_p = n;
      auto first = detail::constant(un - 1, 2);
      first.back() = 1;
      auto second = detail::constant(un - 1, 2);
      second.front() = 1;
      out.weights.push_back(from_alpha(first));
      out.weights.push_back(from_alpha(second));
    }
    return out;
  }
  if (n == 5 && p == 3) {
    out.case_label = "A.n5p3";
    out.d_p = 4;
    out.weights = {from_alpha({2, 2, 2, 2}), from_alpha({2, 3, 2, 1}), from_alpha({1, 2, 3, 2})};
    return out;
  }
  if (n == 7 && p == 4) {
    out.case_label = "A.n7p4";
    out.d_p = 4;
    out.weights.push_back(from_alpha(detail::constant(6, 2)));
    return out;
  }
  if (n == 8 && p == 3) {
    out.case_label = "A.n8p3";
    out.d_p = 6;
    out.weights.push_back(from_alpha(detail::constant(7, 2)));
    return out;
  }

  out.case_label = "A.generic";
  const std::int64_t s1 = floor_div(n, p);
  const std::int64_t s2 = ceil_div(n, p);
  const std::int64_t d1 = f_value(n, p, 1, s1);
  const std::int64_t d2 = f_value(n, p, 1, s2);
  out.d_p = static_cast<int>(std::min(d1, d2));
  if (d1 == out.d_p) {
    const std::int64_t r1 = std::llabs(s1 * p - n) + 1;
    detail::add_unique(out.weights, from_alpha(detail::staircase(un, r1)));
  }
  if (d2 == out.d_p) {
    const std::int64_t r2 = std::llabs(s2 * p - n) + 1;
    detail::add_unique(out.weights, from_alpha(detail::constant(un - 1, r2)));
  }
  if (s1 != s2 && d1 == d2) {
    out.tie = true;
    out.notes.push_back("D(s1) = D(s2): both singular vectors appear");
  }
  return out;
}

/// Three branch values of the generic type D case.
struct DBranches {
  std::int64_t s1 = 0, s2 = 0;
  std::int64_t d0 = 0, d1 = 0, d2 = 0;  // d0 is +inf (max int64) for odd p
};

inline DBranches type_d_branches(int n, int p) {
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  const std::int64_t big_n = 2 * n - 1;
  DBranches b;
  b.s1 = floor_div(big_n, p);
  b.s2 = ceil_div(big_n, p);
  b.d0 = p % 2 == 0 ? n - p / 2 : kInf;
  if ((b.s1 * (p - 1)) % 2 == 1)
    b.d1 = b.s1 * (2 * n - b.s1 * p) / 2;
  else
    b.d1 = b.s1 * (2 * n - b.s1 * p + 1);
  if (b.s2 % 2 == 1)
    b.d2 = b.s2 * (b.s2 * p - 2 * n + 3);
  else
    b.d2 = b.s2 * (b.s2 * p / 2 - n + 1);
  return b;
}

/// so_{2n} (n >= 4) at kappa + 2n - 2 = p/q.
inline ClosedForm closed_form_d(int n, int p) {
  if (n < 4 || p < 2) throw DomainError("closed_form_d needs n >= 4 and p >= 2");
  const auto un = static_cast<std::size_t>(n);
  ClosedForm out;
  auto eps = [&](std::initializer_list<std::int64_t> head) {
    std::vector<std::int64_t> c(un, 0);
    std::copy(head.begin(), head.end(), c.begin());
    return Weight::from_integers(c);
  };

  if (p >= 2 * n - 2) {
    out.case_label = "D.integrable";
    out.d_p = p - 2 * n + 3;
    out.weights.push_back(eps({out.d_p, out.d_p}));
    return out;
  }
  if (p == 3 && (n - 1) % 3 == 0) {
    out.case_label = "D.p3";
    out.d_p = 2 * n - 1;
    out.weights.push_back(eps({3, 2, 1}));
    return out;
  }
  if (p == 5 && n == 7) {
    out.case_label = "D.n7p5";
    out.d_p = 11;
    out.weights.push_back(eps({3, 2, 2, 2, 1}));
    return out;
  }
  if (p == 5 && n == 12) {
    out.case_label = "D.n12p5";
    out.d_p = 20;
    out.weights.push_back(eps({4, 4}));
    return out;
  }
  if (p == 4 && n == 4) {
    out.case_label = "D.n4p4";
    out.d_p = 2;
    out.weights = {eps({2}), eps({1, 1, 1, 1}), eps({1, 1, 1, -1})};
    return out;
  }
  if (p == 5 && n == 4) {
    out.case_label = "D.n4p5";
    out.d_p = 4;
    out.weights = {eps({4}), eps({2, 2, 2, 2}), eps({2, 2, 2, -2})};
    return out;
  }

  out.case_label = "D.generic";
  const DBranches b = type_d_branches(n, p);
  const std::int64_t best = std::min({b.d0, b.d1, b.d2});
  out.d_p = static_cast<int>(best);
  int attained = 0;
  if (b.d0 == best) {
    ++attained;
    detail::add_unique(out.weights, detail::eps_prefix(un, static_cast<std::size_t>(std::min(p, 2 * n - p))));
  }
  if (b.d1 == best) {
    ++attained;
    const std::int64_t len = 2 * n - b.s1 * p;
    if ((b.s1 * (p - 1)) % 2 == 1)
      detail::add_unique(out.weights, detail::eps_prefix(un, static_cast<std::size_t>(len)));
    else
      detail::add_unique(out.weights, detail::eps_prefix(un, static_cast<std::size_t>(len + 1), 2));
  }
  if (b.d2 == best) {
    ++attained;
    if (b.s2 % 2 == 1) {
      const std::int64_t k = b.s2 * p - 2 * n + 3;
      detail::add_unique(out.weights, eps({k, k}));
    } else {
      detail::add_unique(out.weights, eps({b.s2 * p - 2 * n + 2}));
    }
  }
  if (attained > 1) {
    out.tie = true;
    out.notes.push_back("generic type D branches tie: " + std::to_string(attained) + " attain D_p");
  }
  return out;
}

/// p >= h_dual: D_p = p - h_dual + 1 with lambda = D_p theta.
inline ClosedForm integrable(const RootSystem& rs, int p) {
  const int h = rs.dual_coxeter();
  if (p < h) throw DomainError("integrable needs p >= h_dual");
  ClosedForm out;
  out.case_label = "integrable";
  out.d_p = p - h + 1;
  out.weights.push_back(out.d_p * rs.theta());
  return out;
}

/// E6, E7, E8: integrable range or literal table lookup.
inline ClosedForm closed_form_e(LieType which, int p) {
  if (!is_exceptional(which)) throw DomainError("closed_form_e needs an E type");
  if (p < 2) throw DomainError("p must be >= 2");
  const auto rs = RootSystem::build(which);
  if (p >= rs.dual_coxeter()) return integrable(rs, p);

  std::span<const tables::ERow> rows;
  switch (which) {
    case LieType::E6: rows = tables::kE6; break;
    case LieType::E7: rows = tables::kE7; break;
    default: rows = tables::kE8; break;
  }
  for (const auto& row : rows) {
    if (row.p != p) continue;
    ClosedForm out;
    out.case_label = std::string(to_string(which)) + ".table";
    out.d_p = row.d_p;
    for (int i = 0; i < row.count; ++i) {
      const auto& w = row.weights[static_cast<std::size_t>(i)];
      out.weights.push_back(Weight::from_doubled({w.begin(), w.end()}));
    }
    return out;
  }
  throw InternalConsistencyError("missing table row for " + std::string(to_string(which)) + " p=" +
                                 std::to_string(p));
}

/// Dispatch on the root system type.
inline ClosedForm closed_form(const RootSystem& rs, int p) {
  switch (rs.type()) {
    case LieType::A: return closed_form_a(rs.rank() + 1, p);
    case LieType::D: return closed_form_d(rs.rank(), p);
    default: return closed_form_e(rs.type(), p);
  }
}

}  // namespace minsing
