#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minsing/errors.hpp"
#include "minsing/weight.hpp"

namespace minsing {

enum class LieType { A, D, E6, E7, E8 };

inline std::string_view to_string(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::D: return "D";
    case LieType::E6: return "E6";
    case LieType::E7: return "E7";
    case LieType::E8: return "E8";
  }
  return "?";
}

inline LieType parse_lie_type(std::string_view s) {
  if (s == "A") return LieType::A;
  if (s == "D") return LieType::D;
  if (s == "E6") return LieType::E6;
  if (s == "E7") return LieType::E7;
  if (s == "E8") return LieType::E8;
  throw ConfigError("unsupported type label: " + std::string(s));
}

inline bool is_exceptional(LieType t) {
  return t == LieType::E6 || t == LieType::E7 || t == LieType::E8;
}

inline int exceptional_rank(LieType t) {
  switch (t) {
    case LieType::E6: return 6;
    case LieType::E7: return 7;
    case LieType::E8: return 8;
    default: throw ConfigError("not an exceptional type");
  }
}

inline constexpr int kMaxClassicalRank = 64;

namespace detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan inverse of a nonsingular square matrix.
inline RationalMatrix invert(RationalMatrix m) {
  const std::size_t n = m.size();
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].numerator() == 0) ++piv;
    if (piv == n) throw InternalConsistencyError("singular Cartan matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Rational d = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].numerator() == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Integer basis of the orthogonal complement of span(rows) in Q^dim,
// returned as doubled-coordinate weights.
inline std::vector<Weight> orthogonal_complement(const std::vector<Weight>& rows,
                                                 std::size_t dim) {
  RationalMatrix m;
  for (const auto& r : rows) {
    std::vector<Rational> row(dim);
    for (std::size_t j = 0; j < dim; ++j) row[j] = r.coord(j);
    m.push_back(std::move(row));
  }
  // Row-reduce to RREF.
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col].numerator() == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const Rational d = m[rank][col];
    for (auto& x : m[rank]) x /= d;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col].numerator() == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < dim; ++j) m[r][j] -= f * m[rank][j];
    }
    pivots.push_back(col);
    ++rank;
  }
  std::vector<Weight> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> v(dim, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    std::int64_t l = 1;
    for (const auto& x : v) l = std::lcm(l, x.denominator());
    std::vector<std::int64_t> ints(dim);
    for (std::size_t j = 0; j < dim; ++j) ints[j] = (v[j] * l).numerator();
    basis.push_back(Weight::from_integers(ints));
  }
  return basis;
}

inline Weight half_spinor(const std::array<int, 8>& signs) {
  std::vector<std::int64_t> twice(signs.begin(), signs.end());
  return Weight::from_doubled(std::move(twice));
}

inline std::vector<Weight> e8_ambient_roots() {
  std::vector<Weight> roots;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1})
          roots.push_back(Weight::unit(8, i, si) + Weight::unit(8, j, sj));
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    std::array<int, 8> s{};
    for (int k = 0; k < 8; ++k) s[k] = (mask >> k) & 1u ? -1 : 1;
    roots.push_back(half_spinor(s));
  }
  return roots;
}

// Listed base of E8 in R^8; E7 and E6 use the first 7 and 6 entries.
inline std::vector<Weight> e8_base() {
  std::vector<Weight> b;
  b.push_back(half_spinor({1, -1, -1, -1, -1, -1, -1, 1}));
  b.push_back(Weight::unit(8, 0) + Weight::unit(8, 1));
  for (std::size_t i = 1; i < 7; ++i)
    b.push_back(Weight::unit(8, i) - Weight::unit(8, i - 1));
  return b;
}

}  // namespace detail

/// Realization of a simply-laced root system in its ambient epsilon-basis.
///
/// Immutable after build(). Roots are kept in lexicographic order of their
/// doubled coordinates; every query result inherits that order.
class RootSystem {
 public:
  static RootSystem build(LieType type, int rank) {
    RootSystem rs;
    rs.type_ = type;
    rs.rank_ = rank;
    switch (type) {
      case LieType::A: rs.init_a(rank); break;
      case LieType::D: rs.init_d(rank); break;
      case LieType::E6:
      case LieType::E7:
      case LieType::E8: rs.init_e(type, rank); break;
    }
    rs.finish();
    return rs;
  }
  static RootSystem build(LieType type) { return build(type, exceptional_rank(type)); }

  LieType type() const noexcept { return type_; }
  int rank() const noexcept { return rank_; }
  std::size_t ambient_dim() const noexcept { return dim_; }
  int dual_coxeter() const noexcept { return dual_coxeter_; }
  std::string label() const { return std::string(to_string(type_)) + (is_exceptional(type_) ? "" : std::to_string(rank_)); }

  const std::vector<Weight>& roots() const noexcept { return roots_; }
  const std::vector<Weight>& positive_roots() const noexcept { return positive_; }
  const std::vector<Weight>& simple_roots() const noexcept { return simple_; }
  const Weight& rho() const noexcept { return rho_; }
  const Weight& theta() const noexcept { return theta_; }
  // Orthogonal complement of the root span inside the ambient space.
  const std::vector<Weight>& complement() const noexcept { return complement_; }
  // Inverse of the Cartan matrix (= Gram matrix of the simple roots).
  const detail::RationalMatrix& cartan_inverse() const noexcept { return cartan_inv_; }

  bool is_root(const Weight& w) const {
    return std::binary_search(roots_.begin(), roots_.end(), w);
  }

  /// (rho|alpha) for a root alpha.
  int height(const Weight& alpha) const {
    if (!is_root(alpha)) throw DomainError("not a root of " + label() + ": " + alpha.to_string());
    return static_cast<int>(inner(rho_, alpha));
  }

  /// All roots of the given height, lexicographically ordered; empty when none.
  const std::vector<Weight>& roots_of_height(int h) const {
    static const std::vector<Weight> kEmpty;
    const int idx = h + max_height_;
    if (idx < 0 || idx >= static_cast<int>(by_height_.size())) return kEmpty;
    return by_height_[idx];
  }
  int max_height() const noexcept { return max_height_; }

  /// True when w has the ambient dimension and lies in the rational span of the roots.
  bool in_span(const Weight& w) const {
    if (w.dim() != dim_) return false;
    for (const auto& c : complement_)
      if (inner4(c, w) != 0) return false;
    return true;
  }
  void require_weight(const Weight& w) const {
    if (!in_span(w)) throw DomainError("not a weight of " + label() + ": " + w.to_string());
  }

  /// Exact simple-root coefficients of w via the Cartan inverse (no span check).
  std::vector<Rational> simple_coefficients(const Weight& w) const {
    std::vector<Rational> pairing(simple_.size());
    for (std::size_t i = 0; i < simple_.size(); ++i) pairing[i] = inner_rational(simple_[i], w);
    std::vector<Rational> c(simple_.size(), Rational(0));
    for (std::size_t i = 0; i < simple_.size(); ++i)
      for (std::size_t j = 0; j < simple_.size(); ++j) c[i] += cartan_inv_[i][j] * pairing[j];
    return c;
  }

 private:
  void init_a(int rank) {
    if (rank < 1 || rank > kMaxClassicalRank)
      throw ConfigError("type A needs rank in [1, " + std::to_string(kMaxClassicalRank) + "]");
    const std::size_t n = static_cast<std::size_t>(rank) + 1;
    dim_ = n;
    dual_coxeter_ = static_cast<int>(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) roots_.push_back(Weight::unit(n, i) - Weight::unit(n, j));
    for (std::size_t i = 0; i + 1 < n; ++i)
      simple_.push_back(Weight::unit(n, i) - Weight::unit(n, i + 1));
  }

  void init_d(int rank) {
    if (rank < 4 || rank > kMaxClassicalRank)
      throw ConfigError("type D needs rank in [4, " + std::to_string(kMaxClassicalRank) + "]");
    const std::size_t n = static_cast<std::size_t>(rank);
    dim_ = n;
    dual_coxeter_ = 2 * rank - 2;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1})
            roots_.push_back(Weight::unit(n, i, si) + Weight::unit(n, j, sj));
    for (std::size_t i = 0; i + 1 < n; ++i)
      simple_.push_back(Weight::unit(n, i) - Weight::unit(n, i + 1));
    simple_.push_back(Weight::unit(n, n - 2) + Weight::unit(n, n - 1));
  }

  void init_e(LieType type, int rank) {
    if (rank != exceptional_rank(type))
      throw ConfigError(std::string(to_string(type)) + " has rank " +
                        std::to_string(exceptional_rank(type)));
    dim_ = 8;
    dual_coxeter_ = type == LieType::E6 ? 12 : type == LieType::E7 ? 18 : 30;
    auto base = detail::e8_base();
    base.resize(static_cast<std::size_t>(rank));
    simple_ = base;
    const auto comp = detail::orthogonal_complement(simple_, dim_);
    for (auto& r : detail::e8_ambient_roots()) {
      bool inside = true;
      for (const auto& c : comp) inside = inside && inner4(c, r) == 0;
      if (inside) roots_.push_back(std::move(r));
    }
  }

  static std::size_t expected_root_count(LieType t, int rank) {
    const std::size_t r = static_cast<std::size_t>(rank);
    switch (t) {
      case LieType::A: return (r + 1) * r;
      case LieType::D: return 2 * r * (r - 1);
      case LieType::E6: return 72;
      case LieType::E7: return 126;
      case LieType::E8: return 240;
    }
    return 0;
  }

  void finish() {
    std::sort(roots_.begin(), roots_.end());
    if (roots_.size() != expected_root_count(type_, rank_))
      throw InternalConsistencyError("wrong root count for " + label());
    for (const auto& r : roots_)
      if (inner4(r, r) != 8) throw InternalConsistencyError("root of norm != 2");

    complement_ = detail::orthogonal_complement(simple_, dim_);
    detail::RationalMatrix cartan(simple_.size(), std::vector<Rational>(simple_.size()));
    for (std::size_t i = 0; i < simple_.size(); ++i)
      for (std::size_t j = 0; j < simple_.size(); ++j)
        cartan[i][j] = inner_rational(simple_[i], simple_[j]);
    cartan_inv_ = detail::invert(cartan);

    // Positive roots: nonnegative simple-root coefficients.
    Weight four_rho(dim_);  // sum of doubled positive roots = 4 rho in plain coordinates
    for (const auto& r : roots_) {
      const auto c = simple_coefficients(r);
      bool nonneg = true, nonpos = true;
      for (const auto& x : c) {
        if (x.denominator() != 1) throw InternalConsistencyError("non-integral root coefficient");
        nonneg = nonneg && x.numerator() >= 0;
        nonpos = nonpos && x.numerator() <= 0;
      }
      if (nonneg == nonpos) throw InternalConsistencyError("root neither positive nor negative");
      if (nonneg) {
        positive_.push_back(r);
        four_rho += r;
      }
    }
    std::vector<std::int64_t> twice_rho(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (four_rho.doubled(i) % 2 != 0) throw InternalConsistencyError("rho leaves (1/2)Z");
      twice_rho[i] = four_rho.doubled(i) / 2;
    }
    rho_ = Weight::from_doubled(std::move(twice_rho));

    max_height_ = 0;
    for (const auto& r : roots_) max_height_ = std::max<int>(max_height_, static_cast<int>(inner(rho_, r)));
    by_height_.assign(static_cast<std::size_t>(2 * max_height_ + 1), {});
    for (const auto& r : roots_) by_height_[static_cast<std::size_t>(inner(rho_, r) + max_height_)].push_back(r);
    const auto& top = by_height_.back();
    if (top.size() != 1) throw InternalConsistencyError("highest root not unique");
    theta_ = top.front();
    if (max_height_ != dual_coxeter_ - 1)
      throw InternalConsistencyError("height(theta) != h_dual - 1 for " + label());
  }

  LieType type_ = LieType::A;
  int rank_ = 0;
  std::size_t dim_ = 0;
  int dual_coxeter_ = 0;
  int max_height_ = 0;
  std::vector<Weight> roots_;
  std::vector<Weight> positive_;
  std::vector<Weight> simple_;
  std::vector<Weight> complement_;
  std::vector<std::vector<Weight>> by_height_;
  detail::RationalMatrix cartan_inv_;
  Weight rho_;
  Weight theta_;
};

}  // namespace minsing
