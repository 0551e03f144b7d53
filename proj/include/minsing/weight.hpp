#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "minsing/errors.hpp"

namespace minsing {

using Rational = boost::rational<std::int64_t>;

/// Exact vector in the ambient orthonormal epsilon-basis.
///
/// Coordinates are restricted to (1/2)Z and stored doubled, so every
/// arithmetic operation stays in the integers. Ordering is lexicographic on
/// the doubled coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t dim) : twice_(dim, 0) {}

  static Weight from_doubled(std::vector<std::int64_t> twice) {
    Weight w;
    w.twice_ = std::move(twice);
    return w;
  }
  static Weight from_integers(std::span<const std::int64_t> coords) {
    Weight w(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) w.twice_[i] = 2 * coords[i];
    return w;
  }
  static Weight from_integers(std::initializer_list<std::int64_t> coords) {
    return from_integers(std::span<const std::int64_t>(coords.begin(), coords.size()));
  }
  // e_i in dimension dim, scaled.
  static Weight unit(std::size_t dim, std::size_t i, std::int64_t scale = 1) {
    Weight w(dim);
    w.twice_.at(i) = 2 * scale;
    return w;
  }

  std::size_t dim() const noexcept { return twice_.size(); }
  std::int64_t doubled(std::size_t i) const { return twice_[i]; }
  std::span<const std::int64_t> doubled() const noexcept { return twice_; }
  std::int64_t& doubled_mut(std::size_t i) { return twice_[i]; }

  Rational coord(std::size_t i) const { return Rational(twice_[i], 2); }
  bool is_integral() const {
    for (auto v : twice_)
      if (v % 2 != 0) return false;
    return true;
  }
  bool is_zero() const {
    for (auto v : twice_)
      if (v != 0) return false;
    return true;
  }
  std::int64_t doubled_sum() const {
    std::int64_t s = 0;
    for (auto v : twice_) s += v;
    return s;
  }

  Weight& operator+=(const Weight& o) {
    check_dim(o);
    for (std::size_t i = 0; i < twice_.size(); ++i) twice_[i] += o.twice_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_dim(o);
    for (std::size_t i = 0; i < twice_.size(); ++i) twice_[i] -= o.twice_[i];
    return *this;
  }
  Weight& operator*=(std::int64_t k) {
    for (auto& v : twice_) v *= k;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t k, Weight a) { return a *= k; }
  friend Weight operator*(Weight a, std::int64_t k) { return a *= k; }
  friend Weight operator-(Weight a) { return a *= -1; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// Coordinates as exact strings: "2", "-1", "1/2", "-5/2".
  std::vector<std::string> coord_strings() const {
    std::vector<std::string> out;
    out.reserve(twice_.size());
    for (auto v : twice_) out.push_back(half_string(v));
    return out;
  }
  std::string to_string() const {
    std::string s = "(";
    auto parts = coord_strings();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += parts[i];
    }
    return s + ")";
  }

  static std::string half_string(std::int64_t twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
  // Inverse of half_string; accepts integers and n/2.
  static std::int64_t parse_half(const std::string& s) {
    std::size_t pos = 0;
    std::int64_t num = std::stoll(s, &pos);
    if (pos == s.size()) return 2 * num;
    if (s.compare(pos, std::string::npos, "/2") == 0) return num;
    throw DomainError("not an integer or half-integer: " + s);
  }

 private:
  void check_dim(const Weight& o) const {
    if (o.dim() != dim()) throw DomainError("weight dimension mismatch");
  }

  std::vector<std::int64_t> twice_;
};

inline std::ostream& operator<<(std::ostream& os, const Weight& w) {
  return os << w.to_string();
}

/// 4 * (a|b), always an integer.
inline std::int64_t inner4(const Weight& a, const Weight& b) {
  if (a.dim() != b.dim()) throw DomainError("weight dimension mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a.doubled(i) * b.doubled(i);
  return s;
}

inline Rational inner_rational(const Weight& a, const Weight& b) {
  return Rational(inner4(a, b), 4);
}

/// (a|b), required to be an integer.
inline std::int64_t inner(const Weight& a, const Weight& b) {
  const auto v = inner4(a, b);
  if (v % 4 != 0) {
    std::ostringstream os;
    os << "inner product " << a << "|" << b << " is not an integer";
    throw DomainError(os.str());
  }
  return v / 4;
}

/// Simple reflection x - (x|alpha) alpha for a root of squared norm 2.
inline Weight reflect(const Weight& x, const Weight& alpha) {
  const std::int64_t p4 = inner4(x, alpha);
  Weight out = x;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const std::int64_t step = p4 * alpha.doubled(i);
    if (step % 4 != 0)
      throw InternalConsistencyError("reflection leaves the half-integer lattice");
    out.doubled_mut(i) -= step / 4;
  }
  return out;
}

inline std::string rational_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace minsing
