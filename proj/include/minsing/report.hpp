#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "minsing/closed_form.hpp"
#include "minsing/errors.hpp"
#include "minsing/layers.hpp"
#include "minsing/root_system.hpp"
#include "minsing/weight.hpp"
#include "minsing/weyl.hpp"

namespace minsing {

/// sum_i c_i alpha_i; the result must land in the half-integer lattice.
inline Weight from_simple_roots(const RootSystem& rs, const std::vector<Rational>& coeffs) {
  const auto& simple = rs.simple_roots();
  if (coeffs.size() != simple.size()) throw DomainError("expected one coefficient per simple root");
  std::vector<std::int64_t> twice(rs.ambient_dim());
  for (std::size_t k = 0; k < twice.size(); ++k) {
    Rational acc(0);
    for (std::size_t i = 0; i < simple.size(); ++i) acc += coeffs[i] * simple[i].doubled(k);
    if (acc.denominator() != 1) throw DomainError("coefficients leave the half-integer lattice");
    twice[k] = acc.numerator();
  }
  return Weight::from_doubled(std::move(twice));
}

/// Exact coefficients of lambda over the simple roots.
inline std::vector<Rational> to_simple_roots(const RootSystem& rs, const Weight& lambda) {
  rs.require_weight(lambda);
  auto c = rs.simple_coefficients(lambda);
  if (from_simple_roots(rs, c) != lambda)
    throw InternalConsistencyError("simple-root expansion does not reproduce " + lambda.to_string());
  return c;
}

/// Type A prefix sums: c_k = lambda_1 + ... + lambda_k for alpha_k = e_k - e_{k+1}.
inline std::vector<Rational> to_simple_roots_type_a(const Weight& lambda) {
  if (lambda.dim() < 2) throw DomainError("type A weights have dimension >= 2");
  if (lambda.doubled_sum() != 0) throw DomainError("type A weight must have coordinate sum 0");
  std::vector<Rational> c;
  std::int64_t run = 0;
  for (std::size_t k = 0; k + 1 < lambda.dim(); ++k) {
    run += lambda.doubled(k);
    c.emplace_back(run, 2);
  }
  return c;
}

enum class Provenance { Oracle, ClosedForm, CrossChecked };

inline std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Oracle: return "oracle";
    case Provenance::ClosedForm: return "closed_form";
    case Provenance::CrossChecked: return "cross_checked";
  }
  return "?";
}

inline Provenance parse_provenance(std::string_view s) {
  if (s == "oracle") return Provenance::Oracle;
  if (s == "closed_form") return Provenance::ClosedForm;
  if (s == "cross_checked") return Provenance::CrossChecked;
  throw ConfigError("unknown provenance: " + std::string(s));
}

struct ReportWeight {
  Weight lambda_eps;
  std::vector<Rational> nu_alpha;  // lambda over the simple roots
  int multiplicity = 1;            // singular vectors of this weight
  std::int64_t layer_coefficient = 1;  // coefficient in the minimal layer sum

  friend bool operator==(const ReportWeight&, const ReportWeight&) = default;
};

/// Minimal singular vectors of weight kappa Lambda_0 - D_p q delta + lambda.
struct SingularReport {
  LieType type = LieType::A;
  int rank = 0;
  std::string type_label;
  int p = 0;
  int q = 1;
  int dual_coxeter = 0;
  Rational kappa;
  int d_p = 0;
  std::int64_t conformal_weight = 0;
  std::vector<ReportWeight> weights;
  Provenance provenance = Provenance::Oracle;
  bool tie = false;
  std::vector<std::string> notes;

  friend bool operator==(const SingularReport&, const SingularReport&) = default;
};

/// Build a report from a minimal-layer sum. Coefficients must be positive
/// (each weight still carries exactly one singular vector) and every weight
/// strictly shift-dominant.
inline SingularReport assemble(const RootSystem& rs, int p, int q, int d_p, const FormalSum& weights,
                               Provenance provenance) {
  if (p < 2 || q < 1 || std::gcd(p, q) != 1) throw AssemblyError("need p >= 2, q >= 1, gcd(p, q) = 1");
  if (d_p < 1) throw AssemblyError("D_p must be positive");
  if (weights.empty()) throw AssemblyError("no weights to report");

  SingularReport r;
  r.type = rs.type();
  r.rank = rs.rank();
  r.type_label = rs.label();
  r.p = p;
  r.q = q;
  r.dual_coxeter = rs.dual_coxeter();
  r.kappa = LevelParam{p, q}.kappa(rs.dual_coxeter());
  r.d_p = d_p;
  r.conformal_weight = static_cast<std::int64_t>(d_p) * q;
  r.provenance = provenance;

  for (const auto& [lambda, coeff] : weights) {
    if (coeff < 1)
      throw AssemblyError("weight " + lambda.to_string() + " has coefficient " + std::to_string(coeff));
    if (!rs.in_span(lambda)) throw AssemblyError("weight " + lambda.to_string() + " is not in the root span");
    if (e_rho(rs, lambda) != ERhoValue::term(lambda, 1))
      throw AssemblyError("weight " + lambda.to_string() + " is not shift-dominant");
    r.weights.push_back({lambda, to_simple_roots(rs, lambda), 1, coeff});
  }
  std::sort(r.weights.begin(), r.weights.end(),
            [](const ReportWeight& a, const ReportWeight& b) { return a.lambda_eps > b.lambda_eps; });
  return r;
}

inline FormalSum unit_sum(const std::vector<Weight>& weights) {
  FormalSum s;
  for (const auto& w : weights) {
    if (s.coefficient(w) != 0) throw AssemblyError("duplicate weight " + w.to_string());
    s.add(w, 1);
  }
  return s;
}

inline SingularReport assemble(const RootSystem& rs, int p, int q, const ClosedForm& cf) {
  auto r = assemble(rs, p, q, cf.d_p, unit_sum(cf.weights), Provenance::ClosedForm);
  r.tie = cf.tie;
  r.notes = cf.notes;
  r.notes.insert(r.notes.begin(), "case " + cf.case_label);
  return r;
}

inline SingularReport assemble(const RootSystem& rs, int p, int q, const OracleResult& o) {
  return assemble(rs, p, q, o.d_p, o.weights, Provenance::Oracle);
}

enum class Outcome { Match, Mismatch, Inconclusive };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Match: return "match";
    case Outcome::Mismatch: return "mismatch";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// Result of running both routes. On a mismatch the report carries the
/// closed-form answer and the diff fields say where the oracle disagrees.
struct VerificationOutcome {
  Outcome outcome = Outcome::Inconclusive;
  SingularReport report;
  int closed_d_p = 0;
  std::optional<int> oracle_d_p;
  std::vector<Weight> only_closed;  // weights the oracle did not produce
  std::vector<Weight> only_oracle;  // weights the closed form did not list
  std::string message;
};

inline VerificationOutcome verify(const RootSystem& rs, int p, std::optional<int> d_max = std::nullopt,
                                  int q = 1) {
  const ClosedForm cf = closed_form(rs, p);
  VerificationOutcome v;
  v.closed_d_p = cf.d_p;
  v.report = assemble(rs, p, q, cf);

  OracleResult o;
  try {
    o = oracle_find_dp(rs, p, d_max);
  } catch (const SearchExhausted& e) {
    v.outcome = Outcome::Inconclusive;
    v.message = e.what();
    return v;
  }
  v.oracle_d_p = o.d_p;

  std::vector<Weight> closed = cf.weights;
  std::vector<Weight> oracle = o.weights.support();
  std::sort(closed.begin(), closed.end());
  std::sort(oracle.begin(), oracle.end());
  std::set_difference(closed.begin(), closed.end(), oracle.begin(), oracle.end(),
                      std::back_inserter(v.only_closed));
  std::set_difference(oracle.begin(), oracle.end(), closed.begin(), closed.end(),
                      std::back_inserter(v.only_oracle));

  if (o.d_p == cf.d_p && v.only_closed.empty() && v.only_oracle.empty()) {
    v.outcome = Outcome::Match;
    v.report = assemble(rs, p, q, o);
    v.report.provenance = Provenance::CrossChecked;
    v.report.tie = cf.tie;
    v.report.notes = cf.notes;
    v.report.notes.insert(v.report.notes.begin(), "case " + cf.case_label);
    return v;
  }
  v.outcome = Outcome::Mismatch;
  std::string msg = "oracle D_p=" + std::to_string(o.d_p) + " closed D_p=" + std::to_string(cf.d_p);
  for (const auto& w : v.only_oracle) msg += "; oracle only " + w.to_string();
  for (const auto& w : v.only_closed) msg += "; closed only " + w.to_string();
  v.message = msg;
  return v;
}

}  // namespace minsing
