#include <gtest/gtest.h>

#include "minsing/report.hpp"

using namespace minsing;

TEST(SimpleRoots, TypeAExamples) {
  const auto a7 = RootSystem::build(LieType::A, 7);
  const auto c = to_simple_roots(a7, Weight::from_integers({2, 0, 0, 0, 0, 0, 0, -2}));
  EXPECT_EQ(c, std::vector<Rational>(7, Rational(2)));
  const auto a1 = to_simple_roots(a7, a7.simple_roots()[0]);
  EXPECT_EQ(a1, (std::vector<Rational>{1, 0, 0, 0, 0, 0, 0}));
}

TEST(SimpleRoots, PrefixFormulaAgreesWithSolve) {
  for (int r = 1; r <= 9; ++r) {
    const auto rs = RootSystem::build(LieType::A, r);
    for (const auto& a : rs.roots()) {
      const Weight w = 3 * a + rs.theta();
      EXPECT_EQ(to_simple_roots_type_a(w), to_simple_roots(rs, w)) << rs.label() << " " << w;
    }
  }
  EXPECT_THROW(to_simple_roots_type_a(Weight::from_integers({1, 0})), DomainError);
}

TEST(SimpleRoots, RoundTrip) {
  const auto d7 = RootSystem::build(LieType::D, 7);
  const Weight w = Weight::from_integers({3, 2, 2, 2, 1, 0, 0});
  EXPECT_EQ(from_simple_roots(d7, to_simple_roots(d7, w)), w);
  const auto e6 = RootSystem::build(LieType::E6);
  EXPECT_EQ(from_simple_roots(e6, to_simple_roots(e6, e6.theta())), e6.theta());
  EXPECT_THROW(to_simple_roots(e6, Weight::unit(8, 7)), DomainError);
  EXPECT_THROW(from_simple_roots(d7, {1, 2}), DomainError);
}

TEST(Assemble, ConformalWeight) {
  const auto e6 = RootSystem::build(LieType::E6);
  const auto r2 = assemble(e6, 3, 2, closed_form(e6, 3));
  EXPECT_EQ(r2.d_p, 4);
  EXPECT_EQ(r2.conformal_weight, 8);
  EXPECT_EQ(r2.kappa, Rational(-21, 2));
  const auto r1 = assemble(e6, 3, 1, closed_form(e6, 3));
  EXPECT_EQ(r1.conformal_weight, r1.d_p);
  EXPECT_EQ(r1.provenance, Provenance::ClosedForm);
  EXPECT_EQ(r1.notes.front(), "case E6.table");
}

TEST(Assemble, SortedDescending) {
  const auto d4 = RootSystem::build(LieType::D, 4);
  const auto r = assemble(d4, 4, 1, closed_form(d4, 4));
  ASSERT_EQ(r.weights.size(), 3u);
  for (std::size_t i = 1; i < r.weights.size(); ++i) EXPECT_GT(r.weights[i - 1].lambda_eps, r.weights[i].lambda_eps);
}

TEST(Assemble, Errors) {
  const auto a3 = RootSystem::build(LieType::A, 3);
  const Weight theta = a3.theta();
  FormalSum ok;
  ok.add(theta, 1);
  EXPECT_THROW(assemble(a3, 3, 1, 1, FormalSum(), Provenance::Oracle), AssemblyError);
  FormalSum neg;
  neg.add(theta, -1);
  EXPECT_THROW(assemble(a3, 3, 1, 1, neg, Provenance::Oracle), AssemblyError);
  EXPECT_THROW(assemble(a3, 4, 2, 1, ok, Provenance::Oracle), AssemblyError);
  EXPECT_THROW(assemble(a3, 3, 1, 0, ok, Provenance::Oracle), AssemblyError);
  FormalSum not_dominant;
  not_dominant.add(-theta, 1);
  EXPECT_THROW(assemble(a3, 3, 1, 1, not_dominant, Provenance::Oracle), AssemblyError);
  EXPECT_THROW(unit_sum({theta, theta}), AssemblyError);
  EXPECT_NO_THROW(assemble(a3, 3, 1, 1, ok, Provenance::Oracle));
}

TEST(Provenance, Strings) {
  for (auto p : {Provenance::Oracle, Provenance::ClosedForm, Provenance::CrossChecked})
    EXPECT_EQ(parse_provenance(to_string(p)), p);
  EXPECT_THROW(parse_provenance("guess"), ConfigError);
}

TEST(Verify, Examples) {
  const auto e8 = verify(RootSystem::build(LieType::E8), 3, 40);
  EXPECT_EQ(e8.outcome, Outcome::Match);
  EXPECT_EQ(e8.report.d_p, 31);
  EXPECT_EQ(e8.report.provenance, Provenance::CrossChecked);

  const auto a = verify(RootSystem::build(LieType::A, 4), 3);
  EXPECT_EQ(a.outcome, Outcome::Match);
  EXPECT_EQ(a.report.weights.size(), 3u);

  const auto d = verify(RootSystem::build(LieType::D, 4), 5);
  EXPECT_EQ(d.outcome, Outcome::Match);
  EXPECT_EQ(d.report.weights.size(), 3u);
}

TEST(Verify, KnownTableMismatch) {
  const auto v = verify(RootSystem::build(LieType::E6), 8);
  EXPECT_EQ(v.outcome, Outcome::Mismatch);
  EXPECT_EQ(v.closed_d_p, 3);
  ASSERT_TRUE(v.oracle_d_p.has_value());
  EXPECT_EQ(v.report.provenance, Provenance::ClosedForm);
  EXPECT_FALSE(v.message.empty());
  EXPECT_FALSE(v.only_closed.empty() && v.only_oracle.empty() && *v.oracle_d_p == v.closed_d_p);
}

TEST(Verify, SmallSearchCapIsInconclusive) {
  const auto v = verify(RootSystem::build(LieType::E8), 3, 2);
  EXPECT_EQ(v.outcome, Outcome::Inconclusive);
  EXPECT_FALSE(v.oracle_d_p.has_value());
  EXPECT_EQ(v.report.d_p, 31);
}

TEST(Verify, IndependentOfQ) {
  for (auto [rs, p] : {std::pair{RootSystem::build(LieType::E7), 5}, std::pair{RootSystem::build(LieType::A, 4), 3},
                       std::pair{RootSystem::build(LieType::D, 7), 5}}) {
    const auto base = verify(rs, p, std::nullopt, 1);
    for (int q : {2, 3, 7}) {
      if (std::gcd(p, q) != 1) continue;
      const auto v = verify(rs, p, std::nullopt, q);
      EXPECT_EQ(v.outcome, base.outcome);
      EXPECT_EQ(v.report.d_p, base.report.d_p);
      EXPECT_EQ(v.report.weights, base.report.weights);
      EXPECT_EQ(v.report.conformal_weight, static_cast<std::int64_t>(base.report.d_p) * q);
    }
  }
}

TEST(Verify, ReportedWeightsAreDominant) {
  for (int n = 4; n <= 8; ++n) {
    const auto rs = RootSystem::build(LieType::D, n);
    for (int p = 2; p <= 2 * n; ++p)
      for (const auto& w : verify(rs, p).report.weights)
        EXPECT_EQ(e_rho(rs, w.lambda_eps), ERhoValue::term(w.lambda_eps, 1)) << rs.label() << " p=" << p;
  }
}
