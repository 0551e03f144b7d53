#include <gtest/gtest.h>

#include "minsing/record.hpp"
#include "minsing/report.hpp"

using namespace minsing;

namespace {

OutputRecord e6_record() {
  auto rec = to_record(verify(RootSystem::build(LieType::E6), 3, std::nullopt, 2));
  rec.elapsed_ms = 12.5;
  return rec;
}

}  // namespace

TEST(Record, Fields) {
  const auto rec = e6_record();
  EXPECT_EQ(rec.version, kToolVersion);
  EXPECT_EQ(rec.type, "E6");
  EXPECT_EQ(rec.kappa, "-21/2");
  EXPECT_EQ(rec.mode, "verify");
  EXPECT_EQ(rec.outcome, "match");
  EXPECT_EQ(rec.d_p, 4);
  EXPECT_EQ(rec.conformal_weight, 8);
  EXPECT_EQ(rec.provenance, "cross_checked");
  ASSERT_EQ(rec.weights.size(), 1u);
  EXPECT_EQ(rec.weights[0].lambda_eps,
            (std::vector<std::string>{"1/2", "1/2", "1/2", "1/2", "1/2", "-1/2", "-1/2", "1/2"}));
  EXPECT_EQ(rec.weights[0].nu_alpha, (std::vector<std::string>{"1", "2", "2", "3", "2", "1"}));
}

TEST(Record, JsonRoundTrip) {
  const auto rec = e6_record();
  const auto line = to_ndjson(rec);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  const auto back = parse_ndjson(line);
  EXPECT_EQ(back, rec);

  const auto j = nlohmann::json::parse(line);
  EXPECT_EQ(j.at("D_p"), 4);
  EXPECT_EQ(j.at("oracle_D_p"), 4);
  EXPECT_EQ(j.at("closed_D_p"), 4);
  EXPECT_EQ(j.at("weights").at(0).at("layer_coefficient"), 1);

  auto missing = rec;
  missing.d_p.reset();
  missing.oracle_d_p.reset();
  const auto jm = nlohmann::json(missing);
  EXPECT_TRUE(jm.at("D_p").is_null());
  EXPECT_EQ(parse_ndjson(jm.dump()), missing);
}

TEST(Record, DeterministicApartFromTiming) {
  auto a = e6_record();
  auto b = e6_record();
  b.elapsed_ms = 99.0;
  EXPECT_TRUE(a.same_content(b));
  EXPECT_NE(a, b);
  b.d_p = 5;
  EXPECT_FALSE(a.same_content(b));
}

TEST(Record, MismatchDiff) {
  const auto rec = to_record(verify(RootSystem::build(LieType::E6), 8));
  EXPECT_EQ(rec.outcome, "mismatch");
  EXPECT_EQ(rec.closed_d_p, 3);
  EXPECT_TRUE(rec.oracle_d_p.has_value());
  EXPECT_FALSE(rec.message.empty());
}

TEST(Record, Csv) {
  EXPECT_EQ(std::string(csv_header()),
            "type,rank,p,q,D_p,conformal_weight,weight_index,lambda_eps,nu_alpha,provenance,outcome");
  const auto rows = to_csv_rows(e6_record());
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0], "E6,6,3,2,4,8,0,1/2 1/2 1/2 1/2 1/2 -1/2 -1/2 1/2,1 2 2 3 2 1,cross_checked,match");

  const auto d4 = to_record(assemble(RootSystem::build(LieType::D, 4), 4, 1, closed_form(RootSystem::build(LieType::D, 4), 4)),
                            "closed", "ok");
  EXPECT_EQ(to_csv_rows(d4).size(), 3u);

  OutputRecord empty;
  empty.type = "A";
  empty.message = "boom";
  EXPECT_EQ(to_csv_rows(empty).size(), 1u);
}

TEST(Record, Table) {
  const auto text = to_table_rows(e6_record());
  EXPECT_NE(text.find("E6"), std::string::npos);
  EXPECT_NE(text.find("match"), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
}
