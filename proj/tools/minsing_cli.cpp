// minsing: minimal singular-vector weights of V^kappa(g) for simply-laced g.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "minsing/minsing.hpp"
#include "minsing/record.hpp"

namespace {

using namespace minsing;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitUsage = 64;

struct Options {
  std::vector<std::string> types{"A"};
  int rank = 0;
  int rank_min = 0;
  int rank_max = 0;
  int p = 0;
  int p_min = 2;
  int p_max = 0;
  int q = 1;
  std::string mode = "verify";
  std::string format = "table";
  std::optional<int> d_max;
  unsigned jobs = 1;
  std::string out;
};

struct Point {
  const RootSystem* rs;
  int p;
};

// --dmax wins over MINSING_DMAX.
std::optional<int> resolve_d_max(const Options& o) {
  if (o.d_max) return o.d_max;
  const char* env = std::getenv("MINSING_DMAX");
  if (!env || !*env) return std::nullopt;
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(env, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != std::string(env).size() || v < 1) throw ConfigError("MINSING_DMAX must be a positive integer");
  return v;
}

OutputRecord error_record(const RootSystem& rs, int p, int q, const std::string& mode, const std::string& outcome,
                          const std::string& message) {
  OutputRecord r;
  r.type = std::string(to_string(rs.type()));
  r.rank = rs.rank();
  r.type_label = rs.label();
  r.p = p;
  r.q = q;
  r.h_dual = rs.dual_coxeter();
  if (p >= 1 && q >= 1) r.kappa = rational_string(Rational(p, q) - rs.dual_coxeter());
  r.mode = mode;
  r.outcome = outcome;
  r.message = message;
  return r;
}

OutputRecord compute(const RootSystem& rs, int p, int q, const std::string& mode, std::optional<int> d_max) {
  const auto start = std::chrono::steady_clock::now();
  OutputRecord rec;
  try {
    if (mode == "closed") {
      rec = to_record(assemble(rs, p, q, closed_form(rs, p)), mode, "ok");
    } else if (mode == "oracle") {
      try {
        rec = to_record(assemble(rs, p, q, oracle_find_dp(rs, p, d_max)), mode, "ok");
      } catch (const SearchExhausted& e) {
        rec = error_record(rs, p, q, mode, "inconclusive", e.what());
      }
    } else {
      rec = to_record(verify(rs, p, d_max, q));
    }
  } catch (const std::exception& e) {
    rec = error_record(rs, p, q, mode, "error", e.what());
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

class Writer {
 public:
  Writer(std::ostream& os, std::string format) : os_(os), format_(std::move(format)) {}

  void header() {
    if (format_ == "csv") os_ << csv_header() << "\n";
    if (format_ == "table") os_ << table_header() << "\n";
  }
  void write(const OutputRecord& r) {
    if (format_ == "json") {
      os_ << to_ndjson(r) << "\n";
    } else if (format_ == "csv") {
      for (const auto& line : to_csv_rows(r)) os_ << line << "\n";
    } else {
      os_ << to_table_rows(r);
    }
  }

 private:
  std::ostream& os_;
  std::string format_;
};

int exit_code_for(const std::string& outcome) {
  if (outcome == "mismatch") return kExitMismatch;
  if (outcome == "inconclusive") return kExitInconclusive;
  if (outcome == "error") return kExitUsage;
  return kExitOk;
}

int rank_for(LieType t, int requested) {
  if (is_exceptional(t)) return exceptional_rank(t);
  if (requested < 1) throw ConfigError("--rank is required for type " + std::string(to_string(t)));
  return requested;
}

int default_p_max(const RootSystem& rs) {
  switch (rs.type()) {
    case LieType::A: return 2 * (rs.rank() + 1);
    case LieType::D: return 4 * rs.rank();
    default: return rs.dual_coxeter() + 2;
  }
}

int run_query(const Options& o, std::ostream& os) {
  const auto d_max = resolve_d_max(o);
  if (o.types.size() != 1) throw ConfigError("query takes exactly one --type");
  const LieType t = parse_lie_type(o.types.front());
  const auto rs = RootSystem::build(t, rank_for(t, o.rank));
  LevelParam::make(o.p, o.q);
  const OutputRecord rec = compute(rs, o.p, o.q, o.mode, d_max);
  Writer w(os, o.format);
  w.header();
  w.write(rec);
  if (rec.outcome == "error") std::cerr << "error: " << rec.message << "\n";
  return exit_code_for(rec.outcome);
}

int run_sweep(const Options& o, std::ostream& os) {
  const auto d_max = resolve_d_max(o);
  if (o.q < 1) throw DomainError("q must be >= 1");

  std::vector<std::unique_ptr<RootSystem>> systems;
  std::vector<Point> points;
  for (const auto& name : o.types) {
    const LieType t = parse_lie_type(name);
    std::vector<int> ranks;
    if (is_exceptional(t)) {
      ranks.push_back(exceptional_rank(t));
    } else {
      const int lo = o.rank_min > 0 ? o.rank_min : rank_for(t, o.rank);
      const int hi = o.rank_max > 0 ? o.rank_max : lo;
      if (hi < lo) throw ConfigError("empty rank range");
      for (int r = lo; r <= hi; ++r) ranks.push_back(r);
    }
    for (int r : ranks) {
      systems.push_back(std::make_unique<RootSystem>(RootSystem::build(t, r)));
      const RootSystem* rs = systems.back().get();
      const int hi = o.p_max > 0 ? o.p_max : default_p_max(*rs);
      if (hi < o.p_min || o.p_min < 2) throw ConfigError("empty or invalid p range");
      for (int p = o.p_min; p <= hi; ++p) points.push_back({rs, p});
    }
  }

  std::vector<OutputRecord> records(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < points.size();) {
      const auto& pt = points[i];
      if (std::gcd(pt.p, o.q) != 1)
        records[i] = error_record(*pt.rs, pt.p, o.q, o.mode, "error", "gcd(p, q) != 1");
      else
        records[i] = compute(*pt.rs, pt.p, o.q, o.mode, d_max);
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(points.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n_threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::map<std::string, int> counts;
  Writer w(os, o.format);
  w.header();
  for (const auto& r : records) {
    w.write(r);
    ++counts[r.outcome];
  }
  std::ostream& summary = o.format == "table" ? os : std::cerr;
  summary << "summary: points=" << records.size();
  for (const auto* key : {"ok", "match", "mismatch", "inconclusive", "error"}) summary << " " << key << "=" << counts[key];
  summary << "\n";
  return counts["mismatch"] > 0 ? kExitMismatch : kExitOk;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--q", o.q, "Denominator q of kappa + h_dual = p/q")->check(CLI::PositiveNumber);
  cmd->add_option("--mode", o.mode, "oracle, closed or verify")
      ->check(CLI::IsMember({"oracle", "closed", "verify"}));
  cmd->add_option("--format", o.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--dmax", o.d_max, "Layer search cap (overrides MINSING_DMAX)")->check(CLI::PositiveNumber);
  cmd->add_option("--out", o.out, "Write records to FILE instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal singular-vector weights of universal affine vertex algebras"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  Options o;

  auto* query = app.add_subcommand("query", "Compute one (type, rank, p, q) point");
  query->add_option("--type", o.types, "A, D, E6, E7 or E8")
      ->expected(1)
      ->required()
      ->check(CLI::IsMember({"A", "D", "E6", "E7", "E8"}));
  query->add_option("--rank", o.rank, "Rank (ignored for E types; A rank N is sl_{N+1})");
  query->add_option("--p", o.p, "Numerator p of kappa + h_dual = p/q")->required();
  add_common(query, o);

  auto* sweep = app.add_subcommand("sweep", "Run a grid of points");
  sweep->add_option("--type", o.types, "One or more of A, D, E6, E7, E8")
      ->required()
      ->check(CLI::IsMember({"A", "D", "E6", "E7", "E8"}));
  sweep->add_option("--rank", o.rank, "Single rank for A/D");
  sweep->add_option("--rank-min", o.rank_min, "Lowest rank for A/D");
  sweep->add_option("--rank-max", o.rank_max, "Highest rank for A/D");
  sweep->add_option("--p-min", o.p_min, "Lowest p (default 2)");
  sweep->add_option("--p-max", o.p_max, "Highest p (default 2n for A, 4n for D, h_dual+2 for E)");
  sweep->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_common(sweep, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    std::ofstream file;
    if (!o.out.empty()) {
      file.open(o.out);
      if (!file) throw ConfigError("cannot open " + o.out);
    }
    std::ostream& os = o.out.empty() ? std::cout : file;
    return query->parsed() ? run_query(o, os) : run_sweep(o, os);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
