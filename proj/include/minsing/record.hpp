#pragma once

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "minsing/report.hpp"

namespace minsing {

inline constexpr const char* kToolVersion = "1.0.0";

/// Flat, serializable view of one computed point. Numbers that may be
/// fractional travel as exact strings ("1/2", "-9/2").
struct OutputRecord {
  struct WeightEntry {
    std::vector<std::string> lambda_eps;
    std::vector<std::string> nu_alpha;
    int multiplicity = 1;
    std::int64_t layer_coefficient = 1;
    friend bool operator==(const WeightEntry&, const WeightEntry&) = default;
  };

  std::string version = kToolVersion;
  std::string type;  // A, D, E6, E7, E8
  int rank = 0;
  std::string type_label;
  int p = 0;
  int q = 1;
  int h_dual = 0;
  std::string kappa;  // exact p/q - h_dual
  std::string mode;   // oracle, closed, verify
  std::optional<int> d_p;
  std::optional<std::int64_t> conformal_weight;
  std::vector<WeightEntry> weights;
  std::string provenance;
  std::string outcome;  // ok, match, mismatch, inconclusive, error
  bool tie = false;
  std::vector<std::string> notes;
  std::optional<int> oracle_d_p;
  std::optional<int> closed_d_p;
  std::vector<std::vector<std::string>> only_oracle;
  std::vector<std::vector<std::string>> only_closed;
  std::string message;
  double elapsed_ms = 0.0;  // excluded from equality

  bool same_content(const OutputRecord& o) const {
    auto a = *this, b = o;
    a.elapsed_ms = b.elapsed_ms = 0.0;
    return a == b;
  }
  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline OutputRecord to_record(const SingularReport& r, std::string mode, std::string outcome) {
  OutputRecord out;
  out.type = std::string(to_string(r.type));
  out.rank = r.rank;
  out.type_label = r.type_label;
  out.p = r.p;
  out.q = r.q;
  out.h_dual = r.dual_coxeter;
  out.kappa = rational_string(r.kappa);
  out.mode = std::move(mode);
  out.d_p = r.d_p;
  out.conformal_weight = r.conformal_weight;
  for (const auto& w : r.weights) {
    OutputRecord::WeightEntry e;
    e.lambda_eps = w.lambda_eps.coord_strings();
    for (const auto& c : w.nu_alpha) e.nu_alpha.push_back(rational_string(c));
    e.multiplicity = w.multiplicity;
    e.layer_coefficient = w.layer_coefficient;
    out.weights.push_back(std::move(e));
  }
  out.provenance = std::string(to_string(r.provenance));
  out.outcome = std::move(outcome);
  out.tie = r.tie;
  out.notes = r.notes;
  return out;
}

inline OutputRecord to_record(const VerificationOutcome& v) {
  OutputRecord out = to_record(v.report, "verify", std::string(to_string(v.outcome)));
  out.closed_d_p = v.closed_d_p;
  out.oracle_d_p = v.oracle_d_p;
  for (const auto& w : v.only_oracle) out.only_oracle.push_back(w.coord_strings());
  for (const auto& w : v.only_closed) out.only_closed.push_back(w.coord_strings());
  out.message = v.message;
  return out;
}

inline void to_json(nlohmann::json& j, const OutputRecord::WeightEntry& w) {
  j = nlohmann::json{{"lambda_eps", w.lambda_eps}, {"nu_alpha", w.nu_alpha}, {"multiplicity", w.multiplicity},
                       {"layer_coefficient", w.layer_coefficient}};
}

inline void from_json(const nlohmann::json& j, OutputRecord::WeightEntry& w) {
  j.at("lambda_eps").get_to(w.lambda_eps);
  j.at("nu_alpha").get_to(w.nu_alpha);
  j.at("multiplicity").get_to(w.multiplicity);
  j.at("layer_coefficient").get_to(w.layer_coefficient);
}

namespace detail {

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> optional_from(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const OutputRecord& r) {
  j = nlohmann::json{{"version", r.version},
                     {"type", r.type},
                     {"rank", r.rank},
                     {"type_label", r.type_label},
                     {"p", r.p},
                     {"q", r.q},
                     {"h_dual", r.h_dual},
                     {"kappa", r.kappa},
                     {"mode", r.mode},
                     {"D_p", detail::optional_json(r.d_p)},
                     {"conformal_weight", detail::optional_json(r.conformal_weight)},
                     {"weights", r.weights},
                     {"provenance", r.provenance},
                     {"outcome", r.outcome},
                     {"tie", r.tie},
                     {"notes", r.notes},
                     {"oracle_D_p", detail::optional_json(r.oracle_d_p)},
                     {"closed_D_p", detail::optional_json(r.closed_d_p)},
                     {"only_oracle", r.only_oracle},
                     {"only_closed", r.only_closed},
                     {"message", r.message},
                     {"elapsed_ms", r.elapsed_ms}};
}

inline void from_json(const nlohmann::json& j, OutputRecord& r) {
  j.at("version").get_to(r.version);
  j.at("type").get_to(r.type);
  j.at("rank").get_to(r.rank);
  j.at("type_label").get_to(r.type_label);
  j.at("p").get_to(r.p);
  j.at("q").get_to(r.q);
  j.at("h_dual").get_to(r.h_dual);
  j.at("kappa").get_to(r.kappa);
  j.at("mode").get_to(r.mode);
  r.d_p = detail::optional_from<int>(j, "D_p");
  r.conformal_weight = detail::optional_from<std::int64_t>(j, "conformal_weight");
  j.at("weights").get_to(r.weights);
  j.at("provenance").get_to(r.provenance);
  j.at("outcome").get_to(r.outcome);
  j.at("tie").get_to(r.tie);
  j.at("notes").get_to(r.notes);
  r.oracle_d_p = detail::optional_from<int>(j, "oracle_D_p");
  r.closed_d_p = detail::optional_from<int>(j, "closed_D_p");
  j.at("only_oracle").get_to(r.only_oracle);
  j.at("only_closed").get_to(r.only_closed);
  j.at("message").get_to(r.message);
  j.at("elapsed_ms").get_to(r.elapsed_ms);
}

inline std::string to_ndjson(const OutputRecord& r) { return nlohmann::json(r).dump(); }

inline OutputRecord parse_ndjson(const std::string& line) {
  return nlohmann::json::parse(line).get<OutputRecord>();
}

namespace detail {

inline std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class T>
std::string optional_string(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace detail

inline const char* csv_header() {
  return "type,rank,p,q,D_p,conformal_weight,weight_index,lambda_eps,nu_alpha,provenance,outcome";
}

/// One CSV line per weight (a single line with empty weight columns when
/// there are none). Coordinates inside a cell are space separated.
inline std::vector<std::string> to_csv_rows(const OutputRecord& r) {
  auto row = [&](const std::string& idx, const std::string& eps, const std::string& alpha) {
    std::vector<std::string> cells{r.type,
                                   std::to_string(r.rank),
                                   std::to_string(r.p),
                                   std::to_string(r.q),
                                   detail::optional_string(r.d_p),
                                   detail::optional_string(r.conformal_weight),
                                   idx,
                                   eps,
                                   alpha,
                                   r.provenance,
                                   r.outcome};
    for (auto& c : cells) c = detail::csv_field(c);
    return detail::join(cells, ",");
  };
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < r.weights.size(); ++i)
    rows.push_back(row(std::to_string(i), detail::join(r.weights[i].lambda_eps, " "),
                       detail::join(r.weights[i].nu_alpha, " ")));
  if (rows.empty()) rows.push_back(row("", "", ""));
  return rows;
}

inline const char* table_header() {
  return "type   p    q    D_p   conf  outcome       lambda (eps)";
}

inline std::string to_table_rows(const OutputRecord& r) {
  std::ostringstream os;
  auto lead = [&](bool first) {
    if (first) {
      os << std::left << std::setw(7) << r.type_label << std::setw(5) << r.p << std::setw(5) << r.q
         << std::setw(6) << detail::optional_string(r.d_p) << std::setw(6)
         << detail::optional_string(r.conformal_weight) << std::setw(14) << r.outcome;
    } else {
      os << std::string(43, ' ');
    }
  };
  if (r.weights.empty()) {
    lead(true);
    os << "-\n";
  }
  for (std::size_t i = 0; i < r.weights.size(); ++i) {
    lead(i == 0);
    os << "(" << detail::join(r.weights[i].lambda_eps, ",") << ")\n";
  }
  if (!r.message.empty()) os << "  " << r.message << "\n";
  return os.str();
}

}  // namespace minsing
