#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bmat/bounds.hpp"
#include "bmat/oracle.hpp"

namespace bmat {

inline constexpr const char* kToolVersion = "0.1.0";

struct OracleSummary {
  double max_norm_found = 0.0;
  std::vector<double> argmax_d;
  std::size_t samples = 0;
};

// Everything `bmat bounds` reports for one matrix. Non-finite bounds are
// written to JSON as null and read back as +inf.
struct BoundReportDocument {
  std::string matrix_source;
  std::size_t n = 0;
  bool is_b = false;
  double beta = 0.0;
  std::vector<double> beta_bar;
  std::vector<double> beta_hat;
  double alpha = 0.0;
  double beta_hat_min = 0.0;
  double bound_gep = 0.0;
  double bound_li = 0.0;
  double bound_new = 0.0;
  bool cond_i = false;
  bool cond_ii = false;
  std::optional<OracleSummary> oracle;
  std::string timestamp;
  std::string tool_version = kToolVersion;

  // oracle.max_norm_found <= min of the three bounds + 1e-9; true when no
  // oracle section is present.
  bool oracle_consistent() const;
};

BoundReportDocument make_report(std::string matrix_source, const SquareMatrix& m,
                                const BoundQuantities& q,
                                const std::optional<OracleResult>& oracle);

// Current UTC time, ISO-8601 with seconds precision.
std::string utc_timestamp();

nlohmann::ordered_json to_json(const BoundReportDocument& doc);
BoundReportDocument report_from_json(const nlohmann::ordered_json& j);

std::string format_json(const BoundReportDocument& doc);
std::string format_csv(const BoundReportDocument& doc);
std::string format_text(const BoundReportDocument& doc);

}  // namespace bmat
