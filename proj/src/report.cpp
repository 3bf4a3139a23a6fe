#include "bmat/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <utility>

#include <fmt/chrono.h>
#include <fmt/core.h>
#include <fmt/format.h>

namespace bmat {
namespace {

using Json = nlohmann::ordered_json;

Json Number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

double ReadNumber(const Json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

Json NumberArray(const std::vector<double>& v) {
  Json arr = Json::array();
  for (double x : v) arr.push_back(Number(x));
  return arr;
}

std::vector<double> ReadArray(const Json& j) {
  std::vector<double> v;
  for (const auto& x : j) v.push_back(ReadNumber(x));
  return v;
}

std::string Short(double v) { return fmt::format("{:.6g}", v); }

std::string ShortList(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + Short(v[i]);
  return s;
}

}  // namespace

bool BoundReportDocument::oracle_consistent() const {
  if (!oracle) return true;
  return oracle->max_norm_found <= std::min({bound_gep, bound_li, bound_new}) + 1e-9;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(now));
}

BoundReportDocument make_report(std::string matrix_source, const SquareMatrix& m,
                                const BoundQuantities& q,
                                const std::optional<OracleResult>& oracle) {
  const SharpnessConditions c = check_sharpness_conditions(q);
  BoundReportDocument doc;
  doc.matrix_source = std::move(matrix_source);
  doc.n = m.size();
  doc.is_b = is_b_matrix(m);
  doc.beta = q.beta;
  doc.beta_bar = q.beta_bar;
  doc.beta_hat = q.beta_hat;
  doc.alpha = q.alpha;
  doc.beta_hat_min = q.beta_hat_min;
  doc.bound_gep = q.bound_gep;
  doc.bound_li = q.bound_li;
  doc.bound_new = q.bound_new;
  doc.cond_i = c.cond_i;
  doc.cond_ii = c.cond_ii;
  if (oracle) {
    doc.oracle = OracleSummary{oracle->max_norm_found, oracle->argmax_d.values(),
                               oracle->samples_evaluated};
  }
  doc.timestamp = utc_timestamp();
  return doc;
}

nlohmann::ordered_json to_json(const BoundReportDocument& doc) {
  Json j;
  j["matrix_source"] = doc.matrix_source;
  j["n"] = doc.n;
  j["is_b"] = doc.is_b;
  j["beta"] = Number(doc.beta);
  j["beta_bar"] = NumberArray(doc.beta_bar);
  j["beta_hat"] = NumberArray(doc.beta_hat);
  j["alpha"] = Number(doc.alpha);
  j["beta_hat_min"] = Number(doc.beta_hat_min);
  j["bound_gep"] = Number(doc.bound_gep);
  j["bound_li"] = Number(doc.bound_li);
  j["bound_new"] = Number(doc.bound_new);
  j["theorem5"] = {{"cond_i", doc.cond_i}, {"cond_ii", doc.cond_ii}};
  if (doc.oracle) {
    j["oracle"] = {{"max_norm_found", Number(doc.oracle->max_norm_found)},
                   {"argmax_d", NumberArray(doc.oracle->argmax_d)},
                   {"samples", doc.oracle->samples}};
  }
  j["timestamp"] = doc.timestamp;
  j["tool_version"] = doc.tool_version;
  return j;
}

BoundReportDocument report_from_json(const nlohmann::ordered_json& j) {
  BoundReportDocument doc;
  doc.matrix_source = j.at("matrix_source").get<std::string>();
  doc.n = j.at("n").get<std::size_t>();
  doc.is_b = j.at("is_b").get<bool>();
  doc.beta = ReadNumber(j.at("beta"));
  doc.beta_bar = ReadArray(j.at("beta_bar"));
  doc.beta_hat = ReadArray(j.at("beta_hat"));
  doc.alpha = ReadNumber(j.at("alpha"));
  doc.beta_hat_min = ReadNumber(j.at("beta_hat_min"));
  doc.bound_gep = ReadNumber(j.at("bound_gep"));
  doc.bound_li = ReadNumber(j.at("bound_li"));
  doc.bound_new = ReadNumber(j.at("bound_new"));
  doc.cond_i = j.at("theorem5").at("cond_i").get<bool>();
  doc.cond_ii = j.at("theorem5").at("cond_ii").get<bool>();
  if (j.contains("oracle")) {
    const auto& o = j.at("oracle");
    doc.oracle = OracleSummary{ReadNumber(o.at("max_norm_found")), ReadArray(o.at("argmax_d")),
                               o.at("samples").get<std::size_t>()};
  }
  doc.timestamp = j.at("timestamp").get<std::string>();
  doc.tool_version = j.at("tool_version").get<std::string>();
  return doc;
}

std::string format_json(const BoundReportDocument& doc) { return to_json(doc).dump(2) + "\n"; }

std::string format_csv(const BoundReportDocument& doc) {
  // Numbers use the same shortest round-trip form as JSON.
  std::string out = "field,index,value\n";
  auto scalar = [&](const char* name, const std::string& v) {
    out += fmt::format("{},,{}\n", name, v);
  };
  auto vec = [&](const char* name, const std::vector<double>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) out += fmt::format("{},{},{}\n", name, i + 1, v[i]);
  };
  scalar("matrix_source", doc.matrix_source);
  scalar("n", fmt::format("{}", doc.n));
  scalar("is_b", doc.is_b ? "true" : "false");
  scalar("beta", fmt::format("{}", doc.beta));
  vec("beta_bar", doc.beta_bar);
  vec("beta_hat", doc.beta_hat);
  scalar("alpha", fmt::format("{}", doc.alpha));
  scalar("beta_hat_min", fmt::format("{}", doc.beta_hat_min));
  scalar("bound_gep", fmt::format("{}", doc.bound_gep));
  scalar("bound_li", fmt::format("{}", doc.bound_li));
  scalar("bound_new", fmt::format("{}", doc.bound_new));
  scalar("theorem5.cond_i", doc.cond_i ? "true" : "false");
  scalar("theorem5.cond_ii", doc.cond_ii ? "true" : "false");
  if (doc.oracle) {
    scalar("oracle.max_norm_found", fmt::format("{}", doc.oracle->max_norm_found));
    vec("oracle.argmax_d", doc.oracle->argmax_d);
    scalar("oracle.samples", fmt::format("{}", doc.oracle->samples));
  }
  scalar("timestamp", doc.timestamp);
  scalar("tool_version", doc.tool_version);
  return out;
}

std::string format_text(const BoundReportDocument& doc) {
  std::string out;
  out += fmt::format("matrix:        {}\n", doc.matrix_source);
  out += fmt::format("n:             {}\n", doc.n);
  out += fmt::format("B-matrix:      {}\n", doc.is_b ? "yes" : "no");
  out += fmt::format("beta:          {}\n", Short(doc.beta));
  out += fmt::format("beta_bar:      {}\n", ShortList(doc.beta_bar));
  out += fmt::format("beta_hat:      {}\n", ShortList(doc.beta_hat));
  out += fmt::format("alpha:         {}\n", Short(doc.alpha));
  out += fmt::format("beta_hat_min:  {}\n", Short(doc.beta_hat_min));
  out += fmt::format("bound_gep:     {}\n", Short(doc.bound_gep));
  out += fmt::format("bound_li:      {}\n", Short(doc.bound_li));
  out += fmt::format("bound_new:     {}\n", Short(doc.bound_new));
  out += fmt::format("cond_i:        {}\n", doc.cond_i ? "yes" : "no");
  out += fmt::format("cond_ii:       {}\n", doc.cond_ii ? "yes" : "no");
  if (doc.oracle) {
    out += fmt::format("oracle max:    {} at d = ({}) over {} samples\n",
                       Short(doc.oracle->max_norm_found), ShortList(doc.oracle->argmax_d),
                       doc.oracle->samples);
  }
  return out;
}

}  // namespace bmat
