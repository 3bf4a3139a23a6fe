#include "bmat/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "bmat/bounds.hpp"
#include "bmat/error.hpp"
#include "bmat/generators.hpp"
#include "bmat/io.hpp"
#include "bmat/lcp.hpp"
#include "bmat/oracle.hpp"
#include "bmat/report.hpp"
#include "bmat/reproduce.hpp"

namespace bmat {
namespace {

constexpr std::uint64_t kDefaultSeed = 20240601;

std::uint64_t DefaultSeed() {
  if (const char* env = std::getenv("BMAT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // Fall through to the built-in seed on a malformed value.
    }
  }
  return kDefaultSeed;
}

std::string Short(double v) { return fmt::format("{:.6g}", v); }

std::string VectorText(std::span<const double> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + Short(v[i]);
  return s + ")";
}

int ExitFor(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kNotBMatrix:
    case ErrorKind::kNotSdd:
    case ErrorKind::kNotSddMMatrix:
      return kExitClassification;
    case ErrorKind::kParse:
    case ErrorKind::kNonFiniteEntry:
    case ErrorKind::kParameterOutOfRange:
    case ErrorKind::kSampleBudgetExceeded:
      return kExitParse;
    case ErrorKind::kDimensionMismatch:
    case ErrorKind::kDimensionTooLarge:
    case ErrorKind::kDimensionTooSmall:
      return kExitDimension;
    case ErrorKind::kSingularMatrix:
    case ErrorKind::kNoSolutionFound:
      return kExitClassification;
  }
  return kExitParse;
}

std::string DescribeViolation(const SquareMatrix& m, const BMatrixViolation& v) {
  const std::size_t n = m.size();
  if (v.kind == BMatrixViolation::Kind::kRowSumNotPositive) {
    return fmt::format("row {}: row sum {} is not positive", v.row + 1, Short(v.row_sum));
  }
  return fmt::format("row {}: row mean {} does not exceed m({},{}) = {}", v.row + 1,
                     Short(v.row_sum / static_cast<double>(n)), v.row + 1, *v.column + 1,
                     Short(v.entry));
}

struct CheckOptions {
  std::string path;
  double tol = kDefaultTol;
};

int CmdCheck(const CheckOptions& o, std::ostream& out) {
  const SquareMatrix m = read_matrix_file(o.path);
  const auto violation = find_b_matrix_violation(m, o.tol);
  const BPlusSplit split = split_b_plus(m);
  const auto sdd_row = find_sdd_violation(split.b_plus, o.tol);
  bool diag_positive = true;
  for (std::size_t i = 0; i < m.size(); ++i) diag_positive = diag_positive && split.b_plus(i, i) > 0;

  out << fmt::format("matrix: {} (n = {})\n", o.path, m.size());
  if (violation) {
    out << "B-matrix: no (" << DescribeViolation(m, *violation) << ")\n";
  } else {
    out << "B-matrix: yes\n";
  }
  if (sdd_row) {
    out << fmt::format("B+ SDD: no (row {})\n", *sdd_row + 1);
  } else {
    out << fmt::format("B+ SDD: yes{}\n", diag_positive ? "" : " (but diagonal not positive)");
  }
  if (m.size() <= kMaxPMatrixDimension) {
    out << "P-matrix: " << (is_p_matrix_bruteforce(m) ? "yes" : "no") << "\n";
  } else {
    out << fmt::format("P-matrix: not checked (n > {})\n", kMaxPMatrixDimension);
  }
  return violation ? kExitClassification : kExitOk;
}

struct OracleOptions {
  std::size_t grid_steps = 4;
  std::size_t random_samples = 0;
  std::optional<std::uint64_t> seed;
  bool no_vertices = false;

  OracleConfig Config() const {
    OracleConfig cfg;
    cfg.grid_steps = grid_steps;
    cfg.include_grid = grid_steps > 0;
    cfg.include_vertices = !no_vertices;
    cfg.random_samples = random_samples;
    cfg.rng_seed = seed.value_or(DefaultSeed());
    return cfg;
  }
};

struct BoundsOptions {
  std::string path;
  std::string format = "text";
  double tol = kDefaultTol;
  bool with_oracle = false;
  OracleOptions oracle;
};

int CmdBounds(const BoundsOptions& o, std::ostream& out) {
  const SquareMatrix m = read_matrix_file(o.path);
  const BoundQuantities q = compute_bound_quantities(split_b_plus(m), o.tol);
  std::optional<OracleResult> oracle;
  if (o.with_oracle) oracle = sample_max_norm(m, o.oracle.Config(), o.tol);
  const BoundReportDocument doc = make_report(o.path, m, q, oracle);
  if (o.format == "json") {
    out << format_json(doc);
  } else if (o.format == "csv") {
    out << format_csv(doc);
  } else {
    out << format_text(doc);
  }
  return doc.oracle_consistent() ? kExitOk : kExitSoundness;
}

struct VerifyOptions {
  std::string path;
  double tol = kDefaultTol;
  OracleOptions oracle;
};

int CmdVerify(const VerifyOptions& o, std::ostream& out) {
  const SquareMatrix m = read_matrix_file(o.path);
  const BoundQuantities q = compute_bound_quantities(split_b_plus(m), o.tol);
  const OracleResult r = sample_max_norm(m, o.oracle.Config(), o.tol);

  out << fmt::format("oracle: {} samples, max ||(I-D+DM)^-1||_inf = {} at d = {}\n",
                     r.samples_evaluated, Short(r.max_norm_found),
                     VectorText(r.argmax_d.values()));
  if (r.vertices_skipped) {
    out << fmt::format("warning: vertex enumeration skipped for n > {}\n", kMaxVertexDimension);
  }
  out << fmt::format("{:<8} {:>14} {:>14}\n", "bound", "value", "slack");
  bool sound = true;
  for (const auto& [name, value] : {std::pair{"gep", q.bound_gep}, std::pair{"li", q.bound_li},
                                    std::pair{"new", q.bound_new}}) {
    const double slack = value - r.max_norm_found;
    sound = sound && slack >= -1e-9;
    out << fmt::format("{:<8} {:>14} {:>14}\n", name, Short(value), Short(slack));
  }
  out << "status: " << (sound ? "sound" : "VIOLATION") << "\n";
  return sound ? kExitOk : kExitSoundness;
}

struct LcpOptions {
  std::string matrix_path;
  std::string q_path;
  std::string x_path;
  double tol = kDefaultTol;
};

int CmdLcp(const LcpOptions& o, std::ostream& out) {
  SquareMatrix m = read_matrix_file(o.matrix_path);
  Vector q = read_vector_file(o.q_path);
  if (!is_b_matrix(m, o.tol)) {
    throw Error(ErrorKind::kNotBMatrix, "the LCP command requires a B-matrix");
  }
  const LcpInstance inst(std::move(m), std::move(q));
  const LcpSolution sol = solve_enumeration(inst);
  out << "x* = " << VectorText(sol.x_star) << "\n";
  out << "w* = " << VectorText(sol.w_star) << "\n";
  if (!o.x_path.empty()) {
    const Vector x = read_vector_file(o.x_path);
    if (x.size() != inst.size()) {
      throw Error(ErrorKind::kDimensionMismatch,
                  fmt::format("x has length {}, expected {}", x.size(), inst.size()));
    }
    const double bound = compute_bound_new(split_b_plus(inst.m()), o.tol);
    const ErrorBoundCheck c = validate_error_bound(inst, x, bound);
    out << fmt::format("bound_new = {}\n", Short(bound));
    out << fmt::format("lhs = {}, rhs = {}, holds = {}\n", Short(c.lhs), Short(c.rhs),
                       c.holds ? "true" : "false");
    if (!c.holds) return kExitSoundness;
  }
  return kExitOk;
}

struct GenOptions {
  std::string family;
  double k = 1.0;
  double a = 0.8;
  std::size_t n = 4;
  std::optional<std::uint64_t> seed;
  bool near_singular = false;
  std::string output;
};

int CmdGen(const GenOptions& o, std::ostream& out) {
  FamilySpec spec;
  if (o.family == "example1") {
    spec.family = Family::kExample1;
  } else if (o.family == "example2") {
    spec.family = Family::kExample2;
  } else {
    spec.family = Family::kRandomB;
  }
  spec.k = o.k;
  spec.a = o.a;
  spec.n = o.n;
  spec.seed = o.seed.value_or(DefaultSeed());
  spec.near_singular = o.near_singular;
  const SquareMatrix m = make_matrix(spec);
  if (o.output.empty()) {
    write_matrix(out, m);
  } else {
    std::ofstream file(o.output);
    if (!file) throw ParseError(0, fmt::format("cannot write '{}'", o.output));
    write_matrix(file, m);
  }
  return kExitOk;
}

int CmdReproduce(std::ostream& out) {
  const auto rows = reproduce_examples();
  out << fmt::format("{:<10} {:<12} {:>10} {:>10} {:>10}   {:<26} {:<8} {}\n", "example",
                     "params", "gep", "li", "new", "published (gep|li|new)", "cond", "status");
  bool all = true;
  for (const auto& r : rows) {
    const bool ok = r.matches();
    all = all && ok;
    const std::string cond = r.conditions.cond_i ? "(i)" : r.conditions.cond_ii ? "(ii)" : "-";
    out << fmt::format("{:<10} {:<12} {:>10.4f} {:>10.4f} {:>10.4f}   {:<26} {:<8} {}\n",
                       r.label, r.parameters, r.computed.bound_gep, r.computed.bound_li,
                       r.computed.bound_new,
                       fmt::format("{:.4f}|{:.4f}|{:.4f}", r.expected_gep, r.expected_li,
                                   r.expected_new),
                       cond, ok ? "ok" : "MISMATCH");
  }
  return all ? kExitOk : kExitSoundness;
}

void AddOracleFlags(CLI::App* cmd, OracleOptions& o) {
  cmd->add_option("--grid-steps", o.grid_steps, "Grid points per axis minus one (0 disables)")
      ->capture_default_str();
  cmd->add_option("--random-samples", o.random_samples, "Uniform random points in the d-cube")
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "RNG seed (default: $BMAT_SEED or built-in)");
  cmd->add_flag("--no-vertices", o.no_vertices, "Skip the 2^n cube vertices");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Error-bound constants for linear complementarity problems with B-matrices",
               "bmat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Classify a matrix (B-matrix, SDD B+, P-matrix)");
  check_cmd->add_option("matrix", check.path, "Matrix file")->required();
  check_cmd->add_option("--tol", check.tol, "Strictness margin")->capture_default_str();

  BoundsOptions bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Compute all quantities and the three bounds");
  bounds_cmd->add_option("matrix", bounds.path, "Matrix file")->required();
  bounds_cmd->add_option("--format", bounds.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  bounds_cmd->add_option("--tol", bounds.tol, "Strictness margin")->capture_default_str();
  bounds_cmd->add_flag("--oracle", bounds.with_oracle, "Attach a sampled lower estimate");
  AddOracleFlags(bounds_cmd, bounds.oracle);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the bounds against sampled norms");
  verify_cmd->add_option("matrix", verify.path, "Matrix file")->required();
  verify_cmd->add_option("--tol", verify.tol, "Strictness margin")->capture_default_str();
  AddOracleFlags(verify_cmd, verify.oracle);

  LcpOptions lcp;
  auto* lcp_cmd = app.add_subcommand("lcp", "Solve LCP(M, q) and check the error bound");
  lcp_cmd->add_option("matrix", lcp.matrix_path, "Matrix file")->required();
  lcp_cmd->add_option("q", lcp.q_path, "Vector file")->required();
  lcp_cmd->add_option("--x", lcp.x_path, "Approximate solution to certify");
  lcp_cmd->add_option("--tol", lcp.tol, "Strictness margin")->capture_default_str();

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a matrix from one of the families");
  gen_cmd->add_option("family", gen.family, "Family")
      ->required()
      ->check(CLI::IsMember({"example1", "example2", "random"}));
  gen_cmd->add_option("--k", gen.k, "Family parameter k")->capture_default_str();
  gen_cmd->add_option("--a", gen.a, "Family parameter a (example2)")->capture_default_str();
  gen_cmd->add_option("--n", gen.n, "Dimension (random)")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Seed (random; default: $BMAT_SEED or built-in)");
  gen_cmd->add_flag("--near-singular", gen.near_singular, "Use margin 1e-3 (random)");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  app.add_subcommand("reproduce", "Recompute the published comparison table");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (*check_cmd) return CmdCheck(check, out);
    if (*bounds_cmd) return CmdBounds(bounds, out);
    if (*verify_cmd) return CmdVerify(verify, out);
    if (*lcp_cmd) return CmdLcp(lcp, out);
    if (*gen_cmd) return CmdGen(gen, out);
    return CmdReproduce(out);
  } catch (const Error& e) {
    err << "error: " << ErrorKindName(e.kind()) << ": " << e.what() << "\n";
    return ExitFor(e);
  }
}

}  // namespace bmat
