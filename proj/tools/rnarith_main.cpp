// Copyright 2026 The rnarith Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Subcommands: eval, walk, lattice, grain,
// apparatus, qm, limit, oracle-check, figure. All outputs are deterministic:
// identical command lines produce identical bytes. Exact values are always
// emitted as fraction strings next to grid literals; no floating point
// appears anywhere. Exit codes: 0 success, 2 usage, 3 validation, 4
// internal. RN_ARITH_CAP bounds enumeration sizes (default 1000000).

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rnarith/arithmetic.hpp"
#include "rnarith/expr.hpp"
#include "rnarith/lattice.hpp"
#include "rnarith/limit.hpp"
#include "rnarith/measurement.hpp"
#include "rnarith/ordering.hpp"
#include "rnarith/qm.hpp"

namespace {

using namespace rnarith;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInternal = 4;

std::uint64_t enumeration_cap() {
  if (const char* raw = std::getenv("RN_ARITH_CAP")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && parsed > 0) return parsed;
    throw DomainError(Errc::UsageError,
                      "RN_ARITH_CAP must be a positive integer");
  }
  return 1'000'000;
}

// Common grid flags shared by every subcommand.
struct ParamFlags {
  int k = 2;
  int n = 2;
  std::string grid = "sym";
  std::string round = "trunc";

  GridParams params() const {
    return parse_params("k=" + std::to_string(k) + ",n=" + std::to_string(n) +
                        ",grid=" + grid + ",round=" + round);
  }
};

void add_param_flags(CLI::App* cmd, ParamFlags& flags) {
  cmd->add_option("--k", flags.k, "number base (>= 2)");
  cmd->add_option("--n", flags.n, "half-length n; mantissa has 2n digits");
  cmd->add_option("--grid", flags.grid, "grid mode: sym or free")
      ->check(CLI::IsMember({"sym", "free"}));
  cmd->add_option("--round", flags.round, "round mode: trunc, half-up or up")
      ->check(CLI::IsMember({"trunc", "half-up", "up"}));
}

struct OutputTarget {
  std::string path;  // empty = stdout

  void write(const std::string& bytes) const {
    if (path.empty()) {
      std::cout << bytes;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      throw DomainError(Errc::UsageError, "cannot open output file " + path);
    }
    file << bytes;
  }
};

// Input values for grain/apparatus: decimal, fraction "p/q", or base-k
// fixed-point when --kary is set.
Rational parse_value_arg(const std::string& text, bool kary, int base) {
  if (kary) return outcome_value(text, base);
  return parse_rational_text(text);
}

std::string csv_escape(const std::string& field) {
  // No emitted field currently contains commas or quotes; keep the hook.
  return field;
}

class CsvBuilder {
 public:
  explicit CsvBuilder(const std::vector<std::string>& header) {
    append_row(header);
  }

  void append_row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ += ',';
      out_ += csv_escape(fields[i]);
    }
    out_ += '\n';
  }

  const std::string& str() const { return out_; }

 private:
  std::string out_;
};

// --- eval -------------------------------------------------------------------

int run_eval(const ParamFlags& flags, const std::string& expr,
             const std::string& format, const OutputTarget& out) {
  const GridParams params = flags.params();
  const RnNumber result = eval_expression(expr, params);
  if (format == "json") {
    ordered_json doc;
    doc["literal"] = to_literal(result);
    doc["value"] = fraction_str(value_of(result));
    doc["params"] = params_str(params);
    out.write(doc.dump() + "\n");
  } else {
    out.write(to_literal(result) + "\n");
  }
  return kExitOk;
}

// --- walk -------------------------------------------------------------------

int run_walk(const ParamFlags& flags, const std::string& from, long long steps,
             const OutputTarget& out) {
  const GridParams params = flags.params();
  RnNumber x = parse_literal(from, params);
  const std::uint64_t cap = enumeration_cap();
  const std::uint64_t count =
      steps < 0 ? static_cast<std::uint64_t>(-steps) : static_cast<std::uint64_t>(steps);
  if (count + 1 > cap) {
    throw DomainError(Errc::WindowTooLarge, "walk longer than RN_ARITH_CAP");
  }

  CsvBuilder csv({"index", "literal", "value", "spacing", "jumped"});
  bool jumped = false;
  for (std::uint64_t i = 0;; ++i) {
    csv.append_row({std::to_string(i), to_literal(x),
                    fraction_str(value_of(x)), fraction_str(spacing(x)),
                    jumped ? "true" : "false"});
    if (i == count) break;
    const StepResult step = steps >= 0 ? succ(x) : pred(x);
    x = step.next;
    jumped = step.jumped;
  }
  out.write(csv.str());
  return kExitOk;
}

// --- lattice ----------------------------------------------------------------

Window window_from(long long e_min, long long e_max, const std::string& signs,
                   bool include_zero) {
  Window window;
  window.e_lo = e_min;
  window.e_hi = e_max;
  window.positive = signs == "pos" || signs == "both";
  window.negative = signs == "neg" || signs == "both";
  window.include_zero = include_zero;
  return window;
}

int run_lattice(const ParamFlags& flags, int dims, long long e_min,
                long long e_max, const std::string& signs, bool exclude_singular,
                const std::string& format, const OutputTarget& out) {
  const GridParams params = flags.params();
  const Window window = window_from(e_min, e_max, signs, !exclude_singular);
  const auto points = window_enum(params, static_cast<std::size_t>(dims), window,
                                  enumeration_cap());

  if (format == "json") {
    ordered_json doc;
    doc["params"] = params_str(params);
    doc["points"] = ordered_json::array();
    for (const LatticePoint& p : points) {
      ordered_json entry;
      entry["coords"] = ordered_json::array();
      for (const RnNumber& c : p.coords) {
        entry["coords"].push_back({{"literal", to_literal(c)},
                                   {"value", fraction_str(value_of(c))}});
      }
      entry["degree"] = classify(p).degree();
      doc["points"].push_back(std::move(entry));
    }
    out.write(doc.dump() + "\n");
    return kExitOk;
  }

  std::vector<std::string> header;
  for (int d = 0; d < dims; ++d) {
    header.push_back("x" + std::to_string(d) + "_literal");
    header.push_back("x" + std::to_string(d) + "_value");
  }
  header.push_back("degree");
  CsvBuilder csv(header);
  for (const LatticePoint& p : points) {
    std::vector<std::string> row;
    for (const RnNumber& c : p.coords) {
      row.push_back(to_literal(c));
      row.push_back(fraction_str(value_of(c)));
    }
    row.push_back(std::to_string(classify(p).degree()));
    csv.append_row(row);
  }
  out.write(csv.str());
  return kExitOk;
}

// --- grain ------------------------------------------------------------------

int run_grain(const ParamFlags& flags, const std::string& value_arg, bool kary,
              int figures, const std::string& outcome_arg,
              const std::string& delta, const std::string& delta_l,
              const std::string& delta_u, int embed_n, const OutputTarget& out) {
  const GridParams params = flags.params();
  ordered_json doc;

  if (!value_arg.empty() && !outcome_arg.empty()) {
    throw DomainError(Errc::UsageError, "--value and --outcome are exclusive");
  }
  std::string outcome = outcome_arg;
  if (!value_arg.empty()) {
    const Rational q = parse_value_arg(value_arg, kary, params.base);
    if (figures < 1) {
      throw DomainError(Errc::UsageError,
                        "--figures is required with --value");
    }
    outcome = coarse_grain(q, figures, params);
    doc["input"] = fraction_str(q);
  }
  if (outcome.empty()) {
    throw DomainError(Errc::UsageError, "need --value or --outcome");
  }
  doc["outcome"] = outcome;
  doc["value"] = fraction_str(outcome_value(outcome, params.base));
  doc["figures"] = outcome_figures(outcome);

  CoarseGrainRule rule;
  if (!delta.empty()) {
    rule.delta_lower = parse_rational_text(delta);
    rule.delta_upper = rule.delta_lower;
  }
  if (!delta_l.empty()) rule.delta_lower = parse_rational_text(delta_l);
  if (!delta_u.empty()) rule.delta_upper = parse_rational_text(delta_u);
  const Interval bin = bin_of(outcome, params.base, rule);
  doc["bin_lo"] = fraction_str(bin.lo);
  doc["bin_hi"] = fraction_str(bin.hi);

  if (embed_n > 0) {
    GridParams target = params;
    target.half_digits = embed_n;
    target.grid = GridMode::SymmetricRegion;
    const RnNumber embedded = embed(outcome, target);
    doc["embedded"] = to_literal(embedded);
    doc["embedded_value"] = fraction_str(value_of(embedded));
  }
  out.write(doc.dump() + "\n");
  return kExitOk;
}

// --- apparatus ----------------------------------------------------------------

const char* reading_kind_name(ApparatusReading::Kind kind) {
  switch (kind) {
    case ApparatusReading::Kind::NonDetect: return "nondetect";
    case ApparatusReading::Kind::Value: return "value";
    case ApparatusReading::Kind::OffScale: return "offscale";
  }
  return "unknown";
}

int run_apparatus(const ParamFlags& flags, const std::string& value_arg,
                  bool kary, int digits, long long j, long long j_min,
                  long long j_max, bool scan, const OutputTarget& out) {
  const GridParams params = flags.params();
  const Rational q = parse_value_arg(value_arg, kary, params.base);

  ordered_json doc;
  doc["value"] = fraction_str(q);
  doc["digits"] = digits;
  doc["k"] = params.base;
  doc["readings"] = ordered_json::array();
  const auto emit = [&](const ApparatusReading& reading) {
    ordered_json entry;
    entry["j"] = reading.apparatus_index.str();
    entry["kind"] = reading_kind_name(reading.kind);
    if (reading.kind == ApparatusReading::Kind::Value) {
      entry["reading"] = reading.digits;
    }
    doc["readings"].push_back(std::move(entry));
  };
  if (scan) {
    for (const auto& reading :
         hierarchy_scan(q, j_min, j_max, digits, params.base)) {
      emit(reading);
    }
  } else {
    emit(apparatus_reading(q, j, digits, params.base));
  }
  out.write(doc.dump() + "\n");
  return kExitOk;
}

// --- qm ---------------------------------------------------------------------

int run_qm(const std::string& state_path, bool expand, long long e_min,
           long long e_max, const OutputTarget& out) {
  std::ifstream file(state_path);
  if (!file) {
    throw DomainError(Errc::UsageError, "cannot read state file " + state_path);
  }
  std::stringstream buffer;
  buffer << file.rdbuf();
  const QState psi = parse_state_json(buffer.str());
  const GridParams& params = psi.params();

  const NormReport report = norm_check(psi);
  ordered_json doc;
  doc["params"] = params_str(params);
  doc["terms"] = psi.basis().size();
  doc["norm2"] = to_literal(report.norm2);
  doc["norm2_value"] = fraction_str(value_of(report.norm2));
  doc["exact_norm2"] = fraction_str(report.exact_norm2);
  doc["residual"] = fraction_str(report.residual);

  if (expand) {
    const BigInt points_per_region =
        pow_big(static_cast<unsigned>(params.base), BigInt(params.digits())) - 1;
    const BigInt total = BigInt(e_max - e_min + 1) * points_per_region * 2;
    if (total > enumeration_cap()) {
      throw DomainError(Errc::WindowTooLarge,
                        "expansion window larger than RN_ARITH_CAP");
    }
    doc["expansion"] = ordered_json::array();
    for (const ExpansionTerm& term : position_expand(psi, e_min, e_max)) {
      doc["expansion"].push_back(
          {{"x", to_literal(term.position)},
           {"re", to_literal(term.coefficient.re())},
           {"im", to_literal(term.coefficient.im())}});
    }
  }
  out.write(doc.dump() + "\n");
  return kExitOk;
}

// --- limit ------------------------------------------------------------------

int run_limit(const ParamFlags& flags, int n_min, int n_max,
              const std::string& probe_lo, const std::string& probe_hi,
              bool asym, const OutputTarget& out) {
  if (n_min < 1 || n_min > n_max) {
    throw DomainError(Errc::UsageError, "need 1 <= n-min <= n-max");
  }
  if (asym) {
    CsvBuilder csv({"n", "jump_location", "ratio"});
    for (int n = n_min; n <= n_max; ++n) {
      const JumpDemo demo = asymmetric_jump_demo(flags.k, n);
      csv.append_row({std::to_string(n), fraction_str(demo.location),
                      fraction_str(demo.ratio)});
    }
    out.write(csv.str());
    return kExitOk;
  }

  const Rational a = parse_rational_text(probe_lo);
  const Rational b = parse_rational_text(probe_hi);
  CsvBuilder csv({"n", "low", "high", "step", "max_gap"});
  for (int n = n_min; n <= n_max; ++n) {
    const LimitRow row = limit_row(flags.k, n);
    const GridParams params{flags.k, n, GridMode::SymmetricRegion,
                            RoundMode::TruncateTowardZero};
    csv.append_row({std::to_string(n), fraction_str(row.low),
                    fraction_str(row.high), fraction_str(row.step),
                    fraction_str(max_gap_in(params, a, b))});
  }
  out.write(csv.str());
  return kExitOk;
}

// --- oracle-check -------------------------------------------------------------

int run_oracle_check(const ParamFlags& flags, long long e_min, long long e_max,
                     const std::string& ops_arg, const OutputTarget& out) {
  const GridParams params = flags.params();
  std::vector<std::string> ops;
  std::stringstream splitter(ops_arg);
  for (std::string op; std::getline(splitter, op, ',');) ops.push_back(op);
  if (ops.empty()) {
    throw DomainError(Errc::UsageError, "no operations given");
  }

  // Exhaustive enumeration, both signs plus zero.
  std::vector<RnNumber> xs;
  xs.push_back(RnNumber::zero(params));
  for (long long e = e_min; e <= e_max; ++e) {
    for (const RnNumber& x : enumerate_region(params, e, 1)) xs.push_back(x);
    for (const RnNumber& x : enumerate_region(params, e, -1)) xs.push_back(x);
  }
  if (xs.size() * xs.size() > enumeration_cap()) {
    throw DomainError(Errc::WindowTooLarge,
                      "pair census larger than RN_ARITH_CAP");
  }

  std::uint64_t mismatches = 0;
  for (const std::string& op : ops) {
    for (const RnNumber& a : xs) {
      for (const RnNumber& b : xs) {
        RnNumber got = RnNumber::zero(params);
        Rational exact;
        if (op == "add") {
          got = add(a, b);
          exact = value_of(a) + value_of(b);
        } else if (op == "mul") {
          got = mul(a, b);
          exact = value_of(a) * value_of(b);
        } else if (op == "sub") {
          got = subtract(a, b);
          exact = value_of(a) - value_of(b);
        } else if (op == "div") {
          if (b.is_zero()) continue;
          got = divide(a, b);
          exact = value_of(a) / value_of(b);
        } else {
          throw DomainError(Errc::UsageError, "unknown op '" + op + "'");
        }
        if (!(got == round_to_grid(exact, params))) ++mismatches;
      }
    }
  }
  out.write(std::to_string(mismatches) + " mismatches\n");
  return mismatches == 0 ? kExitOk : kExitValidation;
}

// --- figure -----------------------------------------------------------------

int run_figure(const ParamFlags& flags, const std::string& figure_id,
               long long e_min, long long e_max, long long j,
               const OutputTarget& out) {
  const GridParams params = flags.params();
  const std::uint64_t cap = enumeration_cap();

  if (figure_id == "fig1") {
    // 1-D tick positions, both signs.
    const auto axis =
        axis_values(params, window_from(e_min, e_max, "both", false));
    CsvBuilder csv({"literal", "value"});
    for (const RnNumber& x : axis) {
      csv.append_row({to_literal(x), fraction_str(value_of(x))});
    }
    out.write(csv.str());
    return kExitOk;
  }

  if (figure_id == "fig2") {
    // 2-D grid intersections with singularity flags (axes included).
    const auto points = window_enum(
        params, 2, window_from(e_min, e_max, "both", true), cap);
    CsvBuilder csv({"x_literal", "x_value", "y_literal", "y_value", "degree"});
    for (const LatticePoint& p : points) {
      csv.append_row({to_literal(p.coords[0]),
                      fraction_str(value_of(p.coords[0])),
                      to_literal(p.coords[1]),
                      fraction_str(value_of(p.coords[1])),
                      std::to_string(classify(p).degree())});
    }
    out.write(csv.str());
    return kExitOk;
  }

  if (figure_id == "fig3") {
    // Before/after map of a scale transformation on the positive axis.
    // Output rows tagged "mapped" carry window points and their images;
    // rows tagged "emergent" are window positions whose preimage lies
    // outside the window (the source near the origin for expansions).
    const auto axis =
        axis_values(params, window_from(e_min, e_max, "pos", false));
    CsvBuilder csv({"role", "before_literal", "before_value", "after_literal",
                    "after_value"});
    for (const RnNumber& x : axis) {
      const LatticePoint p(params, {x});
      const RnNumber image = scale(p, j).coords[0];
      csv.append_row({"mapped", to_literal(x), fraction_str(value_of(x)),
                      to_literal(image), fraction_str(value_of(image))});
    }
    for (const RnNumber& x : axis) {
      const LatticePoint p(params, {x});
      const RnNumber pre = scale(p, -j).coords[0];
      const bool pre_in_window =
          pre.exponent() >= e_min && pre.exponent() <= e_max;
      if (!pre_in_window) {
        csv.append_row({"emergent", "", "", to_literal(x),
                        fraction_str(value_of(x))});
      }
    }
    out.write(csv.str());
    return kExitOk;
  }

  throw DomainError(Errc::UsageError, "figure id must be fig1, fig2 or fig3");
}

void print_error_record(const DomainError& err) {
  ordered_json record;
  record["error"] = err.code_name();
  record["message"] = err.what();
  std::cerr << record.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite significant-figure arithmetic toolkit"};
  app.require_subcommand(1);

  // eval
  ParamFlags eval_flags;
  std::string eval_expr, eval_format = "text";
  OutputTarget eval_out;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate an infix expression left to right");
  add_param_flags(eval_cmd, eval_flags);
  eval_cmd->add_option("expression", eval_expr, "whitespace-separated expression")
      ->required();
  eval_cmd->add_option("--format", eval_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  eval_cmd->add_option("--out", eval_out.path, "output file (default stdout)");

  // walk
  ParamFlags walk_flags;
  std::string walk_from;
  long long walk_steps = 0;
  OutputTarget walk_out;
  CLI::App* walk_cmd =
      app.add_subcommand("walk", "emit a successor/predecessor step trace");
  add_param_flags(walk_cmd, walk_flags);
  walk_cmd->add_option("--from", walk_from, "starting literal")->required();
  walk_cmd->add_option("--steps", walk_steps,
                       "step count; negative walks downward")
      ->required();
  walk_cmd->add_option("--out", walk_out.path, "output file");

  // lattice
  ParamFlags lattice_flags;
  int lattice_dims = 1;
  long long lattice_e_min = 0, lattice_e_max = 0;
  std::string lattice_signs = "both", lattice_format = "csv";
  bool lattice_exclude_singular = true;
  bool lattice_include_singular = false;
  OutputTarget lattice_out;
  CLI::App* lattice_cmd =
      app.add_subcommand("lattice", "enumerate lattice points in a window");
  add_param_flags(lattice_cmd, lattice_flags);
  lattice_cmd->add_option("--dims", lattice_dims, "dimensions (>= 1)");
  lattice_cmd->add_option("--e-min", lattice_e_min, "lowest region exponent")
      ->required();
  lattice_cmd->add_option("--e-max", lattice_e_max, "highest region exponent")
      ->required();
  lattice_cmd->add_option("--signs", lattice_signs, "pos, neg or both")
      ->check(CLI::IsMember({"pos", "neg", "both"}));
  lattice_cmd->add_flag("--exclude-singular", lattice_exclude_singular,
                        "exclude zero coordinates (default)");
  lattice_cmd->add_flag("--include-singular", lattice_include_singular,
                        "include zero coordinates");
  lattice_cmd->add_option("--format", lattice_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  lattice_cmd->add_option("--out", lattice_out.path, "output file");

  // grain
  ParamFlags grain_flags;
  std::string grain_value, grain_outcome, grain_delta, grain_delta_l,
      grain_delta_u;
  bool grain_kary = false;
  int grain_figures = 0, grain_embed_n = 0;
  OutputTarget grain_out;
  CLI::App* grain_cmd = app.add_subcommand(
      "grain", "coarse-grain a value or inspect an outcome's bin");
  add_param_flags(grain_cmd, grain_flags);
  grain_cmd->add_option("--value", grain_value,
                        "decimal value or fraction p/q to coarse-grain");
  grain_cmd->add_flag("--kary", grain_kary,
                      "interpret --value as a base-k digit string");
  grain_cmd->add_option("--figures", grain_figures,
                        "significant figures of the outcome");
  grain_cmd->add_option("--outcome", grain_outcome,
                        "existing outcome string to inspect");
  grain_cmd->add_option("--delta", grain_delta, "symmetric bin half-width");
  grain_cmd->add_option("--delta-l", grain_delta_l, "lower bin half-width");
  grain_cmd->add_option("--delta-u", grain_delta_u, "upper bin half-width");
  grain_cmd->add_option("--embed-n", grain_embed_n,
                        "also embed into the 2n-digit symmetric grid");
  grain_cmd->add_option("--out", grain_out.path, "output file");

  // apparatus
  ParamFlags apparatus_flags;
  std::string apparatus_value;
  bool apparatus_kary = false;
  int apparatus_digits = 4;
  long long apparatus_j = 1, apparatus_j_min = 0, apparatus_j_max = 0;
  OutputTarget apparatus_out;
  CLI::App* apparatus_cmd = app.add_subcommand(
      "apparatus", "read a quantity on the instrument hierarchy");
  add_param_flags(apparatus_cmd, apparatus_flags);
  apparatus_cmd->add_option("--value", apparatus_value, "quantity (>= 0)")
      ->required();
  apparatus_cmd->add_flag("--kary", apparatus_kary,
                          "interpret --value as a base-k digit string");
  apparatus_cmd->add_option("--digits", apparatus_digits,
                            "figures per instrument");
  apparatus_cmd->add_option("--j", apparatus_j, "single instrument index");
  CLI::Option* jmin_opt =
      apparatus_cmd->add_option("--j-min", apparatus_j_min, "scan start");
  apparatus_cmd->add_option("--j-max", apparatus_j_max, "scan end")
      ->needs(jmin_opt);
  apparatus_cmd->add_option("--out", apparatus_out.path, "output file");

  // qm
  std::string qm_state;
  bool qm_expand = false;
  long long qm_e_min = 0, qm_e_max = 0;
  OutputTarget qm_out;
  CLI::App* qm_cmd = app.add_subcommand(
      "qm", "normalization report and position expansion of a state file");
  qm_cmd->add_option("--state", qm_state, "state JSON file")->required();
  qm_cmd->add_flag("--expand", qm_expand, "emit the position expansion");
  qm_cmd->add_option("--e-min", qm_e_min, "expansion window start");
  qm_cmd->add_option("--e-max", qm_e_max, "expansion window end");
  qm_cmd->add_option("--out", qm_out.path, "output file");

  // limit
  ParamFlags limit_flags;
  int limit_n_min = 2, limit_n_max = 8;
  std::string limit_probe_lo = "1/2", limit_probe_hi = "2";
  bool limit_asym = false;
  OutputTarget limit_out;
  CLI::App* limit_cmd = app.add_subcommand(
      "limit", "per-n range, step and gap table for growing word lengths");
  add_param_flags(limit_cmd, limit_flags);
  limit_cmd->add_option("--n-min", limit_n_min, "first n");
  limit_cmd->add_option("--n-max", limit_n_max, "last n");
  limit_cmd->add_option("--probe-lo", limit_probe_lo, "gap probe lower end");
  limit_cmd->add_option("--probe-hi", limit_probe_hi, "gap probe upper end");
  limit_cmd->add_flag("--asym", limit_asym,
                      "locate the fixed spacing jump of the point-at-the-end form");
  limit_cmd->add_option("--out", limit_out.path, "output file");

  // oracle-check
  ParamFlags oracle_flags;
  long long oracle_e_min = -2, oracle_e_max = 2;
  std::string oracle_ops = "add,mul";
  OutputTarget oracle_out;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle-check",
      "exhaustively compare grid operations with exact-then-round");
  add_param_flags(oracle_cmd, oracle_flags);
  oracle_cmd->add_option("--e-min", oracle_e_min, "lowest region exponent");
  oracle_cmd->add_option("--e-max", oracle_e_max, "highest region exponent");
  oracle_cmd->add_option("--ops", oracle_ops,
                         "comma list from add,sub,mul,div");
  oracle_cmd->add_option("--out", oracle_out.path, "output file");

  // figure
  ParamFlags figure_flags;
  std::string figure_id;
  long long figure_e_min = 0, figure_e_max = 1, figure_j = 1;
  OutputTarget figure_out;
  CLI::App* figure_cmd =
      app.add_subcommand("figure", "emit plot-ready lattice datasets");
  add_param_flags(figure_cmd, figure_flags);
  figure_cmd->add_option("--id", figure_id, "fig1, fig2 or fig3")->required();
  figure_cmd->add_option("--e-min", figure_e_min, "window start");
  figure_cmd->add_option("--e-max", figure_e_max, "window end");
  figure_cmd->add_option("--j", figure_j, "scale steps for fig3");
  figure_cmd->add_option("--out", figure_out.path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);  // --help
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) {
      return run_eval(eval_flags, eval_expr, eval_format, eval_out);
    }
    if (walk_cmd->parsed()) {
      return run_walk(walk_flags, walk_from, walk_steps, walk_out);
    }
    if (lattice_cmd->parsed()) {
      const bool exclude = !lattice_include_singular;
      return run_lattice(lattice_flags, lattice_dims, lattice_e_min,
                         lattice_e_max, lattice_signs, exclude, lattice_format,
                         lattice_out);
    }
    if (grain_cmd->parsed()) {
      return run_grain(grain_flags, grain_value, grain_kary, grain_figures,
                       grain_outcome, grain_delta, grain_delta_l, grain_delta_u,
                       grain_embed_n, grain_out);
    }
    if (apparatus_cmd->parsed()) {
      const bool scan = apparatus_cmd->count("--j-min") > 0;
      return run_apparatus(apparatus_flags, apparatus_value, apparatus_kary,
                           apparatus_digits, apparatus_j, apparatus_j_min,
                           apparatus_j_max, scan, apparatus_out);
    }
    if (qm_cmd->parsed()) {
      return run_qm(qm_state, qm_expand, qm_e_min, qm_e_max, qm_out);
    }
    if (limit_cmd->parsed()) {
      return run_limit(limit_flags, limit_n_min, limit_n_max, limit_probe_lo,
                       limit_probe_hi, limit_asym, limit_out);
    }
    if (oracle_cmd->parsed()) {
      return run_oracle_check(oracle_flags, oracle_e_min, oracle_e_max,
                              oracle_ops, oracle_out);
    }
    if (figure_cmd->parsed()) {
      return run_figure(figure_flags, figure_id, figure_e_min, figure_e_max,
                        figure_j, figure_out);
    }
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const DomainError& err) {
    print_error_record(err);
    return err.code() == Errc::UsageError ? kExitUsage : kExitValidation;
  } catch (const std::exception& err) {
    ordered_json record;
    record["error"] = "Internal";
    record["message"] = err.what();
    std::cerr << record.dump() << "\n";
    return kExitInternal;
  }
}
