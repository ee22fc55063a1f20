// Copyright 2026 The extlp Authors
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

// Command implementations behind the `extlp` tool. Kept in the library so
// tests can drive them without spawning a process.
//
// Exit codes:
//   0  success
//   2  precondition violation (invalid program for `validate`, infinities
//      in a finite Farkas mode, broken extended Farkas hypotheses, ...)
//   3  unreadable or malformed input
//   4  internal theorem violation: a result failed its own verification,
//      strong duality failed on a valid program, or the oracle disagreed

#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "extlp/elp.hpp"
#include "extlp/errors.hpp"
#include "extlp/farkas.hpp"
#include "extlp/lp_file.hpp"
#include "extlp/oracle.hpp"

namespace extlp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitInternal = 4;

struct Options {
  std::string command;
  std::string file;
  std::string mode = "ext";
  bool oracle = false;
  bool json = false;
  std::uint64_t seed = 0;
};

// EXTLP_SEED, when set, wins over --seed.
inline std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const char* env_value) {
  if (env_value != nullptr && *env_value != '\0') {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env_value, &used, 10);
      if (used == std::string_view(env_value).size()) return v;
    } catch (const std::exception&) {
    }
    throw PreconditionError(std::string("EXTLP_SEED is not an unsigned integer: ") + env_value);
  }
  return flag.value_or(0);
}

// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

// Ordered key/value report; the text form is one `key: value` per line.
class Report {
 public:
  void set(std::string key, std::string value) { entries_.emplace_back(std::move(key), std::move(value)); }

  std::string text() const {
    std::string out;
    for (const auto& [k, v] : entries_) out += k + ": " + v + "\n";
    return out;
  }

  std::string json() const {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : entries_) j[k] = v;
    return j.dump(2) + "\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

namespace detail {

inline std::string join_vector(const NonnegVector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ' ';
    out += format_rational(v[k].value());
  }
  return out.empty() ? "(empty)" : out;
}

inline std::string join_vector(const RatVector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ' ';
    out += format_rational(v[k]);
  }
  return out.empty() ? "(empty)" : out;
}

inline std::string join_indices(const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(idx[k]);
  }
  return out;
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

inline std::string violation_list(const ValidityReport& report) {
  std::string out;
  for (Condition c : report.violated()) out += std::string(out.empty() ? "" : ",") + short_name(c);
  return out.empty() ? "none" : out;
}

inline bool all_finite(const LPFile& f) {
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (const ExtValue& v : f.a.row(i))
      if (!v.is_finite()) return false;
  for (const ExtValue& v : f.b)
    if (!v.is_finite()) return false;
  return true;
}

inline RatMatrix finite_matrix(const ExtMatrix& a) {
  RatMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).finite();
  return out;
}

inline RatVector finite_vector(const ExtVector& v) {
  RatVector out;
  for (const ExtValue& e : v) out.push_back(e.finite());
  return out;
}

struct Outcome {
  Report report;
  int exit_code = kExitOk;
  std::string body;  // replaces the report text (dualize)
};

inline Outcome cmd_validate(const LPFile& file, Report report) {
  ExtendedLP p = file.program();
  ValidityReport v = validate(p);
  report.set("rows", std::to_string(p.rows()));
  report.set("cols", std::to_string(p.cols()));
  report.set("valid", bool_str(v.valid()));
  for (Condition c : kAllConditions) {
    const auto& idx = v.violating(c);
    bool row_condition = c == Condition::kNoBotTopInRow || c == Condition::kNoBotInBotRow ||
                         c == Condition::kNoTopInTopRow;
    report.set(short_name(c), idx.empty() ? std::string("ok")
                                          : std::string("violated ") + (row_condition ? "rows " : "cols ") +
                                                join_indices(idx));
  }
  return {std::move(report), v.valid() ? kExitOk : kExitPrecondition, {}};
}

inline Outcome cmd_dualize(const LPFile& file, Report report) {
  ExtendedLP p = file.program();
  ExtendedLP d = dualize(p);
  report.set("valid", bool_str(validate(p).valid()));
  // The metadata goes out as comments so the output stays a loadable file.
  std::string body;
  std::istringstream meta(report.text());
  for (std::string line; std::getline(meta, line);) body += "# " + line + "\n";
  std::string dual_text = write_lp_file(LPFile::from_program(d));
  report.set("dual", dual_text);
  body += dual_text;
  return {std::move(report), kExitOk, std::move(body)};
}

inline Outcome cmd_solve(const LPFile& file, Report report, bool use_oracle) {
  ExtendedLP p = file.program();
  ValidityReport v = validate(p);
  report.set("valid", bool_str(v.valid()));
  report.set("violations", violation_list(v));

  OptimumValue primal = OptimumValue::absent();
  OptimumValue dual = OptimumValue::absent();
  std::string primal_witness = "none";
  std::string dual_witness = "none";
  int exit_code = kExitOk;

  if (v.valid()) {
    ValidELP vp(p);
    Solution s = solve(vp);
    primal = s.optimum;
    dual = optimum(dualize(vp));
    if (s.x && !primal.value().is_top()) primal_witness = join_vector(*s.x);
    if (s.y) dual_witness = join_vector(*s.y);
  } else {
    primal = evaluate_optimum(p);
    dual = evaluate_optimum(dualize(p));
  }

  bool opposite = opposites_opt(primal, dual);
  report.set("primal_optimum", to_string(primal));
  report.set("dual_optimum", to_string(dual));
  report.set("opposites", bool_str(opposite));
  report.set("primal_witness", primal_witness);
  report.set("dual_witness", dual_witness);

  bool one_side_feasible = !(primal == OptimumValue::of(ExtValue::top()) &&
                             dual == OptimumValue::of(ExtValue::top()));
  if (v.valid()) {
    std::string verdict = !one_side_feasible ? "not applicable (both infeasible)"
                                             : (opposite ? "holds" : "VIOLATED");
    report.set("strong_duality", verdict);
    if (one_side_feasible && !opposite) exit_code = kExitInternal;
  } else {
    report.set("strong_duality", "not applicable (invalid program)");
  }

  if (use_oracle) {
    OptimumValue oracle_primal = oracle::oracle_solve_extended(p);
    OptimumValue oracle_dual = oracle::oracle_solve_extended(dualize(p));
    bool agree = oracle_primal == primal && oracle_dual == dual;
    report.set("oracle_primal_optimum", to_string(oracle_primal));
    report.set("oracle_dual_optimum", to_string(oracle_dual));
    report.set("oracle_agrees", bool_str(agree));
    if (!agree) exit_code = kExitInternal;
  }
  return {std::move(report), exit_code, {}};
}

inline Outcome cmd_farkas(const LPFile& file, Report report, const std::string& mode,
                          bool use_oracle) {
  report.set("mode", mode);
  bool finite_mode = mode == "eq" || mode == "ineq" || mode == "ineq-neg";
  if (!finite_mode && mode != "ext") throw PreconditionError("unknown mode '" + mode + "'");

  if (finite_mode && !all_finite(file)) {
    report.set("error", "mode " + mode + " requires finite A and b");
    return {std::move(report), kExitPrecondition, {}};
  }

  bool primal = false;
  bool verified = false;
  std::string witness;

  if (finite_mode) {
    RatMatrix a = finite_matrix(file.a);
    RatVector b = finite_vector(file.b);
    if (mode == "eq") {
      EqualityOutcome out = solve_equality(a, b);
      primal = out.is_primal();
      verified = primal ? verify_primal_eq(a, b, out.x()) : verify_dual_eq(a, b, out.y());
      witness = primal ? join_vector(out.x()) : join_vector(out.y());
    } else {
      bool neg_form = mode == "ineq-neg";
      InequalityOutcome out = neg_form ? solve_inequality_neg(a, b) : solve_inequality(a, b);
      primal = out.is_primal();
      if (primal) {
        verified = verify_primal_ineq(a, b, out.x());
        witness = join_vector(out.x());
      } else {
        verified = neg_form ? verify_dual_ineq_neg(a, b, out.y()) : verify_dual_ineq(a, b, out.y());
        witness = join_vector(out.y());
      }
    }
  } else {
    ExtendedFarkasHypotheses h = check_extended_hypotheses(file.a, file.b);
    if (!h.hold()) {
      std::string names;
      for (const auto& n : h.violated_names()) names += (names.empty() ? "" : ",") + n;
      report.set("violations", names);
      return {std::move(report), kExitPrecondition, {}};
    }
    report.set("violations", "none");
    InequalityOutcome out = solve_extended(file.a, file.b);
    primal = out.is_primal();
    verified = primal ? verify_primal_ext(file.a, file.b, out.x()) : verify_dual_ext(file.a, file.b, out.y());
    witness = primal ? join_vector(out.x()) : join_vector(out.y());
  }

  report.set("outcome", primal ? "primal" : "dual");
  report.set("witness", witness);
  report.set("verified", bool_str(verified));
  int exit_code = verified ? kExitOk : kExitInternal;

  if (use_oracle) {
    // Primal solvability of A x <= b (or A x = b) by the brute-force oracle.
    ExtendedLP probe;
    if (mode == "eq") {
      ExtMatrix a2(2 * file.rows(), file.cols());
      ExtVector b2(2 * file.rows());
      for (std::size_t i = 0; i < file.rows(); ++i) {
        for (std::size_t j = 0; j < file.cols(); ++j) {
          a2(i, j) = file.a(i, j);
          a2(file.rows() + i, j) = neg(file.a(i, j));
        }
        b2[i] = file.b[i];
        b2[file.rows() + i] = neg(file.b[i]);
      }
      probe = ExtendedLP(a2, b2, ExtVector(file.cols(), ExtValue(0)));
    } else {
      probe = ExtendedLP(file.a, file.b, ExtVector(file.cols(), ExtValue(0)));
    }
    bool oracle_primal = !oracle::oracle_solve_extended(probe).value().is_top();
    report.set("oracle_primal_solvable", bool_str(oracle_primal));
    report.set("oracle_agrees", bool_str(oracle_primal == primal));
    if (oracle_primal != primal) exit_code = kExitInternal;
  }
  return {std::move(report), exit_code, {}};
}

}  // namespace detail

/// Runs one command on already-loaded input text. `input_name` is echoed in
/// the report.
inline int run_on_text(const Options& opt, std::string_view input, std::string_view input_name,
                       std::ostream& out, std::ostream& err) {
  Report header;
  header.set("command", opt.command);
  header.set("input", std::string(input_name));
  header.set("digest", digest(input));
  header.set("seed", std::to_string(opt.seed));

  LPFile file;
  try {
    file = parse_lp_file(input);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    detail::Outcome result;
    if (opt.command == "validate") {
      result = detail::cmd_validate(file, header);
    } else if (opt.command == "dualize") {
      result = detail::cmd_dualize(file, header);
    } else if (opt.command == "solve") {
      result = detail::cmd_solve(file, header, opt.oracle);
    } else if (opt.command == "farkas") {
      result = detail::cmd_farkas(file, header, opt.mode, opt.oracle);
    } else {
      err << "error: unknown command '" << opt.command << "'\n";
      return kExitPrecondition;
    }
    if (opt.json) {
      out << result.report.json();
    } else if (!result.body.empty()) {
      out << result.body;
    } else {
      out << result.report.text();
    }
    return result.exit_code;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

inline int run(const Options& opt, std::ostream& out, std::ostream& err) {
  std::ifstream in(opt.file, std::ios::binary);
  if (!in) {
    err << "error: cannot read '" << opt.file << "'\n";
    return kExitParse;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string name = std::filesystem::path(opt.file).filename().string();
  return run_on_text(opt, buf.str(), name, out, err);
}

}  // namespace extlp::cli
