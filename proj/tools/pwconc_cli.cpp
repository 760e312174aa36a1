// Copyright 2026 The pwconc Authors
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

// pwconc command-line front-end. Exit codes: 0 success, 1 a check failed,
// 2 usage or domain error, 3 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "pwconc/pwconc.h"

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

using json = nlohmann::ordered_json;
using Cell = std::variant<double, long long, bool, std::string>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return format_double(v);
        else if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return csv_escape(v);
      },
      c);
}

json json_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return v;
        } else {
          return v;
        }
      },
      c);
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << '\n';
    }
  }

  json row_json(std::size_t r) const {
    json obj = json::object();
    for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = json_cell(rows[r][i]);
    return obj;
  }

  json to_json() const {
    json arr = json::array();
    for (std::size_t r = 0; r < rows.size(); ++r) arr.push_back(row_json(r));
    return arr;
  }
};

void emit(const Table& t, const std::string& format, std::ostream& os, bool single_object) {
  if (format == "csv") {
    t.write_csv(os);
  } else {
    const json j = single_object && t.rows.size() == 1 ? t.row_json(0) : t.to_json();
    os << j.dump(2) << '\n';
  }
}

std::uint64_t env_seed() {
  const char* s = std::getenv("PWC_SEED");
  if (s == nullptr || *s == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || *end != '\0') throw UsageError("PWC_SEED must be a non-negative integer");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& raw, const char* what) {
  const std::string s = trim(raw);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string("malformed ") + what + " entry '" + raw + "'");
  }
  if (used != s.size() || !std::isfinite(v)) {
    throw UsageError(std::string("malformed ") + what + " entry '" + raw + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (!s.empty() && s.back() == ',') parts.emplace_back();
  return parts;
}

std::vector<double> parse_double_list(const std::string& s, const char* what) {
  std::vector<double> out;
  for (const std::string& p : split(s)) out.push_back(parse_double(p, what));
  if (out.empty()) throw UsageError(std::string(what) + " list is empty");
  return out;
}

long long parse_int(const std::string& raw, const char* what) {
  const std::string s = trim(raw);
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string("malformed ") + what + " entry '" + raw + "'");
  }
  if (used != s.size()) throw UsageError(std::string("malformed ") + what + " entry '" + raw + "'");
  return v;
}

// "1..12" or "1,2,6" or a mix such as "1..3,8".
std::vector<int> parse_dims(const std::string& s) {
  std::vector<int> out;
  for (const std::string& p : split(s)) {
    const auto dots = p.find("..");
    if (dots == std::string::npos) {
      out.push_back(static_cast<int>(parse_int(p, "dims")));
      continue;
    }
    const long long lo = parse_int(p.substr(0, dots), "dims");
    const long long hi = parse_int(p.substr(dots + 2), "dims");
    if (hi < lo) throw UsageError("dims range '" + p + "' is decreasing");
    for (long long d = lo; d <= hi; ++d) out.push_back(static_cast<int>(d));
  }
  if (out.empty()) throw UsageError("dims list is empty");
  for (int d : out) {
    if (d < 1 || d > 64) throw UsageError("dims entries must lie in [1, 64]");
  }
  return out;
}

std::vector<std::uint64_t> parse_seeds(const std::string& s) {
  std::vector<std::uint64_t> out;
  for (const std::string& p : split(s)) {
    const long long v = parse_int(p, "seeds");
    if (v < 0) throw UsageError("seeds must be non-negative");
    out.push_back(static_cast<std::uint64_t>(v));
  }
  if (out.empty()) throw UsageError("seeds list is empty");
  return out;
}

int report_status(pwc_status st) {
  std::cerr << "pwconc: " << pwc_status_string(st) << ": " << pwc_last_error() << '\n';
  return st == PWC_ERR_DOMAIN || st == PWC_ERR_CONFIG || st == PWC_ERR_NULL ? kUsage
                                                                              : kCheckFailed;
}

// ------------------------------------------------------------------ constant

struct ConstantArgs {
  std::optional<double> tau, delta, lambda, alpha;
  std::optional<int> dim;
  std::string format = "json";
};

int cmd_constant(const ConstantArgs& a) {
  Table t;
  if (a.dim) {
    if (!a.lambda || !a.alpha) throw UsageError("--dim requires --lambda and --alpha");
    pwc_bound_nd b{};
    const pwc_status st = pwc_constant_nd(*a.dim, *a.lambda, *a.alpha, &b);
    if (st != PWC_OK && st != PWC_ERR_DOMAIN) return report_status(st);
    if (st == PWC_ERR_DOMAIN && !(b.hypothesis.first_zero > 0.0)) return report_status(st);
    t.columns = {"dim",        "lambda",          "alpha",         "constant",
                 "ball_volume", "density_threshold", "corner_argument", "first_zero",
                 "hypothesis_holds", "product", "product_bound", "product_form_holds"};
    t.rows.push_back({static_cast<long long>(*a.dim), *a.lambda, *a.alpha, b.constant,
                      b.ball_volume, b.density_threshold, b.hypothesis.corner_argument,
                      b.hypothesis.first_zero, b.hypothesis.holds != 0, b.hypothesis.product,
                      b.hypothesis.product_bound, b.hypothesis.product_form_holds != 0});
    emit(t, a.format, std::cout, true);
    if (st == PWC_ERR_DOMAIN) {
      std::cerr << "pwconc: " << pwc_last_error() << '\n';
      return kUsage;
    }
    return kOk;
  }
  if (!a.tau || !a.delta) throw UsageError("constant needs --tau and --delta (or --dim, --lambda, --alpha)");
  pwc_bound1d b{};
  const pwc_status st = pwc_constant_1d(*a.tau, *a.delta, &b);
  if (st != PWC_OK) return report_status(st);
  const double bound = 80.0 / 13.0;
  if (a.format == "csv") {
    t.columns = {"tau", "delta", "C", "ratio", "bound_80_13", "pass"};
    t.rows.push_back({*a.tau, *a.delta, b.constant, b.ratio, bound, b.within_80_13 != 0});
  } else {
    t.columns = {"tau",        "delta",        "C",          "ratio",         "bound_80_13",
                 "pass",       "sup_norm_g",   "inv_norm",   "abs_threshold", "rel_threshold"};
    t.rows.push_back({*a.tau, *a.delta, b.constant, b.ratio, bound, b.within_80_13 != 0,
                      b.sup_norm_g, b.inv_norm, b.abs_threshold, b.rel_threshold});
    if (b.within_5_2 >= 0) {
      t.columns.push_back("bound_5_2");
      t.columns.push_back("pass_5_2");
      t.rows.back().push_back(2.5);
      t.rows.back().push_back(b.within_5_2 != 0);
    }
  }
  emit(t, a.format, std::cout, true);
  return kOk;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  std::string format = "csv";
  std::optional<std::uint64_t> seed;
};

int cmd_verify(const VerifyArgs& a) {
  const std::uint64_t seed = a.seed ? *a.seed : env_seed();
  pwc_report* rep = nullptr;
  const pwc_status st = pwc_verify_run(a.suite.c_str(), seed, &rep);
  if (st != PWC_OK) return report_status(st);
  Table t;
  t.columns = {"suite", "check_name", "params", "computed", "relation", "target",
               "tolerance", "pass", "claimed", "note"};
  for (std::size_t i = 0; i < pwc_report_size(rep); ++i) {
    pwc_record r{};
    pwc_report_get(rep, i, &r);
    t.rows.push_back({std::string(r.suite), std::string(r.check), std::string(r.params),
                      r.computed, std::string(r.relation), r.target, r.tolerance, r.pass != 0,
                      r.claimed != 0, std::string(r.note)});
  }
  const bool ok = pwc_report_claims_hold(rep) != 0;
  pwc_report_free(rep);
  if (a.format == "csv") {
    t.write_csv(std::cout);
  } else {
    json j = json::object();
    j["suite"] = a.suite;
    j["seed"] = seed;
    j["claims_hold"] = ok;
    j["records"] = t.to_json();
    std::cout << j.dump(2) << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

// ------------------------------------------------------------------ recover

struct RecoverArgs {
  double tau = 0.0;
  double delta = 0.0;
  std::string densities;
  std::string fractions;
  std::string seeds;
  std::string out;
  std::string format = "csv";
  double period = 0.0;
  int cells_per_window = 0;
};

int cmd_recover(const RecoverArgs& a) {
  std::vector<double> dens;
  if (!a.densities.empty() && !a.fractions.empty()) {
    throw UsageError("give either --densities or --fractions, not both");
  }
  if (!a.fractions.empty()) {
    double theta = 0.0;
    const pwc_status st = pwc_density_threshold_1d(a.tau, a.delta, PWC_KERNEL_TAPERED, &theta);
    if (st != PWC_OK) return report_status(st);
    for (double f : parse_double_list(a.fractions, "fractions")) dens.push_back(f * theta);
  } else if (!a.densities.empty()) {
    dens = parse_double_list(a.densities, "densities");
  } else {
    throw UsageError("recover needs --densities or --fractions");
  }
  for (double d : dens) {
    if (d < 0.0) throw UsageError("densities must be non-negative");
  }
  const std::vector<std::uint64_t> seeds =
      a.seeds.empty() ? std::vector<std::uint64_t>{env_seed()} : parse_seeds(a.seeds);

  pwc_experiment* exp = nullptr;
  const pwc_status st = pwc_experiment_run(a.tau, a.delta, a.period, a.cells_per_window,
                                           dens.data(), dens.size(), seeds.data(), seeds.size(),
                                           &exp);
  if (st != PWC_OK) return report_status(st);

  Table t;
  t.columns = {"run_id", "tau", "delta", "rel_density", "rel_threshold", "recovered",
               "max_coeff_error", "l1_objective", "certificate_margin", "seed"};
  bool ok = true;
  for (std::size_t i = 0; i < pwc_experiment_size(exp); ++i) {
    pwc_run r{};
    pwc_experiment_get(exp, i, &r);
    const std::string err = pwc_experiment_error(exp, i);
    if (!err.empty()) std::cerr << "pwconc: run " << r.run_id << ": " << err << '\n';
    if (r.below_threshold && (!r.recovered || !err.empty())) ok = false;
    const Cell recovered = r.indeterminate ? Cell(std::string("indeterminate")) : Cell(r.recovered != 0);
    t.rows.push_back({static_cast<long long>(r.run_id), r.tau, r.delta, r.rel_density,
                      r.rel_threshold, recovered, r.max_coeff_error, r.l1_objective,
                      r.certificate_margin, static_cast<long long>(r.seed)});
  }
  pwc_experiment_free(exp);

  if (a.out.empty()) {
    emit(t, a.format, std::cout, false);
  } else {
    std::ofstream f(a.out);
    if (!f) {
      std::cerr << "pwconc: cannot write " << a.out << '\n';
      return kIo;
    }
    emit(t, a.format, f, false);
    f.close();
    if (!f) {
      std::cerr << "pwconc: write to " << a.out << " failed\n";
      return kIo;
    }
  }
  return ok ? kOk : kCheckFailed;
}

// ----------------------------------------------------------- transform-pair

struct PairArgs {
  double tau = 4.0;
  int points = 481;
  std::string out;
};

int cmd_transform_pair(const PairArgs& a) {
  if (a.points < 2) throw UsageError("--points must be at least 2");
  if (!(a.tau >= 0.0)) throw UsageError("--tau must be non-negative");
  Table g;
  g.columns = {"x", "g"};
  Table gh;
  gh.columns = {"t", "ghat"};
  const double tmax = a.tau + 2.0;
  for (int i = 0; i < a.points; ++i) {
    // Symmetric node placement keeps x and -x bit-identical.
    const double frac = (2.0 * i - (a.points - 1)) / (a.points - 1);
    const double x = 1.2 * frac;
    const double t = tmax * frac;
    double gv = 0.0;
    double ghv = 0.0;
    pwc_status st = pwc_g(a.tau, x, &gv);
    if (st == PWC_OK) st = pwc_g_hat(a.tau, t, &ghv);
    if (st != PWC_OK) return report_status(st);
    g.rows.push_back({x, gv});
    gh.rows.push_back({t, ghv});
  }
  for (const auto& [suffix, table] : {std::pair<const char*, const Table*>{"_g.csv", &g},
                                      std::pair<const char*, const Table*>{"_ghat.csv", &gh}}) {
    const std::string path = a.out + suffix;
    std::ofstream f(path);
    if (!f) {
      std::cerr << "pwconc: cannot write " << path << '\n';
      return kIo;
    }
    table->write_csv(f);
    f.close();
    if (!f) {
      std::cerr << "pwconc: write to " << path << " failed\n";
      return kIo;
    }
  }
  return kOk;
}

// ---------------------------------------------------------- compare-windows

struct CompareArgs {
  std::string dims = "1..12";
  std::string scenario = "circumscribed";
  std::string format = "csv";
  double lambda = 0.0;
};

int cmd_compare_windows(const CompareArgs& a) {
  const std::vector<int> dims = parse_dims(a.dims);
  const pwc_scenario sc = a.scenario == "circumscribed" ? PWC_CIRCUMSCRIBED : PWC_EQUAL_VOLUME;
  Table t;
  t.columns = {"d",          "scenario",       "lambda",          "delta",
               "alpha",      "ball_threshold", "cube_threshold",  "asymptotic_ball",
               "quoted_cube", "cube_exceeds_ball", "ball_hypothesis_holds",
               "cube_hypothesis_holds", "note"};
  for (int d : dims) {
    pwc_window_comparison c{};
    const pwc_status st = pwc_compare_windows(d, sc, a.lambda, &c);
    if (st != PWC_OK) return report_status(st);
    t.rows.push_back({static_cast<long long>(d), a.scenario, c.lambda, c.delta, c.alpha,
                      c.ball_threshold, c.cube_threshold, c.asymptotic_ball, c.quoted_cube,
                      c.cube_exceeds_ball != 0, c.ball_hypothesis_holds != 0,
                      c.cube_hypothesis_holds != 0, std::string(c.note)});
  }
  emit(t, a.format, std::cout, false);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concentration constants and exact L1 recovery for band-limited signals", "pwconc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pwc_version());

  const std::vector<std::string> formats{"csv", "json"};

  ConstantArgs ca;
  auto* constant = app.add_subcommand("constant", "Concentration constant and its factors");
  constant->add_option("--tau", ca.tau, "Band half-width");
  constant->add_option("--delta", ca.delta, "Window length");
  constant->add_option("--dim", ca.dim, "Dimension for the ball-window constant")
      ->check(CLI::Range(1, 64));
  constant->add_option("--lambda", ca.lambda, "Cube half-width (with --dim)");
  constant->add_option("--alpha", ca.alpha, "Ball radius (with --dim)");
  constant->add_option("--format", ca.format)->check(CLI::IsMember(formats));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", va.suite)
      ->check(CLI::IsMember({"all", "specfun", "kernel1d", "kernelnd", "recovery"}));
  verify->add_option("--format", va.format)->check(CLI::IsMember(formats));
  verify->add_option("--seed", va.seed, "Seed (default: PWC_SEED or 0)");

  RecoverArgs ra;
  auto* recover = app.add_subcommand("recover", "Exact-recovery experiment sweep");
  recover->add_option("--tau", ra.tau)->required();
  recover->add_option("--delta", ra.delta)->required();
  recover->add_option("--densities", ra.densities, "Comma-separated relative densities");
  recover->add_option("--fractions", ra.fractions,
                      "Comma-separated densities as fractions of the threshold");
  recover->add_option("--seeds", ra.seeds, "Comma-separated seeds (default: PWC_SEED or 0)");
  recover->add_option("--out", ra.out, "Output file (default: stdout)");
  recover->add_option("--format", ra.format)->check(CLI::IsMember(formats));
  recover->add_option("--period", ra.period, "Signal period (default 8 / tau)");
  recover->add_option("--cells-per-window", ra.cells_per_window, "Grid cells per window (default 256)");

  PairArgs pa;
  auto* pair = app.add_subcommand("transform-pair", "Sample g and its transform");
  pair->add_option("--tau", pa.tau);
  pair->add_option("--points", pa.points);
  pair->add_option("--out", pa.out, "Output prefix")->required();

  CompareArgs wa;
  auto* compare = app.add_subcommand("compare-windows", "Ball versus cube density thresholds");
  compare->add_option("--dims", wa.dims, "Dimensions, e.g. 1..12 or 2,3");
  compare->add_option("--scenario", wa.scenario)
      ->check(CLI::IsMember({"circumscribed", "equal_volume"}));
  compare->add_option("--format", wa.format)->check(CLI::IsMember(formats));
  compare->add_option("--lambda", wa.lambda, "Cube half-width (default pi)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (constant->parsed()) return cmd_constant(ca);
    if (verify->parsed()) return cmd_verify(va);
    if (recover->parsed()) return cmd_recover(ra);
    if (pair->parsed()) return cmd_transform_pair(pa);
    if (compare->parsed()) return cmd_compare_windows(wa);
  } catch (const UsageError& e) {
    std::cerr << "pwconc: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "pwconc: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}
