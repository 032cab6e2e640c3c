/*
 * Copyright 2026 The brauer Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "brauer/export.hpp"
#include "brauer/verify.hpp"

namespace brauer::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string group;
  int n = 0;
  int k = 0;
  int l = 0;
  int d_k = 1;
  int d_l = 1;
  std::vector<std::string> factors;
  std::string out_path;
  std::string in_path;
  std::string format = "json";         // gen, bias, local
  std::string report_format = "text";  // verify, dims, oracle
  std::uint64_t seed = kDefaultSeed;
  int trials = kDefaultTrials;
  double tol = 0.0;  // 0 = per-group default
  std::uint64_t max_size = OracleOptions{}.max_size;
  bool no_reduction = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string scientific(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << v;
  return os.str();
}

Factor parse_factor(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
  if (parts.size() != 4) throw UsageError("--factor expects GROUP,n,k,l, got '" + text + "'");
  Factor f;
  f.group = parse_group(parts[0]);
  try {
    f.n = std::stoi(parts[1]);
    f.k = std::stoi(parts[2]);
    f.l = std::stoi(parts[3]);
  } catch (const std::exception&) {
    throw UsageError("--factor expects integers for n,k,l, got '" + text + "'");
  }
  return f;
}

std::string factor_stem(const Factor& f) {
  return std::string(to_string(f.group)) + "_n" + std::to_string(f.n) + "_k" + std::to_string(f.k) + "_l" +
         std::to_string(f.l);
}

std::string feature_stem(int d_k, int d_l) {
  if (d_k * d_l == 1) return "";
  return "_dk" + std::to_string(d_k) + "_dl" + std::to_string(d_l);
}

// Writes the set in the chosen format; returns where it went.
std::string emit(const SpanningSet& set, const Options& o, const std::string& stem, std::ostream& out) {
  const bool text = o.format == "text";
  const std::string body = text ? export_text(set) : export_json(set);
  if (o.out_path == "-") {
    out << body;
    return "<stdout>";
  }
  fs::path path = o.out_path;
  if (path.empty()) {
    const char* dir = std::getenv(kOutDirEnv);
    path = fs::path(dir && *dir ? dir : ".") / (stem + (text ? ".txt" : ".json"));
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  file << body;
  if (!file) throw IoError("failed writing '" + path.string() + "'");
  return path.string();
}

int report_written(const SpanningSet& set, const std::string& where, std::ostream& out, std::ostream& err) {
  if (set.empty()) err << "warning: the spanning set is empty (no equivariant maps for these parameters)\n";
  if (where != "<stdout>") out << "wrote " << set.size() << " elements to " << where << '\n';
  return kOk;
}

int run_gen(const Options& o, std::ostream& out, std::ostream& err) {
  const Factor f{parse_group(o.group), o.n, o.k, o.l};
  SpanningSet set = spanning_set(f.group, f.n, f.k, f.l);
  if (o.d_k * o.d_l > 1) set = with_features(set, o.d_k, o.d_l);
  const auto where = emit(set, o, factor_stem(f) + feature_stem(o.d_k, o.d_l), out);
  return report_written(set, where, out, err);
}

int run_bias(const Options& o, std::ostream& out, std::ostream& err) {
  const Factor f{parse_group(o.group), o.n, 0, o.l};
  const SpanningSet set = bias_set(f.group, f.n, f.l);
  const auto where = emit(set, o, factor_stem(f) + "_bias", out);
  return report_written(set, where, out, err);
}

int run_local(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.factors.size() < 2) throw UsageError("local needs at least two --factor options");
  std::vector<Factor> factors;
  std::string stem = "local";
  for (const auto& text : o.factors) {
    factors.push_back(parse_factor(text));
    stem += "_" + factor_stem(factors.back());
  }
  SpanningSet set = local_spanning_set(factors);
  if (o.d_k * o.d_l > 1) set = with_features(set, o.d_k, o.d_l);
  const auto where = emit(set, o, stem + feature_stem(o.d_k, o.d_l), out);
  return report_written(set, where, out, err);
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const SpanningSet set = load_spanning_set(o.in_path);
  const double tol = o.tol > 0.0 ? o.tol : default_tolerance(set.factors);
  if (set.empty()) err << "warning: '" << o.in_path << "' holds no elements; nothing to verify\n";

  VerificationReport worst{o.in_path, o.trials, 0.0, tol, true};
  std::size_t worst_index = 0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto r = check_equivariance(set.elements[i].matrix, set, o.trials, tol, o.seed + i);
    if (r.max_residual > worst.max_residual || i == 0) {
      worst.max_residual = r.max_residual;
      worst_index = i;
    }
  }
  worst.passed = worst.max_residual <= tol;

  if (o.report_format == "json") {
    out << to_json(worst);
  } else {
    out << (worst.passed ? "PASS" : "FAIL") << ' ' << o.in_path << ": " << set.size()
        << " elements, max residual " << scientific(worst.max_residual) << " (tol " << scientific(tol) << ")\n";
  }
  if (!worst.passed) {
    err << "element #" << worst_index + 1 << " (" << set.elements[worst_index].diagram
        << ") is not equivariant\n";
    return kCheckFailed;
  }
  return kOk;
}

OracleOptions oracle_options(const Options& o) {
  OracleOptions opt;
  opt.max_size = o.max_size;
  opt.symmetry_reduction = !o.no_reduction;
  return opt;
}

int run_dims(const Options& o, std::ostream& out, std::ostream& err) {
  const Factor f{parse_group(o.group), o.n, o.k, o.l};
  const std::vector<DimensionReport> reports{dimension_report(f.group, f.n, f.k, f.l, oracle_options(o))};
  const auto& r = reports.front();
  if (o.report_format == "json") {
    out << to_json(reports);
  } else {
    out << to_string(r.group) << '(' << r.n << ") k=" << r.k << " l=" << r.l << "  count=" << r.span_count
        << " rank=" << r.span_rank << " oracle=" << r.oracle_dim
        << " basis_regime=" << (r.basis_regime ? "yes" : "no") << '\n';
  }
  if (!r.rank_matches_oracle()) {
    err << "error: span rank " << r.span_rank << " differs from oracle dimension " << r.oracle_dim << '\n';
  }
  if (!r.basis_holds()) err << "error: set is dependent inside the basis regime\n";
  return r.ok() ? kOk : kCheckFailed;
}

int run_oracle(const Options& o, std::ostream& out, std::ostream&) {
  const GroupKind g = parse_group(o.group);
  const auto dim = oracle_dimension(g, o.n, o.k, o.l, oracle_options(o));
  if (o.report_format == "json") {
    out << "{\"group\": \"" << to_string(g) << "\", \"n\": " << o.n << ", \"k\": " << o.k << ", \"l\": " << o.l
        << ", \"oracle_dim\": " << dim << "}\n";
  } else {
    out << to_string(g) << '(' << o.n << ") k=" << o.k << " l=" << o.l << "  oracle=" << dim << '\n';
  }
  return kOk;
}

void add_group_options(CLI::App* cmd, Options& o, bool with_k) {
  cmd->add_option("--group", o.group, "O, SO or Sp")->required();
  cmd->add_option("--n", o.n, "dimension of the defining representation")->required();
  if (with_k) cmd->add_option("--k", o.k, "input tensor order")->required();
  cmd->add_option("--l", o.l, "output tensor order")->required();
}

void add_output_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out_path,
                  std::string("output file, '-' for stdout (default: $") + kOutDirEnv + " or the working directory)");
  cmd->add_option("--format", o.format, "json (interchange) or text (listing)")
      ->check(CLI::IsMember({"json", "text"}));
}

void add_feature_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--dk", o.d_k, "input feature dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--dl", o.d_l, "output feature dimension")->check(CLI::PositiveNumber);
}

void add_oracle_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-size", o.max_size, "largest n^(l+k) the oracle accepts");
  cmd->add_flag("--no-reduction", o.no_reduction, "solve the full unreduced constraint system");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Equivariant spanning sets for O(n), SO(n) and Sp(n) from Brauer diagrams", "brauer"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "write the spanning set of Hom((R^n)^k, (R^n)^l)");
  add_group_options(gen, o, true);
  add_feature_options(gen, o);
  add_output_options(gen, o);

  auto* bias = app.add_subcommand("bias", "write the invariant vectors usable as biases");
  add_group_options(bias, o, false);
  add_output_options(bias, o);

  auto* local = app.add_subcommand("local", "write the spanning set for a product of groups");
  local->add_option("--factor", o.factors, "GROUP,n,k,l (repeat for each factor)")->required();
  add_feature_options(local, o);
  add_output_options(local, o);

  auto* verify = app.add_subcommand("verify", "check every element of an export file for equivariance");
  verify->add_option("--in", o.in_path, "export file")->required();
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--trials", o.trials, "sampled group elements per element")->check(CLI::PositiveNumber);
  verify->add_option("--tol", o.tol, "residual tolerance (default: 1e-9 O/SO, 1e-7 Sp)");
  verify->add_option("--format", o.report_format, "text (default) or json")->check(CLI::IsMember({"json", "text"}));

  auto* dims = app.add_subcommand("dims", "compare count, span rank and oracle dimension");
  add_group_options(dims, o, true);
  add_oracle_options(dims, o);
  dims->add_option("--format", o.report_format, "text (default) or json")->check(CLI::IsMember({"json", "text"}));

  auto* oracle = app.add_subcommand("oracle", "dimension of the equivariant space from its constraints");
  add_group_options(oracle, o, true);
  add_oracle_options(oracle, o);
  oracle->add_option("--format", o.report_format, "text (default) or json")->check(CLI::IsMember({"json", "text"}));

  std::vector<const char*> argv{"brauer"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return run_gen(o, out, err);
    if (*bias) return run_bias(o, out, err);
    if (*local) return run_local(o, out, err);
    if (*verify) return run_verify(o, out, err);
    if (*dims) return run_dims(o, out, err);
    return run_oracle(o, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OracleSizeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace brauer::cli
