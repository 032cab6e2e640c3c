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

#include "brauer/verify.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace brauer {

double default_tolerance(GroupKind group) { return group == GroupKind::Sp ? 1e-7 : 1e-9; }

double default_tolerance(std::span<const Factor> factors) {
  double tol = 1e-9;
  for (const auto& f : factors) tol = std::max(tol, default_tolerance(f.group));
  return tol;
}

namespace {

using LinearMap = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

// Mode layout of one side (input or output) of a possibly local, featured map.
struct SideLayout {
  std::vector<int> dims;
  std::vector<std::size_t> factor_of_mode;  // npos for the feature mode
};

constexpr std::size_t kFeatureMode = std::numeric_limits<std::size_t>::max();

SideLayout side_layout(const std::vector<Factor>& factors, int features, bool input) {
  SideLayout s;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const int order = input ? factors[f].k : factors[f].l;
    for (int t = 0; t < order; ++t) {
      s.dims.push_back(factors[f].n);
      s.factor_of_mode.push_back(f);
    }
  }
  if (features > 1) {
    s.dims.push_back(features);
    s.factor_of_mode.push_back(kFeatureMode);
  }
  return s;
}

Eigen::VectorXd act(const SideLayout& side, const std::vector<GroupElement>& g, const Eigen::VectorXd& x) {
  std::vector<const Eigen::MatrixXd*> ops;
  ops.reserve(side.dims.size());
  for (std::size_t f : side.factor_of_mode) ops.push_back(f == kFeatureMode ? nullptr : &g[f].matrix());
  return apply_modes(side.dims, ops, x);
}

VerificationReport run_check(const LinearMap& apply_c, double c_norm, std::uint64_t cols,
                             const std::vector<Factor>& factors, int d_k, int d_l, int trials, double tol,
                             std::uint64_t seed, std::string subject) {
  const SideLayout in = side_layout(factors, d_k, true);
  const SideLayout out = side_layout(factors, d_l, false);
  VerificationReport report{std::move(subject), trials, 0.0, tol, true};
  if (c_norm == 0.0) return report;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    std::vector<GroupElement> g;
    g.reserve(factors.size());
    for (const auto& f : factors) g.push_back(sample(f.group, f.n, rng));
    for (int p = 0; p < kProbesPerTrial; ++p) {
      Eigen::VectorXd x(static_cast<Eigen::Index>(cols));
      for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = normal(rng);
      const Eigen::VectorXd lhs = act(out, g, apply_c(x));
      const Eigen::VectorXd rhs = apply_c(act(in, g, x));
      const double scale = c_norm * x.cwiseAbs().maxCoeff();
      report.max_residual = std::max(report.max_residual, (lhs - rhs).cwiseAbs().maxCoeff() / scale);
    }
  }
  report.passed = report.max_residual <= tol;
  return report;
}

double inf_norm(const SparseIntMatrix& c) {
  std::map<std::uint64_t, double> row_sums;
  for (const auto& e : c.entries()) row_sums[e.row] += std::abs(e.value);
  double best = 0.0;
  for (const auto& [r, s] : row_sums) best = std::max(best, s);
  return best;
}

void check_shape(std::uint64_t rows, std::uint64_t cols, int n, int k, int l) {
  const auto un = static_cast<std::uint64_t>(n);
  if (rows != ipow(un, l) || cols != ipow(un, k)) {
    throw std::invalid_argument("check_equivariance: matrix shape does not match n^l x n^k");
  }
}

std::string subject_for(GroupKind group, int n, int k, int l) {
  return std::string(to_string(group)) + "(" + std::to_string(n) + ") k=" + std::to_string(k) +
         " l=" + std::to_string(l);
}

}  // namespace

VerificationReport check_equivariance(const Eigen::MatrixXd& c, GroupKind group, int n, int k, int l, int trials,
                                      double tol, std::uint64_t seed) {
  check_group_dimension(group, n);
  check_shape(static_cast<std::uint64_t>(c.rows()), static_cast<std::uint64_t>(c.cols()), n, k, l);
  const double norm = c.size() == 0 ? 0.0 : c.cwiseAbs().rowwise().sum().maxCoeff();
  return run_check([&c](const Eigen::VectorXd& x) -> Eigen::VectorXd { return c * x; }, norm,
                   static_cast<std::uint64_t>(c.cols()), {{group, n, k, l}}, 1,
                   1, trials, tol, seed, subject_for(group, n, k, l));
}

VerificationReport check_equivariance(const SparseIntMatrix& c, GroupKind group, int n, int k, int l, int trials,
                                      double tol, std::uint64_t seed) {
  check_group_dimension(group, n);
  check_shape(c.rows(), c.cols(), n, k, l);
  return run_check([&c](const Eigen::VectorXd& x) { return c.apply(x); }, inf_norm(c), c.cols(),
                   {{group, n, k, l}}, 1, 1, trials, tol, seed, subject_for(group, n, k, l));
}

VerificationReport check_equivariance(const SparseIntMatrix& c, const SpanningSet& layout, int trials, double tol,
                                      std::uint64_t seed) {
  if (layout.factors.empty()) throw std::invalid_argument("check_equivariance: layout has no factors");
  for (const auto& f : layout.factors) check_group_dimension(f.group, f.n);
  if (c.rows() != layout.rows() || c.cols() != layout.cols()) {
    throw std::invalid_argument("check_equivariance: matrix shape does not match layout");
  }
  std::string subject;
  for (const auto& f : layout.factors) subject += (subject.empty() ? "" : " x ") + subject_for(f.group, f.n, f.k, f.l);
  return run_check([&c](const Eigen::VectorXd& x) { return c.apply(x); }, inf_norm(c), c.cols(),
                   layout.factors, layout.d_k, layout.d_l, trials, tol, seed, std::move(subject));
}

VerificationReport check_set_equivariance(const SpanningSet& set, int trials, double tol, std::uint64_t seed) {
  VerificationReport worst{"", trials, 0.0, tol, true};
  for (const auto& f : set.factors) {
    worst.subject += (worst.subject.empty() ? "" : " x ") + subject_for(f.group, f.n, f.k, f.l);
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto r = check_equivariance(set.elements[i].matrix, set, trials, tol, seed + i);
    worst.max_residual = std::max(worst.max_residual, r.max_residual);
  }
  worst.passed = worst.max_residual <= tol;
  return worst;
}

std::size_t numerical_rank(const Eigen::MatrixXd& m, double relative_threshold) {
  if (m.size() == 0) return 0;
  // Householder QR first, then one-sided Jacobi on the small square factor.
  // The factor has the same singular values; Jacobi resolves the clustered,
  // exactly-zero ones that BDCSVD can report as O(1e-8).
  const bool tall = m.rows() >= m.cols();
  const Eigen::Index side = std::min(m.rows(), m.cols());
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(tall ? m : Eigen::MatrixXd(m.transpose()));
  const Eigen::MatrixXd r = qr.matrixQR().topRows(side).triangularView<Eigen::Upper>();
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(r);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return 0;
  const double rel = relative_threshold > 0.0
                         ? relative_threshold
                         : static_cast<double>(std::max(m.rows(), m.cols())) * std::numeric_limits<double>::epsilon();
  const double cut = rel * s[0];
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > cut) ++rank;
  }
  return rank;
}

std::size_t span_rank(const SpanningSet& set, RankPolicy policy) {
  if (set.empty()) return 0;
  if (policy.method == RankPolicy::Method::Exact) return exact_rank(set);
  const std::uint64_t cols = set.cols();
  Eigen::MatrixXd stacked = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(set.rows() * cols),
                                                  static_cast<Eigen::Index>(set.size()));
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (const auto& e : set.elements[i].matrix.entries()) {
      stacked(static_cast<Eigen::Index>(e.row * cols + e.col), static_cast<Eigen::Index>(i)) = e.value;
    }
  }
  return numerical_rank(stacked, policy.relative_threshold);
}

std::size_t exact_rank(const SpanningSet& set) {
  using boost::multiprecision::cpp_int;
  if (set.empty()) return 0;
  const std::uint64_t cols = set.cols();

  // Only positions where some element is nonzero can carry a pivot.
  std::map<std::uint64_t, std::size_t> position;
  for (const auto& e : set.elements) {
    for (const auto& x : e.matrix.entries()) position.emplace(x.row * cols + x.col, 0);
  }
  std::size_t next = 0;
  for (auto& [pos, idx] : position) idx = next++;

  const std::size_t m = set.size();
  std::vector<std::vector<cpp_int>> a(m, std::vector<cpp_int>(position.size()));
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& x : set.elements[i].matrix.entries()) a[i][position.at(x.row * cols + x.col)] = x.value;
  }

  // Fraction-free (Bareiss) elimination; every division below is exact.
  cpp_int prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < position.size() && rank < m; ++c) {
    std::size_t pivot = rank;
    while (pivot < m && a[pivot][c] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < position.size(); ++j) {
        a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["subject"] = report.subject;
  j["trials"] = report.trials;
  j["max_residual"] = report.max_residual;
  j["tolerance"] = report.tolerance;
  j["passed"] = report.passed;
  return j.dump(2) + "\n";
}

std::string to_json(std::span<const DimensionReport> reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["group"] = std::string(to_string(r.group));
    j["n"] = r.n;
    j["k"] = r.k;
    j["l"] = r.l;
    j["span_count"] = r.span_count;
    j["span_rank"] = r.span_rank;
    j["oracle_dim"] = r.oracle_dim;
    j["basis_regime"] = r.basis_regime;
    j["ok"] = r.ok();
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace brauer
