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

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "brauer/layers.hpp"

namespace brauer {

/// Outcome of a sampled equivariance check. passed == (max_residual <= tolerance).
struct VerificationReport {
  std::string subject;
  int trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

/// 1e-9 for O/SO, 1e-7 for Sp.
double default_tolerance(GroupKind group);
/// Loosest default over the factors of a product group.
double default_tolerance(std::span<const Factor> factors);

inline constexpr int kDefaultTrials = 20;
inline constexpr int kProbesPerTrial = 8;
inline constexpr std::uint64_t kDefaultSeed = 20240229;

/**
 * Samples `trials` group elements g and measures
 *
 *     || rho_l(g) C x - C rho_k(g) x ||_inf / (||C||_inf ||x||_inf)
 *
 * on kProbesPerTrial Gaussian probe vectors x per trial, reporting the worst
 * value. rho_0(g) = 1. A zero matrix has residual 0.
 */
VerificationReport check_equivariance(const Eigen::MatrixXd& c, GroupKind group, int n, int k, int l,
                                      int trials, double tol, std::uint64_t seed);
VerificationReport check_equivariance(const SparseIntMatrix& c, GroupKind group, int n, int k, int l,
                                      int trials, double tol, std::uint64_t seed);

/// Same check for a matrix acting between the spaces described by `layout`
/// (its factors and feature dims): each factor gets an independent group
/// element and feature indices are left untouched.
VerificationReport check_equivariance(const SparseIntMatrix& c, const SpanningSet& layout, int trials, double tol,
                                      std::uint64_t seed);

/// Checks every element of the set; the report carries the worst residual.
VerificationReport check_set_equivariance(const SpanningSet& set, int trials, double tol, std::uint64_t seed);

struct RankPolicy {
  enum class Method { Svd, Exact };
  Method method = Method::Svd;
  /// Singular values below relative_threshold * sigma_max are treated as zero;
  /// 0 selects max(rows, cols) * machine epsilon.
  double relative_threshold = 0.0;
};

std::size_t numerical_rank(const Eigen::MatrixXd& m, double relative_threshold = 0.0);
/// Rank of the matrix whose columns are the flattened set elements.
std::size_t span_rank(const SpanningSet& set, RankPolicy policy = {});
/// Exact rank over the rationals by fraction-free elimination.
std::size_t exact_rank(const SpanningSet& set);

/// Thrown when the oracle's unknown count n^{l+k} exceeds OracleOptions::max_size.
class OracleSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct OracleOptions {
  std::uint64_t max_size = 4096;
  /// Restrict to the subspace fixed by the group's signed-permutation
  /// elements before imposing the Lie constraints. The answer is the same;
  /// turning it off solves the full n^{l+k}-unknown system.
  bool symmetry_reduction = true;
};

/**
 * Dimension of Hom_G((R^n)^{⊗k}, (R^n)^{⊗l}) from the defining constraints
 * alone: dρ_l(X) C = C dρ_k(X) for every Lie generator X, plus
 * ρ_l(r) C = C ρ_k(r) for the reflection r when G = O(n). Uses no diagrams.
 */
std::size_t oracle_dimension(GroupKind group, int n, int k, int l, OracleOptions options = {});

/// Whether the spanning set is expected to be linearly independent:
/// 2n >= l+k for O, n >= l+k for Sp; never claimed for SO.
bool basis_regime(GroupKind group, int n, int k, int l);

struct DimensionReport {
  GroupKind group = GroupKind::O;
  int n = 1;
  int k = 0;
  int l = 0;
  std::size_t span_count = 0;
  std::size_t span_rank = 0;
  std::size_t oracle_dim = 0;
  bool basis_regime = false;

  bool rank_matches_oracle() const noexcept { return span_rank == oracle_dim; }
  bool basis_holds() const noexcept { return !basis_regime || span_rank == span_count; }
  bool ok() const noexcept { return rank_matches_oracle() && basis_holds() && span_rank <= span_count; }
};

DimensionReport dimension_report(GroupKind group, int n, int k, int l, OracleOptions options = {});
std::vector<DimensionReport> dims_table(std::span<const Factor> grid, OracleOptions options = {});

std::string to_json(const VerificationReport& report);
std::string to_json(std::span<const DimensionReport> reports);

}  // namespace brauer
