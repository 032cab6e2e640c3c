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

#include <gtest/gtest.h>

#include "brauer/verify.hpp"
#include "json.hpp"

namespace brauer {
namespace {

constexpr std::uint64_t kSeed = 99;

TEST(Equivariance, DiagramMatrixPasses) {
  for (const auto& e : spanning_set(GroupKind::O, 3, 2, 2).elements) {
    const auto r = check_equivariance(e.matrix, GroupKind::O, 3, 2, 2, 20, 1e-9, kSeed);
    EXPECT_TRUE(r.passed);
    EXPECT_LE(r.max_residual, 1e-9);
    EXPECT_EQ(r.trials, 20);
  }
}

TEST(Equivariance, ZeroMatrixPasses) {
  const auto r = check_equivariance(Eigen::MatrixXd::Zero(4, 4), GroupKind::O, 2, 2, 2, 5, 1e-9, kSeed);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.max_residual, 0.0);
}

// A lone matrix unit is not invariant: conjugating by the quarter turn
// e1 -> e2, e2 -> -e1 moves it to a different position.
TEST(Equivariance, MatrixUnitFails) {
  const int n = 2;
  Eigen::MatrixXd unit = Eigen::MatrixXd::Zero(4, 4);
  unit(0, 1) = 1;  // row (1,1), col (1,2)
  Eigen::MatrixXd r(2, 2);
  r << 0, -1, 1, 0;
  Eigen::MatrixXd r2(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r2.block(2 * i, 2 * j, 2, 2) = r(i, j) * r;
  EXPECT_GT((r2 * unit - unit * r2).cwiseAbs().maxCoeff(), 0.5);

  const auto report = check_equivariance(unit, GroupKind::O, n, 2, 2, 20, 1e-9, kSeed);
  EXPECT_FALSE(report.passed);
  EXPECT_GT(report.max_residual, 1e-3);
}

TEST(Equivariance, ShapeMismatchThrows) {
  EXPECT_THROW(check_equivariance(Eigen::MatrixXd::Zero(3, 4), GroupKind::O, 2, 2, 2, 1, 1e-9, kSeed),
               std::invalid_argument);
}

TEST(Equivariance, ScalarShapes) {
  const auto bias = bias_set(GroupKind::Sp, 4, 2);
  ASSERT_EQ(bias.size(), 1u);
  EXPECT_TRUE(check_equivariance(bias.elements[0].matrix, GroupKind::Sp, 4, 0, 2, 20, 1e-7, kSeed).passed);
  const auto proj = spanning_set(GroupKind::O, 3, 2, 0);
  EXPECT_TRUE(check_equivariance(proj.elements[0].matrix, GroupKind::O, 3, 2, 0, 20, 1e-9, kSeed).passed);
}

TEST(Equivariance, SoHIsNotOEquivariant) {
  const auto h = spanning_set(GroupKind::SO, 2, 1, 1).elements[1].matrix;
  EXPECT_TRUE(check_equivariance(h, GroupKind::SO, 2, 1, 1, 20, 1e-9, kSeed).passed);
  EXPECT_FALSE(check_equivariance(h, GroupKind::O, 2, 1, 1, 20, 1e-9, kSeed).passed);
}

TEST(Equivariance, LocalAndFeatureLayouts) {
  const std::vector<Factor> fs{{GroupKind::SO, 2, 1, 1}, {GroupKind::Sp, 2, 2, 0}};
  const auto local = with_features(local_spanning_set(fs), 2, 3);
  ASSERT_FALSE(local.empty());
  EXPECT_TRUE(check_set_equivariance(local, 10, 1e-7, kSeed).passed);

  // H elements of the SO(2) factor break once that factor is O(2)
  SpanningSet wrong = local;
  wrong.factors[0].group = GroupKind::O;
  EXPECT_FALSE(check_set_equivariance(wrong, 10, 1e-7, kSeed).passed);
}

TEST(Tolerance, Defaults) {
  EXPECT_EQ(default_tolerance(GroupKind::O), 1e-9);
  EXPECT_EQ(default_tolerance(GroupKind::Sp), 1e-7);
  const std::vector<Factor> fs{{GroupKind::SO, 2, 1, 1}, {GroupKind::Sp, 2, 1, 1}};
  EXPECT_EQ(default_tolerance(fs), 1e-7);
}

TEST(Rank, Examples) {
  EXPECT_EQ(span_rank(spanning_set(GroupKind::O, 2, 2, 2)), 3u);
  EXPECT_EQ(span_rank(spanning_set(GroupKind::O, 1, 2, 2)), 1u);
  const auto o233 = spanning_set(GroupKind::O, 2, 3, 3);
  EXPECT_LT(span_rank(o233), 15u);
  EXPECT_EQ(span_rank(spanning_set(GroupKind::O, 2, 1, 2)), 0u);
}

TEST(Rank, SvdAgreesWithExact) {
  for (auto g : {GroupKind::O, GroupKind::SO, GroupKind::Sp}) {
    for (int n = 1; n <= 4; ++n) {
      if (g == GroupKind::Sp && n % 2) continue;
      for (int k = 0; k <= 3; ++k) {
        for (int l = 0; l <= 3; ++l) {
          const auto set = spanning_set(g, n, k, l);
          EXPECT_EQ(span_rank(set), exact_rank(set)) << to_string(g) << n << ' ' << k << ' ' << l;
          EXPECT_EQ(span_rank(set, {RankPolicy::Method::Exact, 0.0}), exact_rank(set));
        }
      }
    }
  }
}

TEST(Rank, NumericalRankThreshold) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(3, 3);
  m(2, 2) = 1e-20;
  EXPECT_EQ(numerical_rank(m), 2u);
  EXPECT_EQ(numerical_rank(Eigen::MatrixXd::Zero(2, 2)), 0u);
  EXPECT_EQ(numerical_rank(m, 1e-30), 3u);
}

TEST(Oracle, Examples) {
  EXPECT_EQ(oracle_dimension(GroupKind::O, 2, 1, 1), 1u);
  EXPECT_EQ(oracle_dimension(GroupKind::SO, 2, 1, 1), 2u);
  EXPECT_EQ(oracle_dimension(GroupKind::O, 3, 3, 3), 15u);
  EXPECT_EQ(oracle_dimension(GroupKind::O, 2, 1, 2), 0u);
  EXPECT_EQ(oracle_dimension(GroupKind::Sp, 4, 1, 1), 1u);
  EXPECT_EQ(oracle_dimension(GroupKind::O, 4, 0, 0), 1u);
}

TEST(Oracle, SizeGuard) {
  EXPECT_THROW(oracle_dimension(GroupKind::O, 5, 3, 3), OracleSizeError);
  OracleOptions small;
  small.max_size = 10;
  EXPECT_THROW(oracle_dimension(GroupKind::O, 2, 2, 2, small), OracleSizeError);
  EXPECT_THROW(oracle_dimension(GroupKind::Sp, 3, 1, 1), std::invalid_argument);
}

// The symmetry-reduced solve must agree with the plain dense one.
TEST(Oracle, ReductionMatchesFullSystem) {
  OracleOptions full;
  full.symmetry_reduction = false;
  for (auto g : {GroupKind::O, GroupKind::SO, GroupKind::Sp}) {
    for (int n = 1; n <= 4; ++n) {
      if (g == GroupKind::Sp && n % 2) continue;
      for (int k = 0; k <= 4; ++k) {
        for (int l = 0; l <= 4 - k; ++l) {
          if (ipow(static_cast<std::uint64_t>(n), k + l) > 256) continue;
          EXPECT_EQ(oracle_dimension(g, n, k, l), oracle_dimension(g, n, k, l, full))
              << to_string(g) << n << ' ' << k << ' ' << l;
        }
      }
    }
  }
}

TEST(Oracle, FullSystemForOrderSix) {
  OracleOptions full;
  full.symmetry_reduction = false;
  EXPECT_EQ(oracle_dimension(GroupKind::O, 3, 3, 3, full), 15u);
}

TEST(Dims, ReportsAndJson) {
  const auto r = dimension_report(GroupKind::O, 3, 3, 3);
  EXPECT_EQ(r.span_count, 15u);
  EXPECT_EQ(r.span_rank, 15u);
  EXPECT_EQ(r.oracle_dim, 15u);
  EXPECT_TRUE(r.basis_regime);
  EXPECT_TRUE(r.ok());

  const std::vector<Factor> grid{{GroupKind::Sp, 2, 3, 1}, {GroupKind::O, 2, 1, 2}, {GroupKind::O, 1, 2, 2}};
  const auto table = dims_table(grid);
  ASSERT_EQ(table.size(), 3u);
  EXPECT_EQ(table[0].span_count, 3u);
  EXPECT_EQ(table[0].span_rank, table[0].oracle_dim);
  EXPECT_FALSE(table[0].basis_regime);
  EXPECT_EQ(table[1].span_count, 0u);
  EXPECT_EQ(table[1].oracle_dim, 0u);
  EXPECT_EQ(table[2].span_rank, 1u);
  for (const auto& row : table) EXPECT_TRUE(row.ok());

  const auto doc = nlohmann::json::parse(to_json(std::span<const DimensionReport>(table)));
  EXPECT_EQ(doc[0]["group"], "Sp");
  EXPECT_EQ(doc[2]["span_count"], 3);
  EXPECT_EQ(doc[2]["ok"], true);
  const auto rep = nlohmann::json::parse(to_json(VerificationReport{"x", 3, 0.5, 1.0, true}));
  EXPECT_EQ(rep["max_residual"], 0.5);
}

TEST(Dims, BasisRegimeFlag) {
  EXPECT_TRUE(basis_regime(GroupKind::O, 2, 2, 2));
  EXPECT_FALSE(basis_regime(GroupKind::O, 2, 3, 3));
  EXPECT_TRUE(basis_regime(GroupKind::Sp, 4, 2, 2));
  EXPECT_FALSE(basis_regime(GroupKind::Sp, 2, 3, 1));
  EXPECT_FALSE(basis_regime(GroupKind::SO, 8, 1, 1));
}

}  // namespace
}  // namespace brauer
