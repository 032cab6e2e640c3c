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

#include "brauer/layers.hpp"
#include "brauer/verify.hpp"
#include "support/dense_eval.hpp"

namespace brauer {
namespace {

std::shared_ptr<const SpanningSet> share(SpanningSet s) { return std::make_shared<const SpanningSet>(std::move(s)); }

std::vector<double> random_weights(std::size_t count, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<double> w(count);
  for (auto& x : w) x = normal(rng);
  return w;
}

TEST(SpanningSet, CountsAndOrder) {
  const auto o = spanning_set(GroupKind::O, 2, 2, 2);
  EXPECT_EQ(o.size(), 3u);
  EXPECT_EQ(o.rows(), 4u);
  EXPECT_EQ(o.elements[0].diagram, "B 2 2 : (1,2)(3,4)");

  const auto so = spanning_set(GroupKind::SO, 2, 3, 1);
  ASSERT_EQ(so.size(), 9u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(so.elements[i].kind, "E");
  for (int i = 3; i < 9; ++i) EXPECT_EQ(so.elements[i].kind, "H");

  const auto sp = spanning_set(GroupKind::Sp, 2, 3, 1);
  ASSERT_EQ(sp.size(), 3u);
  EXPECT_EQ(sp.elements[0].kind, "F");

  EXPECT_TRUE(spanning_set(GroupKind::O, 3, 1, 2).empty());
  EXPECT_THROW(spanning_set(GroupKind::Sp, 3, 1, 1), std::invalid_argument);
  EXPECT_THROW(spanning_set(GroupKind::O, 2, -1, 1), std::invalid_argument);
}

TEST(SpanningSet, SizeMatchesCountFormula) {
  for (auto g : {GroupKind::O, GroupKind::SO, GroupKind::Sp}) {
    for (int n = 1; n <= 4; ++n) {
      if (g == GroupKind::Sp && n % 2) continue;
      for (int k = 0; k <= 4; ++k) {
        for (int l = 0; l <= 4; ++l) {
          std::uint64_t expected = count_brauer(k, l);
          if (g == GroupKind::SO) expected += count_grood(k, l, n);
          const auto set = spanning_set(g, n, k, l);
          EXPECT_EQ(set.size(), expected);
          EXPECT_EQ(expected_count(g, n, k, l), expected);
        }
      }
    }
  }
}

TEST(Features, CountsAndLayout) {
  const auto base = spanning_set(GroupKind::O, 2, 2, 2);
  const auto feat = with_features(base, 2, 2);
  EXPECT_EQ(feat.size(), 12u);
  EXPECT_EQ(feat.rows(), 8u);
  EXPECT_EQ(feat.cols(), 8u);

  const auto same = with_features(spanning_set(GroupKind::O, 3, 1, 1), 1, 1);
  EXPECT_EQ(same.size(), 1u);
  EXPECT_EQ(same.elements[0].matrix, spanning_set(GroupKind::O, 3, 1, 1).elements[0].matrix);

  EXPECT_THROW(with_features(base, 0, 1), std::invalid_argument);
  EXPECT_THROW(with_features(feat, 2, 2), std::invalid_argument);
}

// Base entry (I, J) with feature unit (i, j) sits at row I*d_l + i, col J*d_k + j
// (0-based), i.e. base ⊗ E_ij with the tensor index major.
TEST(Features, MatchesDenseKronecker) {
  const auto base = spanning_set(GroupKind::SO, 2, 1, 1);
  const int d_k = 3, d_l = 2;
  const auto feat = with_features(base, d_k, d_l);
  std::size_t idx = 0;
  for (const auto& b : base.elements) {
    for (int i = 1; i <= d_l; ++i) {
      for (int j = 1; j <= d_k; ++j) {
        const auto& e = feat.elements[idx++];
        EXPECT_EQ(e.feature_row, i);
        EXPECT_EQ(e.feature_col, j);
        EXPECT_EQ(e.diagram, b.diagram);
        Eigen::MatrixXd unit = Eigen::MatrixXd::Zero(d_l, d_k);
        unit(i - 1, j - 1) = 1;
        const Eigen::MatrixXd bd = b.matrix.to_dense();
        Eigen::MatrixXd expected(bd.rows() * d_l, bd.cols() * d_k);
        for (Eigen::Index r = 0; r < bd.rows(); ++r)
          for (Eigen::Index c = 0; c < bd.cols(); ++c) expected.block(r * d_l, c * d_k, d_l, d_k) = bd(r, c) * unit;
        EXPECT_EQ(e.matrix.to_dense(), expected);
      }
    }
  }
}

TEST(Bias, Examples) {
  const auto o = bias_set(GroupKind::O, 3, 2);
  ASSERT_EQ(o.size(), 1u);
  EXPECT_EQ(o.cols(), 1u);
  Eigen::MatrixXd delta = Eigen::MatrixXd::Zero(9, 1);
  for (int i = 0; i < 3; ++i) delta(4 * i, 0) = 1;  // δ_{i1,i2}
  EXPECT_EQ(o.elements[0].matrix.to_dense(), delta);
  EXPECT_TRUE(bias_set(GroupKind::O, 3, 1).empty());
  const auto so = bias_set(GroupKind::SO, 2, 2);
  ASSERT_EQ(so.size(), 2u);
  EXPECT_EQ(so.elements[1].kind, "H");
}

TEST(Local, Examples) {
  const std::vector<Factor> so{{GroupKind::SO, 3, 3, 3}, {GroupKind::SO, 3, 1, 2}};
  const auto a = local_spanning_set(so);
  EXPECT_EQ(a.size(), 15u);
  EXPECT_EQ(a.rows(), 27u * 9u);
  EXPECT_EQ(a.cols(), 27u * 3u);
  EXPECT_EQ(a.elements[0].kind, "E|H");

  const std::vector<Factor> o{{GroupKind::O, 2, 2, 2}, {GroupKind::O, 2, 1, 1}};
  const auto b = local_spanning_set(o);
  EXPECT_EQ(b.size(), 3u);
  EXPECT_EQ(b.rows(), 8u);  // (R^2)^{⊗2} ⊗ R^2
  EXPECT_EQ(b.cols(), 8u);

  const std::vector<Factor> empty{{GroupKind::O, 2, 2, 2}, {GroupKind::O, 2, 1, 2}};
  EXPECT_TRUE(local_spanning_set(empty).empty());
  EXPECT_THROW(local_spanning_set(std::vector<Factor>{}), std::invalid_argument);
}

TEST(Local, ElementsAreKroneckerProductsInLexOrder) {
  const std::vector<Factor> fs{{GroupKind::O, 2, 1, 1}, {GroupKind::SO, 2, 1, 1}};
  const auto set = local_spanning_set(fs);
  const auto a = spanning_set(GroupKind::O, 2, 1, 1);
  const auto b = spanning_set(GroupKind::SO, 2, 1, 1);
  ASSERT_EQ(set.size(), a.size() * b.size());
  std::size_t idx = 0;
  for (const auto& x : a.elements)
    for (const auto& y : b.elements) EXPECT_EQ(set.elements[idx++].matrix, kron(x.matrix, y.matrix));
}

TEST(Assemble, Examples) {
  auto set = share(spanning_set(GroupKind::O, 2, 2, 2));
  LayerSpec spec{set, {1, 0, 0}, nullptr, {}, Activation::Identity};
  EXPECT_EQ(assemble_layer(spec), set->elements[0].matrix.to_dense());

  spec.weights = {0, 0, 0};
  EXPECT_TRUE(assemble_layer(spec).isZero());

  spec.weights = {2, 3, 5};
  const auto m = assemble_layer(spec);
  EXPECT_EQ(m(0, 0), 10);  // row (1,1), col (1,1): all three
  EXPECT_EQ(m(1, 2), 5);   // row (1,2), col (2,1): the swap only

  spec.weights = {1, 2};
  EXPECT_THROW(assemble_layer(spec), std::invalid_argument);
}

TEST(Forward, SingleLayerAndZero) {
  auto set = share(spanning_set(GroupKind::O, 2, 2, 2));
  const Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(4, 1, 4);
  const std::vector<LayerSpec> one{{set, {0, 0, 1}, nullptr, {}, Activation::Identity}};
  EXPECT_EQ(forward(one, x), set->elements[2].matrix.to_dense() * x);

  auto bias = share(bias_set(GroupKind::O, 2, 2));
  const std::vector<LayerSpec> zero{{set, {0, 0, 0}, bias, {0}, Activation::Identity}};
  EXPECT_TRUE(forward(zero, x).isZero());
}

TEST(Forward, TwoLayerCompositionAndBias) {
  std::mt19937_64 rng(9);
  auto lift = share(spanning_set(GroupKind::SO, 3, 1, 3));  // 3 -> 27
  auto mix = share(spanning_set(GroupKind::SO, 3, 3, 3));   // 27 -> 27
  auto bias = share(bias_set(GroupKind::SO, 3, 3));        // the determinant tensor
  ASSERT_FALSE(bias->empty());
  const std::vector<LayerSpec> net{
      {lift, random_weights(lift->size(), rng), nullptr, {}, Activation::Identity},
      {mix, random_weights(mix->size(), rng), nullptr, {}, Activation::Identity}};
  const Eigen::VectorXd x = Eigen::VectorXd::Random(3);
  const Eigen::VectorXd direct = assemble_layer(net[1]) * (assemble_layer(net[0]) * x);
  EXPECT_LE((forward(net, x) - direct).cwiseAbs().maxCoeff(), 1e-12);

  // bias on the second layer is added after its linear map
  auto with_bias = net;
  with_bias[1].bias = bias;
  with_bias[1].bias_weights = random_weights(bias->size(), rng);
  EXPECT_LE((forward(with_bias, x) - direct - assemble_bias(with_bias[1])).cwiseAbs().maxCoeff(), 1e-12);

  const std::vector<LayerSpec> mismatched{net[1], net[0]};
  EXPECT_THROW(forward(mismatched, Eigen::VectorXd::Random(27)), std::invalid_argument);
}

TEST(Forward, Activations) {
  auto set = share(spanning_set(GroupKind::O, 1, 1, 1));
  Eigen::VectorXd x(1);
  x << -2.0;
  std::vector<LayerSpec> net{{set, {1}, nullptr, {}, Activation::Relu}};
  EXPECT_EQ(forward(net, x)[0], 0.0);
  net[0].activation = Activation::Tanh;
  EXPECT_DOUBLE_EQ(forward(net, x)[0], std::tanh(-2.0));
  EXPECT_EQ(parse_activation("relu"), Activation::Relu);
  EXPECT_EQ(to_string(Activation::Tanh), "tanh");
  EXPECT_THROW(parse_activation("softmax"), std::invalid_argument);
}

// forward(ρ_k(g) x) = ρ_l(g) forward(x) for a two-layer identity-activation network.
TEST(Forward, NetworkIsEquivariant) {
  std::mt19937_64 rng(13);
  for (auto group : {GroupKind::O, GroupKind::SO, GroupKind::Sp}) {
    const int n = group == GroupKind::O ? 3 : 2;
    auto l1 = share(spanning_set(group, n, 2, 2));
    auto l2 = share(spanning_set(group, n, 2, 2));
    auto bias = share(bias_set(group, n, 2));
    const std::vector<LayerSpec> net{
        {l1, random_weights(l1->size(), rng), bias, random_weights(bias->size(), rng), Activation::Identity},
        {l2, random_weights(l2->size(), rng), bias, random_weights(bias->size(), rng), Activation::Identity}};
    const Eigen::VectorXd x = Eigen::VectorXd::Random(n * n);
    for (int t = 0; t < 5; ++t) {
      const auto g = sample(group, n, rng).matrix();
      const Eigen::VectorXd lhs = forward(net, tensor_power_apply(g, 2, x));
      const Eigen::VectorXd rhs = tensor_power_apply(g, 2, forward(net, x));
      EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff() / (1 + rhs.cwiseAbs().maxCoeff()), 1e-8) << to_string(group);
    }
  }
}

TEST(Assemble, LayersAreEquivariant) {
  std::mt19937_64 rng(17);
  for (auto group : {GroupKind::O, GroupKind::SO, GroupKind::Sp}) {
    for (int n = 1; n <= 4; ++n) {
      if (group == GroupKind::Sp && n % 2) continue;
      for (int k = 0; k <= 3; ++k) {
        for (int l = 0; l <= 3; ++l) {
          auto set = share(spanning_set(group, n, k, l));
          if (set->empty()) continue;
          const LayerSpec spec{set, random_weights(set->size(), rng), nullptr, {}, Activation::Identity};
          const auto r = check_equivariance(assemble_layer(spec), group, n, k, l, 20, default_tolerance(group), 5);
          EXPECT_TRUE(r.passed) << r.subject << " residual " << r.max_residual;
        }
      }
    }
  }
}

}  // namespace
}  // namespace brauer
