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
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "brauer/groups.hpp"
#include "brauer/spanmat.hpp"

namespace brauer {

/// One group acting on (R^n)^{⊗k} -> (R^n)^{⊗l}.
struct Factor {
  GroupKind group = GroupKind::O;
  int n = 1;
  int k = 0;
  int l = 0;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// A spanning-set member. `kind` is "E", "F" or "H" for a single factor and
/// the factor kinds joined with '|' for local-symmetry products; `diagram` is
/// the serialized source diagram(s), joined with " | " for products.
/// Feature indices are 1-based; 0 means the set carries no feature extension.
struct SpanElement {
  std::string kind;
  std::string diagram;
  int feature_row = 0;
  int feature_col = 0;
  SparseIntMatrix matrix;

  friend bool operator==(const SpanElement&, const SpanElement&) = default;
};

/**
 * Ordered spanning set for Hom_G(V_in, V_out).
 *
 * V_in = (R^{n_1})^{⊗k_1} ⊗ ... ⊗ (R^{n_p})^{⊗k_p} ⊗ R^{d_k}, flattened with
 * the first factor most significant and the feature index least significant;
 * V_out likewise with l_r and d_l. The element order is the public weight
 * indexing: E (or F) elements in diagram order, then H elements in diagram
 * order; products in lexicographic order of factor element indices; feature
 * units (i, j) innermost with j fastest.
 */
struct SpanningSet {
  std::vector<Factor> factors;
  int d_k = 1;
  int d_l = 1;
  std::vector<SpanElement> elements;

  std::uint64_t rows() const;
  std::uint64_t cols() const;
  std::size_t size() const noexcept { return elements.size(); }
  bool empty() const noexcept { return elements.empty(); }
  bool is_local() const noexcept { return factors.size() > 1; }
};

/// Number of elements spanning_set(group, n, k, l) produces.
std::uint64_t expected_count(GroupKind group, int n, int k, int l);

/// O: {E_beta}; Sp: {F_beta}; SO: {E_beta} followed by {H_alpha}.
/// Throws std::invalid_argument for n < 1, negative orders, or odd n with Sp.
SpanningSet spanning_set(GroupKind group, int n, int k, int l);

/// Tensors every element with each feature matrix unit E_{i,j}, i in [d_l], j in [d_k].
/// Requires a base set without features and positive dims.
SpanningSet with_features(const SpanningSet& set, int d_k, int d_l);

/// spanning_set(group, n, 0, l): invariant vectors usable as equivariant biases.
SpanningSet bias_set(GroupKind group, int n, int l);

/// Kronecker products of the per-factor spanning sets. Requires at least one factor.
SpanningSet local_spanning_set(std::span<const Factor> factors);

enum class Activation { Identity, Relu, Tanh };
std::string_view to_string(Activation a);
Activation parse_activation(std::string_view text);

struct LayerSpec {
  std::shared_ptr<const SpanningSet> set;
  std::vector<double> weights;
  std::shared_ptr<const SpanningSet> bias;  ///< optional; column vectors of length set->rows()
  std::vector<double> bias_weights;
  Activation activation = Activation::Identity;
};

/// Dense sum_i weights[i] * element_i.
Eigen::MatrixXd assemble_layer(const LayerSpec& spec);
/// Dense sum_i bias_weights[i] * bias_i, or a zero vector without a bias set.
Eigen::VectorXd assemble_bias(const LayerSpec& spec);

/// Applies sigma(W x + b) layer by layer.
Eigen::VectorXd forward(std::span<const LayerSpec> network, const Eigen::VectorXd& x);

}  // namespace brauer
