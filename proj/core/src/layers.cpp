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

#include "brauer/layers.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace brauer {

std::uint64_t SpanningSet::rows() const {
  std::uint64_t r = static_cast<std::uint64_t>(d_l);
  for (const auto& f : factors) r *= ipow(static_cast<std::uint64_t>(f.n), f.l);
  return r;
}

std::uint64_t SpanningSet::cols() const {
  std::uint64_t c = static_cast<std::uint64_t>(d_k);
  for (const auto& f : factors) c *= ipow(static_cast<std::uint64_t>(f.n), f.k);
  return c;
}

namespace {

void check_factor(const Factor& f) {
  check_group_dimension(f.group, f.n);
  if (f.k < 0 || f.l < 0) throw std::invalid_argument("tensor orders must be non-negative");
}

SpanElement from_equivariant(SparseEquivariantMatrix m) {
  return {std::string(to_string(m.kind)), std::move(m.source), 0, 0, std::move(m.matrix)};
}

}  // namespace

std::uint64_t expected_count(GroupKind group, int n, int k, int l) {
  std::uint64_t count = count_brauer(k, l);
  if (group == GroupKind::SO) count += count_grood(k, l, n);
  return count;
}

SpanningSet spanning_set(GroupKind group, int n, int k, int l) {
  const Factor factor{group, n, k, l};
  check_factor(factor);
  SpanningSet set;
  set.factors = {factor};
  set.elements.reserve(expected_count(group, n, k, l));
  for (const auto& d : enumerate_brauer(k, l)) {
    set.elements.push_back(from_equivariant(group == GroupKind::Sp ? build_F(d, n) : build_E(d, n)));
  }
  if (group == GroupKind::SO) {
    for (const auto& d : enumerate_grood(k, l, n)) set.elements.push_back(from_equivariant(build_H(d, n)));
  }
  return set;
}

SpanningSet with_features(const SpanningSet& set, int d_k, int d_l) {
  if (d_k < 1 || d_l < 1) throw std::invalid_argument("feature dimensions must be positive");
  if (set.d_k != 1 || set.d_l != 1) throw std::invalid_argument("spanning set already carries features");
  SpanningSet out;
  out.factors = set.factors;
  out.d_k = d_k;
  out.d_l = d_l;
  out.elements.reserve(set.size() * static_cast<std::size_t>(d_k * d_l));
  const auto dk = static_cast<std::uint64_t>(d_k);
  const auto dl = static_cast<std::uint64_t>(d_l);
  for (const auto& e : set.elements) {
    for (int i = 1; i <= d_l; ++i) {
      for (int j = 1; j <= d_k; ++j) {
        const SparseIntMatrix unit(dl, dk, {{static_cast<std::uint64_t>(i - 1), static_cast<std::uint64_t>(j - 1), 1}});
        out.elements.push_back({e.kind, e.diagram, i, j, kron(e.matrix, unit)});
      }
    }
  }
  return out;
}

SpanningSet bias_set(GroupKind group, int n, int l) { return spanning_set(group, n, 0, l); }

SpanningSet local_spanning_set(std::span<const Factor> factors) {
  if (factors.empty()) throw std::invalid_argument("local spanning set needs at least one factor");
  SpanningSet out;
  out.factors.assign(factors.begin(), factors.end());

  std::vector<SpanningSet> parts;
  parts.reserve(factors.size());
  for (const auto& f : factors) {
    parts.push_back(spanning_set(f.group, f.n, f.k, f.l));
    if (parts.back().empty()) return out;
  }

  // Odometer over factor element indices, last factor fastest.
  std::vector<std::size_t> idx(parts.size(), 0);
  while (true) {
    SpanElement e = parts[0].elements[idx[0]];
    for (std::size_t p = 1; p < parts.size(); ++p) {
      const auto& next = parts[p].elements[idx[p]];
      e.kind += "|" + next.kind;
      e.diagram += " | " + next.diagram;
      e.matrix = kron(e.matrix, next.matrix);
    }
    out.elements.push_back(std::move(e));

    std::size_t p = parts.size();
    while (p > 0) {
      --p;
      if (++idx[p] < parts[p].size()) break;
      idx[p] = 0;
      if (p == 0) return out;
    }
  }
}

std::string_view to_string(Activation a) {
  switch (a) {
    case Activation::Identity: return "identity";
    case Activation::Relu: return "relu";
    case Activation::Tanh: return "tanh";
  }
  return "?";
}

Activation parse_activation(std::string_view text) {
  if (text == "identity") return Activation::Identity;
  if (text == "relu") return Activation::Relu;
  if (text == "tanh") return Activation::Tanh;
  throw std::invalid_argument("unknown activation '" + std::string(text) + "'");
}

Eigen::MatrixXd assemble_layer(const LayerSpec& spec) {
  if (!spec.set) throw std::invalid_argument("layer has no spanning set");
  const auto& set = *spec.set;
  if (spec.weights.size() != set.size()) {
    throw std::invalid_argument("layer weight count " + std::to_string(spec.weights.size()) +
                                " does not match spanning set size " + std::to_string(set.size()));
  }
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(set.rows()), static_cast<Eigen::Index>(set.cols()));
  for (std::size_t i = 0; i < set.size(); ++i) {
    const double w = spec.weights[i];
    if (w == 0.0) continue;
    for (const auto& e : set.elements[i].matrix.entries()) {
      out(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) += w * e.value;
    }
  }
  return out;
}

Eigen::VectorXd assemble_bias(const LayerSpec& spec) {
  if (!spec.set) throw std::invalid_argument("layer has no spanning set");
  const auto rows = static_cast<Eigen::Index>(spec.set->rows());
  Eigen::VectorXd out = Eigen::VectorXd::Zero(rows);
  if (!spec.bias) {
    if (!spec.bias_weights.empty()) throw std::invalid_argument("bias weights given without a bias set");
    return out;
  }
  const auto& bias = *spec.bias;
  if (bias.cols() != 1 || static_cast<Eigen::Index>(bias.rows()) != rows) {
    throw std::invalid_argument("bias set shape does not match layer output");
  }
  if (spec.bias_weights.size() != bias.size()) throw std::invalid_argument("bias weight count mismatch");
  for (std::size_t i = 0; i < bias.size(); ++i) {
    for (const auto& e : bias.elements[i].matrix.entries()) {
      out[static_cast<Eigen::Index>(e.row)] += spec.bias_weights[i] * e.value;
    }
  }
  return out;
}

Eigen::VectorXd forward(std::span<const LayerSpec> network, const Eigen::VectorXd& x) {
  Eigen::VectorXd cur = x;
  for (std::size_t i = 0; i < network.size(); ++i) {
    const auto& layer = network[i];
    if (!layer.set) throw std::invalid_argument("layer has no spanning set");
    if (static_cast<std::uint64_t>(cur.size()) != layer.set->cols()) {
      throw std::invalid_argument("layer " + std::to_string(i) + " expects input length " +
                                  std::to_string(layer.set->cols()) + ", got " + std::to_string(cur.size()));
    }
    Eigen::VectorXd y = assemble_layer(layer) * cur + assemble_bias(layer);
    switch (layer.activation) {
      case Activation::Identity: break;
      case Activation::Relu: y = y.cwiseMax(0.0); break;
      case Activation::Tanh: y = y.array().tanh().matrix(); break;
    }
    cur = std::move(y);
  }
  return cur;
}

}  // namespace brauer
