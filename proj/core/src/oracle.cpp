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

// Brute-force dimension of the equivariant Hom-space.
//
// vec(C) (row-major, C[I,J] at I * n^k + J) lives in (R^n)^{⊗(l+k)}. The
// infinitesimal condition dρ_l(X) C = C dρ_k(X) becomes L_X vec(C) = 0 with
// L_X = sum over the first l modes of X minus sum over the last k modes of X^T.
// For orthogonal g the finite condition ρ_l(g) C ρ_k(g)^{-1} = C becomes
// g^{⊗(l+k)} vec(C) = vec(C).

#include <cmath>
#include <numeric>

#include "brauer/verify.hpp"

namespace brauer {
namespace {

// g e_b = sign[b] e_{target[b]}
struct SignedPermutation {
  std::vector<int> target;
  std::vector<int> sign;
};

SignedPermutation as_signed_permutation(const GroupElement& g) {
  const int n = g.n();
  SignedPermutation p{std::vector<int>(n), std::vector<int>(n)};
  for (int b = 0; b < n; ++b) {
    int hits = 0;
    for (int a = 0; a < n; ++a) {
      const double v = g.matrix()(a, b);
      if (v == 0.0) continue;
      if (v != 1.0 && v != -1.0) throw std::logic_error("not a signed permutation");
      p.target[b] = a;
      p.sign[b] = v > 0 ? 1 : -1;
      ++hits;
    }
    if (hits != 1) throw std::logic_error("not a signed permutation");
  }
  return p;
}

// Signed-permutation matrices that belong to the group. They generate a
// finite subgroup whose fixed space contains the answer.
std::vector<GroupElement> discrete_elements(GroupKind group, int n) {
  std::vector<GroupElement> out;
  if (group == GroupKind::Sp) {
    for (int a = 0; a + 1 < n; a += 2) {
      Eigen::MatrixXd j = Eigen::MatrixXd::Identity(n, n);
      j(a, a) = 0.0;
      j(a + 1, a + 1) = 0.0;
      j(a, a + 1) = 1.0;
      j(a + 1, a) = -1.0;
      out.emplace_back(group, std::move(j));
    }
    for (int a = 0; a + 3 < n; a += 2) {
      Eigen::MatrixXd s = Eigen::MatrixXd::Identity(n, n);
      s.block(a, a, 4, 4).setZero();
      s(a, a + 2) = s(a + 2, a) = s(a + 1, a + 3) = s(a + 3, a + 1) = 1.0;
      out.emplace_back(group, std::move(s));
    }
    return out;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      // quarter turn in the (a, b) plane: e_a -> e_b, e_b -> -e_a
      Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
      r(a, a) = r(b, b) = 0.0;
      r(b, a) = 1.0;
      r(a, b) = -1.0;
      out.emplace_back(group, std::move(r));
    }
  }
  if (group == GroupKind::O) {
    for (auto& rep : component_reps(group, n)) out.push_back(std::move(rep));
  }
  return out;
}

// Union-find over multi-indices where each node also stores the sign
// relating its coefficient to its root's (v_x = parity[x] * v_root).
class SignedUnionFind {
 public:
  explicit SignedUnionFind(std::size_t size) : parent_(size), parity_(size, 1), zero_(size, false) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::pair<std::size_t, int> find(std::size_t x) {
    int sign = 1;
    std::size_t root = x;
    while (parent_[root] != root) {
      sign *= parity_[root];
      root = parent_[root];
    }
    // path compression
    int s = sign;
    while (parent_[x] != root) {
      const std::size_t up = parent_[x];
      const int up_sign = s * parity_[x];
      parent_[x] = root;
      parity_[x] = s;
      x = up;
      s = up_sign;
    }
    return {root, sign};
  }

  // Imposes v_y = sign * v_x.
  void relate(std::size_t x, std::size_t y, int sign) {
    auto [rx, sx] = find(x);
    auto [ry, sy] = find(y);
    if (rx == ry) {
      if (sy != sign * sx) zero_[rx] = true;
      return;
    }
    // v_ry = sy * v_y = sy * sign * sx * v_rx
    parent_[ry] = rx;
    parity_[ry] = sy * sign * sx;
    zero_[rx] = zero_[rx] || zero_[ry];
  }

  bool is_zero_root(std::size_t root) const { return zero_[root]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
  std::vector<bool> zero_;
};

// Orthonormal basis (as columns) of the subspace fixed by the given signed permutations.
Eigen::MatrixXd fixed_subspace(const std::vector<SignedPermutation>& perms, int n, int modes) {
  const std::uint64_t size = ipow(static_cast<std::uint64_t>(n), modes);
  SignedUnionFind uf(size);
  std::vector<int> digits(static_cast<std::size_t>(modes));
  for (const auto& p : perms) {
    for (std::uint64_t x = 0; x < size; ++x) {
      std::uint64_t rem = x;
      for (int t = modes - 1; t >= 0; --t) {
        digits[t] = static_cast<int>(rem % static_cast<std::uint64_t>(n));
        rem /= static_cast<std::uint64_t>(n);
      }
      std::uint64_t y = 0;
      int sign = 1;
      for (int t = 0; t < modes; ++t) {
        y = y * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(p.target[digits[t]]);
        sign *= p.sign[digits[t]];
      }
      // g v = v  <=>  v_{g x} = sign * v_x
      uf.relate(x, y, sign);
    }
  }

  std::vector<std::vector<std::pair<std::uint64_t, int>>> classes;
  std::vector<std::ptrdiff_t> class_of_root(size, -1);
  for (std::uint64_t x = 0; x < size; ++x) {
    auto [root, sign] = uf.find(x);
    if (uf.is_zero_root(root)) continue;
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<std::ptrdiff_t>(classes.size());
      classes.emplace_back();
    }
    classes[class_of_root[root]].emplace_back(x, sign);
  }

  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(classes.size()));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const double w = 1.0 / std::sqrt(static_cast<double>(classes[c].size()));
    for (const auto& [x, sign] : classes[c]) basis(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(c)) = sign * w;
  }
  return basis;
}

// Sum over modes of one operator acting on a single mode.
Eigen::VectorXd apply_mode_sum(const std::vector<int>& dims, const std::vector<const Eigen::MatrixXd*>& per_mode,
                               const Eigen::VectorXd& v) {
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(v.size());
  std::vector<const Eigen::MatrixXd*> ops(dims.size(), nullptr);
  for (std::size_t t = 0; t < dims.size(); ++t) {
    ops[t] = per_mode[t];
    sum += apply_modes(dims, ops, v);
    ops[t] = nullptr;
  }
  return sum;
}

}  // namespace

std::size_t oracle_dimension(GroupKind group, int n, int k, int l, OracleOptions options) {
  check_group_dimension(group, n);
  if (k < 0 || l < 0) throw std::invalid_argument("tensor orders must be non-negative");
  const int modes = k + l;
  const std::uint64_t size = ipow(static_cast<std::uint64_t>(n), modes);
  if (size > options.max_size) {
    throw OracleSizeError("oracle needs n^(l+k) = " + std::to_string(size) + " unknowns, above the limit of " +
                          std::to_string(options.max_size));
  }

  Eigen::MatrixXd basis;
  if (options.symmetry_reduction) {
    std::vector<SignedPermutation> perms;
    for (const auto& g : discrete_elements(group, n)) perms.push_back(as_signed_permutation(g));
    basis = fixed_subspace(perms, n, modes);
  } else {
    basis = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
  }
  if (basis.cols() == 0) return 0;

  const std::vector<int> dims(static_cast<std::size_t>(modes), n);
  const auto generators = lie_basis(group, n);
  const auto reflections = component_reps(group, n);
  const auto blocks = generators.size() + reflections.size();
  const auto rows_per_block = static_cast<Eigen::Index>(size);

  Eigen::MatrixXd constraints = Eigen::MatrixXd::Zero(rows_per_block * static_cast<Eigen::Index>(blocks), basis.cols());
  Eigen::Index block = 0;
  for (const auto& gen : generators) {
    const Eigen::MatrixXd top = gen.mat;
    const Eigen::MatrixXd bottom = -gen.mat.transpose();
    std::vector<const Eigen::MatrixXd*> per_mode(static_cast<std::size_t>(modes));
    for (int t = 0; t < modes; ++t) per_mode[t] = t < l ? &top : &bottom;
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
      constraints.block(block * rows_per_block, c, rows_per_block, 1) = apply_mode_sum(dims, per_mode, basis.col(c));
    }
    ++block;
  }
  for (const auto& r : reflections) {
    // r is orthogonal, so ρ_l(r) C ρ_k(r)^{-1} = C is r^{⊗(l+k)} vec(C) = vec(C).
    std::vector<const Eigen::MatrixXd*> ops(static_cast<std::size_t>(modes), &r.matrix());
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
      const Eigen::VectorXd v = basis.col(c);
      constraints.block(block * rows_per_block, c, rows_per_block, 1) = apply_modes(dims, ops, v) - v;
    }
    ++block;
  }
  return static_cast<std::size_t>(basis.cols()) - numerical_rank(constraints);
}

bool basis_regime(GroupKind group, int n, int k, int l) {
  switch (group) {
    case GroupKind::O: return 2 * n >= l + k;
    case GroupKind::Sp: return n >= l + k;
    case GroupKind::SO: return false;
  }
  return false;
}

DimensionReport dimension_report(GroupKind group, int n, int k, int l, OracleOptions options) {
  DimensionReport r;
  r.group = group;
  r.n = n;
  r.k = k;
  r.l = l;
  const SpanningSet set = spanning_set(group, n, k, l);
  r.span_count = set.size();
  r.span_rank = span_rank(set);
  r.oracle_dim = oracle_dimension(group, n, k, l, options);
  r.basis_regime = basis_regime(group, n, k, l);
  return r;
}

std::vector<DimensionReport> dims_table(std::span<const Factor> grid, OracleOptions options) {
  std::vector<DimensionReport> out;
  out.reserve(grid.size());
  for (const auto& p : grid) out.push_back(dimension_report(p.group, p.n, p.k, p.l, options));
  return out;
}

}  // namespace brauer
