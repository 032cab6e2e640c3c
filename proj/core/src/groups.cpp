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

#include "brauer/groups.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace brauer {

std::string_view to_string(GroupKind g) {
  switch (g) {
    case GroupKind::O: return "O";
    case GroupKind::SO: return "SO";
    case GroupKind::Sp: return "Sp";
  }
  return "?";
}

GroupKind parse_group(std::string_view text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "o") return GroupKind::O;
  if (lower == "so") return GroupKind::SO;
  if (lower == "sp") return GroupKind::Sp;
  throw std::invalid_argument("unknown group '" + std::string(text) + "' (expected O, SO or Sp)");
}

void check_group_dimension(GroupKind g, int n) {
  if (n < 1) throw std::invalid_argument("group dimension n must be >= 1");
  if (g == GroupKind::Sp && n % 2 != 0) {
    throw std::invalid_argument("Sp(n) needs even n, got n = " + std::to_string(n));
  }
}

Eigen::MatrixXd symplectic_form(int n) {
  if (n % 2 != 0) throw std::invalid_argument("symplectic form needs even n");
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; a += 2) {
    omega(a, a + 1) = 1.0;
    omega(a + 1, a) = -1.0;
  }
  return omega;
}

double orthogonality_defect(const Eigen::MatrixXd& g) {
  return (g.transpose() * g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

double symplectic_defect(const Eigen::MatrixXd& g) {
  const Eigen::MatrixXd omega = symplectic_form(static_cast<int>(g.rows()));
  return (g.transpose() * omega * g - omega).cwiseAbs().maxCoeff();
}

GroupElement::GroupElement(GroupKind group, Eigen::MatrixXd mat) : group_(group), mat_(std::move(mat)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() < 1) throw std::invalid_argument("group element must be square");
  check_group_dimension(group_, static_cast<int>(mat_.rows()));
  switch (group_) {
    case GroupKind::O:
    case GroupKind::SO:
      if (orthogonality_defect(mat_) > kOrthogonalTolerance) {
        throw std::invalid_argument("matrix is not orthogonal to within 1e-12");
      }
      if (group_ == GroupKind::SO && std::abs(mat_.determinant() - 1.0) > kDeterminantTolerance) {
        throw std::invalid_argument("matrix does not have determinant 1");
      }
      break;
    case GroupKind::Sp:
      if (symplectic_defect(mat_) > kSymplecticTolerance) {
        throw std::invalid_argument("matrix does not preserve the symplectic form to within 1e-8");
      }
      break;
  }
}

namespace {

Eigen::MatrixXd gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd z(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) z(i, j) = normal(rng);
  }
  return z;
}

Eigen::MatrixXd haar_orthogonal(int n, std::mt19937_64& rng) {
  const Eigen::MatrixXd z = gaussian(n, n, rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  }
  return q;
}

}  // namespace

GroupElement sample(GroupKind group, int n, std::mt19937_64& rng) {
  check_group_dimension(group, n);
  switch (group) {
    case GroupKind::O:
      return GroupElement(group, haar_orthogonal(n, rng));
    case GroupKind::SO: {
      Eigen::MatrixXd q = haar_orthogonal(n, rng);
      if (q.determinant() < 0) q.col(0) = -q.col(0);
      return GroupElement(group, std::move(q));
    }
    case GroupKind::Sp: {
      const Eigen::MatrixXd a = gaussian(n, n, rng);
      const Eigen::MatrixXd s = 0.5 * (a + a.transpose());
      return GroupElement(group, expm(0.1 * (symplectic_form(n) * s)));
    }
  }
  throw std::logic_error("unreachable");
}

GroupElement sample(GroupKind group, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample(group, n, rng);
}

std::vector<LieGenerator> lie_basis(GroupKind group, int n) {
  check_group_dimension(group, n);
  std::vector<LieGenerator> out;
  if (group == GroupKind::Sp) {
    const Eigen::MatrixXd omega = symplectic_form(n);
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
        s(a, b) = 1.0;
        s(b, a) = 1.0;
        out.push_back({group, n, omega * s});
      }
    }
    return out;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
      x(a, b) = 1.0;
      x(b, a) = -1.0;
      out.push_back({group, n, std::move(x)});
    }
  }
  return out;
}

std::vector<GroupElement> component_reps(GroupKind group, int n) {
  check_group_dimension(group, n);
  if (group != GroupKind::O) return {};
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
  r(0, 0) = -1.0;
  return {GroupElement(group, std::move(r))};
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& a) { return a.exp(); }

Eigen::VectorXd apply_modes(std::span<const int> dims, std::span<const Eigen::MatrixXd* const> ops,
                            const Eigen::VectorXd& x) {
  if (dims.size() != ops.size()) throw std::invalid_argument("apply_modes: dims/ops length mismatch");
  Eigen::Index total = 1;
  for (int d : dims) total *= d;
  if (x.size() != total) throw std::invalid_argument("apply_modes: vector length mismatch");

  Eigen::VectorXd cur = x;
  Eigen::VectorXd next(total);
  Eigen::Index inner = total;
  for (std::size_t t = 0; t < dims.size(); ++t) {
    const Eigen::Index dim = dims[t];
    inner /= dim;
    const Eigen::MatrixXd* op = ops[t];
    if (op == nullptr) continue;
    if (op->rows() != dim || op->cols() != dim) throw std::invalid_argument("apply_modes: operator shape mismatch");
    const Eigen::Index outer = total / (dim * inner);
    // Per outer slab, the (inner x dim) column-major view has element (i, b) at b*inner + i.
    for (Eigen::Index o = 0; o < outer; ++o) {
      Eigen::Map<const Eigen::MatrixXd> src(cur.data() + o * dim * inner, inner, dim);
      Eigen::Map<Eigen::MatrixXd> dst(next.data() + o * dim * inner, inner, dim);
      dst.noalias() = src * op->transpose();
    }
    cur.swap(next);
  }
  return cur;
}

Eigen::VectorXd tensor_power_apply(const Eigen::MatrixXd& g, int k, const Eigen::VectorXd& x) {
  if (g.rows() != g.cols()) throw std::invalid_argument("tensor_power_apply: g must be square");
  if (k < 0) throw std::invalid_argument("tensor_power_apply: k must be non-negative");
  std::vector<int> dims(static_cast<std::size_t>(k), static_cast<int>(g.rows()));
  std::vector<const Eigen::MatrixXd*> ops(static_cast<std::size_t>(k), &g);
  return apply_modes(dims, ops, x);
}

}  // namespace brauer
