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
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace brauer {

enum class GroupKind { O, SO, Sp };

std::string_view to_string(GroupKind g);
/// Accepts "O", "SO", "Sp" (case-insensitive). Throws std::invalid_argument.
GroupKind parse_group(std::string_view text);

/// Throws std::invalid_argument for n < 1, or odd n with Sp.
void check_group_dimension(GroupKind g, int n);

/// Block-diagonal skew form with 2x2 blocks [[0,1],[-1,0]] in the ordered
/// symplectic basis e_1, e_1', ..., e_m, e_m'.
Eigen::MatrixXd symplectic_form(int n);

/// ||g^T g - I||_inf (max-abs entry).
double orthogonality_defect(const Eigen::MatrixXd& g);
/// ||g^T Omega g - Omega||_inf (max-abs entry).
double symplectic_defect(const Eigen::MatrixXd& g);

inline constexpr double kOrthogonalTolerance = 1e-12;
inline constexpr double kDeterminantTolerance = 1e-10;
inline constexpr double kSymplecticTolerance = 1e-8;

/// An n x n matrix certified to lie in O(n), SO(n) or Sp(n).
class GroupElement {
 public:
  /// Throws std::invalid_argument when `mat` violates the membership
  /// tolerances above.
  GroupElement(GroupKind group, Eigen::MatrixXd mat);

  GroupKind group() const noexcept { return group_; }
  int n() const noexcept { return static_cast<int>(mat_.rows()); }
  const Eigen::MatrixXd& matrix() const noexcept { return mat_; }

 private:
  GroupKind group_;
  Eigen::MatrixXd mat_;
};

/// Element of the Lie algebra: X + X^T = 0 (O/SO) or X^T Omega + Omega X = 0 (Sp).
struct LieGenerator {
  GroupKind group;
  int n;
  Eigen::MatrixXd mat;
};

/// Haar-random element of O(n)/SO(n); for Sp(n) the exponential of a small
/// random Lie-algebra element (Sp(n) has no Haar probability measure).
GroupElement sample(GroupKind group, int n, std::mt19937_64& rng);
GroupElement sample(GroupKind group, int n, std::uint64_t seed);

/// O/SO: E_ab - E_ba for a < b. Sp: Omega S over the elementary symmetric S.
std::vector<LieGenerator> lie_basis(GroupKind group, int n);

/// One representative per non-identity connected component: diag(-1,1,...,1) for O(n).
std::vector<GroupElement> component_reps(GroupKind group, int n);

/// Matrix exponential by scaling and squaring with a truncated Taylor series.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

/**
 * Applies a separate linear map along each mode of a tensor stored as a flat
 * vector (first mode most significant). `ops[t] == nullptr` leaves mode t
 * untouched. Cost is O(size * sum of mode dims).
 */
Eigen::VectorXd apply_modes(std::span<const int> dims, std::span<const Eigen::MatrixXd* const> ops,
                            const Eigen::VectorXd& x);

/// g^{⊗k} x for x of length n^k; k = 0 returns x unchanged.
Eigen::VectorXd tensor_power_apply(const Eigen::MatrixXd& g, int k, const Eigen::VectorXd& x);

}  // namespace brauer
