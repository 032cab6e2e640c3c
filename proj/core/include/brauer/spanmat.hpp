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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "brauer/diagrams.hpp"

namespace brauer {

/// n^e for small non-negative exponents (n^0 = 1).
std::uint64_t ipow(std::uint64_t n, int e);

/// One stored nonzero. Row and column are zero-based offsets.
struct SparseEntry {
  std::uint64_t row;
  std::uint64_t col;
  int value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
  friend auto operator<=>(const SparseEntry&, const SparseEntry&) = default;
};

/**
 * Exact integer sparse matrix in coordinate form.
 *
 * Entries are kept sorted by (row, col) with no duplicates and no zeros,
 * so equality of two matrices is plain equality of their entry lists.
 */
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  /// Sorts the entries; throws std::invalid_argument on out-of-range
  /// coordinates, duplicates, or zero values.
  SparseIntMatrix(std::uint64_t rows, std::uint64_t cols, std::vector<SparseEntry> entries);

  std::uint64_t rows() const noexcept { return rows_; }
  std::uint64_t cols() const noexcept { return cols_; }
  const std::vector<SparseEntry>& entries() const noexcept { return entries_; }
  std::size_t nnz() const noexcept { return entries_.size(); }

  /// Value at zero-based (row, col); 0 when not stored.
  int at(std::uint64_t row, std::uint64_t col) const;

  Eigen::MatrixXd to_dense() const;
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  SparseIntMatrix transpose() const;

  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

 private:
  std::uint64_t rows_ = 0;
  std::uint64_t cols_ = 0;
  std::vector<SparseEntry> entries_;
};

/// Kronecker product a ⊗ b (a's index most significant).
SparseIntMatrix kron(const SparseIntMatrix& a, const SparseIntMatrix& b);

enum class MatrixKind { E, F, H };
std::string_view to_string(MatrixKind kind);

/**
 * A spanning-set matrix built from a single diagram.
 *
 * Rows are indexed by I in [n]^l and columns by J in [n]^k, flattened with
 * the first tensor index most significant (see flatten_index).
 */
struct SparseEquivariantMatrix {
  int n = 0;
  int k = 0;
  int l = 0;
  MatrixKind kind = MatrixKind::E;
  std::string source;  ///< serialized originating diagram
  SparseIntMatrix matrix;
};

/**
 * Position of a vector in the ordered symplectic basis e_1, e_1', ..., e_m, e_m'.
 * Unprimed a has ordinal 2a-1 and primed a' has ordinal 2a (ordinals 1-based).
 */
class SymplecticIndex {
 public:
  /// Throws std::invalid_argument unless 1 <= ordinal.
  explicit SymplecticIndex(int ordinal);
  static SymplecticIndex unprimed(int a) { return SymplecticIndex(2 * a - 1); }
  static SymplecticIndex primed(int a) { return SymplecticIndex(2 * a); }
  /// Accepts "3" or "3'".
  static SymplecticIndex from_label(std::string_view label);

  int ordinal() const noexcept { return ordinal_; }
  /// The a in a or a'.
  int pair() const noexcept { return (ordinal_ + 1) / 2; }
  bool is_primed() const noexcept { return ordinal_ % 2 == 0; }
  std::string label() const;

  friend bool operator==(const SymplecticIndex&, const SymplecticIndex&) = default;

 private:
  int ordinal_;
};

/// 1-based lexicographic flattening of a tuple of 1-based ordinals in [n],
/// first component most significant. The empty tuple maps to 1.
/// Throws std::out_of_range on a component outside [n].
std::uint64_t flatten_index(std::span<const int> tuple, int n);
/// Inverse of flatten_index for a tuple of the given length.
std::vector<int> unflatten_index(std::uint64_t index, int n, int length);

/// Skew-form coefficient: eps(a, b') = -eps(a', b) = delta(a, b), all other pairs 0.
int epsilon(SymplecticIndex i, SymplecticIndex j);

/// Sign of the permutation i -> values[i] of [n] (n = values.size(), 1-based
/// values); 0 if the values are not distinct or not a permutation of [n].
int chi(std::span<const int> values);

/// Orthogonal-group matrix: product of deltas over the blocks of d.
SparseEquivariantMatrix build_E(const BrauerDiagram& d, int n);
/// Symplectic-group matrix in the symplectic basis; same-row blocks contribute
/// epsilon with the smaller vertex label first. Throws on odd n.
SparseEquivariantMatrix build_F(const BrauerDiagram& d, int n);
/// Special-orthogonal extra matrix: chi over the free vertices (top row left to
/// right, then bottom row left to right) times deltas over the blocks.
/// Throws std::invalid_argument unless d.n() == n.
SparseEquivariantMatrix build_H(const GroodDiagram& d, int n);

}  // namespace brauer
