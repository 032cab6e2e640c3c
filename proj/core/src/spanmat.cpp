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

#include "brauer/spanmat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace brauer {

std::uint64_t ipow(std::uint64_t n, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= n;
  return r;
}

SparseIntMatrix::SparseIntMatrix(std::uint64_t rows, std::uint64_t cols, std::vector<SparseEntry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.row >= rows_ || e.col >= cols_) throw std::invalid_argument("sparse entry outside matrix shape");
    if (e.value == 0) throw std::invalid_argument("sparse entry with zero value");
    if (i > 0 && entries_[i - 1].row == e.row && entries_[i - 1].col == e.col) {
      throw std::invalid_argument("duplicate sparse entry");
    }
  }
}

int SparseIntMatrix::at(std::uint64_t row, std::uint64_t col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), SparseEntry{row, col, 0},
                             [](const SparseEntry& a, const SparseEntry& b) {
                               return a.row != b.row ? a.row < b.row : a.col < b.col;
                             });
  return (it != entries_.end() && it->row == row && it->col == col) ? it->value : 0;
}

Eigen::MatrixXd SparseIntMatrix::to_dense() const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
  for (const auto& e : entries_) out(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) = e.value;
  return out;
}

Eigen::VectorXd SparseIntMatrix::apply(const Eigen::VectorXd& x) const {
  if (static_cast<std::uint64_t>(x.size()) != cols_) throw std::invalid_argument("apply: vector length mismatch");
  Eigen::VectorXd y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(rows_));
  for (const auto& e : entries_) y[static_cast<Eigen::Index>(e.row)] += e.value * x[static_cast<Eigen::Index>(e.col)];
  return y;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  std::vector<SparseEntry> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return SparseIntMatrix(cols_, rows_, std::move(t));
}

SparseIntMatrix kron(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  std::vector<SparseEntry> out;
  out.reserve(a.nnz() * b.nnz());
  for (const auto& ea : a.entries()) {
    for (const auto& eb : b.entries()) {
      out.push_back({ea.row * b.rows() + eb.row, ea.col * b.cols() + eb.col, ea.value * eb.value});
    }
  }
  return SparseIntMatrix(a.rows() * b.rows(), a.cols() * b.cols(), std::move(out));
}

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::E: return "E";
    case MatrixKind::F: return "F";
    case MatrixKind::H: return "H";
  }
  return "?";
}

SymplecticIndex::SymplecticIndex(int ordinal) : ordinal_(ordinal) {
  if (ordinal < 1) throw std::invalid_argument("symplectic ordinal must be >= 1");
}

SymplecticIndex SymplecticIndex::from_label(std::string_view label) {
  bool primed = !label.empty() && label.back() == '\'';
  if (primed) label.remove_suffix(1);
  int a = 0;
  for (char c : label) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad symplectic label");
    a = a * 10 + (c - '0');
  }
  if (label.empty() || a < 1) throw std::invalid_argument("bad symplectic label");
  return primed ? SymplecticIndex::primed(a) : SymplecticIndex::unprimed(a);
}

std::string SymplecticIndex::label() const {
  return std::to_string(pair()) + (is_primed() ? "'" : "");
}

std::uint64_t flatten_index(std::span<const int> tuple, int n) {
  std::uint64_t idx = 0;
  for (int c : tuple) {
    if (c < 1 || c > n) throw std::out_of_range("flatten_index: component outside [n]");
    idx = idx * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(c - 1);
  }
  return idx + 1;
}

std::vector<int> unflatten_index(std::uint64_t index, int n, int length) {
  if (index < 1 || index > ipow(static_cast<std::uint64_t>(n), length)) {
    throw std::out_of_range("unflatten_index: index outside [n^length]");
  }
  std::vector<int> out(static_cast<std::size_t>(length));
  std::uint64_t rem = index - 1;
  for (int t = length - 1; t >= 0; --t) {
    out[t] = static_cast<int>(rem % static_cast<std::uint64_t>(n)) + 1;
    rem /= static_cast<std::uint64_t>(n);
  }
  return out;
}

int epsilon(SymplecticIndex i, SymplecticIndex j) {
  if (i.pair() != j.pair() || i.is_primed() == j.is_primed()) return 0;
  return i.is_primed() ? -1 : 1;
}

int chi(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : values) {
    if (v < 1 || v > n || seen[v]) return 0;
    seen[v] = 1;
  }
  // parity via cycle decomposition
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  int transpositions = 0;
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    int len = 0;
    for (int p = start; !visited[p]; p = values[p] - 1) {
      visited[p] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

namespace {

// Row/column stride contributed by assigning a value to one vertex.
struct VertexStride {
  std::uint64_t row = 0;
  std::uint64_t col = 0;
};

std::vector<VertexStride> vertex_strides(int k, int l, int n) {
  std::vector<VertexStride> s(static_cast<std::size_t>(k + l) + 1);
  const auto un = static_cast<std::uint64_t>(n);
  for (int t = 1; t <= l; ++t) s[t].row = ipow(un, l - t);
  for (int r = 1; r <= k; ++r) s[l + r].col = ipow(un, k - r);
  return s;
}

// How one block distributes a loop value v in [0,n) onto its two vertices.
struct BlockRule {
  VertexStride first;
  VertexStride second;
  bool skew = false;  // epsilon block: second vertex gets the partner ordinal
};

void check_order(int k, int l, int n) {
  if (n < 1) throw std::invalid_argument("dimension n must be >= 1");
  if (k < 0 || l < 0) throw std::invalid_argument("tensor orders must be non-negative");
}

// Iterates one value per block and emits (row, col, sign) offsets.
template <class Emit>
void for_each_block_assignment(const std::vector<BlockRule>& rules, int n, Emit&& emit) {
  const std::size_t b = rules.size();
  std::vector<int> v(b, 0);
  while (true) {
    std::uint64_t row = 0;
    std::uint64_t col = 0;
    int sign = 1;
    for (std::size_t i = 0; i < b; ++i) {
      const auto& r = rules[i];
      const auto a = static_cast<std::uint64_t>(v[i]);
      std::uint64_t second = a;
      if (r.skew) {
        // 0-based ordinals: even = unprimed, partner differs in the low bit
        second = a ^ 1U;
        if (v[i] % 2 == 1) sign = -sign;
      }
      row += a * r.first.row + second * r.second.row;
      col += a * r.first.col + second * r.second.col;
    }
    emit(row, col, sign);
    std::size_t i = b;
    while (i > 0) {
      --i;
      if (++v[i] < n) break;
      v[i] = 0;
      if (i == 0) return;
    }
    if (b == 0) return;
  }
}

std::vector<BlockRule> block_rules(const std::vector<Block>& blocks, const std::vector<VertexStride>& strides,
                                   int l, bool skew_same_row) {
  std::vector<BlockRule> rules;
  rules.reserve(blocks.size());
  for (const auto& [p, q] : blocks) {
    const bool same_row = (p <= l) == (q <= l);
    rules.push_back({strides[p], strides[q], skew_same_row && same_row});
  }
  return rules;
}

}  // namespace

SparseEquivariantMatrix build_E(const BrauerDiagram& d, int n) {
  check_order(d.k(), d.l(), n);
  const auto strides = vertex_strides(d.k(), d.l(), n);
  const auto rules = block_rules(d.blocks(), strides, d.l(), false);
  std::vector<SparseEntry> entries;
  entries.reserve(ipow(static_cast<std::uint64_t>(n), static_cast<int>(rules.size())));
  for_each_block_assignment(rules, n, [&](std::uint64_t r, std::uint64_t c, int s) { entries.push_back({r, c, s}); });
  const auto un = static_cast<std::uint64_t>(n);
  return {n, d.k(), d.l(), MatrixKind::E, d.to_string(),
          SparseIntMatrix(ipow(un, d.l()), ipow(un, d.k()), std::move(entries))};
}

SparseEquivariantMatrix build_F(const BrauerDiagram& d, int n) {
  check_order(d.k(), d.l(), n);
  if (n % 2 != 0) throw std::invalid_argument("symplectic matrices need even n");
  const auto strides = vertex_strides(d.k(), d.l(), n);
  const auto rules = block_rules(d.blocks(), strides, d.l(), true);
  std::vector<SparseEntry> entries;
  entries.reserve(ipow(static_cast<std::uint64_t>(n), static_cast<int>(rules.size())));
  for_each_block_assignment(rules, n, [&](std::uint64_t r, std::uint64_t c, int s) { entries.push_back({r, c, s}); });
  const auto un = static_cast<std::uint64_t>(n);
  return {n, d.k(), d.l(), MatrixKind::F, d.to_string(),
          SparseIntMatrix(ipow(un, d.l()), ipow(un, d.k()), std::move(entries))};
}

SparseEquivariantMatrix build_H(const GroodDiagram& d, int n) {
  check_order(d.k(), d.l(), n);
  if (d.n() != n) {
    throw std::invalid_argument("build_H: diagram has " + std::to_string(d.n()) + " free vertices but n = " +
                                std::to_string(n));
  }
  const auto strides = vertex_strides(d.k(), d.l(), n);
  const auto rules = block_rules(d.blocks(), strides, d.l(), false);
  const auto free = d.free_vertices();

  // Every bijection free vertices -> [n] contributes; chi vanishes otherwise.
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> free_offsets;
  std::vector<int> free_signs;
  do {
    std::uint64_t row = 0;
    std::uint64_t col = 0;
    for (std::size_t i = 0; i < free.size(); ++i) {
      const auto v = static_cast<std::uint64_t>(perm[i] - 1);
      row += v * strides[free[i]].row;
      col += v * strides[free[i]].col;
    }
    free_offsets.emplace_back(row, col);
    free_signs.push_back(chi(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<SparseEntry> entries;
  entries.reserve(free_offsets.size() * ipow(static_cast<std::uint64_t>(n), static_cast<int>(rules.size())));
  for_each_block_assignment(rules, n, [&](std::uint64_t r, std::uint64_t c, int) {
    for (std::size_t i = 0; i < free_offsets.size(); ++i) {
      entries.push_back({r + free_offsets[i].first, c + free_offsets[i].second, free_signs[i]});
    }
  });
  const auto un = static_cast<std::uint64_t>(n);
  return {n, d.k(), d.l(), MatrixKind::H, d.to_string(),
          SparseIntMatrix(ipow(un, d.l()), ipow(un, d.k()), std::move(entries))};
}

}  // namespace brauer
