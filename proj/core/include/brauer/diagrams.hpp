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
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace brauer {

/// Thrown when a textual diagram or export file cannot be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unordered pair of vertex labels, stored with the smaller label first.
using Block = std::pair<int, int>;

/**
 * A (k,l)-Brauer diagram: a perfect matching on the vertex set {1..l+k}.
 *
 * Vertices 1..l form the top row (left to right) and l+1..l+k the bottom
 * row (left to right). The output tensor indices i_1..i_l attach to the top
 * row and the input indices j_1..j_k to the bottom row.
 *
 * The block list is always held in canonical form: each pair ascending and
 * pairs sorted by their first label. Two diagrams compare equal iff they
 * describe the same matching.
 */
class BrauerDiagram {
 public:
  /// Validates and canonicalizes. Throws std::invalid_argument if the blocks
  /// are not a perfect matching of {1..l+k}.
  BrauerDiagram(int k, int l, std::vector<Block> blocks);

  int k() const noexcept { return k_; }
  int l() const noexcept { return l_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  bool is_top(int vertex) const noexcept { return vertex <= l_; }
  /// True when both endpoints lie in the same row.
  bool same_row(const Block& b) const noexcept { return is_top(b.first) == is_top(b.second); }

  /// The diagram with top and bottom rows exchanged (a (l,k)-diagram).
  BrauerDiagram flipped() const;

  /// `B k l : (a,b)(c,d)...`
  std::string to_string() const;
  static BrauerDiagram parse(std::string_view text);

  friend bool operator==(const BrauerDiagram&, const BrauerDiagram&) = default;
  friend auto operator<=>(const BrauerDiagram&, const BrauerDiagram&) = default;

 private:
  int k_;
  int l_;
  std::vector<Block> blocks_;
};

/**
 * An (l+k)\n-diagram: n vertices of {1..l+k} are left free and the rest are
 * paired off. Free top vertices are ascending labels in {1..l}, free bottom
 * vertices ascending labels in {l+1..l+k}.
 */
class GroodDiagram {
 public:
  /// `free_vertices` may straddle both rows; n is their count and must be >= 1.
  GroodDiagram(int k, int l, std::vector<int> free_vertices, std::vector<Block> blocks);

  int k() const noexcept { return k_; }
  int l() const noexcept { return l_; }
  int n() const noexcept { return static_cast<int>(free_top_.size() + free_bottom_.size()); }
  const std::vector<int>& free_top() const noexcept { return free_top_; }
  const std::vector<int>& free_bottom() const noexcept { return free_bottom_; }
  /// Top free vertices then bottom free vertices, i.e. ascending.
  std::vector<int> free_vertices() const;
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  bool is_top(int vertex) const noexcept { return vertex <= l_; }

  /// `G k l n : free=[a,b,...];(c,d)...`
  std::string to_string() const;
  static GroodDiagram parse(std::string_view text);

  friend bool operator==(const GroodDiagram&, const GroodDiagram&) = default;

 private:
  int k_;
  int l_;
  std::vector<int> free_top_;
  std::vector<int> free_bottom_;
  std::vector<Block> blocks_;
};

/// All (k,l)-Brauer diagrams in lexicographic order of their block lists.
/// Empty when l+k is odd; the single empty diagram when k = l = 0.
std::vector<BrauerDiagram> enumerate_brauer(int k, int l);

/// All (l+k)\n-diagrams ordered by (free vertex set, block list). Requires n >= 1.
std::vector<GroodDiagram> enumerate_grood(int k, int l, int n);

/// m!! with the conventions (-1)!! = 0!! = 1.
std::uint64_t double_factorial(int m);
std::uint64_t binomial(int n, int r);

/// (l+k-1)!! when l+k is even, else 0.
std::uint64_t count_brauer(int k, int l);
/// C(l+k, n) (l+k-n-1)!! when n <= l+k and n = l+k (mod 2), else 0.
std::uint64_t count_grood(int k, int l, int n);

}  // namespace brauer
