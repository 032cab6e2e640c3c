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

#include "brauer/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>

namespace brauer {
namespace {

void canonicalize(std::vector<Block>& blocks) {
  for (auto& b : blocks) {
    if (b.first > b.second) std::swap(b.first, b.second);
  }
  std::sort(blocks.begin(), blocks.end());
}

// Checks that `blocks` together with `free` partition {1..total} exactly.
void check_partition(int total, const std::vector<int>& free, const std::vector<Block>& blocks) {
  std::vector<int> seen(static_cast<std::size_t>(total) + 1, 0);
  auto mark = [&](int v) {
    if (v < 1 || v > total) {
      throw std::invalid_argument("diagram vertex " + std::to_string(v) + " outside 1.." +
                                  std::to_string(total));
    }
    if (seen[v]++) throw std::invalid_argument("diagram vertex " + std::to_string(v) + " used twice");
  };
  for (int v : free) mark(v);
  for (const auto& [a, b] : blocks) {
    if (a == b) throw std::invalid_argument("block pairs a vertex with itself");
    mark(a);
    mark(b);
  }
  for (int v = 1; v <= total; ++v) {
    if (!seen[v]) throw std::invalid_argument("diagram vertex " + std::to_string(v) + " not covered");
  }
}

void write_blocks(std::ostringstream& os, const std::vector<Block>& blocks) {
  for (const auto& [a, b] : blocks) os << '(' << a << ',' << b << ')';
}

// Minimal cursor over the textual diagram grammar.
class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect(std::string_view word) {
    skip_ws();
    if (s_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }
  int integer() {
    skip_ws();
    int value = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
    if (ec != std::errc{}) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return value;
  }
  std::vector<Block> blocks() {
    std::vector<Block> out;
    while (peek('(')) {
      expect('(');
      int a = integer();
      expect(',');
      int b = integer();
      expect(')');
      out.emplace_back(a, b);
    }
    return out;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("diagram parse error at offset " + std::to_string(pos_) + ": " + what + " in \"" +
                     std::string(s_) + "\"");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BrauerDiagram::BrauerDiagram(int k, int l, std::vector<Block> blocks)
    : k_(k), l_(l), blocks_(std::move(blocks)) {
  if (k < 0 || l < 0) throw std::invalid_argument("Brauer diagram orders must be non-negative");
  if ((k + l) % 2 != 0) throw std::invalid_argument("Brauer diagram needs l+k even");
  check_partition(k + l, {}, blocks_);
  canonicalize(blocks_);
}

BrauerDiagram BrauerDiagram::flipped() const {
  // top vertex t -> bottom vertex k+t; bottom vertex l+r -> top vertex r
  auto relabel = [this](int v) { return v <= l_ ? k_ + v : v - l_; };
  std::vector<Block> out;
  out.reserve(blocks_.size());
  for (const auto& [a, b] : blocks_) out.emplace_back(relabel(a), relabel(b));
  return BrauerDiagram(l_, k_, std::move(out));
}

std::string BrauerDiagram::to_string() const {
  std::ostringstream os;
  os << "B " << k_ << ' ' << l_ << " : ";
  write_blocks(os, blocks_);
  return os.str();
}

BrauerDiagram BrauerDiagram::parse(std::string_view text) {
  Cursor c(text);
  c.expect('B');
  int k = c.integer();
  int l = c.integer();
  c.expect(':');
  auto blocks = c.blocks();
  if (!c.at_end()) c.fail("trailing characters");
  try {
    return BrauerDiagram(k, l, std::move(blocks));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid Brauer diagram: ") + e.what());
  }
}

GroodDiagram::GroodDiagram(int k, int l, std::vector<int> free_vertices, std::vector<Block> blocks)
    : k_(k), l_(l), blocks_(std::move(blocks)) {
  if (k < 0 || l < 0) throw std::invalid_argument("diagram orders must be non-negative");
  if (free_vertices.empty()) throw std::invalid_argument("(l+k)\\n-diagram needs n >= 1 free vertices");
  check_partition(k + l, free_vertices, blocks_);
  std::sort(free_vertices.begin(), free_vertices.end());
  for (int v : free_vertices) (v <= l ? free_top_ : free_bottom_).push_back(v);
  canonicalize(blocks_);
}

std::vector<int> GroodDiagram::free_vertices() const {
  std::vector<int> out = free_top_;
  out.insert(out.end(), free_bottom_.begin(), free_bottom_.end());
  return out;
}

std::string GroodDiagram::to_string() const {
  std::ostringstream os;
  os << "G " << k_ << ' ' << l_ << ' ' << n() << " : free=[";
  auto free = free_vertices();
  for (std::size_t i = 0; i < free.size(); ++i) os << (i ? "," : "") << free[i];
  os << "];";
  write_blocks(os, blocks_);
  return os.str();
}

GroodDiagram GroodDiagram::parse(std::string_view text) {
  Cursor c(text);
  c.expect('G');
  int k = c.integer();
  int l = c.integer();
  int n = c.integer();
  c.expect(':');
  c.expect("free=");
  c.expect('[');
  std::vector<int> free;
  if (!c.peek(']')) {
    free.push_back(c.integer());
    while (c.peek(',')) {
      c.expect(',');
      free.push_back(c.integer());
    }
  }
  c.expect(']');
  c.expect(';');
  auto blocks = c.blocks();
  if (!c.at_end()) c.fail("trailing characters");
  if (static_cast<int>(free.size()) != n) c.fail("free vertex count does not match n");
  try {
    return GroodDiagram(k, l, std::move(free), std::move(blocks));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid (l+k)\\n-diagram: ") + e.what());
  }
}

namespace {

// Pairs the smallest remaining vertex with each later one in turn; this
// yields block lists in lexicographic order without sorting.
void pair_up(std::vector<int>& remaining, std::vector<Block>& current,
             const std::function<void(const std::vector<Block>&)>& emit) {
  if (remaining.empty()) {
    emit(current);
    return;
  }
  const int first = remaining.front();
  for (std::size_t i = 1; i < remaining.size(); ++i) {
    const int partner = remaining[i];
    std::vector<int> rest;
    rest.reserve(remaining.size() - 2);
    for (std::size_t j = 1; j < remaining.size(); ++j) {
      if (j != i) rest.push_back(remaining[j]);
    }
    current.emplace_back(first, partner);
    pair_up(rest, current, emit);
    current.pop_back();
  }
}

}  // namespace

std::vector<BrauerDiagram> enumerate_brauer(int k, int l) {
  std::vector<BrauerDiagram> out;
  if (k < 0 || l < 0 || (k + l) % 2 != 0) return out;
  out.reserve(count_brauer(k, l));
  std::vector<int> vertices(static_cast<std::size_t>(k + l));
  for (int v = 0; v < k + l; ++v) vertices[v] = v + 1;
  std::vector<Block> current;
  pair_up(vertices, current, [&](const std::vector<Block>& blocks) { out.emplace_back(k, l, blocks); });
  return out;
}

std::vector<GroodDiagram> enumerate_grood(int k, int l, int n) {
  if (n < 1) throw std::invalid_argument("(l+k)\\n-diagrams need n >= 1");
  std::vector<GroodDiagram> out;
  const int total = k + l;
  if ( k < 0 || l < 0 || n > total || (total - n) % 2 != 0) return out;
  out.reserve(count_grood(k, l, n));

  // Lexicographic walk over n-subsets of {1..total}.
  std::vector<int> free(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) free[i] = i + 1;
  while (true) {
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(total - n));
    for (int v = 1, f = 0; v <= total; ++v) {
      if (f < n && free[f] == v) {
        ++f;
      } else {
        rest.push_back(v);
      }
    }
    std::vector<Block> current;
    pair_up(rest, current, [&](const std::vector<Block>& blocks) { out.emplace_back(k, l, free, blocks); });

    int i = n - 1;
    while (i >= 0 && free[i] == total - n + i + 1) --i;
    if (i < 0) break;
    ++free[i];
    for (int j = i + 1; j < n; ++j) free[j] = free[j - 1] + 1;
  }
  return out;
}

std::uint64_t double_factorial(int m) {
  std::uint64_t r = 1;
  for (int v = m; v > 1; v -= 2) r *= static_cast<std::uint64_t>(v);
  return r;
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return out;
}

std::uint64_t count_brauer(int k, int l) {
  if (k < 0 || l < 0 || (k + l) % 2 != 0) return 0;
  return double_factorial(k + l - 1);
}

std::uint64_t count_grood(int k, int l, int n) {
  const int total = k + l;
  if (n < 1 || k < 0 || l < 0 || n > total || (total - n) % 2 != 0) return 0;
  return binomial(total, n) * double_factorial(total - n - 1);
}

}  // namespace brauer
