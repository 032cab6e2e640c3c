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

// Spanning-set interchange format (JSON, format_version 1).
//
//   {
//     "format_version": 1,
//     "group": "O", "n": 2, "k": 2, "l": 2,      // present for single-factor sets
//     "factors": [{"group": "O", "n": 2, "k": 2, "l": 2}, ...],
//     "d_k": 1, "d_l": 1,
//     "rows": 4, "cols": 4, "count": 3,
//     "ordering": "...",                         // human-readable ordering contract
//     "elements": [
//       {"index": 1, "kind": "E", "diagram": "B 2 2 : (1,2)(3,4)",
//        "feature": [i, j],                      // present when d_k*d_l > 1
//        "entries": [[row, col, value], ...]}    // 1-based, sorted, value in {-1,1}
//     ]
//   }
//
// All numbers are integers. Output is byte-identical for identical sets.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "brauer/layers.hpp"

namespace brauer {

inline constexpr int kExportFormatVersion = 1;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string export_json(const SpanningSet& set);
/// Human-readable listing; not meant to be parsed back.
std::string export_text(const SpanningSet& set);

/// Throws ParseError on malformed input or an unknown format_version.
SpanningSet import_json(std::string_view text);

/// Throws IoError when the file cannot be written or read.
void save_spanning_set(const std::filesystem::path& path, const SpanningSet& set);
SpanningSet load_spanning_set(const std::filesystem::path& path);

}  // namespace brauer
