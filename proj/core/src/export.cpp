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

#include "brauer/export.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace brauer {
namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kOrdering =
    "E/F elements in lexicographic order of canonical Brauer block lists, then H elements ordered by "
    "(free vertex set, block list); local products lexicographic in factor element indices (last factor "
    "fastest); feature units (i,j) innermost with j fastest. Row/col indices flatten tensor indices with "
    "the first index most significant, factors in order, feature index least significant; 1-based.";

json factor_json(const Factor& f) {
  json j;
  j["group"] = std::string(to_string(f.group));
  j["n"] = f.n;
  j["k"] = f.k;
  j["l"] = f.l;
  return j;
}

// Compact one-line rendering of a single element.
std::string element_line(const SpanElement& e, std::size_t index, bool with_features) {
  std::ostringstream os;
  os << "{\"index\":" << index << ",\"kind\":" << json(e.kind).dump() << ",\"diagram\":" << json(e.diagram).dump();
  if (with_features) os << ",\"feature\":[" << e.feature_row << ',' << e.feature_col << ']';
  os << ",\"entries\":[";
  bool first = true;
  for (const auto& x : e.matrix.entries()) {
    os << (first ? "" : ",") << '[' << x.row + 1 << ',' << x.col + 1 << ',' << x.value << ']';
    first = false;
  }
  os << "]}";
  return os.str();
}

template <class T>
T require(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("export file: missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("export file: bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

std::string export_json(const SpanningSet& set) {
  const bool with_features = set.d_k * set.d_l > 1;
  std::ostringstream os;
  os << "{\n";
  os << "  \"format_version\": " << kExportFormatVersion << ",\n";
  if (set.factors.size() == 1) {
    const auto& f = set.factors.front();
    os << "  \"group\": " << json(std::string(to_string(f.group))).dump() << ",\n";
    os << "  \"n\": " << f.n << ",\n  \"k\": " << f.k << ",\n  \"l\": " << f.l << ",\n";
  }
  json factors = json::array();
  for (const auto& f : set.factors) factors.push_back(factor_json(f));
  os << "  \"factors\": " << factors.dump() << ",\n";
  os << "  \"d_k\": " << set.d_k << ",\n  \"d_l\": " << set.d_l << ",\n";
  os << "  \"rows\": " << set.rows() << ",\n  \"cols\": " << set.cols() << ",\n";
  os << "  \"count\": " << set.size() << ",\n";
  os << "  \"ordering\": " << json(std::string(kOrdering)).dump() << ",\n";
  os << "  \"elements\": [";
  for (std::size_t i = 0; i < set.size(); ++i) {
    os << (i ? ",\n    " : "\n    ") << element_line(set.elements[i], i + 1, with_features);
  }
  os << (set.empty() ? "]\n" : "\n  ]\n");
  os << "}\n";
  return os.str();
}

std::string export_text(const SpanningSet& set) {
  std::ostringstream os;
  os << "spanning set:";
  for (const auto& f : set.factors) os << ' ' << to_string(f.group) << '(' << f.n << ") k=" << f.k << " l=" << f.l;
  os << "\nd_k=" << set.d_k << " d_l=" << set.d_l << " shape=" << set.rows() << 'x' << set.cols()
     << " count=" << set.size() << '\n';
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto& e = set.elements[i];
    os << '#' << i + 1 << ' ' << e.kind << "  " << e.diagram;
    if (e.feature_row > 0) os << "  feature=(" << e.feature_row << ',' << e.feature_col << ')';
    os << "  nnz=" << e.matrix.nnz() << '\n';
    for (const auto& x : e.matrix.entries()) {
      os << "    " << x.row + 1 << ' ' << x.col + 1 << ' ' << (x.value > 0 ? "+" : "") << x.value << '\n';
    }
  }
  return os.str();
}

SpanningSet import_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("export file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("export file: top level must be an object");
  const int version = require<int>(doc, "format_version");
  if (version != kExportFormatVersion) {
    throw ParseError("export file: unsupported format_version " + std::to_string(version));
  }

  SpanningSet set;
  const json& factors = doc.contains("factors") ? doc.at("factors") : json();
  if (!factors.is_array() || factors.empty()) throw ParseError("export file: 'factors' must be a non-empty array");
  for (const auto& fj : factors) {
    Factor f;
    try {
      f.group = parse_group(require<std::string>(fj, "group"));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("export file: ") + e.what());
    }
    f.n = require<int>(fj, "n");
    f.k = require<int>(fj, "k");
    f.l = require<int>(fj, "l");
    try {
      check_group_dimension(f.group, f.n);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("export file: ") + e.what());
    }
    if (f.k < 0 || f.l < 0) throw ParseError("export file: negative tensor order");
    set.factors.push_back(f);
  }
  set.d_k = require<int>(doc, "d_k");
  set.d_l = require<int>(doc, "d_l");
  if (set.d_k < 1 || set.d_l < 1) throw ParseError("export file: feature dimensions must be positive");

  const auto rows = require<std::uint64_t>(doc, "rows");
  const auto cols = require<std::uint64_t>(doc, "cols");
  if (rows != set.rows() || cols != set.cols()) throw ParseError("export file: rows/cols disagree with factors");

  const json& elements = doc.contains("elements") ? doc.at("elements") : json();
  if (!elements.is_array()) throw ParseError("export file: 'elements' must be an array");
  if (require<std::size_t>(doc, "count") != elements.size()) throw ParseError("export file: count mismatch");

  const bool with_features = set.d_k * set.d_l > 1;
  for (const auto& ej : elements) {
    SpanElement e;
    e.kind = require<std::string>(ej, "kind");
    e.diagram = require<std::string>(ej, "diagram");
    if (with_features) {
      const auto feat = require<std::vector<int>>(ej, "feature");
      if (feat.size() != 2 || feat[0] < 1 || feat[0] > set.d_l || feat[1] < 1 || feat[1] > set.d_k) {
        throw ParseError("export file: bad feature index");
      }
      e.feature_row = feat[0];
      e.feature_col = feat[1];
    }
    const auto triples = require<std::vector<std::vector<std::int64_t>>>(ej, "entries");
    std::vector<SparseEntry> entries;
    entries.reserve(triples.size());
    for (const auto& t : triples) {
      if (t.size() != 3) throw ParseError("export file: entries must be [row, col, value] triples");
      if (t[0] < 1 || t[1] < 1 || static_cast<std::uint64_t>(t[0]) > rows || static_cast<std::uint64_t>(t[1]) > cols) {
        throw ParseError("export file: entry index outside matrix shape");
      }
      if (t[2] != 1 && t[2] != -1) throw ParseError("export file: entry value must be -1 or +1");
      entries.push_back({static_cast<std::uint64_t>(t[0] - 1), static_cast<std::uint64_t>(t[1] - 1),
                         static_cast<int>(t[2])});
    }
    try {
      e.matrix = SparseIntMatrix(rows, cols, std::move(entries));
    } catch (const std::invalid_argument& err) {
      throw ParseError(std::string("export file: ") + err.what());
    }
    set.elements.push_back(std::move(e));
  }
  return set;
}

void save_spanning_set(const std::filesystem::path& path, const SpanningSet& set) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << export_json(set);
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

SpanningSet load_spanning_set(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return import_json(buf.str());
}

}  // namespace brauer
