/* Copyright 2026 The qpc Authors.
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

#include "qpc/manifest.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qpc {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(s);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

template <typename T>
T parse_number(const std::string& text, std::size_t line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("manifest line " + std::to_string(line) + ": bad " + what + " '" + text +
                     "'");
  }
  return value;
}

// b^k with b a power of p, as a p-exponent.
unsigned parse_size(const std::string& text, const RingSpec& ring, std::size_t line) {
  auto caret = text.find('^');
  if (caret == std::string::npos) {
    throw ParseError("manifest line " + std::to_string(line) + ": size '" + text +
                     "' is not of the form b^k");
  }
  auto base = parse_number<std::uint64_t>(text.substr(0, caret), line, "size base");
  auto k = parse_number<unsigned>(text.substr(caret + 1), line, "size exponent");
  unsigned t = 0;
  while (base > 1 && base % ring.p() == 0) {
    base /= ring.p();
    ++t;
  }
  if (base != 1 || t == 0) {
    throw ParseError("manifest line " + std::to_string(line) + ": size base in '" + text +
                     "' is not a power of " + std::to_string(ring.p()));
  }
  return t * k;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && s[b] == ' ') ++b;
  return s.substr(b);
}

}  // namespace

std::vector<ManifestRow> parse_manifest(std::istream& in) {
  std::vector<ManifestRow> rows;
  std::string line;
  std::size_t number = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '\t');
    if (!header) {
      if (fields.size() < 6 || fields[0] != "ring" || fields[1] != "f" || fields[2] != "gens") {
        throw ParseError("manifest line " + std::to_string(number) +
                         ": expected header 'ring f gens n size lee note'");
      }
      header = true;
      continue;
    }
    if (fields.size() < 6 || fields.size() > 7) {
      throw ParseError("manifest line " + std::to_string(number) + ": expected 6 or 7 fields, got " +
                       std::to_string(fields.size()));
    }
    ManifestRow row;
    row.line = number;
    row.ring = trim(fields[0]);
    row.f = trim(fields[1]);
    for (auto& g : split(trim(fields[2]), ',')) row.components.push_back(trim(g));
    if (row.components.empty() || row.components.front().empty()) {
      throw ParseError("manifest line " + std::to_string(number) + ": no generator components");
    }
    RingSpec ring = [&] {
      try {
        return RingSpec::parse(row.ring);
      } catch (const Error& e) {
        throw ParseError("manifest line " + std::to_string(number) + ": " + e.what());
      }
    }();
    row.expected_n = parse_number<std::size_t>(trim(fields[3]), number, "length");
    row.expected_size = trim(fields[4]);
    row.expected_size_exponent = parse_size(row.expected_size, ring, number);
    row.expected_lee = parse_number<std::uint32_t>(trim(fields[5]), number, "Lee distance");
    if (fields.size() == 7) row.note = trim(fields[6]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ManifestRow> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open manifest '" + path + "'");
  return parse_manifest(in);
}

std::size_t Report::matched() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.matched() ? 1 : 0;
  return n;
}

std::size_t Report::failed() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.error_kind ? 1 : 0;
  return n;
}

Report run_manifest(const std::vector<ManifestRow>& rows, const DistanceOptions& options) {
  Report report;
  for (const auto& row : rows) {
    RowResult result;
    result.row = row;
    auto start = std::chrono::steady_clock::now();
    try {
      RingSpec ring = RingSpec::parse(row.ring);
      QuotientRing quotient = QuotientRing::general(parse_poly(row.f, ring));
      result.squarefree = quotient.squarefree();
      std::vector<Poly> components;
      for (const auto& c : row.components) components.push_back(parse_poly(c, ring));
      QPGenerator gen(quotient, std::move(components));
      CodeParams params = code_params(gen, options);
      result.size = format_size(params.size_exponent, ring);
      result.match_n = params.n == row.expected_n;
      result.match_size = params.size_exponent == row.expected_size_exponent;
      result.match_lee = params.lee_distance == row.expected_lee;
      result.params = params;
    } catch (const Error& e) {
      result.error_kind = e.kind();
      result.error = e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.rows.push_back(std::move(result));
  }
  return report;
}

std::string report_json(const Report& report, bool timing) {
  using nlohmann::ordered_json;
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows) {
    ordered_json j;
    j["line"] = r.row.line;
    j["ring"] = r.row.ring;
    j["f"] = r.row.f;
    j["gens"] = r.row.components;
    j["expected"] = {{"n", r.row.expected_n},
                     {"size", r.row.expected_size},
                     {"lee", r.row.expected_lee}};
    if (r.params) {
      j["computed"] = {{"n", r.params->n},
                       {"size", r.size},
                       {"size_exponent", r.params->size_exponent},
                       {"lee", r.params->lee_distance},
                       {"hamming", r.params->hamming_distance}};
      j["match"] = {{"n", r.match_n}, {"size", r.match_size}, {"lee", r.match_lee}};
    } else {
      j["error"] = {{"code", static_cast<int>(*r.error_kind)}, {"message", r.error}};
    }
    j["matched"] = r.matched();
    j["squarefree"] = r.squarefree;
    if (!r.row.note.empty()) j["note"] = r.row.note;
    if (timing) j["seconds"] = r.seconds;
    rows.push_back(std::move(j));
  }
  ordered_json out;
  out["rows"] = std::move(rows);
  out["summary"] = {{"rows", report.rows.size()},
                    {"matched", report.matched()},
                    {"errors", report.failed()}};
  return out.dump(2);
}

}  // namespace qpc
