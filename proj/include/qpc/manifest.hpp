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

#ifndef QPC_MANIFEST_HPP
#define QPC_MANIFEST_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "qpc/error.hpp"
#include "qpc/qp_code.hpp"

namespace qpc {

/// One line of a manifest: a generator and the parameters it should give.
/// Manifests are TSV with the header `ring f gens n size lee note`; gens is
/// a comma-separated list and size is written b^k (for example 4^3).
struct ManifestRow {
  std::size_t line = 0;
  std::string ring;
  std::string f;
  std::vector<std::string> components;
  std::size_t expected_n = 0;
  std::string expected_size;
  unsigned expected_size_exponent = 0;  // log_p
  std::uint32_t expected_lee = 0;
  std::string note;
};

/// Throws ParseError naming the offending line.
std::vector<ManifestRow> parse_manifest(std::istream& in);
std::vector<ManifestRow> read_manifest(const std::string& path);

struct RowResult {
  ManifestRow row;
  std::optional<CodeParams> params;  // empty if the row failed
  std::optional<ErrorKind> error_kind;
  std::string error;
  std::string size;  // computed size as b^k
  bool squarefree = true;
  bool match_n = false;
  bool match_size = false;
  bool match_lee = false;
  double seconds = 0;

  bool matched() const noexcept { return match_n && match_size && match_lee; }
};

struct Report {
  std::vector<RowResult> rows;

  std::size_t matched() const noexcept;
  std::size_t failed() const noexcept;
  bool all_matched() const noexcept { return matched() == rows.size(); }
};

/// Rows run one after another in input order; each distance search uses
/// options.threads workers. A row whose modulus is not square-free mod p is
/// still evaluated from the span of its generator, and flagged. Errors in a
/// row (budget, precondition) are recorded in that row only.
Report run_manifest(const std::vector<ManifestRow>& rows, const DistanceOptions& options = {});

/// JSON report. Wall-clock times are included only when timing is set, so
/// that the default output is reproducible byte for byte.
std::string report_json(const Report& report, bool timing = false);

}  // namespace qpc

#endif  // QPC_MANIFEST_HPP
