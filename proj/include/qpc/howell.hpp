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

#ifndef QPC_HOWELL_HPP
#define QPC_HOWELL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "qpc/chain_ring.hpp"

namespace qpc {

using Vec = std::vector<Residue>;

/// Canonical echelon form of a submodule of (Z_{p^s})^width.
///
/// Rows are in strict echelon order. Each pivot entry is exactly p^j, the
/// entries above a pivot p^j lie in [0, p^j), and p^(s-j) times any row lies
/// in the span of the rows below it. Under these conditions the form is
/// unique, greedy reduction decides membership, and every element of the
/// span is sum_i a_i row_i for exactly one choice of a_i in [0, p^(s-j_i)).
class HowellForm {
 public:
  struct Row {
    std::size_t pivot;
    unsigned exponent;
    Vec values;

    friend bool operator==(const Row&, const Row&) = default;
  };

  HowellForm(const RingSpec& ring, std::size_t width);
  HowellForm(const RingSpec& ring, std::size_t width, std::span<const Vec> generators);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t width() const noexcept { return width_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }

  /// log_p of the number of elements in the span.
  unsigned size_exponent() const noexcept;

  /// Coset representative of v modulo the span; zero iff v is a member.
  Vec reduce(std::span<const Residue> v) const;
  bool contains(std::span<const Residue> v) const;

  std::vector<Vec> generators() const;

  friend bool operator==(const HowellForm& a, const HowellForm& b) {
    return a.ring_ == b.ring_ && a.width_ == b.width_ && a.rows_ == b.rows_;
  }

 private:
  RingSpec ring_;
  std::size_t width_;
  std::vector<Row> rows_;
};

/// All x with g . x = 0 for every given row g.
HowellForm right_kernel(const RingSpec& ring, std::size_t width, std::span<const Vec> rows);

}  // namespace qpc

#endif  // QPC_HOWELL_HPP
