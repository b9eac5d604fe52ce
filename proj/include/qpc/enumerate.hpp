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

#ifndef QPC_ENUMERATE_HPP
#define QPC_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "qpc/howell.hpp"

namespace qpc {

/// Generators of an R-module with a coefficient range for each, such that
/// every element is sum_k a_k vectors[k] for exactly one choice of
/// a_k in [0, radices[k]).
struct SpanningFamily {
  RingSpec ring;
  std::size_t length = 0;
  std::vector<Vec> vectors;
  std::vector<std::uint32_t> radices;

  /// Number of elements, saturating at UINT64_MAX.
  std::uint64_t count() const noexcept;

  /// The family read off a canonical echelon form.
  static SpanningFamily from_howell(const HowellForm& form);
};

inline std::uint32_t lee_weight(Residue a, std::uint32_t q) noexcept {
  return a <= q - a ? a : q - a;
}

struct Distances {
  std::uint32_t lee = 0;       // 0 for the zero code
  std::uint32_t hamming = 0;
  std::uint64_t codewords = 0;
};

/// Exact minimum Lee and Hamming weights over the nonzero elements. The
/// coefficient space is walked in reflected mixed-radix Gray order, so each
/// step adds or subtracts one generator. Work is split over `threads`
/// workers by fixing the leading digits; the result does not depend on the
/// worker count. Throws BudgetError if the family has more than `budget`
/// elements.
Distances minimum_distances(const SpanningFamily& family, std::uint64_t budget, unsigned threads);

/// Worker count from QPC_THREADS, else the hardware concurrency.
unsigned default_thread_count();

}  // namespace qpc

#endif  // QPC_ENUMERATE_HPP
