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

#ifndef QPC_POLYCYCLIC_HPP
#define QPC_POLYCYCLIC_HPP

#include <functional>
#include <span>
#include <vector>

#include "qpc/howell.hpp"
#include "qpc/poly.hpp"

namespace qpc {

/// One element p^exponent * generator of a standard-form generating set.
struct StandardEntry {
  unsigned exponent;
  Poly generator;

  friend bool operator==(const StandardEntry&, const StandardEntry&) = default;
};

/// Generating set {p^{j_0} g_0, ..., p^{j_t} g_t} of an ideal of R[x]/<f>
/// with 0 <= j_0 < ... < j_t < s, every g_i monic, m > deg g_0 > ... >
/// deg g_t and g_t | ... | g_0 | f. The empty set is the zero code.
class StandardFormBasis {
 public:
  /// Throws PreconditionError if the entries violate any of the conditions.
  StandardFormBasis(QuotientRing quotient, std::vector<StandardEntry> entries);

  static StandardFormBasis zero(const QuotientRing& quotient) { return {quotient, {}}; }
  static StandardFormBasis full(const QuotientRing& quotient) {
    return {quotient, {{0, quotient.one()}}};
  }

  const QuotientRing& quotient() const noexcept { return quotient_; }
  const std::vector<StandardEntry>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }

  /// The entries as polynomials p^{j_i} g_i.
  std::vector<Poly> generators() const;

  friend bool operator==(const StandardFormBasis&, const StandardFormBasis&) = default;

 private:
  QuotientRing quotient_;
  std::vector<StandardEntry> entries_;
};

/// A polycyclic code is an ideal of R[x]/<f>, carried by its basis.
using PolycyclicCode = StandardFormBasis;

/// Coefficient row of a polynomial of degree < m with the highest degree in
/// column 0, so that echelon pivots track leading degrees.
Vec ideal_row(const Poly& a, std::size_t m);
Poly poly_from_ideal_row(std::span<const Residue> row, const RingSpec& ring);

/// Canonical form of the R-span of {x^k g mod f : g in gens, k < m}, in the
/// ideal_row layout. This is the ideal generated by gens.
HowellForm ideal_form(std::span<const Poly> gens, const QuotientRing& quotient);

StandardFormBasis standard_form_from_generators(std::span<const Poly> gens,
                                                const QuotientRing& quotient);

/// sum_i p^{j_i} g_i, which generates the same ideal.
Poly single_generator(const StandardFormBasis& basis);

/// Delta with |C| = p^Delta.
unsigned cardinality_exponent(const StandardFormBasis& basis);

StandardFormBasis annihilator(const StandardFormBasis& basis);

/// Calls visit once for each codeword. Throws BudgetError if the code has
/// more than p^max_exponent elements.
void for_each_codeword(const StandardFormBasis& basis,
                       const std::function<void(const Poly&)>& visit,
                       unsigned max_exponent = 24);
std::vector<Poly> enumerate_codewords(const StandardFormBasis& basis,
                                      unsigned max_exponent = 24);

struct ShortenedCode {
  Poly modulus;
  PolycyclicCode code;
};

/// Shortens a cyclic code (modulus x^N - 1) to length n: with
/// x^n = g_0 q + r, the new modulus is x^n - r and the code is generated by
/// the same polynomials in R[x]/<x^n - r>.
ShortenedCode shorten_cyclic(const StandardFormBasis& cyclic, std::size_t n);

}  // namespace qpc

#endif  // QPC_POLYCYCLIC_HPP
