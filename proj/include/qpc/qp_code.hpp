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

#ifndef QPC_QP_CODE_HPP
#define QPC_QP_CODE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qpc/enumerate.hpp"
#include "qpc/polycyclic.hpp"

namespace qpc {

/// An element (a_1, ..., a_l) of R_m^l.
using QPVector = std::vector<Poly>;

/// Flattens a QP vector to length m*l: component i occupies coordinates
/// [i*m, (i+1)*m) in increasing degree.
Vec flatten(const QPVector& v, std::size_t m);

/// Generator (F_1, ..., F_l) of the 1-generator QP code
/// {(g F_1, ..., g F_l) : g in R_m}. Components are stored reduced mod f.
class QPGenerator {
 public:
  /// Throws PreconditionError if there are no components or all are zero.
  QPGenerator(QuotientRing quotient, std::vector<Poly> components);

  const QuotientRing& quotient() const noexcept { return quotient_; }
  const std::vector<Poly>& components() const noexcept { return components_; }
  std::size_t index() const noexcept { return components_.size(); }
  std::size_t length() const noexcept { return quotient_.degree() * components_.size(); }

  /// g * (F_1, ..., F_l).
  QPVector times(const Poly& g) const;

 private:
  QuotientRing quotient_;
  std::vector<Poly> components_;
};

/// digits[i][j] is the level-j digit f_{i,j} of component i, with
/// sum_j p^j f_{i,j} = F_i.
struct DigitDecomposition {
  std::vector<std::vector<Poly>> digits;
};

/// Plain base-p digits of every component.
DigitDecomposition base_digits(const QPGenerator& gen);

/// A decomposition adapted to the factors of f: in the Galois-ring
/// component belonging to a factor pi, all of a component's mass sits in
/// the digit whose level equals the minimum valuation v_pi of the generator
/// there, and every other digit is divisible by pi. With this choice,
/// divisibility by pi in R[x] and over F_p agree at every level, so the
/// h-sequence counts exactly the factors at each valuation.
DigitDecomposition valuation_digits(const QPGenerator& gen);

/// CRT idempotents e_k of R[x]/<f>, one per basic irreducible factor, in
/// factorization order.
std::vector<Poly> crt_idempotents(const QuotientRing& quotient);

struct HSequence {
  std::vector<Poly> h;        // h^(0), ..., h^(s-1)
  std::vector<unsigned> r;    // r_j = deg h^(j)
};

/// h^(0) = f / gcd(f_{1,0}, ..., f_{l,0}, f) and, for j >= 1,
/// h^(j) = f / gcd(f_{i,j} h^(0) ... h^(j-1), f), all gcds taken over the
/// basic irreducible factors of f.
HSequence h_sequence(const DigitDecomposition& digits, const QuotientRing& quotient);

/// Level 0 is G_0 = {x^k G : k < r_0} with coefficients in R; level i >= 1
/// is S_i = {x^k B_i : k < r_i} with coefficients mod p^(s-i).
struct GeneratingLevel {
  unsigned level;
  std::uint32_t radix;
  std::vector<QPVector> vectors;
};

struct MinimalGeneratingSet {
  std::size_t m = 0;
  std::size_t index = 0;
  RingSpec ring;
  DigitDecomposition digits;
  HSequence hseq;
  std::vector<GeneratingLevel> levels;  // levels[i].level == i

  const std::vector<QPVector>& g0() const { return levels.at(0).vectors; }
  const std::vector<QPVector>& s(unsigned i) const { return levels.at(i).vectors; }
  std::size_t element_count() const;

  /// log_p |C| = sum_i (s - i) r_i.
  unsigned size_exponent() const;
  SpanningFamily family() const;
};

/// True iff every component is nonzero mod p, i.e. is not a zero divisor in
/// Z_{p^s}[x].
bool meets_generating_hypothesis(const QPGenerator& gen);

/// Throws HypothesisError unless meets_generating_hypothesis(gen).
MinimalGeneratingSet minimal_generating_set(const QPGenerator& gen);

/// Canonical form of the R-span of {x^k G : k < m}, which is the code.
HowellForm expanded_form(const QPGenerator& gen);

/// The i-th projection (0-based), a polycyclic code containing F_i.
PolycyclicCode project(const QPGenerator& gen, std::size_t i);

/// Standard-form basis of Ann(C) = Ann(<F_1, ..., F_l>).
StandardFormBasis parity_check(const QPGenerator& gen);

struct Freeness {
  bool free = false;
  unsigned rank = 0;  // meaningful when free; |C| = |R|^rank
};

/// The code is free iff, for every factor pi of f, the generator is either
/// zero mod pi or has some component that is nonzero mod (p, pi). The rank
/// is then deg h^(0). For a primary factor pi^e with e > 1 (only in a
/// QuotientRing::general ring) the component module is tested directly.
Freeness is_free(const QPGenerator& gen);

struct CodeParams {
  std::size_t n = 0;
  unsigned size_exponent = 0;  // log_p |C|
  std::uint32_t lee_distance = 0;
  std::uint32_t hamming_distance = 0;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

struct DistanceOptions {
  std::uint64_t budget = std::uint64_t{1} << 20;  // 4^10 codewords
  unsigned threads = 0;                           // 0: default_thread_count()
};

/// Length, size and exact minimum distances. The walk uses the minimal
/// generating set when the hypothesis holds and f is square-free mod p, and
/// the echelon form of the expanded generator matrix otherwise.
CodeParams code_params(const QPGenerator& gen, const DistanceOptions& options = {});

/// "4^2"-style size: a power of q when the exponent allows, else of p.
std::string format_size(unsigned size_exponent, const RingSpec& ring);

/// "(10, 4^2, 10)".
std::string format_params(const CodeParams& params, const RingSpec& ring);

}  // namespace qpc

#endif  // QPC_QP_CODE_HPP
