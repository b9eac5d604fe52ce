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

#ifndef QPC_DUALITY_HPP
#define QPC_DUALITY_HPP

#include <cstddef>
#include <vector>

#include "qpc/howell.hpp"
#include "qpc/qp_code.hpp"

namespace qpc {

/// (c_0, ..., c_{m-1}), the coefficients of x^m - f. c_0 must be a unit.
class AssociateVector {
 public:
  /// Throws PreconditionError if c is empty or c_0 is not a unit.
  AssociateVector(const RingSpec& ring, Vec c);
  static AssociateVector from_modulus(const Poly& f);

  const RingSpec& ring() const noexcept { return ring_; }
  const Vec& values() const noexcept { return c_; }
  std::size_t size() const noexcept { return c_.size(); }

 private:
  RingSpec ring_;
  Vec c_;
};

/// Square matrix over Z_{p^s}, row-major.
struct ShiftMatrix {
  RingSpec ring;
  std::vector<Vec> entries;

  std::size_t size() const noexcept { return entries.size(); }
  ShiftMatrix transposed() const;
  /// Row vector v times this matrix.
  Vec apply(std::span<const Residue> v) const;

  friend bool operator==(const ShiftMatrix&, const ShiftMatrix&) = default;
};

/// Ones on the superdiagonal, last row c. Right multiplication by D is
/// multiplication by x in R[x]/<f>.
ShiftMatrix build_D(const AssociateVector& av);
/// Ones on the subdiagonal, last column c; the transpose of build_D.
ShiftMatrix build_M(const AssociateVector& av);

/// Constant term of g h mod f.
Residue inner_f(const Poly& g, const Poly& h, const QuotientRing& quotient);

/// An R-linear code of length m*l, kept in canonical echelon form.
class LinearCode {
 public:
  LinearCode(const RingSpec& ring, std::size_t m, std::size_t index,
             std::span<const Vec> rows);
  static LinearCode from_generator(const QPGenerator& gen);

  const RingSpec& ring() const noexcept { return form_.ring(); }
  std::size_t block() const noexcept { return m_; }
  std::size_t index() const noexcept { return index_; }
  std::size_t length() const noexcept { return m_ * index_; }
  const HowellForm& form() const noexcept { return form_; }
  unsigned size_exponent() const noexcept { return form_.size_exponent(); }
  bool contains(std::span<const Residue> v) const { return form_.contains(v); }
  std::vector<Vec> generator_rows() const { return form_.generators(); }

  friend bool operator==(const LinearCode&, const LinearCode&) = default;

 private:
  std::size_t m_;
  std::size_t index_;
  HowellForm form_;
};

/// True iff every generator row times diag(M, ..., M) lies in the code.
/// Throws PreconditionError if M is not block() x block().
bool is_invariant(const LinearCode& code, const ShiftMatrix& matrix);

/// Dual under the standard dot product.
LinearCode euclidean_dual(const LinearCode& code);

/// Dual under sum_i <g_i, h_i>_f. Throws PreconditionError unless f(0) is a
/// unit and the code is an R[x]-submodule, i.e. invariant under
/// diag(D, ..., D).
LinearCode annihilator_dual(const LinearCode& code, const QuotientRing& quotient);

}  // namespace qpc

#endif  // QPC_DUALITY_HPP
