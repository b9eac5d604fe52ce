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

#ifndef QPC_POLY_HPP
#define QPC_POLY_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpc/chain_ring.hpp"

namespace qpc {

/// Dense univariate polynomial over Z_{p^s}. Coefficients are indexed by
/// degree and kept without trailing zeros, so the zero polynomial has no
/// coefficients and degree -1.
class Poly {
 public:
  explicit Poly(const RingSpec& ring) : ring_(ring) {}
  /// Coefficients in increasing degree; values are reduced mod q.
  Poly(const RingSpec& ring, std::vector<Residue> coeffs);
  Poly(const RingSpec& ring, std::initializer_list<Residue> coeffs)
      : Poly(ring, std::vector<Residue>(coeffs)) {}

  static Poly constant(const RingSpec& ring, Residue c);
  static Poly monomial(const RingSpec& ring, Residue c, std::size_t degree);

  const RingSpec& ring() const noexcept { return ring_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  Residue coeff(std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : 0;
  }
  Residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::span<const Residue> coeffs() const noexcept { return coeffs_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);

  Poly scaled(Residue c) const;
  /// Multiplication by x^k.
  Poly shifted(std::size_t k) const;
  Poly derivative() const;

  /// Coefficients taken mod p, as a polynomial over F_p.
  Poly reduce_mod_p() const;
  /// Reinterprets the coefficient values over another ring, reducing them
  /// mod the new order.
  Poly with_ring(const RingSpec& ring) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  RingSpec ring_;
  std::vector<Residue> coeffs_;
};

struct DivRem {
  Poly quot;
  Poly rem;
};

/// Exact division by a monic divisor over Z_{p^s}.
DivRem monic_divrem(const Poly& a, const Poly& b);

/// Division over a field (s = 1), divisor nonzero.
DivRem field_divrem(const Poly& a, const Poly& b);
/// Monic gcd over a field; zero when both inputs are zero.
Poly field_gcd(const Poly& a, const Poly& b);

struct Bezout {
  Poly gcd;
  Poly a;  // a * x + b * y = gcd
  Poly b;
};
Bezout field_ext_gcd(const Poly& x, const Poly& y);

/// Parses the compact coefficient notation: digits in decreasing degree
/// order, where "d^k" stands for the digit d repeated k times (k a single
/// digit >= 2). A string starting with '[' is read as a JSON array of
/// coefficients in increasing degree instead.
Poly parse_poly(std::string_view notation, const RingSpec& ring);

/// Inverse of parse_poly for rings with q <= 10: runs of two or more equal
/// digits are compressed. The zero polynomial renders as "0".
std::string render_notation(const Poly& f);

/// Human form such as "x^5+2x^3+x+3".
std::string render_algebraic(const Poly& f);

/// True iff the reduction mod p of f is square-free over F_p.
bool is_squarefree_residue(const Poly& f);

/// Monic basic irreducible factors of a monic polynomial whose reduction is
/// square-free, sorted by degree and then by coefficients.
struct Factorization {
  std::vector<Poly> factors;
};

Factorization factor_basic_irreducibles(const Poly& f);

/// f = prod factor_k with factor_k = residue_k^multiplicity mod p, residues
/// distinct monic irreducibles over F_p. No square-free requirement.
struct PrimaryFactor {
  Poly factor;
  Poly residue;
  unsigned multiplicity;
};

std::vector<PrimaryFactor> primary_factors(const Poly& f);

/// Product of the factors of f that divide g exactly in Z_{p^s}[x]. This
/// is f itself for g = 0 and 1 when no factor divides g.
Poly gcd_with_f(const Poly& g, const Factorization& factorization);

/// Base-p digits [d_0, ..., d_{s-1}] with g = sum_j p^j d_j and every digit
/// coefficient in {0, ..., p-1}.
std::vector<Poly> gamma_adic_digits(const Poly& g);

/// The quotient ring Z_{p^s}[x]/<f> for a monic f with square-free
/// reduction. The factorization of f is computed once at construction.
class QuotientRing {
 public:
  /// Throws PreconditionError if f is not monic of degree >= 1, and
  /// NotSquareFreeError if its reduction has a repeated factor.
  explicit QuotientRing(Poly modulus);
  /// Same, but also accepts a modulus whose reduction is not square-free.
  /// Such a ring supports arithmetic, code sizes and distances; anything
  /// that needs the basic irreducible factors raises NotSquareFreeError.
  static QuotientRing general(Poly modulus);

  const RingSpec& ring() const noexcept { return modulus_.ring(); }
  const Poly& modulus() const noexcept { return modulus_; }
  std::size_t degree() const noexcept { return static_cast<std::size_t>(modulus_.degree()); }
  bool squarefree() const noexcept { return squarefree_; }
  const Factorization& factorization() const;
  const std::vector<PrimaryFactor>& primary_factors() const noexcept { return primary_; }

  Poly reduce(const Poly& a) const { return monic_divrem(a, modulus_).rem; }
  Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }
  Poly times_x(const Poly& a) const { return reduce(a.shifted(1)); }
  Poly zero() const { return Poly(ring()); }
  Poly one() const { return Poly::constant(ring(), 1); }

  /// Coefficient vector of length m (increasing degree) of a reduced element.
  std::vector<Residue> to_vector(const Poly& a) const;
  Poly from_vector(std::span<const Residue> v) const;

  friend bool operator==(const QuotientRing& a, const QuotientRing& b) {
    return a.modulus_ == b.modulus_;
  }

 private:
  QuotientRing() : modulus_(RingSpec::make(2, 1)) {}

  Poly modulus_;
  Factorization factorization_;
  std::vector<PrimaryFactor> primary_;
  bool squarefree_ = false;
};

/// Product in the quotient ring; inputs are reduced first.
inline Poly mul_mod(const Poly& a, const Poly& b, const QuotientRing& quotient) {
  return quotient.mul(a, b);
}

}  // namespace qpc

#endif  // QPC_POLY_HPP
