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

#ifndef QPC_CHAIN_RING_HPP
#define QPC_CHAIN_RING_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace qpc {

/// A residue in [0, q).
using Residue = std::uint32_t;

/// The chain ring Z_{p^s}. Its maximal ideal is generated by p and its
/// residue field is F_p.
class RingSpec {
 public:
  /// Throws PreconditionError unless p is prime, s >= 1 and p^s < 2^32.
  static RingSpec make(std::uint32_t p, unsigned s);

  /// Parses "p^s" (for example "2^2" for Z4). A bare "p" means s = 1.
  static RingSpec parse(std::string_view text);

  std::uint32_t p() const noexcept { return p_; }
  unsigned s() const noexcept { return s_; }
  std::uint32_t q() const noexcept { return q_; }

  Residue reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(q_);
    return static_cast<Residue>(r < 0 ? r + q_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    std::uint64_t t = std::uint64_t{a} + b;
    return static_cast<Residue>(t >= q_ ? t - q_ : t);
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + q_ - b);
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(std::uint64_t{a} * b % q_);
  }

  /// p^k mod q; zero once k >= s.
  Residue pow_p(unsigned k) const noexcept;

  /// p-adic valuation of a residue; s for zero.
  unsigned valuation(Residue a) const noexcept;

  bool is_unit(Residue a) const noexcept { return a % p_ != 0; }

  /// Inverse of a unit by extended Euclid on (a, q). Throws
  /// PreconditionError on a non-unit.
  Residue inverse(Residue a) const;

  /// F_p, viewed as Z_{p^1}.
  RingSpec residue_field() const { return RingSpec(p_, 1, p_); }

  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingSpec(std::uint32_t p, unsigned s, std::uint32_t q) : p_(p), s_(s), q_(q) {}

  std::uint32_t p_;
  unsigned s_;
  std::uint32_t q_;
};

struct GammaDecomposition {
  Residue unit;
  unsigned exponent;
};

/// Writes a nonzero e as unit * p^exponent. The unit is only determined
/// modulo p^(s-exponent); the representative in [0, p^(s-exponent)) is
/// returned.
GammaDecomposition gamma_decompose(Residue e, const RingSpec& ring);

/// The exponent t with Ann(p^i) = <p^t>, i.e. s - i.
unsigned annihilator_exponent(unsigned i, const RingSpec& ring);

}  // namespace qpc

#endif  // QPC_CHAIN_RING_HPP
