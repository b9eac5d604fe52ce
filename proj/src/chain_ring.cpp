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

#include "qpc/chain_ring.hpp"

#include <charconv>

#include "qpc/error.hpp"

namespace qpc {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t parse_uint(std::string_view text, std::string_view what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("malformed " + std::string(what) + " in ring '" +
                     std::string(text) + "'");
  }
  return v;
}

}  // namespace

RingSpec RingSpec::make(std::uint32_t p, unsigned s) {
  if (!is_prime(p)) {
    throw PreconditionError("ring characteristic base " + std::to_string(p) +
                            " is not prime");
  }
  if (s < 1) throw PreconditionError("nilpotency index must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < s; ++i) {
    q *= p;
    if (q >= (std::uint64_t{1} << 32)) {
      throw PreconditionError("ring order p^s must be below 2^32");
    }
  }
  return RingSpec(p, s, static_cast<std::uint32_t>(q));
}

RingSpec RingSpec::parse(std::string_view text) {
  auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    return make(parse_uint(text, "prime"), 1);
  }
  auto p = parse_uint(text.substr(0, caret), "prime");
  auto s = parse_uint(text.substr(caret + 1), "exponent");
  return make(p, s);
}

Residue RingSpec::pow_p(unsigned k) const noexcept {
  if (k >= s_) return 0;
  Residue r = 1;
  for (unsigned i = 0; i < k; ++i) r *= p_;
  return r;
}

unsigned RingSpec::valuation(Residue a) const noexcept {
  if (a == 0) return s_;
  unsigned v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

Residue RingSpec::inverse(Residue a) const {
  if (!is_unit(a)) {
    throw PreconditionError(std::to_string(a) + " is not a unit in Z_" +
                            std::to_string(q_));
  }
  std::int64_t r0 = q_, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t k = r0 / r1;
    std::int64_t r2 = r0 - k * r1;
    std::int64_t t2 = t0 - k * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  return reduce(t0);
}

std::string RingSpec::to_string() const {
  return std::to_string(p_) + "^" + std::to_string(s_);
}

GammaDecomposition gamma_decompose(Residue e, const RingSpec& ring) {
  e %= ring.q();
  if (e == 0) throw PreconditionError("gamma decomposition of zero is undefined");
  unsigned i = ring.valuation(e);
  return {e / ring.pow_p(i), i};
}

unsigned annihilator_exponent(unsigned i, const RingSpec& ring) {
  if (i > ring.s()) {
    throw PreconditionError("exponent " + std::to_string(i) +
                            " exceeds nilpotency index " +
                            std::to_string(ring.s()));
  }
  return ring.s() - i;
}

}  // namespace qpc
