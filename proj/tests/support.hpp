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

#ifndef QPC_TESTS_SUPPORT_HPP
#define QPC_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "oracle.hpp"
#include "qpc/poly.hpp"

namespace support {

inline oracle::V to_v(const qpc::Poly& a, std::size_t m) {
  oracle::V v(m, 0);
  for (std::size_t k = 0; k < a.coeffs().size() && k < m; ++k) v[k] = a.coeffs()[k];
  return v;
}

inline oracle::Mod to_mod(const qpc::QuotientRing& Q) {
  const auto& c = Q.modulus().coeffs();
  return {Q.ring().q(), oracle::V(c.begin(), c.end())};
}

inline qpc::Poly from_v(const oracle::V& v, const qpc::RingSpec& ring) {
  return qpc::Poly(ring, std::vector<qpc::Residue>(v.begin(), v.end()));
}

inline qpc::Poly random_poly(std::mt19937& rng, const qpc::RingSpec& ring, std::size_t below) {
  std::uniform_int_distribution<qpc::Residue> d(0, ring.q() - 1);
  std::vector<qpc::Residue> c(below);
  for (auto& x : c) x = d(rng);
  return qpc::Poly(ring, std::move(c));
}

// Every monic polynomial of degree m over the ring whose reduction mod p is
// square-free.
inline std::vector<qpc::Poly> squarefree_moduli(const qpc::RingSpec& ring, std::size_t m) {
  std::vector<qpc::Poly> out;
  oracle::Mod all{ring.q(), oracle::V(m + 1, 0)};
  all.f[m] = 1;
  for (auto low : oracle::all_elements(all)) {
    low.push_back(1);
    qpc::Poly f(ring, std::vector<qpc::Residue>(low.begin(), low.end()));
    if (qpc::is_squarefree_residue(f)) out.push_back(f);
  }
  return out;
}

}  // namespace support

#endif  // QPC_TESTS_SUPPORT_HPP
