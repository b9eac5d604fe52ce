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

#include "qpc/duality.hpp"

#include "qpc/error.hpp"

namespace qpc {

AssociateVector::AssociateVector(const RingSpec& ring, Vec c) : ring_(ring), c_(std::move(c)) {
  if (c_.empty()) throw PreconditionError("associate vector is empty");
  for (auto& x : c_) x = ring_.reduce(x);
  if (!ring_.is_unit(c_[0])) {
    throw PreconditionError("c_0 = " + std::to_string(c_[0]) + " is not a unit");
  }
}

AssociateVector AssociateVector::from_modulus(const Poly& f) {
  if (!f.is_monic() || f.degree() < 1) {
    throw PreconditionError("modulus must be monic of degree at least 1");
  }
  const RingSpec& ring = f.ring();
  Vec c(static_cast<std::size_t>(f.degree()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ring.neg(f.coeff(i));
  return AssociateVector(ring, std::move(c));
}

ShiftMatrix ShiftMatrix::transposed() const {
  ShiftMatrix out{ring, std::vector<Vec>(size(), Vec(size(), 0))};
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) out.entries[j][i] = entries[i][j];
  }
  return out;
}

Vec ShiftMatrix::apply(std::span<const Residue> v) const {
  Vec out(size(), 0);
  for (std::size_t i = 0; i < size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < size(); ++j) {
      out[j] = ring.add(out[j], ring.mul(v[i], entries[i][j]));
    }
  }
  return out;
}

ShiftMatrix build_D(const AssociateVector& av) {
  const std::size_t m = av.size();
  ShiftMatrix d{av.ring(), std::vector<Vec>(m, Vec(m, 0))};
  for (std::size_t i = 0; i + 1 < m; ++i) d.entries[i][i + 1] = 1;
  d.entries[m - 1] = av.values();
  return d;
}

ShiftMatrix build_M(const AssociateVector& av) {
  const std::size_t m = av.size();
  ShiftMatrix mat{av.ring(), std::vector<Vec>(m, Vec(m, 0))};
  for (std::size_t i = 0; i + 1 < m; ++i) mat.entries[i + 1][i] = 1;
  for (std::size_t i = 0; i < m; ++i) mat.entries[i][m - 1] = av.values()[i];
  return mat;
}

Residue inner_f(const Poly& g, const Poly& h, const QuotientRing& quotient) {
  return quotient.mul(g, h).coeff(0);
}

LinearCode::LinearCode(const RingSpec& ring, std::size_t m, std::size_t index,
                       std::span<const Vec> rows)
    : m_(m), index_(index), form_(ring, m * index, rows) {
  if (m == 0 || index == 0) throw PreconditionError("code length must be positive");
}

LinearCode LinearCode::from_generator(const QPGenerator& gen) {
  HowellForm form = expanded_form(gen);
  auto rows = form.generators();
  return LinearCode(gen.quotient().ring(), gen.quotient().degree(), gen.index(), rows);
}

bool is_invariant(const LinearCode& code, const ShiftMatrix& matrix) {
  const std::size_t m = code.block();
  if (matrix.size() != m) {
    throw PreconditionError("shift matrix is " + std::to_string(matrix.size()) + "x" +
                            std::to_string(matrix.size()) + ", code blocks have length " +
                            std::to_string(m));
  }
  for (const auto& row : code.form().rows()) {
    Vec image(code.length());
    for (std::size_t b = 0; b < code.index(); ++b) {
      auto part = matrix.apply(std::span(row.values).subspan(b * m, m));
      std::copy(part.begin(), part.end(), image.begin() + static_cast<std::ptrdiff_t>(b * m));
    }
    if (!code.contains(image)) return false;
  }
  return true;
}

LinearCode euclidean_dual(const LinearCode& code) {
  auto rows = code.generator_rows();
  HowellForm kernel = right_kernel(code.ring(), code.length(), rows);
  auto gens = kernel.generators();
  return LinearCode(code.ring(), code.block(), code.index(), gens);
}

LinearCode annihilator_dual(const LinearCode& code, const QuotientRing& quotient) {
  const std::size_t m = code.block();
  const RingSpec& ring = code.ring();
  if (quotient.degree() != m || !(quotient.ring() == ring)) {
    throw PreconditionError("code does not live in R_m^l for this modulus");
  }
  if (!is_invariant(code, build_D(AssociateVector::from_modulus(quotient.modulus())))) {
    throw PreconditionError("code is not invariant under multiplication by x");
  }
  // Gram matrix of the form on one block: B[a][b] = const(x^(a+b) mod f).
  std::vector<Residue> power_const(2 * m, 0);
  Poly xp = quotient.one();
  for (std::size_t k = 0; k + 1 < 2 * m; ++k) {
    power_const[k] = xp.coeff(0);
    xp = quotient.times_x(xp);
  }
  std::vector<Vec> rows;
  for (const auto& h : code.generator_rows()) {
    Vec r(code.length(), 0);
    for (std::size_t blk = 0; blk < code.index(); ++blk) {
      for (std::size_t a = 0; a < m; ++a) {
        Residue acc = 0;
        for (std::size_t b = 0; b < m; ++b) {
          acc = ring.add(acc, ring.mul(power_const[a + b], h[blk * m + b]));
        }
        r[blk * m + a] = acc;
      }
    }
    rows.push_back(std::move(r));
  }
  HowellForm kernel = right_kernel(ring, code.length(), rows);
  auto gens = kernel.generators();
  return LinearCode(ring, m, code.index(), gens);
}

}  // namespace qpc
