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

#include "qpc/polycyclic.hpp"

#include <string>

#include "qpc/error.hpp"

namespace qpc {

StandardFormBasis::StandardFormBasis(QuotientRing quotient, std::vector<StandardEntry> entries)
    : quotient_(std::move(quotient)), entries_(std::move(entries)) {
  const RingSpec& ring = quotient_.ring();
  const Poly& f = quotient_.modulus();
  int prev_degree = f.degree();
  const Poly* prev = &f;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (!(e.generator.ring() == ring)) throw PreconditionError("basis entry over the wrong ring");
    if (e.exponent >= ring.s()) throw PreconditionError("basis exponent must be below s");
    if (i > 0 && e.exponent <= entries_[i - 1].exponent) {
      throw PreconditionError("basis exponents must strictly increase");
    }
    if (!e.generator.is_monic()) throw PreconditionError("basis generators must be monic");
    if (e.generator.degree() >= prev_degree) {
      throw PreconditionError("basis degrees must strictly decrease below m");
    }
    if (!monic_divrem(*prev, e.generator).rem.is_zero()) {
      throw PreconditionError("basis generators must form a divisibility chain into f");
    }
    prev_degree = e.generator.degree();
    prev = &e.generator;
  }
}

std::vector<Poly> StandardFormBasis::generators() const {
  std::vector<Poly> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) {
    out.push_back(e.generator.scaled(quotient_.ring().pow_p(e.exponent)));
  }
  return out;
}

Vec ideal_row(const Poly& a, std::size_t m) {
  Vec row(m, 0);
  for (std::size_t k = 0; k < a.coeffs().size() && k < m; ++k) row[m - 1 - k] = a.coeffs()[k];
  return row;
}

Poly poly_from_ideal_row(std::span<const Residue> row, const RingSpec& ring) {
  const std::size_t m = row.size();
  std::vector<Residue> c(m);
  for (std::size_t k = 0; k < m; ++k) c[k] = row[m - 1 - k];
  return Poly(ring, std::move(c));
}

HowellForm ideal_form(std::span<const Poly> gens, const QuotientRing& quotient) {
  const std::size_t m = quotient.degree();
  std::vector<Vec> rows;
  rows.reserve(gens.size() * m);
  for (const auto& g : gens) {
    Poly shift = quotient.reduce(g);
    for (std::size_t k = 0; k < m && !shift.is_zero(); ++k) {
      rows.push_back(ideal_row(shift, m));
      shift = quotient.times_x(shift);
    }
  }
  return HowellForm(quotient.ring(), m, rows);
}

StandardFormBasis standard_form_from_generators(std::span<const Poly> gens,
                                                const QuotientRing& quotient) {
  const RingSpec& ring = quotient.ring();
  const std::size_t m = quotient.degree();
  HowellForm form = ideal_form(gens, quotient);
  const auto& rows = form.rows();

  // An ideal has an element of every leading degree from m-1 down to deg g_t,
  // and the pivot exponent can only grow as the degree drops.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].pivot != i || (i > 0 && rows[i].exponent < rows[i - 1].exponent)) {
      throw InternalError("ideal echelon form does not have the standard shape");
    }
  }

  std::vector<StandardEntry> entries;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool last_of_exponent = i + 1 == rows.size() || rows[i + 1].exponent != rows[i].exponent;
    if (!last_of_exponent) continue;
    const unsigned j = rows[i].exponent;
    const Residue pj = ring.pow_p(j);
    const std::size_t degree = m - 1 - rows[i].pivot;

    Vec scaled(rows[i].values);
    for (auto& v : scaled) {
      if (v % pj != 0) throw InternalError("standard-form row is not divisible by its pivot");
      v /= pj;
    }
    Poly residue = poly_from_ideal_row(scaled, ring).reduce_mod_p();
    Poly g = quotient.one();
    for (const auto& pi : quotient.factorization().factors) {
      if (field_divrem(residue, pi.reduce_mod_p()).rem.is_zero()) g = g * pi;
    }
    if (g.degree() != static_cast<int>(degree) || !(g.reduce_mod_p() == residue)) {
      throw InternalError("standard-form generator is not a divisor of f");
    }
    if (!form.contains(ideal_row(g.scaled(pj), m))) {
      throw InternalError("standard-form generator is not in the ideal");
    }
    entries.push_back({j, std::move(g)});
  }

  try {
    StandardFormBasis basis(quotient, std::move(entries));
    if (cardinality_exponent(basis) != form.size_exponent()) {
      throw InternalError("standard-form cardinality disagrees with the echelon form");
    }
    return basis;
  } catch (const PreconditionError& e) {
    throw InternalError(std::string("standard-form invariant violated: ") + e.what());
  }
}

Poly single_generator(const StandardFormBasis& basis) {
  Poly g = basis.quotient().zero();
  for (const auto& term : basis.generators()) g += term;
  return basis.quotient().reduce(g);
}

unsigned cardinality_exponent(const StandardFormBasis& basis) {
  const unsigned s = basis.quotient().ring().s();
  int prev = static_cast<int>(basis.quotient().degree());
  unsigned delta = 0;
  for (const auto& e : basis.entries()) {
    delta += (s - e.exponent) * static_cast<unsigned>(prev - e.generator.degree());
    prev = e.generator.degree();
  }
  return delta;
}

StandardFormBasis annihilator(const StandardFormBasis& basis) {
  const QuotientRing& quotient = basis.quotient();
  const RingSpec& ring = quotient.ring();
  const unsigned s = ring.s();
  const Poly& f = quotient.modulus();
  const auto& entries = basis.entries();
  const std::size_t t1 = entries.size();  // t + 1

  // Entry i pairs exponent s - j_{t+1-i} with f / g_{t-i}, where j_{t+1} = s
  // and g_{-1} = f. Terms that vanish in R[x]/<f> are dropped.
  std::vector<Poly> gens;
  for (std::size_t i = 0; i <= t1; ++i) {
    unsigned j = i == 0 ? s : entries[t1 - i].exponent;
    unsigned b = s - j;
    const Poly& g = i == t1 ? f : entries[t1 - 1 - i].generator;
    auto [h, rem] = monic_divrem(f, g);
    if (!rem.is_zero()) throw InternalError("annihilator cofactor is not exact");
    if (b >= s || h.degree() >= f.degree()) continue;
    gens.push_back(h.scaled(ring.pow_p(b)));
  }
  return standard_form_from_generators(gens, quotient);
}

void for_each_codeword(const StandardFormBasis& basis,
                       const std::function<void(const Poly&)>& visit,
                       unsigned max_exponent) {
  const QuotientRing& quotient = basis.quotient();
  const RingSpec& ring = quotient.ring();
  const unsigned delta = cardinality_exponent(basis);
  if (delta > max_exponent) {
    throw BudgetError("code has p^" + std::to_string(delta) + " codewords, over the limit p^" +
                      std::to_string(max_exponent));
  }
  // Each codeword is sum_i a_i p^{j_i} g_i with deg a_i < deg g_{i-1} - deg g_i
  // and the coefficients of a_i taken mod p^{s - j_i}.
  std::vector<Poly> terms;
  std::vector<Residue> radix;
  int prev = static_cast<int>(quotient.degree());
  for (const auto& e : basis.entries()) {
    Poly base = e.generator.scaled(ring.pow_p(e.exponent));
    for (int k = 0; k < prev - e.generator.degree(); ++k) {
      terms.push_back(quotient.reduce(base.shifted(static_cast<std::size_t>(k))));
      radix.push_back(ring.pow_p(e.exponent) == 0 ? 1 : ring.q() / ring.pow_p(e.exponent));
    }
    prev = e.generator.degree();
  }
  std::vector<Residue> digit(terms.size(), 0);
  while (true) {
    Poly word = quotient.zero();
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (digit[k] != 0) word += terms[k].scaled(digit[k]);
    }
    visit(word);
    std::size_t k = 0;
    while (k < digit.size() && ++digit[k] == radix[k]) digit[k++] = 0;
    if (k == digit.size()) break;
  }
}

std::vector<Poly> enumerate_codewords(const StandardFormBasis& basis, unsigned max_exponent) {
  std::vector<Poly> out;
  for_each_codeword(basis, [&](const Poly& w) { out.push_back(w); }, max_exponent);
  return out;
}

ShortenedCode shorten_cyclic(const StandardFormBasis& cyclic, std::size_t n) {
  const QuotientRing& quotient = cyclic.quotient();
  const RingSpec& ring = quotient.ring();
  const std::size_t big_n = quotient.degree();
  Poly xn_minus_1 = Poly::monomial(ring, 1, big_n) - quotient.one();
  if (!(quotient.modulus() == xn_minus_1)) {
    throw PreconditionError("shortening needs a cyclic code, modulus x^N - 1");
  }
  if (cyclic.is_zero()) throw PreconditionError("cannot shorten the zero code");
  const Poly& g0 = cyclic.entries().front().generator;
  if (n == 0 || n >= big_n || static_cast<int>(n) < g0.degree()) {
    throw PreconditionError("shortened length must satisfy deg g_0 <= n < N");
  }
  Poly r = monic_divrem(Poly::monomial(ring, 1, n), g0).rem;
  Poly f_new = Poly::monomial(ring, 1, n) - r;
  if (!is_squarefree_residue(f_new)) {
    throw NotSquareFreeError("shortened modulus " + render_algebraic(f_new) +
                             " has a non-square-free reduction");
  }
  const Poly* prev = &f_new;
  for (const auto& e : cyclic.entries()) {
    if (!monic_divrem(*prev, e.generator).rem.is_zero()) {
      throw InternalError("shortened modulus breaks the divisibility chain");
    }
    prev = &e.generator;
  }
  QuotientRing shortened(f_new);
  auto gens = cyclic.generators();
  return {f_new, standard_form_from_generators(gens, shortened)};
}

}  // namespace qpc
