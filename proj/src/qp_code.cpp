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

#include "qpc/qp_code.hpp"

#include <algorithm>

#include "qpc/error.hpp"

namespace qpc {

namespace {

unsigned poly_valuation(const Poly& a) {
  const RingSpec& ring = a.ring();
  unsigned v = ring.s();
  for (Residue c : a.coeffs()) v = std::min(v, ring.valuation(c));
  return v;
}

// Inverse of a modulo the basic irreducible pi: invert over F_p, then
// Newton-lift u <- u (2 - a u) until a u = 1 mod pi.
Poly inverse_mod_factor(const Poly& a, const Poly& pi) {
  const RingSpec& ring = a.ring();
  auto bez = field_ext_gcd(monic_divrem(a, pi).rem.reduce_mod_p(), pi.reduce_mod_p());
  if (bez.gcd.degree() != 0) throw InternalError("element is not invertible modulo a factor");
  Poly u = bez.a.with_ring(ring);
  const Poly two = Poly::constant(ring, 2 % ring.q());
  const Poly one = Poly::constant(ring, 1);
  for (unsigned iter = 0; iter <= ring.s(); ++iter) {
    Poly au = monic_divrem(a * u, pi).rem;
    if (au == one) return u;
    u = monic_divrem(u * (two - au), pi).rem;
  }
  throw InternalError("Newton lifting of an inverse did not converge");
}

// Product of the factors of f dividing every polynomial in gs.
Poly common_factor_product(const std::vector<Poly>& gs, const QuotientRing& quotient) {
  Poly out = quotient.one();
  for (const auto& pi : quotient.factorization().factors) {
    bool all = std::all_of(gs.begin(), gs.end(),
                           [&](const Poly& g) { return monic_divrem(g, pi).rem.is_zero(); });
    if (all) out = out * pi;
  }
  return out;
}

}  // namespace

Vec flatten(const QPVector& v, std::size_t m) {
  Vec out(m * v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto c = v[i].coeffs();
    if (c.size() > m) throw PreconditionError("QP component is not reduced");
    std::copy(c.begin(), c.end(), out.begin() + static_cast<std::ptrdiff_t>(i * m));
  }
  return out;
}

QPGenerator::QPGenerator(QuotientRing quotient, std::vector<Poly> components)
    : quotient_(std::move(quotient)) {
  if (components.empty()) throw PreconditionError("a QP generator needs at least one component");
  bool any = false;
  for (auto& c : components) {
    if (!(c.ring() == quotient_.ring())) throw PreconditionError("component over the wrong ring");
    components_.push_back(quotient_.reduce(c));
    any = any || !components_.back().is_zero();
  }
  if (!any) throw PreconditionError("all generator components are zero");
}

QPVector QPGenerator::times(const Poly& g) const {
  QPVector out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(quotient_.mul(g, c));
  return out;
}

DigitDecomposition base_digits(const QPGenerator& gen) {
  DigitDecomposition d;
  for (const auto& c : gen.components()) d.digits.push_back(gamma_adic_digits(c));
  return d;
}

std::vector<Poly> crt_idempotents(const QuotientRing& quotient) {
  const auto& factors = quotient.factorization().factors;
  if (factors.size() == 1) return {quotient.one()};
  std::vector<Poly> out;
  for (const auto& pi : factors) {
    Poly cofactor = monic_divrem(quotient.modulus(), pi).quot;
    out.push_back(quotient.mul(cofactor, inverse_mod_factor(cofactor, pi)));
  }
  return out;
}

DigitDecomposition valuation_digits(const QPGenerator& gen) {
  const QuotientRing& quotient = gen.quotient();
  const RingSpec& ring = quotient.ring();
  const unsigned s = ring.s();
  const auto& factors = quotient.factorization().factors;
  const auto idempotents = crt_idempotents(quotient);

  DigitDecomposition d;
  d.digits.assign(gen.index(), std::vector<Poly>(s, quotient.zero()));
  for (std::size_t k = 0; k < factors.size(); ++k) {
    std::vector<Poly> residues;
    unsigned v = s;
    for (const auto& c : gen.components()) {
      residues.push_back(monic_divrem(c, factors[k]).rem);
      v = std::min(v, poly_valuation(residues.back()));
    }
    if (v == s) continue;
    const Residue pv = ring.pow_p(v);
    for (std::size_t i = 0; i < residues.size(); ++i) {
      std::vector<Residue> w(residues[i].coeffs().begin(), residues[i].coeffs().end());
      for (auto& x : w) x /= pv;
      d.digits[i][v] += quotient.mul(idempotents[k], Poly(ring, std::move(w)));
    }
  }

  for (std::size_t i = 0; i < gen.index(); ++i) {
    Poly sum = quotient.zero();
    for (unsigned j = 0; j < s; ++j) sum += d.digits[i][j].scaled(ring.pow_p(j));
    if (!(quotient.reduce(sum) == gen.components()[i])) {
      throw InternalError("valuation digits do not recompose the generator");
    }
  }
  return d;
}

HSequence h_sequence(const DigitDecomposition& digits, const QuotientRing& quotient) {
  const unsigned s = quotient.ring().s();
  const Poly& f = quotient.modulus();
  HSequence out;
  Poly prefix = quotient.one();  // h^(0) ... h^(j-1), kept in R[x]
  for (unsigned j = 0; j < s; ++j) {
    std::vector<Poly> column;
    for (const auto& row : digits.digits) {
      if (row.size() != s) throw PreconditionError("digit decomposition needs s levels per component");
      column.push_back(quotient.reduce(row[j] * prefix));
    }
    auto [h, rem] = monic_divrem(f, common_factor_product(column, quotient));
    if (!rem.is_zero()) throw InternalError("gcd with f does not divide f");
    out.r.push_back(static_cast<unsigned>(h.degree()));
    prefix = prefix * h;
    out.h.push_back(std::move(h));
  }
  return out;
}

std::size_t MinimalGeneratingSet::element_count() const {
  std::size_t n = 0;
  for (const auto& l : levels) n += l.vectors.size();
  return n;
}

unsigned MinimalGeneratingSet::size_exponent() const {
  unsigned total = 0;
  for (unsigned j = 0; j < hseq.r.size(); ++j) total += (ring.s() - j) * hseq.r[j];
  return total;
}

SpanningFamily MinimalGeneratingSet::family() const {
  SpanningFamily fam{ring, m * index, {}, {}};
  for (const auto& l : levels) {
    for (const auto& v : l.vectors) {
      fam.vectors.push_back(flatten(v, m));
      fam.radices.push_back(l.radix);
    }
  }
  return fam;
}

bool meets_generating_hypothesis(const QPGenerator& gen) {
  return std::none_of(gen.components().begin(), gen.components().end(),
                      [](const Poly& c) { return c.reduce_mod_p().is_zero(); });
}

MinimalGeneratingSet minimal_generating_set(const QPGenerator& gen) {
  if (!meets_generating_hypothesis(gen)) {
    throw HypothesisError("some component is zero mod p, hence a zero divisor in R[x]");
  }
  const QuotientRing& quotient = gen.quotient();
  const RingSpec& ring = quotient.ring();
  const unsigned s = ring.s();

  MinimalGeneratingSet set{quotient.degree(), gen.index(), ring, valuation_digits(gen), {}, {}};
  set.hseq = h_sequence(set.digits, quotient);

  Poly prefix = quotient.one();
  for (unsigned i = 0; i < s; ++i) {
    QPVector base;
    if (i == 0) {
      base = gen.components();
    } else {
      for (const auto& row : set.digits.digits) {
        Poly tail = quotient.zero();
        for (unsigned e = i; e < s; ++e) tail += row[e].scaled(ring.pow_p(e));
        base.push_back(quotient.mul(tail, prefix));
      }
      for (const auto& c : base) {
        if (!c.scaled(ring.pow_p(s - i)).is_zero()) {
          throw InternalError("level generator is not killed by p^(s-i)");
        }
      }
    }
    GeneratingLevel level{i, ring.q() / ring.pow_p(i), {}};
    for (unsigned k = 0; k < set.hseq.r[i]; ++k) {
      level.vectors.push_back(base);
      for (auto& c : base) c = quotient.times_x(c);
    }
    set.levels.push_back(std::move(level));
    prefix = prefix * set.hseq.h[i];
  }
  return set;
}

HowellForm expanded_form(const QPGenerator& gen) {
  const QuotientRing& quotient = gen.quotient();
  const std::size_t m = quotient.degree();
  std::vector<Vec> rows;
  QPVector v = gen.components();
  for (std::size_t k = 0; k < m; ++k) {
    rows.push_back(flatten(v, m));
    for (auto& c : v) c = quotient.times_x(c);
  }
  return HowellForm(quotient.ring(), gen.length(), rows);
}

PolycyclicCode project(const QPGenerator& gen, std::size_t i) {
  if (i >= gen.index()) {
    throw PreconditionError("projection index " + std::to_string(i + 1) + " out of range 1.." +
                            std::to_string(gen.index()));
  }
  return standard_form_from_generators(std::span(&gen.components()[i], 1), gen.quotient());
}

StandardFormBasis parity_check(const QPGenerator& gen) {
  return annihilator(standard_form_from_generators(gen.components(), gen.quotient()));
}

Freeness is_free(const QPGenerator& gen) {
  const QuotientRing& quotient = gen.quotient();
  const RingSpec& ring = quotient.ring();
  const unsigned s = ring.s();
  Freeness out{true, 0};
  for (const auto& primary : quotient.primary_factors()) {
    const Poly& pi = primary.factor;
    const auto d = static_cast<std::size_t>(pi.degree());
    if (primary.multiplicity == 1) {
      unsigned v = s;
      for (const auto& c : gen.components()) v = std::min(v, poly_valuation(monic_divrem(c, pi).rem));
      if (v == 0) {
        out.rank += static_cast<unsigned>(d);
      } else if (v < s) {
        out.free = false;
      }
      continue;
    }
    // Z_{p^s}[x]/<pi> is local but not a chain ring here: read the
    // component module off its echelon form.
    std::vector<Vec> rows;
    QPVector v;
    for (const auto& c : gen.components()) v.push_back(monic_divrem(c, pi).rem);
    for (std::size_t k = 0; k < d; ++k) {
      rows.push_back(flatten(v, d));
      for (auto& c : v) c = monic_divrem(c.shifted(1), pi).rem;
    }
    // M is R-free iff |M| = q^k with p^k = |M / pM|.
    HowellForm component(ring, d * gen.index(), rows);
    for (auto& r : rows) {
      for (auto& x : r) x = ring.mul(x, ring.p() % ring.q());
    }
    HowellForm scaled(ring, d * gen.index(), rows);
    const unsigned k = component.size_exponent() - scaled.size_exponent();
    if (component.size_exponent() != s * k) {
      out.free = false;
    } else {
      out.rank += k;
    }
  }
  if (!out.free) out.rank = 0;
  return out;
}

CodeParams code_params(const QPGenerator& gen, const DistanceOptions& options) {
  const unsigned threads = options.threads == 0 ? default_thread_count() : options.threads;
  HowellForm expanded = expanded_form(gen);
  const bool quotient_ok = gen.quotient().squarefree();
  CodeParams params;
  params.n = gen.length();
  params.size_exponent = expanded.size_exponent();

  SpanningFamily family = quotient_ok && meets_generating_hypothesis(gen)
                              ? [&] {
                                  auto set = minimal_generating_set(gen);
                                  if (set.size_exponent() != params.size_exponent) {
                                    throw InternalError(
                                        "minimal generating set size disagrees with the code");
                                  }
                                  return set.family();
                                }()
                              : SpanningFamily::from_howell(expanded);
  auto d = minimum_distances(family, options.budget, threads);
  params.lee_distance = d.lee;
  params.hamming_distance = d.hamming;
  return params;
}

std::string format_size(unsigned size_exponent, const RingSpec& ring) {
  if (size_exponent % ring.s() == 0) {
    return std::to_string(ring.q()) + "^" + std::to_string(size_exponent / ring.s());
  }
  return std::to_string(ring.p()) + "^" + std::to_string(size_exponent);
}

std::string format_params(const CodeParams& params, const RingSpec& ring) {
  return "(" + std::to_string(params.n) + ", " + format_size(params.size_exponent, ring) + ", " +
         std::to_string(params.lee_distance) + ")";
}

}  // namespace qpc
