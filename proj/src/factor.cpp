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

#include <algorithm>

#include "qpc/error.hpp"
#include "qpc/poly.hpp"

namespace qpc {

namespace {

// Largest number of candidate divisors tried at a single degree.
constexpr std::uint64_t kTrialDivisionLimit = std::uint64_t{1} << 24;

// Monic irreducible factors of a monic square-free polynomial over F_p by
// trial division. At each degree the first candidate that divides is
// irreducible, since all smaller factors are gone already.
std::vector<Poly> factor_over_field(Poly rem) {
  const RingSpec& field = rem.ring();
  const std::uint32_t p = field.p();
  std::vector<Poly> factors;
  for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(rem.degree()); ++d) {
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < d; ++k) {
      count *= p;
      if (count > kTrialDivisionLimit) {
        throw BudgetError("trial division over F_" + std::to_string(p) +
                          " at degree " + std::to_string(d) + " is too large");
      }
    }
    std::vector<Residue> cand(d + 1, 0);
    cand[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t t = idx;
      for (std::size_t k = 0; k < d; ++k) {
        cand[k] = static_cast<Residue>(t % p);
        t /= p;
      }
      if (cand[0] == 0 && d > 1) continue;  // divisible by x, found at d = 1
      Poly divisor(field, cand);
      while (rem.degree() >= static_cast<int>(d)) {
        auto [q, r] = monic_divrem(rem, divisor);
        if (!r.is_zero()) break;
        factors.push_back(divisor);
        rem = std::move(q);
      }
      if (2 * d > static_cast<std::size_t>(rem.degree())) break;
    }
  }
  if (rem.degree() >= 1) factors.push_back(std::move(rem));
  return factors;
}

// Hensel lifting of f = g * h from F_p to Z_{p^s} for coprime monic g_bar,
// h_bar. Each step corrects one more p-adic digit using the F_p Bezout
// cofactors.
std::pair<Poly, Poly> lift_pair(const Poly& f, const Poly& g_bar, const Poly& h_bar) {
  const RingSpec& ring = f.ring();
  auto bez = field_ext_gcd(g_bar, h_bar);
  if (bez.gcd.degree() != 0) {
    throw InternalError("Hensel lifting needs coprime residue factors");
  }
  Poly g = g_bar.with_ring(ring);
  Poly h = h_bar.with_ring(ring);
  for (unsigned k = 1; k < ring.s(); ++k) {
    Poly err = f - g * h;
    const Residue pk = ring.pow_p(k);
    std::vector<Residue> digit(err.coeffs().size());
    for (std::size_t i = 0; i < digit.size(); ++i) {
      Residue c = err.coeffs()[i];
      if (c % pk != 0) throw InternalError("Hensel lifting lost p-adic precision");
      digit[i] = (c / pk) % ring.p();
    }
    Poly e_bar(g_bar.ring(), std::move(digit));
    Poly dg = field_divrem(bez.b * e_bar, g_bar).rem;
    auto [dh, zero] = field_divrem(e_bar - h_bar * dg, g_bar);
    if (!zero.is_zero()) throw InternalError("Hensel correction is not exact");
    g += dg.with_ring(ring).scaled(pk);
    h += dh.with_ring(ring).scaled(pk);
  }
  return {std::move(g), std::move(h)};
}

bool factor_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    auto ka = static_cast<std::size_t>(k);
    if (a.coeff(ka) != b.coeff(ka)) return a.coeff(ka) < b.coeff(ka);
  }
  return false;
}

}  // namespace

bool is_squarefree_residue(const Poly& f) {
  Poly fb = f.reduce_mod_p();
  if (fb.is_zero()) return false;
  if (fb.degree() == 0) return true;
  return field_gcd(fb, fb.derivative()).degree() == 0;
}

namespace {

// Lifts the pairwise coprime monic residue components of f, in order, to
// monic factors over Z_{p^s} whose product is f.
std::vector<Poly> lift_components(const Poly& f, const std::vector<Poly>& components) {
  std::vector<Poly> out;
  Poly current = f;
  for (std::size_t i = 0; i + 1 < components.size(); ++i) {
    Poly rest = Poly::constant(components[i].ring(), 1);
    for (std::size_t j = i + 1; j < components.size(); ++j) rest = rest * components[j];
    auto [g, h] = lift_pair(current, components[i], rest);
    out.push_back(std::move(g));
    current = std::move(h);
  }
  out.push_back(std::move(current));

  Poly product = Poly::constant(f.ring(), 1);
  for (const auto& pi : out) product = product * pi;
  if (!(product == f)) throw InternalError("lifted factors do not multiply back to f");
  return out;
}

}  // namespace

Factorization factor_basic_irreducibles(const Poly& f) {
  if (!f.is_monic()) throw PreconditionError("factorization needs a monic polynomial");
  if (!is_squarefree_residue(f)) {
    throw NotSquareFreeError("reduction of " + render_algebraic(f) +
                             " mod p is not square-free");
  }
  if (f.degree() == 0) return {};
  auto residue_factors = factor_over_field(f.reduce_mod_p());
  Factorization out{lift_components(f, residue_factors)};
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  return out;
}

std::vector<PrimaryFactor> primary_factors(const Poly& f) {
  if (!f.is_monic()) throw PreconditionError("factorization needs a monic polynomial");
  if (f.degree() == 0) return {};
  auto residue_factors = factor_over_field(f.reduce_mod_p());
  std::sort(residue_factors.begin(), residue_factors.end(), factor_less);
  std::vector<PrimaryFactor> out;
  std::vector<Poly> components;
  for (const auto& pi : residue_factors) {
    if (!out.empty() && out.back().residue == pi) {
      ++out.back().multiplicity;
      components.back() = components.back() * pi;
    } else {
      out.push_back({Poly(f.ring()), pi, 1});
      components.push_back(pi);
    }
  }
  auto lifted = lift_components(f, components);
  for (std::size_t k = 0; k < out.size(); ++k) out[k].factor = std::move(lifted[k]);
  return out;
}

Poly gcd_with_f(const Poly& g, const Factorization& factorization) {
  if (factorization.factors.empty()) {
    throw PreconditionError("gcd_with_f needs a nonempty factorization");
  }
  Poly out = Poly::constant(factorization.factors.front().ring(), 1);
  for (const auto& pi : factorization.factors) {
    if (monic_divrem(g, pi).rem.is_zero()) out = out * pi;
  }
  return out;
}

std::vector<Poly> gamma_adic_digits(const Poly& g) {
  const RingSpec& ring = g.ring();
  const std::uint32_t p = ring.p();
  std::vector<std::vector<Residue>> digits(ring.s(), std::vector<Residue>(g.coeffs().size(), 0));
  for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
    Residue c = g.coeffs()[k];
    for (unsigned j = 0; j < ring.s(); ++j) {
      digits[j][k] = c % p;
      c /= p;
    }
  }
  std::vector<Poly> out;
  out.reserve(ring.s());
  for (auto& d : digits) out.emplace_back(ring, std::move(d));
  return out;
}

QuotientRing::QuotientRing(Poly modulus) : modulus_(std::move(modulus)) {
  if (!modulus_.is_monic() || modulus_.degree() < 1) {
    throw PreconditionError("modulus must be monic of degree at least 1");
  }
  factorization_ = factor_basic_irreducibles(modulus_);
  for (const auto& pi : factorization_.factors) {
    primary_.push_back({pi, pi.reduce_mod_p(), 1});
  }
  squarefree_ = true;
}

QuotientRing QuotientRing::general(Poly modulus) {
  if (!modulus.is_monic() || modulus.degree() < 1) {
    throw PreconditionError("modulus must be monic of degree at least 1");
  }
  if (is_squarefree_residue(modulus)) return QuotientRing(std::move(modulus));
  QuotientRing out;
  out.modulus_ = std::move(modulus);
  out.primary_ = qpc::primary_factors(out.modulus_);
  return out;
}

const Factorization& QuotientRing::factorization() const {
  if (!squarefree_) {
    throw NotSquareFreeError("reduction of " + render_algebraic(modulus_) +
                             " mod p is not square-free");
  }
  return factorization_;
}

std::vector<Residue> QuotientRing::to_vector(const Poly& a) const {
  std::vector<Residue> v(degree(), 0);
  Poly r = a.degree() >= static_cast<int>(degree()) ? reduce(a) : a;
  auto c = r.coeffs();
  std::copy(c.begin(), c.end(), v.begin());
  return v;
}

Poly QuotientRing::from_vector(std::span<const Residue> v) const {
  return reduce(Poly(ring(), std::vector<Residue>(v.begin(), v.end())));
}

}  // namespace qpc
