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

#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "qpc/error.hpp"
#include "qpc/polycyclic.hpp"
#include "support.hpp"

using namespace qpc;

namespace {

const RingSpec z4 = RingSpec::make(2, 2);
const RingSpec z8 = RingSpec::make(2, 3);

Poly P(const RingSpec& r, std::initializer_list<Residue> c) { return Poly(r, std::vector<Residue>(c)); }

std::set<oracle::V> as_set(const std::vector<Poly>& words, std::size_t m) {
  std::set<oracle::V> s;
  for (const auto& w : words) s.insert(support::to_v(w, m));
  return s;
}

// Z4[x]/<(x+1)(x^2+x+1)> = Z4[x]/<x^3+2x^2+2x+1>.
QuotientRing cubic() { return QuotientRing(P(z4, {1, 1}) * P(z4, {1, 1, 1})); }

}  // namespace

TEST_SUITE("polycyclic") {

TEST_CASE("standard form examples") {
  QuotientRing Q(P(z4, {1, 1, 1}));
  std::vector<Poly> two{Poly::constant(z4, 2)};
  auto b = standard_form_from_generators(two, Q);
  REQUIRE(b.entries().size() == 1);
  CHECK(b.entries()[0].exponent == 1);
  CHECK(b.entries()[0].generator == Poly::constant(z4, 1));
  CHECK(single_generator(b) == Poly::constant(z4, 2));
  CHECK(cardinality_exponent(b) == 2);
  CHECK(as_set(enumerate_codewords(b), 2) ==
        std::set<oracle::V>{{0, 0}, {2, 0}, {0, 2}, {2, 2}});

  auto C = cubic();
  std::vector<Poly> xp1{P(z4, {1, 1})};
  auto c = standard_form_from_generators(xp1, C);
  REQUIRE(c.entries().size() == 1);
  CHECK(c.entries()[0] == StandardEntry{0, P(z4, {1, 1})});
  CHECK(single_generator(c) == P(z4, {1, 1}));
  CHECK(cardinality_exponent(c) == 4);
  CHECK(enumerate_codewords(c).size() == 16);
  CHECK(oracle::ideal({{1, 1}}, support::to_mod(C)).size() == 16);

  CHECK(cardinality_exponent(StandardFormBasis::zero(Q)) == 0);
  CHECK(enumerate_codewords(StandardFormBasis::zero(Q)).size() == 1);
  CHECK(enumerate_codewords(StandardFormBasis::full(Q)).size() == 16);
  std::vector<Poly> none;
  CHECK(standard_form_from_generators(none, Q).is_zero());
}

TEST_CASE("invariants are enforced") {
  QuotientRing Q(P(z4, {1, 1, 1}));
  CHECK_THROWS_AS(StandardFormBasis(Q, {{1, Poly::constant(z4, 1)}, {0, Poly::constant(z4, 1)}}),
                  PreconditionError);
  CHECK_THROWS_AS(StandardFormBasis(Q, {{0, P(z4, {1, 2})}}), PreconditionError);
  CHECK_THROWS_AS(StandardFormBasis(Q, {{0, P(z4, {1, 1})}}), PreconditionError);
  CHECK_THROWS_AS(StandardFormBasis(Q, {{2, Poly::constant(z4, 1)}}), PreconditionError);
  CHECK_THROWS_AS(StandardFormBasis(Q, {{0, P(z4, {1, 1, 1})}}), PreconditionError);
}

TEST_CASE("single generator of the Z8 example chain") {
  QuotientRing E(P(z8, {3, 1}) * P(z8, {1, 1, 1}) * P(z8, {1, 3, 2, 0, 1}));
  Poly g1 = P(z8, {1, 3, 2, 0, 1});
  Poly g0 = P(z8, {3, 1}) * g1;
  StandardFormBasis b(E, {{0, g0}, {1, g1}, {2, Poly::constant(z8, 1)}});
  CHECK(single_generator(b) == E.reduce(g0 + g1.scaled(2) + Poly::constant(z8, 4)));
  std::vector<Poly> one{single_generator(b)};
  CHECK(standard_form_from_generators(one, E) == b);
}

TEST_CASE("annihilator examples") {
  QuotientRing Q(P(z4, {1, 1, 1}));
  std::vector<Poly> two{Poly::constant(z4, 2)};
  auto ann = annihilator(standard_form_from_generators(two, Q));
  CHECK(ann == standard_form_from_generators(two, Q));

  auto C = cubic();
  std::vector<Poly> xp1{P(z4, {1, 1})};
  auto a = annihilator(standard_form_from_generators(xp1, C));
  REQUIRE(a.entries().size() == 1);
  CHECK(a.entries()[0] == StandardEntry{0, P(z4, {1, 1, 1})});
  auto brute = oracle::annihilator({{1, 1}}, support::to_mod(C));
  CHECK(as_set(enumerate_codewords(a), 3) == brute);

  CHECK(annihilator(StandardFormBasis::zero(C)) == StandardFormBasis::full(C));
  CHECK(annihilator(StandardFormBasis::full(C)).is_zero());
}

TEST_CASE("random ideals against the oracles") {
  std::mt19937 rng(2024);
  for (auto ring : {z4, z8}) {
    for (std::size_t m = 1; m <= 3; ++m) {
      for (const auto& f : support::squarefree_moduli(ring, m)) {
        QuotientRing Q(f);
        auto R = support::to_mod(Q);
        for (int t = 0; t < 3; ++t) {
          std::vector<Poly> gens;
          std::vector<oracle::V> gv;
          for (int k = 0; k < 1 + t; ++k) {
            gens.push_back(support::random_poly(rng, ring, m));
            gv.push_back(support::to_v(gens.back(), m));
          }
          auto b = standard_form_from_generators(gens, Q);
          auto words = as_set(enumerate_codewords(b), m);
          CHECK(words == oracle::ideal(gv, R));
          std::vector<Poly> one{single_generator(b)};
          CHECK(standard_form_from_generators(one, Q) == b);
          auto idem = b.generators();
          CHECK(standard_form_from_generators(idem, Q) == b);
          auto ann = annihilator(b);
          CHECK(as_set(enumerate_codewords(ann), m) == oracle::annihilator(gv, R));
          CHECK(cardinality_exponent(b) + cardinality_exponent(ann) == ring.s() * m);
        }
      }
    }
  }
}

TEST_CASE("codeword budget") {
  QuotientRing Q(parse_poly("102013", z4));
  CHECK_THROWS_AS(enumerate_codewords(StandardFormBasis::full(Q), 8), BudgetError);
}

TEST_CASE("shortened cyclic codes") {
  QuotientRing cyc(Poly::monomial(z4, 1, 3) - Poly::constant(z4, 1));
  std::vector<Poly> a{P(z4, {3, 1})};
  CHECK_THROWS_AS(shorten_cyclic(standard_form_from_generators(a, cyc), 2), NotSquareFreeError);

  std::vector<Poly> b{P(z4, {1, 1, 1})};
  auto s = shorten_cyclic(standard_form_from_generators(b, cyc), 2);
  CHECK(s.modulus == P(z4, {1, 1, 1}));
  // g_0 = f_new, so the shortened code is zero in the new ring.
  CHECK(s.code.is_zero());

  CHECK_THROWS_AS(shorten_cyclic(StandardFormBasis::full(cyc), 2), NotSquareFreeError);
  CHECK_THROWS_AS(shorten_cyclic(standard_form_from_generators(b, cyc), 1), PreconditionError);
  CHECK_THROWS_AS(shorten_cyclic(standard_form_from_generators(b, cyc), 3), PreconditionError);
  QuotientRing other(P(z4, {1, 1, 1}));
  CHECK_THROWS_AS(shorten_cyclic(StandardFormBasis::full(other), 1), PreconditionError);
}

}  // TEST_SUITE
