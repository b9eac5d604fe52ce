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

// Acceptance checks. Prints one PASS/FAIL line per criterion, followed by
// details for any failure. Exits 0 once every check has run; with --strict
// the exit status is 1 if any check failed.

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qpc/duality.hpp"
#include "qpc/error.hpp"
#include "qpc/manifest.hpp"
#include "qpc/qp_code.hpp"
#include "support.hpp"

using namespace qpc;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(const std::string& why) {
    pass = false;
    if (details.size() < 12) details.push_back(why);
  }
};

struct Counter {
  std::size_t total = 0;
  std::size_t good = 0;
  void add(bool ok) {
    ++total;
    good += ok ? 1 : 0;
  }
  bool all() const { return good == total && total > 0; }
  std::string str() const { return std::to_string(good) + "/" + std::to_string(total); }
};

const RingSpec z4 = RingSpec::make(2, 2);
const RingSpec z8 = RingSpec::make(2, 3);

std::string show(const oracle::V& v) {
  std::ostringstream o;
  o << "[";
  for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
  o << "]";
  return o.str();
}

double pow_p(unsigned e, std::uint32_t p) { return std::pow(static_cast<double>(p), e); }

std::set<oracle::V> words(const std::vector<Poly>& ws, std::size_t m) {
  std::set<oracle::V> s;
  for (const auto& w : ws) s.insert(support::to_v(w, m));
  return s;
}

// Moduli for the property suite: every square-free one over Z4 with
// m <= 4, and a random sample over Z8.
std::vector<Poly> property_moduli(std::mt19937& rng) {
  std::vector<Poly> out;
  for (std::size_t m = 1; m <= 4; ++m) {
    for (auto& f : support::squarefree_moduli(z4, m)) out.push_back(f);
  }
  for (std::size_t m = 1; m <= 4; ++m) {
    auto all = support::squarefree_moduli(z8, m);
    std::shuffle(all.begin(), all.end(), rng);
    for (std::size_t k = 0; k < all.size() && k < (m < 4 ? 10u : 6u); ++k) out.push_back(all[k]);
  }
  return out;
}

Outcome table(const std::string& path, std::size_t expected_rows) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  auto rows = read_manifest(path);
  auto report = run_manifest(rows);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (rows.size() != expected_rows) out.fail("manifest has " + std::to_string(rows.size()) + " rows");
  for (const auto& r : report.rows) {
    if (r.matched()) continue;
    std::ostringstream o;
    o << "line " << r.row.line << " f=" << r.row.f << ": ";
    if (r.params) {
      o << format_params(*r.params, RingSpec::parse(r.row.ring));
    } else {
      o << "error " << r.error;
    }
    o << " expected (" << r.row.expected_n << ", " << r.row.expected_size << ", "
      << r.row.expected_lee << ")";
    out.fail(o.str());
  }
  std::ostringstream s;
  s << report.matched() << "/" << report.rows.size() << " rows exact, " << secs << " s";
  out.summary = s.str();
  return out;
}

Outcome z8_example() {
  Outcome out;
  Poly g1(z8, {1, 3, 2, 0, 1});
  Poly f = Poly(z8, {3, 1}) * Poly(z8, {1, 1, 1}) * g1;
  QuotientRing Q(f);
  Poly chain = Poly(z8, {3, 1}) * g1 + g1.scaled(2) + Poly::constant(z8, 4);
  Poly F1 = mul_mod(Poly::monomial(z8, 2, 3), chain, Q);
  Poly want(z8, {2, 0, 2, 4, 2, 2});
  if (!(F1 == want)) out.fail("F_1 = " + render_algebraic(F1));
  auto d = gamma_adic_digits(F1);
  if (d.size() != 3 || !d[0].is_zero() || !(d[1] == Poly(z8, {1, 0, 1, 0, 1, 1})) ||
      !(d[2] == Poly::monomial(z8, 1, 3))) {
    out.fail("digits differ");
  }
  out.summary = "F_1 = " + render_algebraic(F1) + ", digits (" +
                (d[0].is_zero() ? "0" : render_algebraic(d[0])) + ", " + render_algebraic(d[1]) +
                ", " + render_algebraic(d[2]) + ")";
  return out;
}

struct Suite {
  Outcome a, b, c, d, e, f;
};

Suite property_suite() {
  Suite out;
  std::mt19937 rng(20260415);
  Counter ca, cb, cc, cd, cdmin, ce;
  std::size_t e_skipped = 0;
  for (const auto& f : property_moduli(rng)) {
    QuotientRing Q(f);
    const RingSpec ring = Q.ring();
    const std::size_t m = Q.degree();
    const auto R = support::to_mod(Q);
    const double rm = pow_p(ring.s() * static_cast<unsigned>(m), ring.p());

    for (int t = 0; t < 4; ++t) {
      std::vector<Poly> gens;
      std::vector<oracle::V> gv;
      for (int k = 0; k <= t % 3; ++k) {
        gens.push_back(support::random_poly(rng, ring, m));
        gv.push_back(support::to_v(gens.back(), m));
      }
      const std::string where = "f=" + render_algebraic(f) + " over Z" + std::to_string(ring.q());
      try {
        auto basis = standard_form_from_generators(gens, Q);
        // (a) invariants, checked here directly.
        bool inv = true;
        int prev_deg = static_cast<int>(m);
        oracle::V prev(f.coeffs().begin(), f.coeffs().end());
        for (std::size_t i = 0; i < basis.entries().size(); ++i) {
          const auto& e = basis.entries()[i];
          inv = inv && e.exponent < ring.s();
          if (i > 0) inv = inv && e.exponent > basis.entries()[i - 1].exponent;
          inv = inv && e.generator.is_monic() && e.generator.degree() < prev_deg;
          oracle::V g(e.generator.coeffs().begin(), e.generator.coeffs().end());
          auto rem = oracle::reduce(prev, oracle::Mod{ring.q(), g});
          inv = inv && std::all_of(rem.begin(), rem.end(), [](auto x) { return x == 0; });
          prev_deg = e.generator.degree();
          prev = g;
        }
        auto ideal = oracle::ideal(gv, R);
        auto enumerated = words(enumerate_codewords(basis), m);
        inv = inv && enumerated == ideal;
        ca.add(inv);
        if (!inv) out.a.fail(where + ": standard form invalid or spans a different ideal");

        // (b) size formula against enumeration.
        bool size_ok = pow_p(cardinality_exponent(basis), ring.p()) == static_cast<double>(ideal.size());
        cb.add(size_ok);
        if (!size_ok) out.b.fail(where + ": size formula disagrees with enumeration");

        // (c) annihilator against the exhaustive scan.
        auto ann = annihilator(basis);
        auto brute = oracle::annihilator(gv, R);
        bool ann_ok = words(enumerate_codewords(ann), m) == brute &&
                      static_cast<double>(ideal.size() * brute.size()) == rm;
        cc.add(ann_ok);
        if (!ann_ok) out.c.fail(where + ": annihilator disagrees with the scan");

        // (e) l = 1: C^0 = Ann(C) and |C| |C^0| = |R_m|.
        if (ring.is_unit(f.coeff(0)) && !basis.is_zero()) {
          std::vector<Poly> one{single_generator(basis)};
          auto code = LinearCode::from_generator(QPGenerator(Q, one));
          auto c0 = annihilator_dual(code, Q);
          std::vector<oracle::V> rows;
          for (const auto& r : c0.generator_rows()) rows.emplace_back(r.begin(), r.end());
          auto c0_words = oracle::span(rows, m, ring.q());
          bool e_ok = c0_words == brute && static_cast<double>(ideal.size() * c0_words.size()) == rm &&
                      c0_words == oracle::f_dual(ideal, 1, R);
          ce.add(e_ok);
          if (!e_ok) out.e.fail(where + ": C^0 differs from Ann(C)");
        } else if (!ring.is_unit(f.coeff(0))) {
          ++e_skipped;
        }
      } catch (const Error& e) {
        ca.add(false);
        out.a.fail(where + ": " + e.what());
      }
    }

    // (d) minimal generating sets, l = 1..3.
    for (std::size_t index = 1; index <= 3; ++index) {
      std::vector<Poly> comps;
      std::vector<oracle::V> cv;
      for (std::size_t i = 0; i < index; ++i) {
        Poly c = support::random_poly(rng, ring, m);
        if (c.reduce_mod_p().is_zero()) c += Poly::constant(ring, 1);
        comps.push_back(c);
        cv.push_back(support::to_v(Q.reduce(c), m));
      }
      QPGenerator G(Q, comps);
      if (!meets_generating_hypothesis(G)) continue;
      auto set = minimal_generating_set(G);
      auto fam = set.family();
      auto span = oracle::bounded_span(fam.vectors, fam.radices, fam.length, ring.q());
      auto code = oracle::qp_code(cv, R);
      bool ok = span == code && pow_p(set.size_exponent(), ring.p()) == static_cast<double>(code.size());
      cd.add(ok);
      if (!ok) out.d.fail("f=" + render_algebraic(f) + " G=" + show(oracle::concat(cv)));
      if (cdmin.total < 50 && fam.vectors.size() > 1) {
        bool minimal = true;
        for (std::size_t drop = 0; drop < fam.vectors.size(); ++drop) {
          auto v = fam.vectors;
          auto r = fam.radices;
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(drop));
          r.erase(r.begin() + static_cast<std::ptrdiff_t>(drop));
          minimal = minimal && oracle::span(v, fam.length, ring.q()).size() < code.size();
        }
        cdmin.add(minimal);
        if (!minimal) out.d.fail("not minimal: f=" + render_algebraic(f));
      }
    }
  }
  out.a.pass = out.a.pass && ca.all();
  out.a.summary = ca.str() + " ideals in standard form spanning the brute-force ideal";
  out.b.pass = out.b.pass && cb.all();
  out.b.summary = cb.str() + " sizes p^Delta equal to enumeration";
  out.c.pass = out.c.pass && cc.all();
  out.c.summary = cc.str() + " annihilators equal to the exhaustive scan with |C||Ann C| = |R_m|";
  out.d.pass = out.d.pass && cd.all() && cdmin.total == 50 && cdmin.all();
  out.d.summary = cd.str() + " generating sets span {gG} with the size formula; " + cdmin.str() +
                  " minimal";
  out.e.pass = out.e.pass && ce.all();
  out.e.summary = ce.str() + " nonzero codes with C^0 = Ann(C) and |C||C^0| = |R_m| (" +
                  std::to_string(e_skipped) + " cases with f(0) a non-unit excluded)";

  // (f) QP code <=> dual invariant under diag(M, M).
  Counter qp, non;
  std::mt19937 rng2(6);
  std::vector<Poly> moduli;
  for (std::size_t m = 2; m <= 4; ++m) {
    for (auto& f : support::squarefree_moduli(z4, m)) {
      if (z4.is_unit(f.coeff(0))) moduli.push_back(f);
    }
  }
  auto pick = std::uniform_int_distribution<std::size_t>(0, moduli.size() - 1);
  auto oracle_dual = [](const LinearCode& c) {
    std::vector<oracle::V> rows;
    for (const auto& r : c.generator_rows()) rows.emplace_back(r.begin(), r.end());
    std::set<oracle::V> dual;
    for (const auto& x : oracle::all_vectors(c.length(), c.ring().q())) {
      bool ok = std::all_of(rows.begin(), rows.end(),
                            [&](const oracle::V& r) { return oracle::dot(x, r, c.ring().q()) == 0; });
      if (ok) dual.insert(x);
    }
    return std::make_pair(oracle::span(rows, c.length(), c.ring().q()), dual);
  };
  auto companion = [](const Poly& f) {
    const std::size_t m = static_cast<std::size_t>(f.degree());
    std::vector<oracle::V> d(m, oracle::V(m, 0));
    for (std::size_t i = 0; i + 1 < m; ++i) d[i][i + 1] = 1;
    for (std::size_t j = 0; j < m; ++j) d[m - 1][j] = (4 - f.coeff(j)) % 4;
    return d;
  };
  auto transpose = [](std::vector<oracle::V> a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) std::swap(a[i][j], a[j][i]);
    }
    return a;
  };
  while (qp.total < 100 || non.total < 100) {
    const Poly& f = moduli[pick(rng2)];
    QuotientRing Q(f);
    const std::size_t m = Q.degree();
    auto D = build_D(AssociateVector::from_modulus(f));
    auto M = build_M(AssociateVector::from_modulus(f));
    auto Dv = companion(f);
    auto Mv = transpose(Dv);
    if (qp.total < 100) {
      std::vector<Poly> comps{support::random_poly(rng2, z4, m), support::random_poly(rng2, z4, m)};
      if (comps[0].is_zero() && comps[1].is_zero()) continue;
      auto code = LinearCode::from_generator(QPGenerator(Q, comps));
      auto [words_c, dual] = oracle_dual(code);
      bool ok = is_invariant(code, D) && is_invariant(euclidean_dual(code), M) &&
                oracle::invariant(words_c, Dv, 4) && oracle::invariant(dual, Mv, 4);
      qp.add(ok);
      if (!ok) out.f.fail("QP code whose dual is not quasi-sequential, f=" + render_algebraic(f));
    } else {
      std::uniform_int_distribution<Residue> d(0, 3);
      std::vector<Vec> rows(1 + non.total % 2, Vec(2 * m));
      for (auto& r : rows) {
        for (auto& x : r) x = d(rng2);
      }
      LinearCode code(z4, m, 2, rows);
      auto [words_c, dual] = oracle_dual(code);
      if (oracle::invariant(words_c, Dv, 4)) continue;  // want codes that are not QP
      bool ok = !is_invariant(code, D) && !is_invariant(euclidean_dual(code), M) &&
                !oracle::invariant(dual, Mv, 4);
      non.add(ok);
      if (!ok) out.f.fail("non-QP code with a quasi-sequential dual, f=" + render_algebraic(f));
    }
  }
  out.f.pass = out.f.pass && qp.all() && non.all();
  out.f.summary = qp.str() + " QP codes with quasi-sequential duals; " + non.str() +
                  " non-QP codes with non-quasi-sequential duals";
  return out;
}

// Rank read off the echelon form of the expanded generator matrix: the code
// is R^k iff |C| = q^k with p^k = |C / pC|.
std::pair<bool, unsigned> echelon_rank(const QPGenerator& G) {
  const RingSpec& ring = G.quotient().ring();
  HowellForm h = expanded_form(G);
  auto rows = h.generators();
  for (auto& r : rows) {
    for (auto& x : r) x = ring.mul(x, ring.p() % ring.q());
  }
  HowellForm ph(ring, G.length(), rows);
  unsigned k = h.size_exponent() - ph.size_exponent();
  bool free = h.size_exponent() == ring.s() * k;
  return {free, free ? k : 0};
}

Outcome freeness(const std::vector<std::string>& tables) {
  Outcome out;
  Counter rows, random;
  for (const auto& path : tables) {
    for (const auto& row : read_manifest(path)) {
      RingSpec ring = RingSpec::parse(row.ring);
      auto Q = QuotientRing::general(parse_poly(row.f, ring));
      std::vector<Poly> comps;
      for (const auto& c : row.components) comps.push_back(parse_poly(c, ring));
      QPGenerator G(Q, comps);
      auto got = is_free(G);
      auto [free, rank] = echelon_rank(G);
      bool ok = got.free == free && got.rank == rank;
      rows.add(ok);
      if (!ok) out.fail("table row f=" + row.f);
    }
  }
  std::mt19937 rng(1234);
  std::vector<Poly> moduli;
  for (std::size_t m = 3; m <= 6; ++m) {
    for (auto& f : support::squarefree_moduli(z4, m)) moduli.push_back(f);
  }
  std::uniform_int_distribution<std::size_t> pick(0, moduli.size() - 1);
  std::uniform_int_distribution<Residue> bit(0, 1);
  while (random.total < 100) {
    QuotientRing Q(moduli[pick(rng)]);
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < 2 + random.total % 2; ++i) {
      std::vector<Residue> c(Q.degree());
      for (auto& x : c) x = bit(rng);
      comps.emplace_back(z4, std::move(c));
    }
    if (std::all_of(comps.begin(), comps.end(), [](const Poly& c) { return c.is_zero(); })) continue;
    QPGenerator G(Q, comps);
    auto got = is_free(G);
    auto [free, rank] = echelon_rank(G);
    bool ok = got.free == free && got.rank == rank;
    random.add(ok);
    if (!ok) out.fail("random generator over f=" + render_algebraic(Q.modulus()));
  }
  out.pass = out.pass && rows.all() && random.all();
  out.summary = rows.str() + " table rows and " + random.str() +
                " random pure 0-digit generators agree with the echelon-form rank";
  return out;
}

bool report(const std::string& id, const std::string& title, const std::function<Outcome()>& run) {
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o.pass = false;
    o.summary = std::string("aborted: ") + e.what();
  }
  std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << title << ": " << o.summary
            << "\n";
  for (const auto& d : o.details) std::cout << "        " << d << "\n";
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::string data = QPC_DATA_DIR;
  std::size_t failed = 0;
  failed += !report("1", "table1.tsv reproduction", [&] { return table(data + "/table1.tsv", 12); });
  failed += !report("2", "table2.tsv reproduction", [&] { return table(data + "/table2.tsv", 15); });
  failed += !report("3", "Z8 worked example", z8_example);

  Suite suite;
  bool suite_ok = true;
  try {
    suite = property_suite();
  } catch (const std::exception& e) {
    suite_ok = false;
    std::cout << "FAIL  [4] property suite aborted: " << e.what() << "\n";
  }
  if (suite_ok) {
    failed += !report("4a", "standard-form invariants", [&] { return suite.a; });
    failed += !report("4b", "code size p^Delta", [&] { return suite.b; });
    failed += !report("4c", "annihilator", [&] { return suite.c; });
    failed += !report("4d", "minimal generating set", [&] { return suite.d; });
    failed += !report("4e", "annihilator dual for l = 1", [&] { return suite.e; });
    failed += !report("4f", "QP / quasi-sequential duality", [&] { return suite.f; });
  } else {
    ++failed;
  }
  failed += !report("5", "freeness criterion",
                    [&] { return freeness({data + "/table1.tsv", data + "/table2.tsv"}); });
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail")
            << "\n";
  return strict && failed > 0 ? 1 : 0;
}
