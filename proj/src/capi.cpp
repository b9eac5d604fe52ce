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

#include "qpc/qpc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>

#include "json.hpp"
#include "qpc/duality.hpp"
#include "qpc/error.hpp"
#include "qpc/manifest.hpp"
#include "qpc/qp_code.hpp"

struct qpc_quotient {
  qpc::QuotientRing quotient;
};

struct qpc_generator {
  qpc::QPGenerator generator;
};

namespace {

using nlohmann::ordered_json;

thread_local std::string last_error;

template <typename F>
qpc_status guard(F&& body) {
  last_error.clear();
  try {
    body();
    return QPC_OK;
  } catch (const qpc::Error& e) {
    last_error = e.what();
    return static_cast<qpc_status>(e.kind());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("bad JSON: ") + e.what();
    return QPC_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return QPC_ERR_BUDGET;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QPC_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw qpc::PreconditionError(std::string(what) + " is null");
}

char* emit(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* emit(const ordered_json& j) { return emit(j.dump(2)); }

std::string notation(const qpc::Poly& f) {
  return f.ring().q() <= 10 ? qpc::render_notation(f) : ordered_json(f.coeffs()).dump();
}

ordered_json poly_json(const qpc::Poly& f) {
  return {{"notation", notation(f)}, {"algebraic", qpc::render_algebraic(f)}};
}

std::vector<qpc::Poly> parse_list(const char* const* items, std::size_t count,
                                  const qpc::RingSpec& ring) {
  if (count > 0) require(items, "polynomial list");
  std::vector<qpc::Poly> out;
  for (std::size_t i = 0; i < count; ++i) {
    require(items[i], "polynomial");
    out.push_back(qpc::parse_poly(items[i], ring));
  }
  return out;
}

ordered_json basis_json(const qpc::StandardFormBasis& b) {
  const auto& ring = b.quotient().ring();
  ordered_json entries = ordered_json::array();
  for (const auto& e : b.entries()) {
    ordered_json j = poly_json(e.generator);
    j["exponent"] = e.exponent;
    entries.push_back(std::move(j));
  }
  const unsigned delta = qpc::cardinality_exponent(b);
  return {{"entries", std::move(entries)},
          {"single_generator", poly_json(qpc::single_generator(b))},
          {"size_exponent", delta},
          {"size", qpc::format_size(delta, ring)}};
}

ordered_json qpvector_json(const qpc::QPVector& v) {
  ordered_json j = ordered_json::array();
  for (const auto& c : v) j.push_back(notation(c));
  return j;
}

ordered_json code_json(const qpc::LinearCode& code) {
  return {{"length", code.length()},
          {"size_exponent", code.size_exponent()},
          {"size", qpc::format_size(code.size_exponent(), code.ring())},
          {"rows", code.generator_rows()}};
}

ordered_json check_json(const qpc::LinearCode& code, const qpc::QuotientRing& quotient,
                        qpc_shift shift) {
  auto d = qpc::build_D(qpc::AssociateVector::from_modulus(quotient.modulus()));
  auto m = d.transposed();
  const auto& own = shift == QPC_SHIFT_QP ? d : m;
  const auto& other = shift == QPC_SHIFT_QP ? m : d;
  return {{"invariant", qpc::is_invariant(code, own)},
          {"dual_invariant", qpc::is_invariant(qpc::euclidean_dual(code), other)}};
}

}  // namespace

extern "C" {

const char* qpc_last_error(void) { return last_error.c_str(); }

void qpc_string_free(char* s) { std::free(s); }

qpc_status qpc_quotient_create(const char* ring, const char* f, unsigned flags,
                               qpc_quotient** out) {
  return guard([&] {
    require(ring, "ring");
    require(f, "modulus");
    require(out, "output handle");
    auto r = qpc::RingSpec::parse(ring);
    auto modulus = qpc::parse_poly(f, r);
    *out = new qpc_quotient{(flags & QPC_ALLOW_NON_SQUAREFREE)
                                ? qpc::QuotientRing::general(std::move(modulus))
                                : qpc::QuotientRing(std::move(modulus))};
  });
}

void qpc_quotient_free(qpc_quotient* q) { delete q; }

qpc_status qpc_generator_create(const qpc_quotient* q, const char* const* components,
                                size_t count, qpc_generator** out) {
  return guard([&] {
    require(q, "quotient");
    require(out, "output handle");
    auto comps = parse_list(components, count, q->quotient.ring());
    *out = new qpc_generator{qpc::QPGenerator(q->quotient, std::move(comps))};
  });
}

void qpc_generator_free(qpc_generator* g) { delete g; }

qpc_status qpc_parse(const char* ring, const char* text, char** json) {
  return guard([&] {
    require(ring, "ring");
    require(text, "polynomial");
    require(json, "output");
    auto f = qpc::parse_poly(text, qpc::RingSpec::parse(ring));
    ordered_json j = poly_json(f);
    j["degree"] = f.degree();
    j["coeffs"] = std::vector<qpc::Residue>(f.coeffs().begin(), f.coeffs().end());
    *json = emit(j);
  });
}

qpc_status qpc_factor(const qpc_quotient* q, char** json) {
  return guard([&] {
    require(q, "quotient");
    require(json, "output");
    ordered_json factors = ordered_json::array();
    for (const auto& pi : q->quotient.factorization().factors) factors.push_back(poly_json(pi));
    *json = emit({{"modulus", poly_json(q->quotient.modulus())}, {"factors", factors}});
  });
}

qpc_status qpc_standard_form(const qpc_quotient* q, const char* const* gens, size_t count,
                             char** json) {
  return guard([&] {
    require(q, "quotient");
    require(json, "output");
    auto polys = parse_list(gens, count, q->quotient.ring());
    *json = emit(basis_json(qpc::standard_form_from_generators(polys, q->quotient)));
  });
}

qpc_status qpc_annihilator(const qpc_quotient* q, const char* const* gens, size_t count,
                           char** json) {
  return guard([&] {
    require(q, "quotient");
    require(json, "output");
    auto polys = parse_list(gens, count, q->quotient.ring());
    auto basis = qpc::standard_form_from_generators(polys, q->quotient);
    *json = emit(basis_json(qpc::annihilator(basis)));
  });
}

qpc_status qpc_generating_set(const qpc_generator* g, char** json) {
  return guard([&] {
    require(g, "generator");
    require(json, "output");
    auto set = qpc::minimal_generating_set(g->generator);
    ordered_json h = ordered_json::array();
    for (std::size_t j = 0; j < set.hseq.h.size(); ++j) {
      ordered_json e = poly_json(set.hseq.h[j]);
      e["degree"] = set.hseq.r[j];
      h.push_back(std::move(e));
    }
    ordered_json levels = ordered_json::array();
    for (const auto& l : set.levels) {
      ordered_json vs = ordered_json::array();
      for (const auto& v : l.vectors) vs.push_back(qpvector_json(v));
      levels.push_back({{"level", l.level}, {"radix", l.radix}, {"vectors", std::move(vs)}});
    }
    *json = emit({{"h", std::move(h)},
                  {"levels", std::move(levels)},
                  {"elements", set.element_count()},
                  {"size_exponent", set.size_exponent()},
                  {"size", qpc::format_size(set.size_exponent(), set.ring)}});
  });
}

qpc_status qpc_params(const qpc_generator* g, uint64_t budget, unsigned threads, char** json) {
  return guard([&] {
    require(g, "generator");
    require(json, "output");
    qpc::DistanceOptions options;
    if (budget != 0) options.budget = budget;
    options.threads = threads;
    auto p = qpc::code_params(g->generator, options);
    const auto& ring = g->generator.quotient().ring();
    *json = emit({{"n", p.n},
                  {"size", qpc::format_size(p.size_exponent, ring)},
                  {"size_exponent", p.size_exponent},
                  {"lee", p.lee_distance},
                  {"hamming", p.hamming_distance},
                  {"triple", qpc::format_params(p, ring)}});
  });
}

qpc_status qpc_is_free(const qpc_generator* g, char** json) {
  return guard([&] {
    require(g, "generator");
    require(json, "output");
    auto fr = qpc::is_free(g->generator);
    *json = emit({{"free", fr.free}, {"rank", fr.rank}});
  });
}

qpc_status qpc_dual(const qpc_generator* g, qpc_inner inner, char** json) {
  return guard([&] {
    require(g, "generator");
    require(json, "output");
    auto code = qpc::LinearCode::from_generator(g->generator);
    switch (inner) {
      case QPC_INNER_F:
        *json = emit(code_json(qpc::annihilator_dual(code, g->generator.quotient())));
        return;
      case QPC_INNER_EUCLID:
        *json = emit(code_json(qpc::euclidean_dual(code)));
        return;
    }
    throw qpc::PreconditionError("unknown inner product");
  });
}

qpc_status qpc_check_generator(const qpc_generator* g, qpc_shift shift, char** json) {
  return guard([&] {
    require(g, "generator");
    require(json, "output");
    auto code = qpc::LinearCode::from_generator(g->generator);
    *json = emit(check_json(code, g->generator.quotient(), shift));
  });
}

qpc_status qpc_check_rows(const qpc_quotient* q, const char* rows_json, qpc_shift shift,
                          char** json) {
  return guard([&] {
    require(q, "quotient");
    require(rows_json, "rows");
    require(json, "output");
    const auto& quotient = q->quotient;
    const auto& ring = quotient.ring();
    const std::size_t m = quotient.degree();
    auto parsed = nlohmann::json::parse(rows_json);
    if (!parsed.is_array() || parsed.empty()) {
      throw qpc::ParseError("rows must be a nonempty JSON array of arrays");
    }
    std::vector<qpc::Vec> rows;
    std::optional<std::size_t> width;
    for (const auto& r : parsed) {
      if (!r.is_array()) throw qpc::ParseError("each row must be a JSON array");
      qpc::Vec v;
      for (const auto& x : r) {
        if (!x.is_number_integer()) throw qpc::ParseError("row entries must be integers");
        v.push_back(ring.reduce(x.get<std::int64_t>()));
      }
      if (width && *width != v.size()) throw qpc::ParseError("rows have different lengths");
      width = v.size();
      rows.push_back(std::move(v));
    }
    if (*width == 0 || *width % m != 0) {
      throw qpc::PreconditionError("row length " + std::to_string(*width) +
                                   " is not a positive multiple of deg f = " + std::to_string(m));
    }
    qpc::LinearCode code(ring, m, *width / m, rows);
    *json = emit(check_json(code, quotient, shift));
  });
}

qpc_status qpc_manifest(const char* path, uint64_t budget, unsigned threads, int timing,
                        char** json, int* all_matched) {
  return guard([&] {
    require(path, "path");
    require(json, "output");
    qpc::DistanceOptions options;
    if (budget != 0) options.budget = budget;
    options.threads = threads;
    auto report = qpc::run_manifest(qpc::read_manifest(path), options);
    *json = emit(qpc::report_json(report, timing != 0));
    if (all_matched != nullptr) *all_matched = report.all_matched() ? 1 : 0;
  });
}

}  // extern "C"
