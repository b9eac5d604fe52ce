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

// Exercises libqpc through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <thread>

#include "doctest.h"
#include "json.hpp"
#include "qpc/qpc.h"

using nlohmann::json;

namespace {

json take(char* s) {
  json j = json::parse(s);
  qpc_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("handles and parameters") {
  qpc_quotient* q = nullptr;
  REQUIRE(qpc_quotient_create("2^2", "102013", 0, &q) == QPC_OK);
  const char* comps[] = {"101^23", "130102"};
  qpc_generator* g = nullptr;
  REQUIRE(qpc_generator_create(q, comps, 2, &g) == QPC_OK);

  char* out = nullptr;
  REQUIRE(qpc_params(g, 0, 2, &out) == QPC_OK);
  auto p = take(out);
  CHECK(p["triple"] == "(10, 4^2, 10)");
  CHECK(p["size_exponent"] == 4);

  REQUIRE(qpc_is_free(g, &out) == QPC_OK);
  auto fr = take(out);
  CHECK(fr["free"] == true);
  CHECK(fr["rank"] == 2);

  REQUIRE(qpc_generating_set(g, &out) == QPC_OK);
  CHECK(take(out)["elements"] == 2);

  REQUIRE(qpc_dual(g, QPC_INNER_EUCLID, &out) == QPC_OK);
  CHECK(take(out)["size_exponent"] == 16);
  REQUIRE(qpc_dual(g, QPC_INNER_F, &out) == QPC_OK);
  CHECK(take(out)["size_exponent"] == 16);

  REQUIRE(qpc_check_generator(g, QPC_SHIFT_QP, &out) == QPC_OK);
  auto c = take(out);
  CHECK(c["invariant"] == true);
  CHECK(c["dual_invariant"] == true);

  REQUIRE(qpc_params(g, 15, 1, &out) == QPC_ERR_BUDGET);
  CHECK(std::string(qpc_last_error()).find("budget") != std::string::npos);

  REQUIRE(qpc_factor(q, &out) == QPC_OK);
  CHECK(take(out)["factors"].size() == 2);

  const char* ideal[] = {"101^23"};
  REQUIRE(qpc_standard_form(q, ideal, 1, &out) == QPC_OK);
  auto b = take(out);
  CHECK(b["entries"].size() == 1);
  CHECK(b["size"] == "4^2");
  REQUIRE(qpc_annihilator(q, ideal, 1, &out) == QPC_OK);
  CHECK(take(out)["size"] == "4^3");

  qpc_generator_free(g);
  qpc_quotient_free(q);
}

TEST_CASE("parse") {
  char* out = nullptr;
  REQUIRE(qpc_parse("2^2", "10^21^3321", &out) == QPC_OK);
  auto j = take(out);
  CHECK(j["algebraic"] == "x^8+x^5+x^4+x^3+3x^2+2x+1");
  CHECK(j["notation"] == "10^21^3321");
  CHECK(qpc_parse("2^2", "15", &out) == QPC_ERR_PARSE);
  CHECK(qpc_parse("6^2", "1", &out) == QPC_ERR_PRECONDITION);
  CHECK(qpc_parse(nullptr, "1", &out) == QPC_ERR_PRECONDITION);
}

TEST_CASE("error families") {
  qpc_quotient* q = nullptr;
  CHECK(qpc_quotient_create("2^2", "1^22310102^21", 0, &q) == QPC_ERR_PRECONDITION);
  CHECK(std::string(qpc_last_error()).find("square-free") != std::string::npos);
  REQUIRE(qpc_quotient_create("2^2", "1^22310102^21", QPC_ALLOW_NON_SQUAREFREE, &q) == QPC_OK);
  char* out = nullptr;
  CHECK(qpc_factor(q, &out) == QPC_ERR_PRECONDITION);
  const char* comps[] = {"130102", "1^2032", "1231^2"};
  qpc_generator* g = nullptr;
  REQUIRE(qpc_generator_create(q, comps, 3, &g) == QPC_OK);
  REQUIRE(qpc_params(g, 0, 0, &out) == QPC_OK);
  CHECK(take(out)["triple"] == "(30, 4^7, 16)");
  CHECK(qpc_generating_set(g, &out) == QPC_ERR_PRECONDITION);
  qpc_generator_free(g);

  const char* zero[] = {"0", "0"};
  CHECK(qpc_generator_create(q, zero, 2, &g) == QPC_ERR_PRECONDITION);
  CHECK(qpc_check_rows(q, "[[1,2]", QPC_SHIFT_QP, &out) == QPC_ERR_PARSE);
  CHECK(qpc_check_rows(q, "[[1,2,3]]", QPC_SHIFT_QP, &out) == QPC_ERR_PRECONDITION);
  qpc_quotient_free(q);

  REQUIRE(qpc_quotient_create("2^2", "111", 0, &q) == QPC_OK);
  REQUIRE(qpc_check_rows(q, "[[1,0,0,0]]", QPC_SHIFT_QP, &out) == QPC_OK);
  auto j = take(out);
  CHECK(j["invariant"] == false);
  CHECK(j["dual_invariant"] == false);
  const char* hyp[] = {"2", "11"};
  REQUIRE(qpc_generator_create(q, hyp, 2, &g) == QPC_OK);
  CHECK(qpc_generating_set(g, &out) == QPC_ERR_PRECONDITION);
  CHECK(std::string(qpc_last_error()).find("hypothesis") != std::string::npos);
  qpc_generator_free(g);
  qpc_quotient_free(q);

  CHECK(qpc_manifest("/nonexistent.tsv", 0, 0, 0, &out, nullptr) == QPC_ERR_PARSE);
}

TEST_CASE("errors are per thread") {
  char* out = nullptr;
  CHECK(qpc_parse("2^2", "15", &out) == QPC_ERR_PARSE);
  std::string other;
  std::thread t([&] {
    char* o = nullptr;
    CHECK(qpc_parse("2^2", "1", &o) == QPC_OK);
    qpc_string_free(o);
    other = qpc_last_error();
  });
  t.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(qpc_last_error()).empty());
}
