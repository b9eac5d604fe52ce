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

// Command-line front end. Talks to the library only through qpc.h.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpc/qpc.h"

namespace {

using nlohmann::ordered_json;

struct Failure {
  qpc_status status;
};

void check(qpc_status st) {
  if (st != QPC_OK) throw Failure{st};
}

ordered_json take(char* s) {
  std::unique_ptr<char, decltype(&qpc_string_free)> owned(s, qpc_string_free);
  return ordered_json::parse(owned.get());
}

struct Quotient {
  qpc_quotient* h = nullptr;
  Quotient(const std::string& ring, const std::string& f, unsigned flags) {
    check(qpc_quotient_create(ring.c_str(), f.c_str(), flags, &h));
  }
  ~Quotient() { qpc_quotient_free(h); }
  Quotient(const Quotient&) = delete;
  Quotient& operator=(const Quotient&) = delete;
};

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

struct Generator {
  qpc_generator* h = nullptr;
  Generator(const Quotient& q, const std::vector<std::string>& gens) {
    auto ptrs = c_strings(gens);
    check(qpc_generator_create(q.h, ptrs.data(), ptrs.size(), &h));
  }
  ~Generator() { qpc_generator_free(h); }
  Generator(const Generator&) = delete;
  Generator& operator=(const Generator&) = delete;
};

struct Options {
  std::string ring = "2^2";
  std::string f;
  std::vector<std::string> gens;
  std::string notation;
  std::string rows;
  std::string inner = "f";
  std::string manifest;
  std::uint64_t budget = 0;
  unsigned threads = 0;
  bool json = false;
  bool timing = false;
};

void print_basis(const ordered_json& j) {
  for (const auto& e : j["entries"]) {
    std::cout << "p^" << e["exponent"].get<unsigned>() << " * (" << e["algebraic"].get<std::string>()
              << ")\n";
  }
  if (j["entries"].empty()) std::cout << "zero code\n";
  std::cout << "size " << j["size"].get<std::string>() << "\n";
}

void print_rows(const ordered_json& rows) {
  for (const auto& r : rows) std::cout << r.dump() << "\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int run(const std::string& cmd, const Options& o) {
  char* out = nullptr;
  ordered_json j;
  const unsigned relaxed = QPC_ALLOW_NON_SQUAREFREE;
  int exit_code = 0;

  if (cmd == "parse") {
    check(qpc_parse(o.ring.c_str(), o.notation.c_str(), &out));
    j = take(out);
    if (!o.json) std::cout << j["algebraic"].get<std::string>() << "\n";
  } else if (cmd == "factor") {
    Quotient q(o.ring, o.f, 0);
    check(qpc_factor(q.h, &out));
    j = take(out);
    if (!o.json) {
      for (const auto& pi : j["factors"]) std::cout << pi["algebraic"].get<std::string>() << "\n";
    }
  } else if (cmd == "gb" || cmd == "card" || cmd == "ann") {
    Quotient q(o.ring, o.f, 0);
    auto ptrs = c_strings(o.gens);
    check(cmd == "ann" ? qpc_annihilator(q.h, ptrs.data(), ptrs.size(), &out)
                       : qpc_standard_form(q.h, ptrs.data(), ptrs.size(), &out));
    j = take(out);
    if (cmd == "card") {
      j = {{"size_exponent", j["size_exponent"]}, {"size", j["size"]}};
      if (!o.json) std::cout << j["size"].get<std::string>() << "\n";
    } else if (!o.json) {
      print_basis(j);
    }
  } else if (cmd == "genset") {
    Quotient q(o.ring, o.f, 0);
    Generator g(q, o.gens);
    check(qpc_generating_set(g.h, &out));
    j = take(out);
    if (!o.json) {
      for (std::size_t k = 0; k < j["h"].size(); ++k) {
        std::cout << "h" << k << " = " << j["h"][k]["algebraic"].get<std::string>() << "  (degree "
                  << j["h"][k]["degree"].get<unsigned>() << ")\n";
      }
      for (const auto& l : j["levels"]) {
        std::cout << "level " << l["level"].get<unsigned>() << " (coefficients mod "
                  << l["radix"].get<unsigned>() << "):\n";
        for (const auto& v : l["vectors"]) std::cout << "  " << v.dump() << "\n";
      }
      std::cout << "size " << j["size"].get<std::string>() << "\n";
    }
  } else if (cmd == "params") {
    Quotient q(o.ring, o.f, relaxed);
    Generator g(q, o.gens);
    check(qpc_params(g.h, o.budget, o.threads, &out));
    j = take(out);
    if (!o.json) {
      std::cout << j["triple"].get<std::string>() << "\n"
                << "hamming distance " << j["hamming"].get<unsigned>() << "\n";
    }
  } else if (cmd == "free") {
    Quotient q(o.ring, o.f, relaxed);
    Generator g(q, o.gens);
    check(qpc_is_free(g.h, &out));
    j = take(out);
    if (!o.json) {
      if (j["free"].get<bool>()) {
        std::cout << "free, rank " << j["rank"].get<unsigned>() << "\n";
      } else {
        std::cout << "not free\n";
      }
    }
  } else if (cmd == "dual") {
    Quotient q(o.ring, o.f, relaxed);
    Generator g(q, o.gens);
    check(qpc_dual(g.h, o.inner == "euclid" ? QPC_INNER_EUCLID : QPC_INNER_F, &out));
    j = take(out);
    if (!o.json) {
      std::cout << "size " << j["size"].get<std::string>() << "\n";
      print_rows(j["rows"]);
    }
  } else if (cmd == "check-qp" || cmd == "check-qs") {
    const qpc_shift shift = cmd == "check-qp" ? QPC_SHIFT_QP : QPC_SHIFT_QS;
    Quotient q(o.ring, o.f, relaxed);
    if (!o.rows.empty()) {
      check(qpc_check_rows(q.h, o.rows.c_str(), shift, &out));
    } else {
      Generator g(q, o.gens);
      check(qpc_check_generator(g.h, shift, &out));
    }
    j = take(out);
    if (!o.json) {
      const bool qp = shift == QPC_SHIFT_QP;
      std::cout << (qp ? "quasi-polycyclic: " : "quasi-sequential: ")
                << yes_no(j["invariant"].get<bool>()) << "\n"
                << (qp ? "euclidean dual quasi-sequential: " : "euclidean dual quasi-polycyclic: ")
                << yes_no(j["dual_invariant"].get<bool>()) << "\n";
    }
  } else if (cmd == "manifest") {
    int all = 0;
    check(qpc_manifest(o.manifest.c_str(), o.budget, o.threads, o.timing ? 1 : 0, &out, &all));
    j = take(out);
    if (!o.json) {
      for (const auto& r : j["rows"]) {
        const auto& e = r["expected"];
        std::string want = "(" + std::to_string(e["n"].get<std::size_t>()) + ", " +
                           e["size"].get<std::string>() + ", " +
                           std::to_string(e["lee"].get<unsigned>()) + ")";
        std::cout << "line " << r["line"].get<std::size_t>() << ": ";
        if (r.contains("computed")) {
          const auto& c = r["computed"];
          std::cout << "(" << c["n"].get<std::size_t>() << ", " << c["size"].get<std::string>()
                    << ", " << c["lee"].get<unsigned>() << ")";
        } else {
          std::cout << "error: " << r["error"]["message"].get<std::string>();
        }
        std::cout << "  expected " << want << "  " << (r["matched"].get<bool>() ? "ok" : "MISMATCH");
        if (!r["squarefree"].get<bool>()) std::cout << "  [f not square-free mod p]";
        if (o.timing) std::cout << "  " << r["seconds"].get<double>() << "s";
        std::cout << "\n";
      }
      const auto& s = j["summary"];
      std::cout << s["matched"].get<std::size_t>() << "/" << s["rows"].get<std::size_t>()
                << " rows match\n";
    }
    exit_code = all ? 0 : 1;
  }
  if (o.json) std::cout << j.dump(2) << "\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-polycyclic codes over Z_{p^s}"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_f) {
    sub->add_option("--ring", o.ring, "ring as p^s")->capture_default_str();
    if (needs_f) sub->add_option("--f", o.f, "modulus f")->required();
    sub->add_flag("--json", o.json, "print JSON");
  };
  auto with_gens = [&](CLI::App* sub, bool required) {
    auto opt = sub->add_option("--gen", o.gens, "generator or component (repeatable)");
    if (required) opt->required();
  };

  auto* parse = app.add_subcommand("parse", "parse a polynomial");
  common(parse, false);
  parse->add_option("poly", o.notation, "polynomial in digit notation")->required();

  common(app.add_subcommand("factor", "basic irreducible factors of f"), true);
  for (const char* name : {"gb", "card", "ann"}) {
    const char* help = std::string(name) == "gb"     ? "standard form of the ideal"
                       : std::string(name) == "card" ? "size of the ideal"
                                                     : "annihilator of the ideal";
    auto* sub = app.add_subcommand(name, help);
    common(sub, true);
    with_gens(sub, false);
  }
  auto* genset = app.add_subcommand("genset", "minimal generating set of a QP code");
  common(genset, true);
  with_gens(genset, true);
  auto* params = app.add_subcommand("params", "length, size and minimum distances");
  common(params, true);
  with_gens(params, true);
  params->add_option("--budget", o.budget, "maximum number of codewords to enumerate");
  params->add_option("--threads", o.threads, "worker threads (default QPC_THREADS or all)");
  auto* free = app.add_subcommand("free", "freeness and rank");
  common(free, true);
  with_gens(free, true);
  auto* dual = app.add_subcommand("dual", "dual code");
  common(dual, true);
  with_gens(dual, true);
  dual->add_option("--inner", o.inner, "f or euclid")
      ->check(CLI::IsMember({"f", "euclid"}))
      ->capture_default_str();
  for (const char* name : {"check-qp", "check-qs"}) {
    auto* sub = app.add_subcommand(
        name, std::string(name) == "check-qp" ? "test invariance under diag(D, ..., D)"
                                              : "test invariance under diag(M, ..., M)");
    common(sub, true);
    with_gens(sub, false);
    sub->add_option("--rows", o.rows, "code as a JSON array of generator rows");
  }
  auto* manifest = app.add_subcommand("manifest", "reproduce a table of parameters");
  manifest->add_option("path", o.manifest, "TSV manifest")->required();
  manifest->add_flag("--json", o.json, "print JSON");
  manifest->add_flag("--timing", o.timing, "include wall-clock times");
  manifest->add_option("--budget", o.budget, "maximum number of codewords per row");
  manifest->add_option("--threads", o.threads, "worker threads (default QPC_THREADS or all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(QPC_ERR_PARSE);
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, o);
  } catch (const Failure& f) {
    std::cerr << "qpc: " << qpc_last_error() << "\n";
    return static_cast<int>(f.status);
  } catch (const std::exception& e) {
    std::cerr << "qpc: " << e.what() << "\n";
    return static_cast<int>(QPC_ERR_INTERNAL);
  }
}
