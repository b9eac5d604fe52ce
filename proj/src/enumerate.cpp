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

#include "qpc/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "qpc/error.hpp"

namespace qpc {

std::uint64_t SpanningFamily::count() const noexcept {
  std::uint64_t n = 1;
  for (auto r : radices) {
    if (r != 0 && n > std::numeric_limits<std::uint64_t>::max() / r) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    n *= r;
  }
  return n;
}

SpanningFamily SpanningFamily::from_howell(const HowellForm& form) {
  SpanningFamily fam{form.ring(), form.width(), {}, {}};
  for (const auto& row : form.rows()) {
    fam.vectors.push_back(row.values);
    fam.radices.push_back(form.ring().q() / form.ring().pow_p(row.exponent));
  }
  return fam;
}

unsigned default_thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QPC_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<unsigned>(std::min<long>(v, hw));
  }
  return hw;
}

namespace {

struct Kernel {
  std::uint32_t q;
  std::size_t length;
  std::vector<std::uint32_t> lee_table;

  std::uint32_t lee(Residue a) const {
    return lee_table.empty() ? lee_weight(a, q) : lee_table[a];
  }

  // Adds (sign > 0) or subtracts v from w in place.
  void step(Vec& w, const Vec& v, int sign) const {
    if (sign > 0) {
      for (std::size_t c = 0; c < length; ++c) {
        std::uint32_t t = w[c] + v[c];
        w[c] = t >= q ? t - q : t;
      }
    } else {
      for (std::size_t c = 0; c < length; ++c) {
        w[c] = w[c] >= v[c] ? w[c] - v[c] : w[c] + q - v[c];
      }
    }
  }

  void score(const Vec& w, Distances& best) const {
    std::uint32_t lee_w = 0, ham_w = 0;
    for (std::size_t c = 0; c < length; ++c) {
      if (w[c] != 0) {
        ++ham_w;
        lee_w += lee(w[c]);
      }
    }
    if (ham_w == 0) return;
    best.lee = std::min(best.lee, lee_w);
    best.hamming = std::min(best.hamming, ham_w);
  }
};

}  // namespace

Distances minimum_distances(const SpanningFamily& family, std::uint64_t budget, unsigned threads) {
  const RingSpec& ring = family.ring;
  std::vector<const Vec*> gens;
  std::vector<std::uint32_t> radix;
  for (std::size_t k = 0; k < family.vectors.size(); ++k) {
    if (family.vectors[k].size() != family.length) {
      throw PreconditionError("generator length does not match the code length");
    }
    if (family.radices[k] >= 2) {
      gens.push_back(&family.vectors[k]);
      radix.push_back(family.radices[k]);
    }
  }
  const std::uint64_t total = family.count();
  if (total > budget) {
    throw BudgetError("code has " + (total == std::numeric_limits<std::uint64_t>::max()
                                         ? std::string("too many")
                                         : std::to_string(total)) +
                      " codewords, over the enumeration budget of " + std::to_string(budget));
  }
  Distances result;
  result.codewords = total;
  if (gens.empty()) return result;

  Kernel kernel{ring.q(), family.length, {}};
  if (ring.q() <= (1u << 16)) {
    kernel.lee_table.resize(ring.q());
    for (std::uint32_t a = 0; a < ring.q(); ++a) kernel.lee_table[a] = lee_weight(a, ring.q());
  }

  threads = std::max(1u, threads);
  // Fix the first `split` digits per chunk and walk the rest in Gray order.
  std::size_t split = 0;
  std::uint64_t chunks = 1;
  while (split + 1 < gens.size() && chunks < 16u * threads) chunks *= radix[split++];

  const std::size_t rest = gens.size() - split;
  std::atomic<std::uint64_t> next{0};
  std::vector<Distances> partial(threads);

  auto worker = [&](unsigned id) {
    Distances best;
    best.lee = best.hamming = std::numeric_limits<std::uint32_t>::max();
    Vec w(family.length);
    std::vector<std::uint32_t> a(rest), focus(rest + 1);
    std::vector<int> dir(rest);
    for (std::uint64_t chunk; (chunk = next.fetch_add(1)) < chunks;) {
      std::fill(w.begin(), w.end(), 0);
      std::uint64_t t = chunk;
      for (std::size_t k = 0; k < split; ++k) {
        auto d = static_cast<std::uint32_t>(t % radix[k]);
        t /= radix[k];
        for (std::uint32_t i = 0; i < d; ++i) kernel.step(w, *gens[k], +1);
      }
      // Loopless reflected mixed-radix Gray code (Knuth, Algorithm 7.2.1.1H).
      for (std::size_t j = 0; j < rest; ++j) {
        a[j] = 0;
        focus[j] = static_cast<std::uint32_t>(j);
        dir[j] = 1;
      }
      focus[rest] = static_cast<std::uint32_t>(rest);
      while (true) {
        kernel.score(w, best);
        std::size_t j = focus[0];
        focus[0] = 0;
        if (j == rest) break;
        a[j] = static_cast<std::uint32_t>(static_cast<int>(a[j]) + dir[j]);
        kernel.step(w, *gens[split + j], dir[j]);
        if (a[j] == 0 || a[j] == radix[split + j] - 1) {
          dir[j] = -dir[j];
          focus[j] = focus[j + 1];
          focus[j + 1] = static_cast<std::uint32_t>(j + 1);
        }
      }
    }
    partial[id] = best;
  };

  if (threads == 1 || chunks == 1) {
    partial.resize(1);
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& th : pool) th.join();
  }

  result.lee = result.hamming = std::numeric_limits<std::uint32_t>::max();
  for (const auto& d : partial) {
    result.lee = std::min(result.lee, d.lee);
    result.hamming = std::min(result.hamming, d.hamming);
  }
  if (result.lee == std::numeric_limits<std::uint32_t>::max()) result.lee = result.hamming = 0;
  return result;
}

}  // namespace qpc
