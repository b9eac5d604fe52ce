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

#include "qpc/howell.hpp"

#include <algorithm>

#include "qpc/error.hpp"

namespace qpc {

namespace {

// row -= factor * other, starting at column `from`.
void axpy(const RingSpec& ring, Vec& row, Residue factor, const Vec& other, std::size_t from) {
  if (factor == 0) return;
  for (std::size_t c = from; c < row.size(); ++c) {
    if (other[c] != 0) row[c] = ring.sub(row[c], ring.mul(factor, other[c]));
  }
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Residue r) { return r == 0; });
}

}  // namespace

HowellForm::HowellForm(const RingSpec& ring, std::size_t width) : ring_(ring), width_(width) {}

HowellForm::HowellForm(const RingSpec& ring, std::size_t width, std::span<const Vec> generators)
    : ring_(ring), width_(width) {
  std::vector<Vec> pool;
  pool.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != width) throw PreconditionError("row length does not match module width");
    Vec r(g.size());
    std::transform(g.begin(), g.end(), r.begin(), [&](Residue v) { return v % ring.q(); });
    if (!is_zero(r)) pool.push_back(std::move(r));
  }

  const unsigned s = ring.s();
  for (std::size_t col = 0; col < width && !pool.empty(); ++col) {
    std::size_t best = pool.size();
    unsigned best_val = s;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      unsigned v = ring.valuation(pool[i][col]);
      if (v < best_val) {
        best_val = v;
        best = i;
        if (v == 0) break;
      }
    }
    if (best == pool.size()) continue;

    Vec pivot = std::move(pool[best]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
    const Residue pj = ring.pow_p(best_val);
    const Residue unit = pivot[col] / pj;
    const Residue unit_inv = ring.inverse(unit);
    for (std::size_t c = col; c < width; ++c) pivot[c] = ring.mul(pivot[c], unit_inv);

    for (auto& r : pool) {
      if (r[col] != 0) axpy(ring, r, r[col] / pj, pivot, col);
    }
    if (best_val > 0) {
      Vec sat(width, 0);
      const Residue mult = ring.pow_p(s - best_val);
      for (std::size_t c = col; c < width; ++c) sat[c] = ring.mul(pivot[c], mult);
      pool.push_back(std::move(sat));
    }
    pool.erase(std::remove_if(pool.begin(), pool.end(), is_zero), pool.end());
    rows_.push_back({col, best_val, std::move(pivot)});
  }

  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t k = i + 1; k < rows_.size(); ++k) {
      const Residue pk = ring.pow_p(rows_[k].exponent);
      if (pk == 0) continue;
      Residue c = rows_[i].values[rows_[k].pivot];
      axpy(ring, rows_[i].values, c / pk, rows_[k].values, rows_[k].pivot);
    }
  }
}

unsigned HowellForm::size_exponent() const noexcept {
  unsigned total = 0;
  for (const auto& r : rows_) total += ring_.s() - r.exponent;
  return total;
}

Vec HowellForm::reduce(std::span<const Residue> v) const {
  if (v.size() != width_) throw PreconditionError("vector length does not match module width");
  Vec r(v.begin(), v.end());
  for (auto& x : r) x %= ring_.q();
  for (const auto& row : rows_) {
    Residue c = r[row.pivot];
    if (c == 0) continue;
    axpy(ring_, r, c / ring_.pow_p(row.exponent), row.values, row.pivot);
  }
  return r;
}

bool HowellForm::contains(std::span<const Residue> v) const { return is_zero(reduce(v)); }

std::vector<Vec> HowellForm::generators() const {
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.values);
  return out;
}

HowellForm right_kernel(const RingSpec& ring, std::size_t width, std::span<const Vec> rows) {
  // Row i of the augmented matrix is (column i of the input | e_i); the rows
  // of its canonical form that vanish on the first block span the kernel.
  const std::size_t k = rows.size();
  std::vector<Vec> aug(width, Vec(k + width, 0));
  for (std::size_t i = 0; i < width; ++i) {
    for (std::size_t r = 0; r < k; ++r) {
      if (rows[r].size() != width) throw PreconditionError("row length does not match module width");
      aug[i][r] = rows[r][i] % ring.q();
    }
    aug[i][k + i] = 1;
  }
  HowellForm form(ring, k + width, aug);
  std::vector<Vec> kernel;
  for (const auto& row : form.rows()) {
    if (row.pivot >= k) kernel.emplace_back(row.values.begin() + static_cast<std::ptrdiff_t>(k), row.values.end());
  }
  return HowellForm(ring, width, kernel);
}

}  // namespace qpc
