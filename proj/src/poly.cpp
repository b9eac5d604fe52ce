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
#include <cctype>
#include <charconv>
#include <string>

#include "qpc/error.hpp"
#include "qpc/poly.hpp"

namespace qpc {

Poly::Poly(const RingSpec& ring, std::vector<Residue> coeffs)
    : ring_(ring), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= ring_.q();
  trim();
}

Poly Poly::constant(const RingSpec& ring, Residue c) { return Poly(ring, {c}); }

Poly Poly::monomial(const RingSpec& ring, Residue c, std::size_t degree) {
  std::vector<Residue> v(degree + 1, 0);
  v[degree] = c;
  return Poly(ring, std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = ring_.neg(c);
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
    coeffs_[k] = ring_.add(coeffs_[k], rhs.coeffs_[k]);
  }
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
    coeffs_[k] = ring_.sub(coeffs_[k], rhs.coeffs_[k]);
  }
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  const RingSpec& ring = lhs.ring_;
  if (lhs.is_zero() || rhs.is_zero()) return Poly(ring);
  std::vector<Residue> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] = ring.add(out[i + j], ring.mul(lhs.coeffs_[i], rhs.coeffs_[j]));
    }
  }
  return Poly(ring, std::move(out));
}

Poly Poly::scaled(Residue c) const {
  Poly r = *this;
  for (auto& v : r.coeffs_) v = ring_.mul(v, c);
  r.trim();
  return r;
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  Poly r = *this;
  r.coeffs_.insert(r.coeffs_.begin(), k, 0);
  return r;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(ring_);
  std::vector<Residue> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = ring_.mul(coeffs_[k], ring_.reduce(static_cast<std::int64_t>(k)));
  }
  return Poly(ring_, std::move(d));
}

Poly Poly::reduce_mod_p() const { return with_ring(ring_.residue_field()); }

Poly Poly::with_ring(const RingSpec& ring) const {
  return Poly(ring, coeffs_);
}

DivRem monic_divrem(const Poly& a, const Poly& b) {
  if (!b.is_monic()) throw PreconditionError("divisor is not monic");
  const RingSpec& ring = a.ring();
  if (a.degree() < b.degree()) return {Poly(ring), a};
  std::vector<Residue> rem(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  const auto bc = b.coeffs();
  std::vector<Residue> quot(rem.size() - db, 0);
  for (std::size_t k = rem.size(); k-- > db;) {
    Residue c = rem[k];
    if (c == 0) continue;
    quot[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[k - db + j] = ring.sub(rem[k - db + j], ring.mul(c, bc[j]));
    }
  }
  rem.resize(db);
  return {Poly(ring, std::move(quot)), Poly(ring, std::move(rem))};
}

DivRem field_divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  const RingSpec& ring = b.ring();
  Residue inv = ring.inverse(b.leading());
  auto [q, r] = monic_divrem(a, b.scaled(inv));
  return {q.scaled(inv), r};
}

Poly field_gcd(const Poly& a, const Poly& b) {
  return field_ext_gcd(a, b).gcd;
}

Bezout field_ext_gcd(const Poly& x, const Poly& y) {
  const RingSpec& ring = x.ring();
  Poly r0 = x, r1 = y;
  Poly s0 = Poly::constant(ring, 1), s1(ring);
  Poly t0(ring), t1 = Poly::constant(ring, 1);
  while (!r1.is_zero()) {
    auto [q, r] = field_divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Residue inv = ring.inverse(r0.leading());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

namespace {

std::string_view trim_ws(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Poly parse_json_array(std::string_view text, const RingSpec& ring) {
  if (text.back() != ']') throw ParseError("unterminated coefficient array '" + std::string(text) + "'");
  text = trim_ws(text.substr(1, text.size() - 2));
  std::vector<Residue> coeffs;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = trim_ws(text.substr(0, comma));
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError("malformed coefficient '" + std::string(item) + "'");
    }
    coeffs.push_back(ring.reduce(v));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (trim_ws(text).empty()) throw ParseError("trailing comma in coefficient array");
  }
  return Poly(ring, std::move(coeffs));
}

}  // namespace

Poly parse_poly(std::string_view notation, const RingSpec& ring) {
  auto text = trim_ws(notation);
  if (text.empty()) throw ParseError("empty polynomial notation");
  if (text.front() == '[') return parse_json_array(text, ring);

  std::vector<Residue> digits;  // decreasing degree
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("unexpected character '" + std::string(1, c) +
                       "' in polynomial '" + std::string(text) + "'");
    }
    Residue d = static_cast<Residue>(c - '0');
    if (d >= ring.q()) {
      throw ParseError("digit " + std::to_string(d) + " is not below q = " +
                       std::to_string(ring.q()));
    }
    std::size_t repeat = 1;
    ++i;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("missing repeat count after '^' in '" + std::string(text) + "'");
      }
      repeat = static_cast<std::size_t>(text[i] - '0');
      if (repeat < 2) {
        throw ParseError("repeat count must be at least 2 in '" + std::string(text) + "'");
      }
      ++i;
    }
    digits.insert(digits.end(), repeat, d);
  }
  std::reverse(digits.begin(), digits.end());
  return Poly(ring, std::move(digits));
}

std::string render_notation(const Poly& f) {
  if (f.ring().q() > 10) {
    throw PreconditionError("digit notation needs q <= 10; use a coefficient array");
  }
  if (f.is_zero()) return "0";
  auto c = f.coeffs();
  std::string out;
  std::size_t k = c.size();
  while (k > 0) {
    Residue d = c[k - 1];
    std::size_t run = 0;
    while (k > 0 && c[k - 1] == d) {
      ++run;
      --k;
    }
    char digit = static_cast<char>('0' + d);
    while (run > 0) {
      std::size_t chunk = std::min<std::size_t>(run, 9);
      out += digit;
      if (chunk >= 2) {
        out += '^';
        out += static_cast<char>('0' + chunk);
      }
      run -= chunk;
    }
  }
  return out;
}

std::string render_algebraic(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  auto c = f.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!out.empty()) out += '+';
    if (c[k] != 1 || k == 0) out += std::to_string(c[k]);
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

}  // namespace qpc
