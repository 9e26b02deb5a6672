// Copyright 2026 The richdist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "richdist/cyclo.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "richdist/errors.hpp"

namespace richdist {

namespace {

using IntPoly = std::vector<Integer>;

// r -= c * v for a machine-word v.
inline void submul_si(mpz_t r, const mpz_t c, long v) {
  if (v > 0) {
    mpz_submul_ui(r, c, static_cast<unsigned long>(v));
  } else if (v < 0) {
    mpz_addmul_ui(r, c, static_cast<unsigned long>(-v));
  }
}

// r += c * v for a machine-word v.
inline void addmul_si(mpz_t r, const mpz_t c, long v) {
  if (v > 0) {
    mpz_addmul_ui(r, c, static_cast<unsigned long>(v));
  } else if (v < 0) {
    mpz_submul_ui(r, c, static_cast<unsigned long>(-v));
  }
}

// Quotient of num by a monic den; the division must be exact.
IntPoly divide_exact_monic(const IntPoly& num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  const std::size_t nn = num.size() - 1;
  IntPoly rem = num;
  IntPoly quot(nn - dn + 1);
  for (std::size_t i = nn + 1; i-- > dn;) {
    const Integer c = rem[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= c * den[j];
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::logic_error("inexact cyclotomic division");
  }
  return quot;
}

std::mutex& poly_cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<long, IntPoly>& poly_cache() {
  static std::map<long, IntPoly> cache;
  return cache;
}

// Arithmetic in F_p for primes below 2^62.
using ModPoly = std::vector<std::uint64_t>;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a, p)) {
    if (e & 1) r = mul_mod(r, a, p);
  }
  return r;
}

std::uint64_t reduce_mod(const Integer& x, std::uint64_t p) {
  return mpz_fdiv_ui(x.get_mpz_t(), p);
}

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// s -= c x^shift g
void sub_scaled(ModPoly& s, const ModPoly& g, std::uint64_t c, std::size_t shift, std::uint64_t p) {
  if (s.size() < g.size() + shift) s.resize(g.size() + shift, 0);
  for (std::size_t j = 0; j < g.size(); ++j) {
    const std::uint64_t t = mul_mod(c, g[j], p);
    s[j + shift] = s[j + shift] >= t ? s[j + shift] - t : s[j + shift] + p - t;
  }
}

// Inverse of a modulo (modulus, p), or nullopt when they share a factor.
std::optional<ModPoly> inverse_mod(ModPoly a, ModPoly modulus, std::uint64_t p) {
  trim(a);
  trim(modulus);
  if (a.empty()) return std::nullopt;
  ModPoly r0 = std::move(modulus), r1 = std::move(a);
  ModPoly s0, s1{1};
  while (r1.size() > 1) {
    // r0 = q r1 + rem, s0 - q s1, done one leading term at a time.
    const std::uint64_t lead_inv = pow_mod(r1.back(), p - 2, p);
    while (r0.size() >= r1.size()) {
      const std::size_t shift = r0.size() - r1.size();
      const std::uint64_t c = mul_mod(r0.back(), lead_inv, p);
      sub_scaled(r0, r1, c, shift, p);
      sub_scaled(s0, s1, c, shift, p);
      r0.pop_back();
      trim(r0);
    }
    trim(s0);
    std::swap(r0, r1);
    std::swap(s0, s1);
    if (r1.empty()) return std::nullopt;
  }
  const std::uint64_t c = pow_mod(r1[0], p - 2, p);
  for (auto& x : s1) x = mul_mod(x, c, p);
  return s1;
}

const std::vector<std::uint64_t>& crt_primes(std::size_t count) {
  static std::mutex mutex;
  static std::vector<std::uint64_t> primes;
  std::lock_guard lock(mutex);
  Integer next = Integer(1) << 62;
  if (!primes.empty()) next = primes.back();
  while (primes.size() < count) {
    mpz_nextprime(next.get_mpz_t(), next.get_mpz_t());
    primes.push_back(next.get_ui());
  }
  return primes;
}

// r/s with |r|, s <= sqrt(m/2) and r = s u (mod m), if one exists.
std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
  Integer r0 = m, r1 = u, t0 = 0, t1 = 1;
  while (r1 > bound) {
    const Integer q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Rational out(r1, t1);
  out.canonicalize();
  return out;
}

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::size_t hash_integer(const Integer& z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
  const std::size_t limbs = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)));
  }
  return h;
}

}  // namespace

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(long order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  {
    std::lock_guard lock(poly_cache_mutex());
    auto it = poly_cache().find(order);
    if (it != poly_cache().end()) return it->second;
  }
  IntPoly poly(static_cast<std::size_t>(order) + 1, Integer(0));
  poly[0] = -1;
  poly[static_cast<std::size_t>(order)] = 1;
  for (long d = 1; d < order; ++d) {
    if (order % d == 0) poly = divide_exact_monic(poly, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(poly_cache_mutex());
  return poly_cache().emplace(order, std::move(poly)).first->second;
}

CycloField::CycloField(long order) : order_(order) {
  const auto phi = cyclotomic_polynomial(order);
  degree_ = phi.size() - 1;
  modulus_.reserve(phi.size());
  for (const auto& c : phi) {
    if (!c.fits_slong_p()) throw std::overflow_error("cyclotomic coefficient exceeds machine word");
    modulus_.push_back(c.get_si());
  }
  for (std::size_t j = 0; j < degree_; ++j) {
    if (modulus_[j] != 0) modulus_terms_.emplace_back(j, modulus_[j]);
  }

  powers_.resize(static_cast<std::size_t>(order));
  std::vector<long> current(degree_, 0);
  current[0] = 1;
  for (long e = 0; e < order; ++e) {
    powers_[static_cast<std::size_t>(e)] = current;
    // Multiply by zeta: shift up and fold the overflow term back with Phi_N.
    const long top = current[degree_ - 1];
    for (std::size_t i = degree_ - 1; i > 0; --i) current[i] = current[i - 1];
    current[0] = 0;
    if (top == 0) continue;
    for (const auto& [j, c] : modulus_terms_) {
      long prod = 0;
      if (__builtin_mul_overflow(top, c, &prod) ||
          __builtin_sub_overflow(current[j], prod, &current[j])) {
        throw std::overflow_error("power table exceeds machine word");
      }
    }
  }
}

const std::vector<long>& CycloField::power(long e) const {
  e %= order_;
  if (e < 0) e += order_;
  return powers_[static_cast<std::size_t>(e)];
}

FieldPtr cyclotomic_field(long order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<long, FieldPtr> fields;
  {
    std::lock_guard lock(mutex);
    auto it = fields.find(order);
    if (it != fields.end()) return it->second;
  }
  FieldPtr field(new CycloField(order));
  std::lock_guard lock(mutex);
  return fields.emplace(order, std::move(field)).first->second;
}

FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b) {
  if (a->order() == b->order()) return a;
  return cyclotomic_field(std::lcm(a->order(), b->order()));
}

CycloNum::CycloNum() : CycloNum(cyclotomic_field(1)) {}

CycloNum::CycloNum(FieldPtr field)
    : field_(std::move(field)), numerators_(field_->degree()), denominator_(1) {}

CycloNum::CycloNum(FieldPtr field, std::vector<Integer> numerators, Integer denominator)
    : field_(std::move(field)),
      numerators_(std::move(numerators)),
      denominator_(std::move(denominator)) {
  normalize();
}

CycloNum CycloNum::rational(FieldPtr field, const Rational& value) {
  Rational q = value;
  q.canonicalize();
  CycloNum out(std::move(field));
  out.numerators_[0] = q.get_num();
  out.denominator_ = q.get_den();
  return out;
}

CycloNum CycloNum::zeta_power(FieldPtr field, long exponent) {
  const auto& row = field->power(exponent);
  std::vector<Integer> nums(row.begin(), row.end());
  return CycloNum(std::move(field), std::move(nums), Integer(1));
}

CycloNum CycloNum::from_coefficients(FieldPtr field, std::span<const Rational> coefficients) {
  if (coefficients.size() != field->degree()) {
    throw std::invalid_argument("expected " + std::to_string(field->degree()) +
                                " coefficients, got " + std::to_string(coefficients.size()));
  }
  Integer common = 1;
  for (const auto& c : coefficients) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> nums;
  nums.reserve(coefficients.size());
  for (const auto& c : coefficients) nums.push_back(c.get_num() * (common / c.get_den()));
  return CycloNum(std::move(field), std::move(nums), std::move(common));
}

void CycloNum::normalize() {
  if (mpz_sgn(denominator_.get_mpz_t()) < 0) {
    denominator_ = -denominator_;
    for (auto& n : numerators_) n = -n;
  }
  if (is_zero()) {
    denominator_ = 1;
    return;
  }
  if (denominator_ == 1) return;
  Integer g = denominator_;
  for (const auto& n : numerators_) {
    if (n == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& n : numerators_) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(denominator_.get_mpz_t(), denominator_.get_mpz_t(), g.get_mpz_t());
}

void CycloNum::check_same_field(const CycloNum& other, const char* op) const {
  if (order() != other.order()) {
    throw FieldMismatchError(std::string(op) + ": operands live in Q(zeta_" +
                             std::to_string(order()) + ") and Q(zeta_" +
                             std::to_string(other.order()) + ")");
  }
}

Rational CycloNum::coefficient(std::size_t i) const {
  Rational q(numerators_.at(i), denominator_);
  q.canonicalize();
  return q;
}

std::vector<Rational> CycloNum::coefficients() const {
  std::vector<Rational> out;
  out.reserve(numerators_.size());
  for (std::size_t i = 0; i < numerators_.size(); ++i) out.push_back(coefficient(i));
  return out;
}

bool CycloNum::is_zero() const noexcept {
  return std::all_of(numerators_.begin(), numerators_.end(),
                     [](const Integer& n) { return mpz_sgn(n.get_mpz_t()) == 0; });
}

bool CycloNum::is_rational() const noexcept {
  return std::all_of(numerators_.begin() + 1, numerators_.end(),
                     [](const Integer& n) { return mpz_sgn(n.get_mpz_t()) == 0; });
}

bool CycloNum::is_real() const { return conj() == *this; }

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& n : out.numerators_) mpz_neg(n.get_mpz_t(), n.get_mpz_t());
  return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
  check_same_field(rhs, "add");
  if (denominator_ == rhs.denominator_) {
    for (std::size_t i = 0; i < numerators_.size(); ++i) {
      mpz_add(numerators_[i].get_mpz_t(), numerators_[i].get_mpz_t(),
              rhs.numerators_[i].get_mpz_t());
    }
    if (denominator_ != 1) normalize();
    return *this;
  }
  Integer common;
  mpz_lcm(common.get_mpz_t(), denominator_.get_mpz_t(), rhs.denominator_.get_mpz_t());
  const Integer left = common / denominator_;
  const Integer right = common / rhs.denominator_;
  for (std::size_t i = 0; i < numerators_.size(); ++i) {
    mpz_mul(numerators_[i].get_mpz_t(), numerators_[i].get_mpz_t(), left.get_mpz_t());
    mpz_addmul(numerators_[i].get_mpz_t(), rhs.numerators_[i].get_mpz_t(), right.get_mpz_t());
  }
  denominator_ = common;
  normalize();
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) {
  check_same_field(rhs, "sub");
  return *this += -rhs;
}

CycloNum operator*(const CycloNum& lhs, const CycloNum& rhs) {
  lhs.check_same_field(rhs, "mul");
  const CycloField& field = *lhs.field_;
  const std::size_t d = field.degree();
  std::vector<Integer> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    const mpz_srcptr a = lhs.numerators_[i].get_mpz_t();
    if (mpz_sgn(a) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      const mpz_srcptr b = rhs.numerators_[j].get_mpz_t();
      if (mpz_sgn(b) == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a, b);
    }
  }
  // zeta^d = -sum_{j<d} phi_j zeta^j
  for (std::size_t i = 2 * d - 1; i-- > d;) {
    if (mpz_sgn(prod[i].get_mpz_t()) == 0) continue;
    for (const auto& [j, c] : field.modulus_terms()) {
      submul_si(prod[i - d + j].get_mpz_t(), prod[i].get_mpz_t(), c);
    }
  }
  prod.resize(d);
  return CycloNum(lhs.field_, std::move(prod), lhs.denominator_ * rhs.denominator_);
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  return a.order() == b.order() && a.denominator_ == b.denominator_ &&
         a.numerators_ == b.numerators_;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero");
  if (is_rational()) {
    Rational q = 1 / coefficient(0);
    return rational(field_, q);
  }
  // Inverse of the integer numerator polynomial modulo small primes, lifted
  // by CRT and rational reconstruction, and confirmed by one exact product.
  const std::size_t d = degree();
  const auto& phi = field_->modulus();
  const CycloNum numerator(field_, numerators_, Integer(1));
  const CycloNum one = rational(field_, 1);
  std::vector<Integer> residues(d, 0);
  Integer m = 1;
  std::size_t used = 0;
  std::size_t next_check = 2;
  for (std::size_t idx = 0;; ++idx) {
    const std::uint64_t p = crt_primes(idx + 1)[idx];
    ModPoly a(d), f(d + 1);
    for (std::size_t i = 0; i < d; ++i) a[i] = reduce_mod(numerators_[i], p);
    for (std::size_t i = 0; i <= d; ++i) f[i] = reduce_mod(Integer(phi[i]), p);
    const auto inv = inverse_mod(std::move(a), std::move(f), p);
    if (!inv) continue;
    // x = residues (mod m), x = inv (mod p)
    const Integer pz(static_cast<unsigned long>(p));
    Integer m_inv;
    mpz_invert(m_inv.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t i = 0; i < d; ++i) {
      const std::uint64_t target = i < inv->size() ? (*inv)[i] : 0;
      Integer delta = Integer(static_cast<unsigned long>(target)) - residues[i];
      delta = delta * m_inv;
      mpz_fdiv_r(delta.get_mpz_t(), delta.get_mpz_t(), pz.get_mpz_t());
      residues[i] += m * delta;
    }
    m *= pz;
    if (++used < next_check) continue;
    next_check = used + std::max<std::size_t>(1, used / 2);
    std::vector<Rational> coeffs;
    coeffs.reserve(d);
    for (const auto& u : residues) {
      auto q = rational_reconstruct(u, m);
      if (!q) break;
      coeffs.push_back(*q);
    }
    if (coeffs.size() != d) continue;
    CycloNum candidate = from_coefficients(field_, coeffs);
    if (numerator * candidate == one) {
      return candidate * rational(field_, denominator_);
    }
  }
}

CycloNum CycloNum::conj() const {
  const long n = order();
  std::vector<Integer> out(degree());
  for (std::size_t i = 0; i < numerators_.size(); ++i) {
    if (mpz_sgn(numerators_[i].get_mpz_t()) == 0) continue;
    const auto& row = field_->power(n - static_cast<long>(i));
    for (std::size_t j = 0; j < row.size(); ++j) {
      addmul_si(out[j].get_mpz_t(), numerators_[i].get_mpz_t(), row[j]);
    }
  }
  return CycloNum(field_, std::move(out), denominator_);
}

CycloNum CycloNum::embed(const FieldPtr& target) const {
  if (target->order() == order()) return *this;
  if (target->order() % order() != 0) {
    throw NotDivisibleError("cannot embed Q(zeta_" + std::to_string(order()) + ") into Q(zeta_" +
                            std::to_string(target->order()) + ")");
  }
  const long step = target->order() / order();
  std::vector<Integer> out(target->degree());
  for (std::size_t i = 0; i < numerators_.size(); ++i) {
    if (mpz_sgn(numerators_[i].get_mpz_t()) == 0) continue;
    const auto& row = target->power(static_cast<long>(i) * step);
    for (std::size_t j = 0; j < row.size(); ++j) {
      addmul_si(out[j].get_mpz_t(), numerators_[i].get_mpz_t(), row[j]);
    }
  }
  return CycloNum(target, std::move(out), denominator_);
}

std::size_t CycloNum::hash() const noexcept {
  std::size_t h = std::hash<long>{}(order());
  hash_combine(h, hash_integer(denominator_));
  for (const auto& n : numerators_) hash_combine(h, hash_integer(n));
  return h;
}

std::string CycloNum::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < numerators_.size(); ++i) {
    Rational c = coefficient(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << richdist::to_string(c);
      continue;
    }
    if (c != 1) out << richdist::to_string(c) << "*";
    out << "z";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

CycloNum arith(const CycloNum& a, const CycloNum& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::neg:
      return -a;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

CycloNum inv(const CycloNum& a) { return a.inverse(); }
CycloNum conj(const CycloNum& a) { return a.conj(); }
CycloNum embed(const CycloNum& a, const FieldPtr& target) { return a.embed(target); }

}  // namespace richdist
