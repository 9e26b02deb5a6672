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

#include "richdist/interval.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "richdist/errors.hpp"

namespace richdist {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // mpfr_t is an array type; steal the limbs by swapping with a fresh value.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

Interval::Interval(mpfr_prec_t precision) : lower_(precision), upper_(precision) {}

double Interval::midpoint() const { return exact_midpoint().to_double(); }

BigFloat Interval::exact_midpoint() const {
  BigFloat mid(std::max(lower_.precision(), upper_.precision()) + 1);
  mpfr_add(mid.get(), lower_.get(), upper_.get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  return mid;
}

double Interval::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), upper_.get(), lower_.get(), MPFR_RNDU);
  return w.to_double(MPFR_RNDU);
}

bool Interval::contains(const BigFloat& x) const {
  return mpfr_lessequal_p(lower_.get(), x.get()) && mpfr_lessequal_p(x.get(), upper_.get());
}

bool Interval::contains(double x) const {
  return mpfr_cmp_d(lower_.get(), x) <= 0 && mpfr_cmp_d(upper_.get(), x) >= 0;
}

bool Interval::precedes(const Interval& other) const {
  return mpfr_less_p(upper_.get(), other.lower_.get());
}

namespace {

constexpr mpfr_prec_t kGuardBits = 32;

struct BasisTable {
  std::vector<Interval> cos;
  std::vector<Interval> sin;
};

// Encloses f(theta) for theta in [lo, hi], given that |f'| <= 1.
Interval lipschitz_enclosure(int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const BigFloat& lo,
                             const BigFloat& hi, mpfr_prec_t prec) {
  BigFloat spread(prec);
  mpfr_sub(spread.get(), hi.get(), lo.get(), MPFR_RNDU);
  Interval out(prec);
  f(out.lower().get(), lo.get(), MPFR_RNDD);
  f(out.upper().get(), lo.get(), MPFR_RNDU);
  mpfr_sub(out.lower().get(), out.lower().get(), spread.get(), MPFR_RNDD);
  mpfr_add(out.upper().get(), out.upper().get(), spread.get(), MPFR_RNDU);
  if (mpfr_cmp_si(out.lower().get(), -1) < 0) mpfr_set_si(out.lower().get(), -1, MPFR_RNDN);
  if (mpfr_cmp_si(out.upper().get(), 1) > 0) mpfr_set_si(out.upper().get(), 1, MPFR_RNDN);
  return out;
}

std::shared_ptr<const BasisTable> build_basis(long order, std::size_t count, mpfr_prec_t prec) {
  auto table = std::make_shared<BasisTable>();
  table->cos.reserve(count);
  table->sin.reserve(count);
  BigFloat pi_lo(prec);
  BigFloat pi_hi(prec);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  for (std::size_t j = 0; j < count; ++j) {
    if (j == 0) {
      Interval c(prec);
      mpfr_set_ui(c.lower().get(), 1, MPFR_RNDN);
      mpfr_set_ui(c.upper().get(), 1, MPFR_RNDN);
      table->cos.push_back(std::move(c));
      table->sin.emplace_back(prec);
      continue;
    }
    BigFloat theta_lo(prec);
    BigFloat theta_hi(prec);
    mpfr_mul_ui(theta_lo.get(), pi_lo.get(), 2 * j, MPFR_RNDD);
    mpfr_div_ui(theta_lo.get(), theta_lo.get(), static_cast<unsigned long>(order), MPFR_RNDD);
    mpfr_mul_ui(theta_hi.get(), pi_hi.get(), 2 * j, MPFR_RNDU);
    mpfr_div_ui(theta_hi.get(), theta_hi.get(), static_cast<unsigned long>(order), MPFR_RNDU);
    table->cos.push_back(lipschitz_enclosure(mpfr_cos, theta_lo, theta_hi, prec));
    table->sin.push_back(lipschitz_enclosure(mpfr_sin, theta_lo, theta_hi, prec));
  }
  return table;
}

std::shared_ptr<const BasisTable> basis_table(const CycloField& field, mpfr_prec_t prec) {
  static std::mutex mutex;
  static std::map<std::pair<long, mpfr_prec_t>, std::shared_ptr<const BasisTable>> cache;
  const auto key = std::make_pair(field.order(), prec);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto table = build_basis(field.order(), field.degree(), prec);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(table)).first->second;
}

// acc += z * x, outward rounded.
void add_scaled(Interval& acc, const Integer& z, const Interval& x, BigFloat& scratch) {
  const bool negative = mpz_sgn(z.get_mpz_t()) < 0;
  const BigFloat& lo_src = negative ? x.upper() : x.lower();
  const BigFloat& hi_src = negative ? x.lower() : x.upper();
  mpfr_mul_z(scratch.get(), lo_src.get(), z.get_mpz_t(), MPFR_RNDD);
  mpfr_add(acc.lower().get(), acc.lower().get(), scratch.get(), MPFR_RNDD);
  mpfr_mul_z(scratch.get(), hi_src.get(), z.get_mpz_t(), MPFR_RNDU);
  mpfr_add(acc.upper().get(), acc.upper().get(), scratch.get(), MPFR_RNDU);
}

void divide_positive(Interval& acc, const Integer& den) {
  if (den == 1) return;
  mpfr_div_z(acc.lower().get(), acc.lower().get(), den.get_mpz_t(), MPFR_RNDD);
  mpfr_div_z(acc.upper().get(), acc.upper().get(), den.get_mpz_t(), MPFR_RNDU);
}

}  // namespace

ComplexBox eval_interval(const CycloNum& a, long precision_bits) {
  if (precision_bits < 16) throw std::invalid_argument("precision_bits must be at least 16");
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits) + kGuardBits;
  ComplexBox box{Interval(prec), Interval(prec)};
  if (a.is_zero()) return box;
  const auto table = basis_table(*a.field(), prec);
  BigFloat scratch(prec);
  const auto& nums = a.numerators();
  for (std::size_t j = 0; j < nums.size(); ++j) {
    if (mpz_sgn(nums[j].get_mpz_t()) == 0) continue;
    add_scaled(box.re, nums[j], table->cos[j], scratch);
    add_scaled(box.im, nums[j], table->sin[j], scratch);
  }
  divide_positive(box.re, a.denominator());
  divide_positive(box.im, a.denominator());
  return box;
}

std::strong_ordering compare_real(const CycloNum& a, const CycloNum& b) {
  if (!a.is_real()) throw NotRealError("compare_real: left operand " + a.to_string() + " is not real");
  if (!b.is_real()) throw NotRealError("compare_real: right operand " + b.to_string() + " is not real");
  const FieldPtr field = join_fields(a.field(), b.field());
  const CycloNum x = a.embed(field);
  const CycloNum y = b.embed(field);
  if (x == y) return std::strong_ordering::equal;
  // Distinct algebraic numbers are separated, so this loop terminates.
  for (long bits = 64;; bits *= 2) {
    const Interval xi = eval_interval(x, bits).re;
    const Interval yi = eval_interval(y, bits).re;
    if (xi.precedes(yi)) return std::strong_ordering::less;
    if (yi.precedes(xi)) return std::strong_ordering::greater;
    if (bits > (1L << 24)) throw std::logic_error("compare_real failed to separate distinct values");
  }
}

}  // namespace richdist
