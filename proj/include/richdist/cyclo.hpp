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

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace richdist {

using Rational = mpq_class;
using Integer = mpz_class;

/// Formats a rational as "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& q);

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
/// Obtained by dividing x^N - 1 exactly by every Phi_d with d a proper
/// divisor of N.
std::vector<Integer> cyclotomic_polynomial(long order);

long euler_phi(long n);

/// The field Q(zeta_N), with zeta_N = exp(2 pi i / N).
///
/// Elements are stored in the power basis 1, zeta, ..., zeta^(d-1) with
/// d = phi(N). The field keeps the reduced images of every power zeta^e,
/// 0 <= e < N, which makes conjugation and embedding a linear combination of
/// table rows. Instances are interned by order and never mutated.
class CycloField {
 public:
  long order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return degree_; }

  /// Monic Phi_N, constant term first; size degree() + 1.
  const std::vector<long>& modulus() const noexcept { return modulus_; }

  /// Nonzero (index, coefficient) terms of Phi_N below the leading one.
  const std::vector<std::pair<std::size_t, long>>& modulus_terms() const noexcept {
    return modulus_terms_;
  }

  /// Reduced coefficients of zeta^e for 0 <= e < order().
  const std::vector<long>& power(long e) const;

 private:
  friend std::shared_ptr<const CycloField> cyclotomic_field(long order);
  explicit CycloField(long order);

  long order_;
  std::size_t degree_;
  std::vector<long> modulus_;
  std::vector<std::pair<std::size_t, long>> modulus_terms_;
  std::vector<std::vector<long>> powers_;
};

using FieldPtr = std::shared_ptr<const CycloField>;

/// Interned field of the given order (thread-safe).
FieldPtr cyclotomic_field(long order);

/// Q(zeta_lcm(a, b)), the field both arguments embed into.
FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b);

/// An element of Q(zeta_N) in canonical form.
///
/// Internally the rational coefficient vector is kept as integer numerators
/// over one positive common denominator with gcd(content, denominator) = 1;
/// this is a bijection with the fully reduced rational coefficient list, so
/// equality and hashing act on the canonical form directly.
///
/// Under the embedding zeta -> exp(2 pi i / N) an element doubles as a point
/// of the plane.
class CycloNum {
 public:
  /// Zero of Q(zeta_1) = Q.
  CycloNum();
  /// Zero of the given field.
  explicit CycloNum(FieldPtr field);

  static CycloNum rational(FieldPtr field, const Rational& value);
  /// zeta^exponent; any integer exponent is accepted.
  static CycloNum zeta_power(FieldPtr field, long exponent);
  /// Builds an element from exactly degree() rational coefficients.
  static CycloNum from_coefficients(FieldPtr field,
                                    std::span<const Rational> coefficients);

  const FieldPtr& field() const noexcept { return field_; }
  long order() const noexcept { return field_->order(); }
  std::size_t degree() const noexcept { return field_->degree(); }

  Rational coefficient(std::size_t i) const;
  std::vector<Rational> coefficients() const;
  const std::vector<Integer>& numerators() const noexcept { return numerators_; }
  const Integer& denominator() const noexcept { return denominator_; }

  bool is_zero() const noexcept;
  bool is_rational() const noexcept;
  /// Fixed by complex conjugation.
  bool is_real() const;

  CycloNum inverse() const;
  CycloNum conj() const;
  CycloNum embed(const FieldPtr& target) const;

  std::size_t hash() const noexcept;

  /// Polynomial in z, e.g. "2 - z - z^4".
  std::string to_string() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& rhs);
  CycloNum& operator-=(const CycloNum& rhs);
  CycloNum& operator*=(const CycloNum& rhs);

  friend CycloNum operator+(CycloNum lhs, const CycloNum& rhs) { return lhs += rhs; }
  friend CycloNum operator-(CycloNum lhs, const CycloNum& rhs) { return lhs -= rhs; }
  friend CycloNum operator*(const CycloNum& lhs, const CycloNum& rhs);

  friend bool operator==(const CycloNum& a, const CycloNum& b);

 private:
  CycloNum(FieldPtr field, std::vector<Integer> numerators, Integer denominator);
  void normalize();
  void check_same_field(const CycloNum& other, const char* op) const;

  FieldPtr field_;
  std::vector<Integer> numerators_;
  Integer denominator_;
};

enum class ArithOp { add, sub, mul, neg };

/// Exact field arithmetic; `neg` ignores `b`.
CycloNum arith(const CycloNum& a, const CycloNum& b, ArithOp op);
CycloNum inv(const CycloNum& a);
CycloNum conj(const CycloNum& a);
CycloNum embed(const CycloNum& a, const FieldPtr& target);

struct CycloNumHash {
  std::size_t operator()(const CycloNum& a) const noexcept { return a.hash(); }
};

}  // namespace richdist

template <>
struct std::hash<richdist::CycloNum> {
  std::size_t operator()(const richdist::CycloNum& a) const noexcept { return a.hash(); }
};
