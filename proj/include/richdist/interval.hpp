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

#include <mpfr.h>

#include <compare>

#include "richdist/cyclo.hpp"

namespace richdist {

/// Owning wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
  double to_double(mpfr_rnd_t rounding = MPFR_RNDN) const { return mpfr_get_d(value_, rounding); }

 private:
  mpfr_t value_;
};

/// Closed real interval [lower, upper] with outward-rounded endpoints.
class Interval {
 public:
  explicit Interval(mpfr_prec_t precision);

  const BigFloat& lower() const noexcept { return lower_; }
  const BigFloat& upper() const noexcept { return upper_; }
  BigFloat& lower() noexcept { return lower_; }
  BigFloat& upper() noexcept { return upper_; }
  mpfr_prec_t precision() const noexcept { return lower_.precision(); }

  double lower_bound() const { return lower_.to_double(MPFR_RNDD); }
  double upper_bound() const { return upper_.to_double(MPFR_RNDU); }
  double midpoint() const;
  /// Exact midpoint (one extra bit of precision).
  BigFloat exact_midpoint() const;
  /// Upper bound on upper - lower.
  double width() const;

  bool contains(const BigFloat& x) const;
  bool contains(double x) const;
  /// Every point of *this is strictly below every point of other.
  bool precedes(const Interval& other) const;

 private:
  BigFloat lower_;
  BigFloat upper_;
};

/// Axis-aligned box in the complex plane.
struct ComplexBox {
  Interval re;
  Interval im;

  bool contains(double x, double y) const { return re.contains(x) && im.contains(y); }
};

/// Box guaranteed to contain the image of `a` under zeta -> exp(2 pi i / N).
/// Requires precision_bits >= 16; the box width shrinks roughly like
/// 2^-precision_bits.
ComplexBox eval_interval(const CycloNum& a, long precision_bits);

/// Exact ordering of two real field elements. Equality is decided on the
/// canonical forms; otherwise both values are evaluated at 64, 128, 256, ...
/// bits until their intervals separate.
std::strong_ordering compare_real(const CycloNum& a, const CycloNum& b);

}  // namespace richdist
