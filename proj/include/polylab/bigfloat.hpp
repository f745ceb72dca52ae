/*
   Copyright 2026 The polylab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace polylab {

using Prec = mpfr_prec_t;

constexpr Prec kMinPrecision = 53;
constexpr Prec kDefaultPrecision = 128;

/// Thread-local working precision used by value constructors that do not
/// name one explicitly.
Prec default_precision();
void set_default_precision(Prec bits);

/// RAII guard that swaps the default precision for a scope.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(Prec bits) : saved_(default_precision()) {
    set_default_precision(bits);
  }
  ~PrecisionGuard() { set_default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  Prec saved_;
};

/// Arbitrary-precision real scalar. Arithmetic between two values is carried
/// out at the larger of the two precisions; the result carries it.
class BigReal {
 public:
  BigReal() : BigReal(default_precision()) {}
  explicit BigReal(Prec bits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_zero(v_, 1);
  }
  BigReal(double x) : BigReal(x, default_precision()) {}  // NOLINT
  BigReal(int x) : BigReal(static_cast<double>(x)) {}     // NOLINT
  BigReal(double x, Prec bits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  BigReal(const std::string& decimal, Prec bits) {
    mpfr_init2(v_, clamp(bits));
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("BigReal: cannot parse '" + decimal + "'");
  }
  BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, kMinPrecision);
    mpfr_swap(v_, o.v_);
  }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigReal() { mpfr_clear(v_); }

  Prec precision_bits() const { return mpfr_get_prec(v_); }

  /// Value-preserving re-round to a new precision.
  BigReal with_precision(Prec bits) const {
    BigReal r(clamp(bits));
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Round-trip decimal string (scientific form).
  std::string str(int digits = 0) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  // -- arithmetic ---------------------------------------------------------
  friend BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  BigReal operator-() const {
    BigReal r(precision_bits());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigReal& operator+=(const BigReal& o) { return *this = *this + o; }
  BigReal& operator-=(const BigReal& o) { return *this = *this - o; }
  BigReal& operator*=(const BigReal& o) { return *this = *this * o; }
  BigReal& operator/=(const BigReal& o) { return *this = *this / o; }

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
  friend bool operator<(const BigReal& a, const BigReal& b) {
    return mpfr_less_p(a.v_, b.v_) != 0;
  }
  friend bool operator>(const BigReal& a, const BigReal& b) { return b < a; }
  friend bool operator<=(const BigReal& a, const BigReal& b) {
    return mpfr_lessequal_p(a.v_, b.v_) != 0;
  }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return b <= a; }

 private:
  static Prec clamp(Prec bits) { return bits < kMinPrecision ? kMinPrecision : bits; }
  static Prec join(const BigReal& a, const BigReal& b) {
    return std::max(a.precision_bits(), b.precision_bits());
  }
  mpfr_t v_;
};

// Mixed double/int operands promote at the BigReal operand's precision.
inline BigReal operator+(const BigReal& a, double b) { return a + BigReal(b, a.precision_bits()); }
inline BigReal operator+(double a, const BigReal& b) { return BigReal(a, b.precision_bits()) + b; }
inline BigReal operator-(const BigReal& a, double b) { return a - BigReal(b, a.precision_bits()); }
inline BigReal operator-(double a, const BigReal& b) { return BigReal(a, b.precision_bits()) - b; }
inline BigReal operator*(const BigReal& a, double b) { return a * BigReal(b, a.precision_bits()); }
inline BigReal operator*(double a, const BigReal& b) { return BigReal(a, b.precision_bits()) * b; }
inline BigReal operator/(const BigReal& a, double b) { return a / BigReal(b, a.precision_bits()); }
inline BigReal operator/(double a, const BigReal& b) { return BigReal(a, b.precision_bits()) / b; }
inline bool operator<(const BigReal& a, double b) { return a < BigReal(b, a.precision_bits()); }
inline bool operator<(double a, const BigReal& b) { return BigReal(a, b.precision_bits()) < b; }
inline bool operator>(const BigReal& a, double b) { return a > BigReal(b, a.precision_bits()); }
inline bool operator>(double a, const BigReal& b) { return BigReal(a, b.precision_bits()) > b; }
inline bool operator<=(const BigReal& a, double b) { return a <= BigReal(b, a.precision_bits()); }
inline bool operator>=(const BigReal& a, double b) { return a >= BigReal(b, a.precision_bits()); }
inline bool operator==(const BigReal& a, double b) { return a == BigReal(b, a.precision_bits()); }

#define POLYLAB_MPFR_UNARY(name, fn)                \
  inline BigReal name(const BigReal& x) {           \
    BigReal r(x.precision_bits());                  \
    fn(r.raw(), x.raw(), MPFR_RNDN);                \
    return r;                                       \
  }
POLYLAB_MPFR_UNARY(abs, mpfr_abs)
POLYLAB_MPFR_UNARY(sqrt, mpfr_sqrt)
POLYLAB_MPFR_UNARY(exp, mpfr_exp)
POLYLAB_MPFR_UNARY(log, mpfr_log)
POLYLAB_MPFR_UNARY(sin, mpfr_sin)
POLYLAB_MPFR_UNARY(cos, mpfr_cos)
POLYLAB_MPFR_UNARY(tan, mpfr_tan)
POLYLAB_MPFR_UNARY(tgamma, mpfr_gamma)
#undef POLYLAB_MPFR_UNARY

inline BigReal floor(const BigReal& x) {
  BigReal r(x.precision_bits());
  mpfr_floor(r.raw(), x.raw());
  return r;
}
inline BigReal ceil(const BigReal& x) {
  BigReal r(x.precision_bits());
  mpfr_ceil(r.raw(), x.raw());
  return r;
}

inline BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(std::max(y.precision_bits(), x.precision_bits()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline BigReal hypot(const BigReal& a, const BigReal& b) {
  BigReal r(std::max(a.precision_bits(), b.precision_bits()));
  mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline BigReal pow(const BigReal& a, const BigReal& b) {
  BigReal r(std::max(a.precision_bits(), b.precision_bits()));
  mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline BigReal pow(const BigReal& a, long k) {
  BigReal r(a.precision_bits());
  mpfr_pow_si(r.raw(), a.raw(), k, MPFR_RNDN);
  return r;
}
inline BigReal pow2(long e, Prec bits = 0) {  // 2^e exactly
  BigReal r(bits > 0 ? bits : default_precision());
  mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}
inline BigReal pi(Prec bits) {
  BigReal r(bits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}
inline const BigReal& max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }
inline const BigReal& min(const BigReal& a, const BigReal& b) { return a < b ? a : b; }

/// Reference Airy Ai from MPFR; used as an independent oracle in tests.
inline BigReal mpfr_airy_reference(const BigReal& x) {
  BigReal r(x.precision_bits());
  mpfr_ai(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

/// Complex scalar: a (re, im) pair held at one common precision.
class BigComplex {
 public:
  BigComplex() : re_(), im_() {}
  BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {
    equalize();
  }
  BigComplex(double re, double im, Prec bits) : re_(re, bits), im_(im, bits) {}
  BigComplex(double re, double im = 0.0)  // NOLINT
      : re_(re, default_precision()), im_(im, default_precision()) {}
  explicit BigComplex(const BigReal& re) : re_(re), im_(BigReal(re.precision_bits())) {}

  const BigReal& re() const { return re_; }
  const BigReal& im() const { return im_; }
  Prec precision_bits() const { return re_.precision_bits(); }
  BigComplex with_precision(Prec bits) const {
    return BigComplex(re_.with_precision(bits), im_.with_precision(bits));
  }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend BigComplex operator*(const BigComplex& a, const BigReal& s) {
    return BigComplex(a.re_ * s, a.im_ * s);
  }
  friend BigComplex operator*(const BigReal& s, const BigComplex& a) { return a * s; }
  friend BigComplex operator/(const BigComplex& a, const BigReal& s) {
    return BigComplex(a.re_ / s, a.im_ / s);
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal d = b.re_ * b.re_ + b.im_ * b.im_;
    return BigComplex((a.re_ * b.re_ + a.im_ * b.im_) / d,
                      (a.im_ * b.re_ - a.re_ * b.im_) / d);
  }
  BigComplex operator-() const { return BigComplex(-re_, -im_); }
  BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
  BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
  BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  friend BigComplex conj(const BigComplex& a) { return BigComplex(a.re_, -a.im_); }
  friend BigReal abs(const BigComplex& a) { return hypot(a.re_, a.im_); }
  friend BigReal norm(const BigComplex& a) { return a.re_ * a.re_ + a.im_ * a.im_; }
  friend BigReal arg(const BigComplex& a) { return atan2(a.im_, a.re_); }

  static BigComplex polar(const BigReal& r, const BigReal& theta) {
    return BigComplex(r * cos(theta), r * sin(theta));
  }

 private:
  void equalize() {
    Prec p = std::max(re_.precision_bits(), im_.precision_bits());
    if (re_.precision_bits() != p) re_ = re_.with_precision(p);
    if (im_.precision_bits() != p) im_ = im_.with_precision(p);
  }
  BigReal re_, im_;
};

inline BigComplex sqrt(const BigComplex& z) {
  // principal branch
  BigReal r = abs(z);
  if (r.is_zero()) return BigComplex(BigReal(z.precision_bits()), BigReal(z.precision_bits()));
  BigReal half(0.5, z.precision_bits());
  BigReal re = sqrt((r + z.re()) * half);
  BigReal im = sqrt(max(BigReal(0.0, z.precision_bits()), (r - z.re()) * half));
  if (z.im().sign() < 0) im = -im;
  return BigComplex(re, im);
}

}  // namespace polylab
