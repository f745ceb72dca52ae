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

#include <stdexcept>
#include <string>
#include <vector>

#include "polylab/bigfloat.hpp"

namespace polylab {

struct BasisMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Basis { Monomial, ChebyshevT };

/// Dense polynomial over the complex field. coeffs[k] multiplies the basis
/// element of degree k (x^k or T_k). Trailing coefficients below
/// 2^(-precision/2) relative to the largest one are trimmed on normalize().
class Polynomial {
 public:
  Polynomial() : basis_(Basis::Monomial), prec_(default_precision()) {}
  explicit Polynomial(Prec bits) : basis_(Basis::Monomial), prec_(bits) {}
  Polynomial(std::vector<BigComplex> coeffs, Basis basis = Basis::Monomial);
  Polynomial(std::vector<BigComplex> coeffs, Basis basis, Prec bits);

  /// Real-coefficient convenience constructor (monomial basis).
  static Polynomial from_real(const std::vector<BigReal>& coeffs,
                              Basis basis = Basis::Monomial);
  static Polynomial from_doubles(const std::vector<double>& coeffs,
                                 Prec bits = default_precision(),
                                 Basis basis = Basis::Monomial);
  static Polynomial zero(Prec bits) { return Polynomial(bits); }
  static Polynomial one(Prec bits);
  /// The monomial x (monic linear, c0 = 0).
  static Polynomial variable(Prec bits);

  Basis basis() const { return basis_; }
  Prec precision_bits() const { return prec_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Largest index with a non-negligible coefficient; -1 for the zero poly.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigComplex>& coeffs() const { return coeffs_; }
  const BigComplex& coeff(size_t k) const;
  BigReal coeff_inf_norm() const;
  /// Largest |imaginary part| over all coefficients.
  BigReal imag_inf_norm() const;
  bool is_real(const BigReal& tol) const;
  Polynomial with_precision(Prec bits) const;
  /// Drop trailing coefficients below the relative drop tolerance.
  void normalize();
  /// Drop tolerance actually used: 2^(-prec/2) * ||coeffs||_inf.
  BigReal drop_tolerance() const;

  BigComplex eval(const BigComplex& z) const;
  BigReal eval_real(const BigReal& x) const;

  Polynomial derivative(unsigned m = 1) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const BigComplex& s);
  friend Polynomial operator*(const Polynomial& a, const BigReal& s);
  Polynomial operator-() const;
  Polynomial pow(unsigned n) const;

  std::string str() const;

 private:
  std::vector<BigComplex> coeffs_;
  Basis basis_;
  Prec prec_;
};

/// Rising factorial (z)_k = z(z+1)...(z+k-1); (z)_0 = 1.
BigComplex pochhammer(const BigComplex& z, unsigned k);
BigReal pochhammer(const BigReal& z, unsigned k);
/// (x + shift)_k as a polynomial in x (monomial basis, monic of degree k).
Polynomial pochhammer_poly(const BigReal& shift, unsigned k, Prec bits);

/// m-fold derivative in the monomial basis (Chebyshev input is converted
/// first). m > degree yields the zero polynomial.
Polynomial differentiate(const Polynomial& p, unsigned m = 1);

/// Basis changes between monomial and Chebyshev-T coefficients. Inputs must
/// be real on [-1,1] (imaginary parts within the drop tolerance).
Polynomial to_chebyshev(const Polynomial& p);
Polynomial from_chebyshev(const Polynomial& p);

/// Newton interpolation through (x_i, y_i); returns the monomial-basis
/// polynomial of degree <= n-1. Nodes must be pairwise distinct.
Polynomial interpolate(const std::vector<BigReal>& x, const std::vector<BigReal>& y);

/// Exact binomial coefficient as a BigReal (integer-valued).
BigReal binomial(unsigned n, unsigned k, Prec bits);

/// Euclidean division a = q*b + r with deg r < deg b (monomial basis).
struct DivMod {
  Polynomial quotient, remainder;
};
DivMod poly_divmod(const Polynomial& a, const Polynomial& b);

}  // namespace polylab
