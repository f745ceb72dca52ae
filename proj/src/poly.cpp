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

#include "polylab/poly.hpp"

#include <sstream>

namespace polylab {

namespace {

Prec max_prec(const std::vector<BigComplex>& c, Prec floor_bits) {
  Prec p = floor_bits;
  for (const auto& z : c) p = std::max(p, z.precision_bits());
  return p;
}

}  // namespace

Polynomial::Polynomial(std::vector<BigComplex> coeffs, Basis basis)
    : coeffs_(std::move(coeffs)), basis_(basis), prec_(max_prec(coeffs_, kMinPrecision)) {
  normalize();
}

Polynomial::Polynomial(std::vector<BigComplex> coeffs, Basis basis, Prec bits)
    : coeffs_(std::move(coeffs)), basis_(basis), prec_(bits) {
  for (auto& z : coeffs_)
    if (z.precision_bits() != prec_) z = z.with_precision(prec_);
  normalize();
}

Polynomial Polynomial::from_real(const std::vector<BigReal>& coeffs, Basis basis) {
  std::vector<BigComplex> c;
  c.reserve(coeffs.size());
  for (const auto& x : coeffs) c.emplace_back(x);
  return Polynomial(std::move(c), basis);
}

Polynomial Polynomial::from_doubles(const std::vector<double>& coeffs, Prec bits,
                                    Basis basis) {
  std::vector<BigComplex> c;
  c.reserve(coeffs.size());
  for (double x : coeffs) c.emplace_back(x, 0.0, bits);
  return Polynomial(std::move(c), basis, bits);
}

Polynomial Polynomial::one(Prec bits) {
  return Polynomial({BigComplex(1.0, 0.0, bits)}, Basis::Monomial, bits);
}

Polynomial Polynomial::variable(Prec bits) {
  return Polynomial({BigComplex(0.0, 0.0, bits), BigComplex(1.0, 0.0, bits)},
                    Basis::Monomial, bits);
}

const BigComplex& Polynomial::coeff(size_t k) const {
  static const BigComplex kZero(0.0, 0.0, kMinPrecision);
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

BigReal Polynomial::coeff_inf_norm() const {
  BigReal m(0.0, prec_);
  for (const auto& z : coeffs_) m = max(m, abs(z));
  return m;
}

BigReal Polynomial::imag_inf_norm() const {
  BigReal m(0.0, prec_);
  for (const auto& z : coeffs_) m = max(m, abs(z.im()));
  return m;
}

bool Polynomial::is_real(const BigReal& tol) const { return imag_inf_norm() <= tol; }

BigReal Polynomial::drop_tolerance() const {
  return pow2(-static_cast<long>(prec_ / 2), prec_) * coeff_inf_norm();
}

void Polynomial::normalize() {
  if (coeffs_.empty()) return;
  BigReal tol = drop_tolerance();
  while (!coeffs_.empty() && abs(coeffs_.back()) <= tol) coeffs_.pop_back();
}

Polynomial Polynomial::with_precision(Prec bits) const {
  std::vector<BigComplex> c;
  c.reserve(coeffs_.size());
  for (const auto& z : coeffs_) c.push_back(z.with_precision(bits));
  return Polynomial(std::move(c), basis_, bits);
}

BigComplex Polynomial::eval(const BigComplex& z) const {
  Prec p = std::max(prec_, z.precision_bits());
  if (coeffs_.empty()) return BigComplex(0.0, 0.0, p);
  if (basis_ == Basis::Monomial) {
    BigComplex acc = coeffs_.back().with_precision(p);
    for (size_t k = coeffs_.size(); k-- > 1;) acc = acc * z + coeffs_[k - 1];
    return acc;
  }
  // Clenshaw for Chebyshev-T
  BigComplex b1(0.0, 0.0, p), b2(0.0, 0.0, p);
  BigComplex two_z = z * BigReal(2.0, p);
  for (size_t k = coeffs_.size(); k-- > 1;) {
    BigComplex b0 = coeffs_[k] + two_z * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs_[0] + z * b1 - b2;
}

BigReal Polynomial::eval_real(const BigReal& x) const {
  return eval(BigComplex(x)).re();
}

Polynomial Polynomial::derivative(unsigned m) const { return differentiate(*this, m); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.basis_ != b.basis_) throw BasisMismatch("polynomial add: mixed bases");
  Prec p = std::max(a.prec_, b.prec_);
  std::vector<BigComplex> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                            BigComplex(0.0, 0.0, p));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.coeffs_.size()) c[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) c[i] += b.coeffs_[i];
  }
  return Polynomial(std::move(c), a.basis_, p);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
  std::vector<BigComplex> c;
  c.reserve(coeffs_.size());
  for (const auto& z : coeffs_) c.push_back(-z);
  return Polynomial(std::move(c), basis_, prec_);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.basis_ != Basis::Monomial || b.basis_ != Basis::Monomial)
    throw BasisMismatch("polynomial multiply: monomial basis required");
  Prec p = std::max(a.prec_, b.prec_);
  if (a.is_zero() || b.is_zero()) return Polynomial(p);
  std::vector<BigComplex> c(a.coeffs_.size() + b.coeffs_.size() - 1,
                            BigComplex(0.0, 0.0, p));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c), Basis::Monomial, p);
}

Polynomial operator*(const Polynomial& a, const BigComplex& s) {
  std::vector<BigComplex> c;
  c.reserve(a.coeffs_.size());
  for (const auto& z : a.coeffs_) c.push_back(z * s);
  return Polynomial(std::move(c), a.basis_, std::max(a.prec_, s.precision_bits()));
}

Polynomial operator*(const Polynomial& a, const BigReal& s) {
  return a * BigComplex(s);
}

Polynomial Polynomial::pow(unsigned n) const {
  if (basis_ != Basis::Monomial) throw BasisMismatch("pow: monomial basis required");
  Polynomial result = Polynomial::one(prec_);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    base = (n >>= 1) ? base * base : base;
  }
  return result;
}

std::string Polynomial::str() const {
  std::ostringstream os;
  os << (basis_ == Basis::Monomial ? "poly[" : "chebpoly[");
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i].re().to_double();
    double im = coeffs_[i].im().to_double();
    if (im != 0.0) os << (im > 0 ? "+" : "") << im << "i";
  }
  os << "]";
  return os.str();
}

BigComplex pochhammer(const BigComplex& z, unsigned k) {
  BigComplex acc(1.0, 0.0, z.precision_bits());
  BigComplex t = z;
  for (unsigned i = 0; i < k; ++i) {
    acc = acc * t;
    t = t + BigComplex(1.0, 0.0, z.precision_bits());
  }
  return acc;
}

BigReal pochhammer(const BigReal& z, unsigned k) {
  BigReal acc(1.0, z.precision_bits());
  BigReal t = z;
  for (unsigned i = 0; i < k; ++i) {
    acc *= t;
    t += 1.0;
  }
  return acc;
}

Polynomial pochhammer_poly(const BigReal& shift, unsigned k, Prec bits) {
  Polynomial acc = Polynomial::one(bits);
  for (unsigned i = 0; i < k; ++i) {
    BigReal c = shift.with_precision(bits) + static_cast<double>(i);
    Polynomial lin({BigComplex(c), BigComplex(1.0, 0.0, bits)}, Basis::Monomial, bits);
    acc = acc * lin;
  }
  return acc;
}

Polynomial differentiate(const Polynomial& p, unsigned m) {
  Polynomial q = p.basis() == Basis::ChebyshevT ? from_chebyshev(p) : p;
  Prec bits = q.precision_bits();
  for (unsigned pass = 0; pass < m; ++pass) {
    if (q.degree() < 1) return Polynomial::zero(bits);
    std::vector<BigComplex> c;
    c.reserve(q.coeffs().size() - 1);
    for (size_t k = 1; k < q.coeffs().size(); ++k)
      c.push_back(q.coeffs()[k] * BigReal(static_cast<double>(k), bits));
    q = Polynomial(std::move(c), Basis::Monomial, bits);
  }
  return q;
}

BigReal binomial(unsigned n, unsigned k, Prec bits) {
  if (k > n) return BigReal(0.0, bits);
  if (k > n - k) k = n - k;
  BigReal acc(1.0, bits);
  for (unsigned i = 1; i <= k; ++i) {
    acc *= BigReal(static_cast<double>(n - k + i), bits);
    acc /= BigReal(static_cast<double>(i), bits);
  }
  return acc;
}

Polynomial to_chebyshev(const Polynomial& p) {
  if (p.basis() != Basis::Monomial)
    throw BasisMismatch("to_chebyshev: monomial input required");
  Prec bits = p.precision_bits();
  BigReal tol = p.drop_tolerance();
  if (!p.is_real(tol)) throw BasisMismatch("to_chebyshev: input not real on [-1,1]");
  if (p.is_zero()) return Polynomial(std::vector<BigComplex>{}, Basis::ChebyshevT, bits);
  size_t n = p.coeffs().size();
  std::vector<BigReal> out(n, BigReal(0.0, bits));
  for (size_t k = 0; k < n; ++k) {
    BigReal ck = p.coeffs()[k].re().with_precision(bits);
    if (ck.is_zero()) continue;
    // x^k = 2^(1-k) * sum_{j = k, k-2, ...} C(k,(k-j)/2) T_j, j = 0 term halved
    BigReal scale = pow2(1 - static_cast<long>(k), bits);
    for (size_t j = k % 2; j <= k; j += 2) {
      BigReal c = binomial(static_cast<unsigned>(k), static_cast<unsigned>((k - j) / 2), bits) * scale;
      if (j == 0) c = c * BigReal(0.5, bits);
      out[j] += ck * c;
    }
  }
  std::vector<BigComplex> cc;
  cc.reserve(out.size());
  for (auto& x : out) cc.emplace_back(x);
  return Polynomial(std::move(cc), Basis::ChebyshevT, bits);
}

Polynomial from_chebyshev(const Polynomial& p) {
  if (p.basis() != Basis::ChebyshevT)
    throw BasisMismatch("from_chebyshev: Chebyshev input required");
  Prec bits = p.precision_bits();
  if (p.is_zero()) return Polynomial(bits);
  size_t n = p.coeffs().size();
  // T_k rows in the monomial basis via T_{k+1} = 2x T_k - T_{k-1}
  std::vector<BigReal> tkm1{BigReal(1.0, bits)};           // T_0
  std::vector<BigReal> tk{BigReal(0.0, bits), BigReal(1.0, bits)};  // T_1
  std::vector<BigReal> acc(n, BigReal(0.0, bits));
  auto add_row = [&](const std::vector<BigReal>& row, const BigReal& c) {
    for (size_t i = 0; i < row.size(); ++i) acc[i] += row[i] * c;
  };
  add_row(tkm1, p.coeffs()[0].re());
  if (n > 1) add_row(tk, p.coeffs()[1].re());
  for (size_t k = 2; k < n; ++k) {
    std::vector<BigReal> next(k + 1, BigReal(0.0, bits));
    for (size_t i = 0; i < tk.size(); ++i) next[i + 1] = tk[i] * BigReal(2.0, bits);
    for (size_t i = 0; i < tkm1.size(); ++i) next[i] -= tkm1[i];
    add_row(next, p.coeffs()[k].re());
    tkm1 = std::move(tk);
    tk = std::move(next);
  }
  std::vector<BigComplex> cc;
  cc.reserve(acc.size());
  for (auto& x : acc) cc.emplace_back(x);
  return Polynomial(std::move(cc), Basis::Monomial, bits);
}

DivMod poly_divmod(const Polynomial& a, const Polynomial& b) {
  if (a.basis() != Basis::Monomial || b.basis() != Basis::Monomial)
    throw BasisMismatch("poly_divmod: monomial basis required");
  if (b.is_zero()) throw DegenerateInput("poly_divmod: division by zero polynomial");
  Prec bits = std::max(a.precision_bits(), b.precision_bits());
  long da = a.degree(), db = b.degree();
  if (da < db) return {Polynomial::zero(bits), a};
  std::vector<BigComplex> rem(a.coeffs());
  for (auto& c : rem) c = c.with_precision(bits);
  std::vector<BigComplex> q(static_cast<size_t>(da - db) + 1, BigComplex(0.0, 0.0, bits));
  const BigComplex lead = b.coeffs().back().with_precision(bits);
  for (long k = da - db; k >= 0; --k) {
    BigComplex c = rem[static_cast<size_t>(k + db)] / lead;
    q[static_cast<size_t>(k)] = c;
    for (long j = 0; j <= db; ++j)
      rem[static_cast<size_t>(k + j)] -= c * b.coeffs()[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(std::max(db, 1L)));
  return {Polynomial(std::move(q), Basis::Monomial, bits),
          Polynomial(std::move(rem), Basis::Monomial, bits)};
}

Polynomial interpolate(const std::vector<BigReal>& x, const std::vector<BigReal>& y) {
  if (x.size() != y.size() || x.empty())
    throw DegenerateInput("interpolate: mismatched or empty nodes");
  size_t n = x.size();
  Prec bits = x[0].precision_bits();
  for (const auto& v : x) bits = std::max(bits, v.precision_bits());
  for (const auto& v : y) bits = std::max(bits, v.precision_bits());
  // Newton divided differences
  std::vector<BigReal> dd(y);
  for (auto& v : dd) v = v.with_precision(bits);
  std::vector<std::vector<BigReal>> table{dd};
  for (size_t level = 1; level < n; ++level) {
    std::vector<BigReal> next;
    next.reserve(n - level);
    for (size_t i = 0; i + level < n; ++i)
      next.push_back((table[level - 1][i + 1] - table[level - 1][i]) /
                     (x[i + level] - x[i]));
    table.push_back(std::move(next));
  }
  // expand Newton form to monomial coefficients
  Polynomial acc = Polynomial::zero(bits);
  Polynomial basis = Polynomial::one(bits);
  for (size_t level = 0; level < n; ++level) {
    acc = acc + basis * BigComplex(table[level][0]);
    if (level + 1 < n) {
      Polynomial lin({BigComplex(-x[level].with_precision(bits)), BigComplex(1.0, 0.0, bits)},
                     Basis::Monomial, bits);
      basis = basis * lin;
    }
  }
  return acc;
}

}  // namespace polylab
