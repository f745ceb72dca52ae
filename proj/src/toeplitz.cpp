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

#include "polylab/toeplitz.hpp"

#include <algorithm>
#include <cmath>

namespace polylab::toeplitz {

namespace {

Prec seq_precision(const std::vector<BigReal>& f) {
  Prec p = kDefaultPrecision;
  for (const auto& v : f) p = std::max(p, v.precision_bits());
  return p;
}

}  // namespace

CoefficientSequence::CoefficientSequence(std::vector<BigReal> f)
    : f_(std::move(f)), bits_(seq_precision(f_)) {
  if (f_.size() < 2) throw DegenerateInput("coefficient sequence needs n >= 1");
}

CoefficientSequence CoefficientSequence::binomial_row(unsigned n, Prec bits) {
  std::vector<BigReal> f;
  f.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) f.push_back(binomial(n, k, bits));
  return CoefficientSequence(std::move(f));
}

Polynomial CoefficientSequence::generator() const {
  std::vector<BigComplex> c;
  c.reserve(f_.size());
  for (const auto& v : f_) c.emplace_back(v);
  return Polynomial(std::move(c), Basis::Monomial, bits_);
}

bool CoefficientSequence::has_real_negative_zeros() const {
  if (real_neg_) return *real_neg_;
  Polynomial g = generator();
  bool ok;
  if (g.degree() < 1) {
    ok = true;  // no zeros at all
  } else {
    RootSet rs = find_roots_adaptive(g);
    ok = classify_zero_locus(rs, rs.tolerance_used).verdict == Verdict::AllRealNegative;
  }
  real_neg_ = ok;
  return ok;
}

bool CoefficientSequence::is_polya_frequency_of_order(unsigned d) const {
  unsigned nn = n();
  if (nn > 12) throw TooLarge("Polya-frequency check supported only for n <= 12");
  if (d == 0) return true;
  std::vector<double> f(f_.size());
  for (size_t i = 0; i < f_.size(); ++i) f[i] = f_[i].to_double();
  double scale = 0;
  for (double v : f) scale = std::max(scale, std::fabs(v));
  if (scale == 0) return true;
  const double neg_tol = -1e-9;
  auto entry = [&](long i, long j) -> double {
    long k = j - i;
    return (k >= 0 && k <= static_cast<long>(nn)) ? f[static_cast<size_t>(k)] : 0.0;
  };

  // Minors whose consecutive row gaps exceed n decompose into block products,
  // so after translating the first row to 0 it suffices to enumerate rows
  // with gaps in [1, n] and columns in [0, rows.back() + n] with the same gap
  // bound. Orders are checked from 1 up to d.
  for (unsigned k = 1; k <= d; ++k) {
    std::vector<long> rows(k), cols(k);
    double ops_estimate = std::pow(static_cast<double>(nn), 2.0 * (k - 1)) *
                          (nn + 1.0) * k * k * k;
    if (ops_estimate > 5e9) throw TooLarge("Polya-frequency check: order too large");
    // iterate row gap vectors g_1..g_{k-1} in [1, n]
    std::vector<long> gaps(k > 1 ? k - 1 : 0, 1);
    bool rows_done = false;
    while (!rows_done) {
      rows[0] = 0;
      for (unsigned i = 1; i < k; ++i) rows[i] = rows[i - 1] + gaps[i - 1];
      long col_hi = rows[k - 1] + static_cast<long>(nn);
      // iterate column sets: j_1 in [0, n], gaps in [1, n], j_k <= col_hi
      for (long j1 = 0; j1 <= static_cast<long>(nn); ++j1) {
        std::vector<long> cgaps(k > 1 ? k - 1 : 0, 1);
        bool cols_done = false;
        while (!cols_done) {
          cols[0] = j1;
          bool in_range = true;
          for (unsigned i = 1; i < k; ++i) {
            cols[i] = cols[i - 1] + cgaps[i - 1];
            if (cols[i] > col_hi) in_range = false;
          }
          if (in_range) {
            // k x k determinant (k <= 5) by Gaussian elimination
            double m[5][5];
            for (unsigned a = 0; a < k; ++a)
              for (unsigned b = 0; b < k; ++b) m[a][b] = entry(rows[a], cols[b]);
            double det = 1.0;
            double colscale = 1.0;
            for (unsigned a = 0; a < k; ++a) {
              double cmax = 0;
              for (unsigned b = 0; b < k; ++b) cmax = std::max(cmax, std::fabs(m[a][b]));
              colscale *= std::max(cmax, 1.0);
            }
            for (unsigned c = 0; c < k; ++c) {
              unsigned piv = c;
              for (unsigned a = c + 1; a < k; ++a)
                if (std::fabs(m[a][c]) > std::fabs(m[piv][c])) piv = a;
              if (std::fabs(m[piv][c]) == 0.0) {
                det = 0.0;
                break;
              }
              if (piv != c) {
                for (unsigned b = 0; b < k; ++b) std::swap(m[piv][b], m[c][b]);
                det = -det;
              }
              det *= m[c][c];
              for (unsigned a = c + 1; a < k; ++a) {
                double fac = m[a][c] / m[c][c];
                for (unsigned b = c; b < k; ++b) m[a][b] -= fac * m[c][b];
              }
            }
            if (det < neg_tol * colscale) return false;
          }
          // advance column gaps (odometer)
          cols_done = true;
          for (size_t i = 0; i < cgaps.size(); ++i) {
            if (cgaps[i] < static_cast<long>(nn)) {
              ++cgaps[i];
              for (size_t q = 0; q < i; ++q) cgaps[q] = 1;
              cols_done = false;
              break;
            }
          }
          if (cgaps.empty()) cols_done = true;
        }
      }
      // advance row gaps
      rows_done = true;
      for (size_t i = 0; i < gaps.size(); ++i) {
        if (gaps[i] < static_cast<long>(nn)) {
          ++gaps[i];
          for (size_t q = 0; q < i; ++q) gaps[q] = 1;
          rows_done = false;
          break;
        }
      }
      if (gaps.empty()) rows_done = true;
    }
  }
  return true;
}

Polynomial toeplitz_poly(const CoefficientSequence& fs) {
  unsigned n = fs.n();
  if (n < 2) throw DegenerateInput("toeplitz_poly: n >= 2 required");
  Prec bits = fs.precision_bits();
  const auto& f = fs.f();
  Polynomial acc = Polynomial::zero(bits);
  for (unsigned k = 0; k <= n; ++k) {
    BigReal coef = f[k] * f[n - k] * binomial(n, k, bits);
    if (coef.is_zero()) continue;
    Polynomial t1 = pochhammer_poly(BigReal(0.0, bits), k, bits) *
                    pochhammer_poly(BigReal(0.0, bits), n - k, bits);
    Polynomial t2 = pochhammer_poly(BigReal(1.0, bits), k, bits) *
                    pochhammer_poly(BigReal(-1.0, bits), n - k, bits);
    acc = acc + (t1 - t2) * coef;
  }
  if (acc.degree() != static_cast<long>(n) - 2)
    throw DegreeMismatch("toeplitz_poly: degree " + std::to_string(acc.degree()) +
                         " != n-2 = " + std::to_string(n - 2));
  return acc;
}

namespace {

// determinant of a matrix of polynomials by cofactor expansion along row 0
Polynomial poly_det_cofactor(const std::vector<std::vector<Polynomial>>& m, Prec bits) {
  size_t r = m.size();
  if (r == 1) return m[0][0];
  Polynomial acc = Polynomial::zero(bits);
  for (size_t j = 0; j < r; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    sub.reserve(r - 1);
    for (size_t i = 1; i < r; ++i) {
      std::vector<Polynomial> row;
      row.reserve(r - 1);
      for (size_t jj = 0; jj < r; ++jj)
        if (jj != j) row.push_back(m[i][jj]);
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * poly_det_cofactor(sub, bits);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// exact quotient a / b for polynomials known to divide (Bareiss pivots);
// the remainder must vanish to the working drop tolerance
Polynomial poly_exact_div(const Polynomial& a, const Polynomial& b) {
  Prec bits = std::max(a.precision_bits(), b.precision_bits());
  if (b.is_zero()) throw DegenerateInput("poly_exact_div: division by zero poly");
  if (a.is_zero()) return Polynomial::zero(bits);
  std::vector<BigComplex> rem(a.coeffs());
  long da = a.degree(), db = b.degree();
  if (da < db) throw DegenerateInput("poly_exact_div: not divisible (degree)");
  std::vector<BigComplex> q(static_cast<size_t>(da - db) + 1, BigComplex(0.0, 0.0, bits));
  const BigComplex& lead = b.coeffs().back();
  for (long k = da - db; k >= 0; --k) {
    BigComplex c = rem[static_cast<size_t>(k + db)] / lead;
    q[static_cast<size_t>(k)] = c;
    for (long j = 0; j <= db; ++j)
      rem[static_cast<size_t>(k + j)] -= c * b.coeffs()[static_cast<size_t>(j)];
  }
  BigReal rem_norm(0.0, bits);
  for (long j = 0; j < db; ++j) rem_norm = max(rem_norm, abs(rem[static_cast<size_t>(j)]));
  BigReal tol = pow2(-static_cast<long>(bits) / 2, bits) *
                max(BigReal(1.0, bits), a.coeff_inf_norm());
  if (rem_norm > tol) throw DegenerateInput("poly_exact_div: nonzero remainder");
  return Polynomial(std::move(q), Basis::Monomial, bits);
}

// Bareiss fraction-free elimination for larger determinants
Polynomial poly_det_bareiss(std::vector<std::vector<Polynomial>> m, Prec bits) {
  size_t r = m.size();
  Polynomial prev = Polynomial::one(bits);
  int sign = 1;
  for (size_t k = 0; k + 1 < r; ++k) {
    if (m[k][k].is_zero()) {
      size_t piv = k + 1;
      while (piv < r && m[piv][k].is_zero()) ++piv;
      if (piv == r) return Polynomial::zero(bits);
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < r; ++i)
      for (size_t j = k + 1; j < r; ++j)
        m[i][j] = poly_exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  Polynomial det = m[r - 1][r - 1];
  return sign > 0 ? det : -det;
}

}  // namespace

Polynomial toeplitz_poly_r(const CoefficientSequence& fs, unsigned r) {
  unsigned n = fs.n();
  if (r < 2) throw DegenerateInput("toeplitz_poly_r: r >= 2 required");
  if (r > n) throw DegenerateInput("toeplitz_poly_r: r <= n required");
  Prec bits = fs.precision_bits();
  const auto& f = fs.f();

  // composition count C(n + r - 1, r - 1)
  double count = 1;
  for (unsigned i = 1; i < r; ++i)
    count *= static_cast<double>(n + i) / static_cast<double>(i);
  if (count > 1e7) throw TooLarge("toeplitz_poly_r: too many compositions");

  BigReal n_fact(1.0, bits);
  for (unsigned i = 2; i <= n; ++i) n_fact *= static_cast<double>(i);

  // cache (z + shift)_k for shift in [-(r-1), r-1], k in [0, n]
  std::vector<std::vector<Polynomial>> poch(2 * r - 1);
  for (unsigned s = 0; s < 2 * r - 1; ++s) {
    long shift = static_cast<long>(s) - static_cast<long>(r - 1);
    poch[s].reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k)
      poch[s].push_back(pochhammer_poly(BigReal(static_cast<double>(shift), bits), k, bits));
  }

  Polynomial acc = Polynomial::zero(bits);
  // colex enumeration of compositions k_1 + ... + k_r = n, k_i >= 0
  std::vector<unsigned> k(r, 0);
  k[0] = n;
  while (true) {
    BigReal coef = n_fact;
    bool zero = false;
    for (unsigned i = 0; i < r; ++i) {
      BigReal fi = f[k[i]];
      if (fi.is_zero()) {
        zero = true;
        break;
      }
      coef *= fi;
      BigReal kf(1.0, bits);
      for (unsigned q = 2; q <= k[i]; ++q) kf *= static_cast<double>(q);
      coef /= kf;
    }
    if (!zero) {
      std::vector<std::vector<Polynomial>> m(r, std::vector<Polynomial>(r, Polynomial(bits)));
      for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j < r; ++j)
          m[i][j] = poch[static_cast<unsigned>(static_cast<long>(j) - static_cast<long>(i) +
                                               static_cast<long>(r - 1))][k[i]];
      Polynomial det = r <= 4 ? poly_det_cofactor(m, bits) : poly_det_bareiss(m, bits);
      acc = acc + det * coef;
    }
    // next composition in colex order: move one unit from the lowest
    // nonzero prefix position to the next slot
    unsigned i = 0;
    while (i < r && k[i] == 0) ++i;
    if (i == r - 1) break;
    unsigned v = k[i];
    k[i] = 0;
    k[0] = v - 1;
    ++k[i + 1];
  }
  return acc;
}

ConjectureOutcome conjecture_verdict(const CoefficientSequence& f, unsigned r,
                                     const std::string& which) {
  ConjectureOutcome out;
  out.tag = which;
  Polynomial target(f.precision_bits());
  bool want_hurwitz = false;
  if (which == "C1") {
    out.hypothesis_holds = f.has_real_negative_zeros();
    if (out.hypothesis_holds) target = toeplitz_poly(f);
  } else if (which == "C2") {
    out.hypothesis_holds = f.has_real_negative_zeros();
    if (out.hypothesis_holds) target = toeplitz_poly_r(f, r);
  } else if (which == "C3") {
    out.hypothesis_holds = f.is_polya_frequency_of_order(std::max(r, 2u));
    want_hurwitz = true;
    if (out.hypothesis_holds) target = toeplitz_poly_r(f, r);
  } else {
    throw std::invalid_argument("conjecture_verdict: unknown tag " + which);
  }
  if (!out.hypothesis_holds) {
    out.status = ConjectureStatus::NotApplicable;
    out.conclusion = Verdict::Mixed;
    return out;
  }
  if (target.degree() < 1) {
    out.vacuous = true;
    out.status = ConjectureStatus::Supported;
    out.conclusion = want_hurwitz ? Verdict::HurwitzStable : Verdict::AllRealNegative;
    out.detail = "conclusion polynomial has no zeros";
    return out;
  }
  RootSet rs = find_roots_adaptive(target);
  auto cls = classify_zero_locus(rs, rs.tolerance_used);
  out.conclusion = cls.verdict;
  bool ok = want_hurwitz ? (cls.verdict == Verdict::HurwitzStable ||
                            cls.verdict == Verdict::AllRealNegative)
                         : cls.verdict == Verdict::AllRealNegative;
  if (cls.borderline) {
    ok = false;
    out.detail = "borderline classification at tol " + rs.tolerance_used.str(4);
  }
  out.status = ok ? ConjectureStatus::Supported : ConjectureStatus::CounterexampleFound;
  return out;
}

void HypergeometricSpec::validate() const {
  if (a.size() != m.size())
    throw std::invalid_argument("hypergeometric spec: |a| != |m|");
  for (const auto& v : a)
    if (!(v > 0.0)) throw std::invalid_argument("hypergeometric spec: a_i > 0 required");
  for (unsigned v : m)
    if (v < 1) throw std::invalid_argument("hypergeometric spec: m_i >= 1 required");
  if (!(b > 0.0)) throw std::invalid_argument("hypergeometric spec: b > 0 required");
}

Polynomial hypergeometric_numerator(const HypergeometricSpec& spec, unsigned guard_terms) {
  spec.validate();
  Prec out_bits = std::max(spec.b.precision_bits(), kDefaultPrecision);
  Prec bits = 2 * out_bits;  // headroom so the residue test sees cancellation, not roundoff
  unsigned m = spec.total_m();
  unsigned top = m + guard_terms;

  // hypergeometric series coefficients h_j of (d+1)F_d(a+m, b; a; x)
  std::vector<BigReal> h(top + 1, BigReal(0.0, bits));
  h[0] = BigReal(1.0, bits);
  for (unsigned j = 0; j < top; ++j) {
    BigReal jj(static_cast<double>(j), bits);
    BigReal ratio = (spec.b + jj) / (jj + 1.0);
    for (size_t i = 0; i < spec.a.size(); ++i) {
      BigReal ai = spec.a[i].with_precision(bits);
      ratio *= (ai + static_cast<double>(spec.m[i]) + jj) / (ai + jj);
    }
    h[j + 1] = h[j] * ratio;
  }
  // (1-x)^(m+b) = sum_i (-(m+b))_i x^i / i!
  BigReal beta = spec.b.with_precision(bits) + static_cast<double>(m);
  std::vector<BigReal> bin(top + 1, BigReal(0.0, bits));
  bin[0] = BigReal(1.0, bits);
  for (unsigned i = 0; i < top; ++i) {
    BigReal ii(static_cast<double>(i), bits);
    bin[i + 1] = bin[i] * (-beta + ii) / (ii + 1.0);
  }
  // Cauchy product
  std::vector<BigReal> acoef(top + 1, BigReal(0.0, bits));
  for (unsigned k = 0; k <= top; ++k)
    for (unsigned i = 0; i <= k; ++i) acoef[k] += bin[i] * h[k - i];

  BigReal head(0.0, bits);
  for (unsigned k = 0; k <= m; ++k) head = max(head, abs(acoef[k]));
  BigReal tail(0.0, bits);
  for (unsigned k = m + 1; k <= top; ++k) tail = max(tail, abs(acoef[k]));
  BigReal tol = pow(BigReal(10.0, bits), -static_cast<long>(out_bits) / 4) *
                max(BigReal(1.0, bits), head);
  if (tail > tol)
    throw NonPolynomialResidue("hypergeometric_numerator: residue " + tail.str(4) +
                               " beyond degree " + std::to_string(m));
  std::vector<BigComplex> cc;
  cc.reserve(m + 1);
  for (unsigned k = 0; k <= m; ++k) cc.emplace_back(acoef[k].with_precision(out_bits));
  return Polynomial(std::move(cc), Basis::Monomial, out_bits);
}

Polynomial narayana_polynomial(unsigned d, unsigned m, Prec bits) {
  if (d < 1 || m < 1)
    throw std::invalid_argument("narayana_polynomial: d >= 1, m >= 1 required");
  HypergeometricSpec spec;
  spec.b = BigReal(static_cast<double>(m + 1), bits);
  for (unsigned i = 2; i <= d; ++i) {
    spec.a.push_back(BigReal(static_cast<double>(i), bits));
    spec.m.push_back(m);
  }
  return hypergeometric_numerator(spec);
}

std::vector<NarayanaScanRow> narayana_scan(unsigned d, unsigned m_max, Prec bits) {
  std::vector<NarayanaScanRow> rows;
  for (unsigned m = 1; m <= m_max; ++m) {
    Polynomial nm = narayana_polynomial(d, m, bits);
    NarayanaScanRow row;
    row.m = m;
    row.degree = nm.degree();
    if (nm.degree() < 1) {
      row.verdict = Verdict::AllRealNegative;
      row.borderline = false;
      row.as_expected = true;  // vacuous
    } else {
      RootSet rs = find_roots_adaptive(nm);
      auto cls = classify_zero_locus(rs, rs.tolerance_used);
      row.verdict = cls.verdict;
      row.borderline = cls.borderline;
      row.as_expected = !cls.borderline && cls.verdict == Verdict::AllRealNegative;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace polylab::toeplitz
