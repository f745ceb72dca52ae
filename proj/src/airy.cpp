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

#include "polylab/airy.hpp"

#include <cmath>
#include <vector>

#include "polylab/quadrature.hpp"

namespace polylab {

namespace {

constexpr double kSeriesCut = 10.0;  // Maclaurin below, asymptotics above

void airy_origin(Prec w, BigReal* c1, BigReal* c2) {
  BigReal third = BigReal(1.0, w) / BigReal(3.0, w);
  BigReal two_thirds = BigReal(2.0, w) / BigReal(3.0, w);
  *c1 = pow(BigReal(3.0, w), -two_thirds) / tgamma(two_thirds);
  *c2 = -pow(BigReal(3.0, w), -third) / tgamma(third);
}

// Ai = c1 f + c2 g with
//   f  = sum_k (1/3)_k 3^k x^{3k} / (3k)!
//   g  = sum_k (2/3)_k 3^k x^{3k+1} / (3k+1)!
// and the termwise-differentiated companions for Ai'.
AiryPair airy_series(const BigReal& x, Prec w) {
  BigReal c1(w), c2(w);
  airy_origin(w, &c1, &c2);
  BigReal x3 = x * x * x;
  BigReal tiny = pow2(-static_cast<long>(w) - 8, w);
  BigReal tf(1.0, w);
  BigReal sg = x.with_precision(w);
  BigReal fsum = tf, gsum = sg;
  BigReal fpsum(0.0, w), gpsum(1.0, w);
  for (long k = 0; k < 100000; ++k) {
    tf = tf * x3 / BigReal((3.0 * k + 2.0) * (3.0 * k + 3.0), w);
    sg = sg * x3 / BigReal((3.0 * k + 3.0) * (3.0 * k + 4.0), w);
    fsum += tf;
    gsum += sg;
    if (!x.is_zero()) {
      BigReal kk1(3.0 * (static_cast<double>(k) + 1.0), w);
      fpsum += tf * kk1 / x;
      gpsum += sg * (kk1 + 1.0) / x;
    }
    if (abs(tf) < tiny && abs(sg) < tiny) break;
  }
  return {c1 * fsum + c2 * gsum, c1 * fpsum + c2 * gpsum};
}

// coefficient streams u_k zeta^-k and v_k zeta^-k of the large-|x|
// expansions, cut at the smallest term
struct AsymptoticTerms {
  std::vector<BigReal> u_terms, v_terms;
};

AsymptoticTerms asymptotic_terms(const BigReal& zeta, Prec w) {
  AsymptoticTerms t;
  BigReal u(1.0, w), zpow(1.0, w);
  BigReal inv_zeta = BigReal(1.0, w) / zeta;
  BigReal tiny = pow2(-static_cast<long>(w) - 8, w);
  t.u_terms.push_back(u);
  t.v_terms.push_back(BigReal(1.0, w));  // v_0 = 1
  for (long k = 1; k < 2000; ++k) {
    u = u * BigReal((6.0 * k - 5.0) * (6.0 * k - 1.0), w) / BigReal(72.0 * k, w);
    zpow *= inv_zeta;
    BigReal term = u * zpow;
    if (abs(term) >= abs(t.u_terms.back())) break;  // entering divergent tail
    t.u_terms.push_back(term);
    t.v_terms.push_back(term * BigReal(6.0 * k + 1.0, w) / BigReal(1.0 - 6.0 * k, w));
    if (abs(term) < tiny) break;
  }
  return t;
}

AiryPair airy_asymptotic_pos(const BigReal& x, Prec w) {
  BigReal zeta = BigReal(2.0, w) / BigReal(3.0, w) * pow(x, BigReal(1.5, w));
  AsymptoticTerms t = asymptotic_terms(zeta, w);
  BigReal su(0.0, w), sv(0.0, w);
  for (size_t k = 0; k < t.u_terms.size(); ++k) {
    if (k % 2 == 0) {
      su += t.u_terms[k];
      sv += t.v_terms[k];
    } else {
      su -= t.u_terms[k];
      sv -= t.v_terms[k];
    }
  }
  BigReal sqrt_pi = sqrt(pi(w));
  BigReal x14 = pow(x, BigReal(0.25, w));
  BigReal e = exp(-zeta);
  return {e * su / (BigReal(2.0, w) * sqrt_pi * x14),
          -e * x14 * sv / (BigReal(2.0, w) * sqrt_pi)};
}

AiryPair airy_asymptotic_neg(const BigReal& x, Prec w) {
  BigReal t = -x;
  BigReal zeta = BigReal(2.0, w) / BigReal(3.0, w) * pow(t, BigReal(1.5, w));
  AsymptoticTerms at = asymptotic_terms(zeta, w);
  BigReal pu(0.0, w), qu(0.0, w), pv(0.0, w), qv(0.0, w);
  for (size_t k = 0; 2 * k < at.u_terms.size(); ++k) {
    BigReal sgn((k % 2 == 0) ? 1.0 : -1.0, w);
    pu += sgn * at.u_terms[2 * k];
    pv += sgn * at.v_terms[2 * k];
    if (2 * k + 1 < at.u_terms.size()) {
      qu += sgn * at.u_terms[2 * k + 1];
      qv += sgn * at.v_terms[2 * k + 1];
    }
  }
  BigReal sqrt_pi = sqrt(pi(w));
  BigReal t14 = pow(t, BigReal(0.25, w));
  BigReal phase = zeta - pi(w) / BigReal(4.0, w);
  BigReal cph = cos(phase), sph = sin(phase);
  return {(cph * pu + sph * qu) / (sqrt_pi * t14),
          t14 * (sph * pv - cph * qv) / sqrt_pi};
}

AiryPair airy_eval(const BigReal& x) {
  double xd = x.to_double();
  if (std::fabs(xd) > 200.0) throw RangeError("airy: |x| <= 200 required");
  Prec bits = x.precision_bits();
  // the Maclaurin sums cancel down from ~exp(2 zeta); add matching guard bits
  long guard = 80 + static_cast<long>(2.0 * std::pow(std::fabs(xd), 1.5));
  Prec w = bits + guard;
  AiryPair r;
  if (std::fabs(xd) <= kSeriesCut) {
    r = airy_series(x.with_precision(w), w);
  } else if (xd > 0) {
    r = airy_asymptotic_pos(x.with_precision(w), w);
  } else {
    r = airy_asymptotic_neg(x.with_precision(w), w);
  }
  return {r.ai.with_precision(bits), r.ai_prime.with_precision(bits)};
}

}  // namespace

BigReal airy_ai(const BigReal& x) { return airy_eval(x).ai; }
BigReal airy_ai_prime(const BigReal& x) { return airy_eval(x).ai_prime; }
AiryPair airy_both(const BigReal& x) { return airy_eval(x); }

BigReal airy_kernel(const BigReal& x, const BigReal& y) {
  Prec bits = std::max(x.precision_bits(), y.precision_bits());
  BigReal diff = x - y;
  BigReal sep = pow2(-static_cast<long>(bits) / 3, bits) *
                max(BigReal(1.0, bits), max(abs(x), abs(y)));
  if (abs(diff) <= sep) {
    BigReal mid = (x + y) * 0.5;
    AiryPair a = airy_both(mid);
    return a.ai_prime * a.ai_prime - mid * a.ai * a.ai;
  }
  AiryPair ax = airy_both(x);
  AiryPair ay = airy_both(y);
  return (ax.ai * ay.ai_prime - ax.ai_prime * ay.ai) / diff;
}

BigReal airy_kernel_integral(const BigReal& x, const BigReal& y, int target_digits) {
  Prec bits = std::max(x.precision_bits(), y.precision_bits());
  double lo = std::min(x.to_double(), y.to_double());
  // T such that Ai(min(x,y)+T)^2 < 10^-(digits+6)
  double need = (static_cast<double>(target_digits) + 6.0) * std::log(10.0);
  double edge = std::pow(0.75 * need, 2.0 / 3.0) + 2.0;
  double T = std::max(4.0, edge - lo);
  BigReal total(0.0, bits);
  const double panel = 2.0;
  size_t panels = static_cast<size_t>(std::ceil(T / panel));
  for (size_t p = 0; p < panels; ++p) {
    BigReal a(panel * static_cast<double>(p), bits);
    BigReal b(std::min(panel * static_cast<double>(p + 1), T), bits);
    QuadRule q = gauss_legendre_mapped(32, a, b);
    for (size_t i = 0; i < q.nodes.size(); ++i)
      total += q.weights[i] * airy_ai(x + q.nodes[i]) * airy_ai(y + q.nodes[i]);
  }
  return total;
}

}  // namespace polylab
