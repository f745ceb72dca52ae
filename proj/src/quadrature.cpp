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

#include "polylab/quadrature.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace polylab {

namespace {

// P_n(x) and P_n'(x) by the Legendre three-term recurrence.
void legendre_pair(size_t n, const BigReal& x, BigReal* p, BigReal* dp) {
  Prec bits = x.precision_bits();
  BigReal p0(1.0, bits), p1 = x;
  for (size_t k = 2; k <= n; ++k) {
    BigReal kk(static_cast<double>(k), bits);
    BigReal p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
    p0 = p1;
    p1 = p2;
  }
  *p = p1;
  // P_n' = n (x P_n - P_{n-1}) / (x^2 - 1)
  BigReal nn(static_cast<double>(n), bits);
  *dp = nn * (x * p1 - p0) / (x * x - 1.0);
}

QuadRule make_gauss_legendre(size_t n, Prec bits) {
  QuadRule q;
  q.nodes.resize(n, BigReal(bits));
  q.weights.resize(n, BigReal(bits));
  BigReal tol = pow2(4 - static_cast<long>(bits), bits);
  for (size_t i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-based seed, then Newton
    double seed = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                           (static_cast<double>(n) + 0.5));
    BigReal x(-seed, bits);  // build ascending from the left
    BigReal p(bits), dp(bits);
    for (int it = 0; it < 200; ++it) {
      legendre_pair(n, x, &p, &dp);
      BigReal step = p / dp;
      x -= step;
      if (abs(step) <= tol) break;
    }
    legendre_pair(n, x, &p, &dp);
    BigReal w = BigReal(2.0, bits) / ((BigReal(1.0, bits) - x * x) * dp * dp);
    q.nodes[i] = x;
    q.weights[i] = w;
    q.nodes[n - 1 - i] = -x;
    q.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    BigReal x(0.0, bits), p(bits), dp(bits);
    legendre_pair(n, x, &p, &dp);
    q.nodes[n / 2] = x;
    q.weights[n / 2] = BigReal(2.0, bits) / (dp * dp);
  }
  return q;
}

}  // namespace

const QuadRule& gauss_legendre(size_t n, Prec bits) {
  static std::map<std::pair<size_t, Prec>, QuadRule> cache;
  auto key = std::make_pair(n, bits);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_gauss_legendre(n, bits)).first;
  return it->second;
}

QuadRule gauss_legendre_mapped(size_t n, const BigReal& a, const BigReal& b) {
  Prec bits = std::max(a.precision_bits(), b.precision_bits());
  const QuadRule& base = gauss_legendre(n, bits);
  QuadRule q;
  q.nodes.reserve(n);
  q.weights.reserve(n);
  BigReal mid = (a + b) * 0.5;
  BigReal half = (b - a) * 0.5;
  for (size_t i = 0; i < n; ++i) {
    q.nodes.push_back(mid + half * base.nodes[i]);
    q.weights.push_back(half * base.weights[i]);
  }
  return q;
}

std::vector<BigReal> barycentric_weights(const std::vector<BigReal>& x) {
  size_t n = x.size();
  Prec bits = x.empty() ? default_precision() : x[0].precision_bits();
  std::vector<BigReal> w(n, BigReal(1.0, bits));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (j != i) w[i] *= (x[i] - x[j]);
  for (auto& v : w) v = BigReal(1.0, bits) / v;
  return w;
}

BigReal barycentric_eval(const std::vector<BigReal>& x, const std::vector<BigReal>& w,
                         const std::vector<BigReal>& f, const BigReal& x0) {
  Prec bits = x0.precision_bits();
  BigReal num(0.0, bits), den(0.0, bits);
  for (size_t i = 0; i < x.size(); ++i) {
    BigReal diff = x0 - x[i];
    if (diff.is_zero()) return f[i];
    BigReal t = w[i] / diff;
    num += t * f[i];
    den += t;
  }
  return num / den;
}

Matrix<BigReal> differentiation_matrix(const std::vector<BigReal>& x) {
  size_t n = x.size();
  std::vector<BigReal> w = barycentric_weights(x);
  Prec bits = x.empty() ? default_precision() : x[0].precision_bits();
  Matrix<BigReal> d(n, n, BigReal(0.0, bits));
  for (size_t i = 0; i < n; ++i) {
    BigReal row_sum(0.0, bits);
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      d(i, j) = (w[j] / w[i]) / (x[i] - x[j]);
      row_sum += d(i, j);
    }
    d(i, i) = -row_sum;  // rows of D annihilate constants
  }
  return d;
}

}  // namespace polylab
