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

#include "polylab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace polylab {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::AllRealNegative: return "AllRealNegative";
    case Verdict::AllReal: return "AllReal";
    case Verdict::HurwitzStable: return "HurwitzStable";
    case Verdict::Mixed: return "Mixed";
  }
  return "?";
}

std::vector<BigComplex> RootSet::flattened() const {
  std::vector<BigComplex> out;
  for (const auto& r : roots)
    for (unsigned i = 0; i < r.multiplicity; ++i) out.push_back(r.location);
  return out;
}

ClassifyResult classify_zero_locus(const std::vector<Root>& roots, const BigReal& tol) {
  bool all_real = true, all_neg = true, border = false;
  BigReal two_tol = tol * 2.0;
  for (const auto& r : roots) {
    BigReal are = abs(r.location.re());
    BigReal aim = abs(r.location.im());
    if (are <= tol) border = true;                    // Re sign undecidable
    if (aim > tol && aim <= two_tol) border = true;   // realness band
    if (aim > tol) all_real = false;
    if (!(r.location.re() < -tol)) all_neg = false;
  }
  if (border) return {Verdict::Mixed, true};
  if (all_real && all_neg) return {Verdict::AllRealNegative, false};
  if (all_neg) return {Verdict::HurwitzStable, false};
  if (all_real) return {Verdict::AllReal, false};
  return {Verdict::Mixed, false};
}

ClassifyResult classify_zero_locus(const RootSet& rs, const BigReal& tol) {
  return classify_zero_locus(rs.roots, tol);
}

BigReal default_certify_tolerance(Prec bits) {
  // 1e-20 at 128 bits, scaling with the precision
  long e = -20L * static_cast<long>(bits) / 128L;
  return pow(BigReal(10.0, bits), e);
}

namespace {

struct Horner {
  BigComplex p, dp;
};

Horner eval_with_derivative(const std::vector<BigComplex>& c, const BigComplex& z) {
  Prec bits = z.precision_bits();
  BigComplex p = c.back().with_precision(bits);
  BigComplex dp(0.0, 0.0, bits);
  for (size_t k = c.size(); k-- > 1;) {
    dp = dp * z + p;
    p = p * z + c[k - 1];
  }
  return {p, dp};
}

BigReal fujiwara_radius(const std::vector<BigComplex>& c, Prec bits) {
  size_t n = c.size() - 1;
  BigReal an = abs(c[n]);
  BigReal best(0.0, bits);
  for (size_t k = 1; k <= n; ++k) {
    BigReal ratio = abs(c[n - k]) / an;
    if (k == n) ratio = ratio * 0.5;
    if (ratio.is_zero()) continue;
    BigReal root_k = pow(ratio, BigReal(1.0, bits) / BigReal(static_cast<double>(k), bits));
    best = max(best, root_k);
  }
  BigReal r = best * 2.0;
  if (r.is_zero()) r = BigReal(1.0, bits);
  return r;
}

}  // namespace

RootSet find_roots(const Polynomial& p) {
  return find_roots(p, default_certify_tolerance(p.precision_bits()));
}

RootSet find_roots(const Polynomial& poly_in, const BigReal& certify_tolerance) {
  Polynomial p = poly_in.basis() == Basis::ChebyshevT ? from_chebyshev(poly_in) : poly_in;
  if (p.is_zero()) throw DegenerateInput("find_roots: zero polynomial");
  long deg = p.degree();
  if (deg < 1) throw DegenerateInput("find_roots: degree must be >= 1");
  Prec bits = p.precision_bits();

  // scale coefficients to unit inf-norm; roots are unchanged
  BigReal scale = p.coeff_inf_norm();
  std::vector<BigComplex> c;
  c.reserve(p.coeffs().size());
  for (const auto& z : p.coeffs()) c.push_back((z / scale).with_precision(bits));

  size_t n = static_cast<size_t>(deg);
  BigReal radius = fujiwara_radius(c, bits);
  BigReal two_pi = pi(bits) * 2.0;

  std::vector<BigComplex> z(n);
  for (size_t i = 0; i < n; ++i) {
    BigReal theta = two_pi * (BigReal(static_cast<double>(i), bits) +
                              BigReal(0.3618033988749895, bits)) /
                    BigReal(static_cast<double>(n), bits);
    z[i] = BigComplex::polar(radius, theta);
  }

  const BigReal eps = pow2(-static_cast<long>(bits) + 4, bits);
  const long max_iter = 120 + 4 * deg;
  bool converged = false;
  std::vector<bool> done(n, false);
  for (long iter = 0; iter < max_iter && !converged; ++iter) {
    converged = true;
    for (size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      Horner h = eval_with_derivative(c, z[i]);
      if (abs(h.p).is_zero()) {
        done[i] = true;
        continue;
      }
      BigComplex newton = h.dp.is_zero() ? BigComplex(0.0, 0.0, bits) : h.p / h.dp;
      BigComplex s(0.0, 0.0, bits);
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        s += BigComplex(1.0, 0.0, bits) / (z[i] - z[j]);
      }
      BigComplex denom = BigComplex(1.0, 0.0, bits) - newton * s;
      BigComplex w = abs(denom) > BigReal(1e-30, bits) ? newton / denom : newton;
      z[i] = z[i] - w;
      BigReal step = abs(w);
      if (step > eps * (BigReal(1.0, bits) + abs(z[i])))
        converged = false;
      else
        done[i] = true;
    }
  }
  if (!converged) {
    // roots may still certify (clusters converge slowly); check below
  }

  // Newton polish (helps simple roots; harmless on clusters)
  for (size_t i = 0; i < n; ++i) {
    for (int it = 0; it < 3; ++it) {
      Horner h = eval_with_derivative(c, z[i]);
      if (h.dp.is_zero() || abs(h.p).is_zero()) break;
      BigComplex step = h.p / h.dp;
      if (abs(step) > BigReal(0.5, bits) * (BigReal(1.0, bits) + abs(z[i]))) break;
      z[i] = z[i] - step;
    }
  }

  // per-root residual and backward-error radius
  std::vector<BigReal> resid(n, BigReal(0.0, bits));
  std::vector<BigReal> err_radius(n, BigReal(0.0, bits));
  BigReal deg_r(static_cast<double>(deg), bits);
  for (size_t i = 0; i < n; ++i) {
    Horner h = eval_with_derivative(c, z[i]);
    resid[i] = abs(h.p);
    err_radius[i] = h.dp.is_zero() ? BigReal(1.0, bits)
                                   : deg_r * abs(h.p) / abs(h.dp);
  }

  // cluster merge: union-find on |z_i - z_j| <= 1e3 (r_i + r_j) + floor
  BigReal floor_rad = pow2(-(static_cast<long>(bits) * 3) / 5, bits);
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      BigReal lim = (err_radius[i] + err_radius[j]) * 1000.0 +
                    floor_rad * (BigReal(1.0, bits) + abs(z[i]));
      if (abs(z[i] - z[j]) <= lim) parent[find(i)] = find(j);
    }

  RootSet rs;
  rs.certify_tolerance = certify_tolerance;
  std::vector<bool> seen(n, false);
  for (size_t i = 0; i < n; ++i) {
    size_t root_of = find(i);
    if (seen[root_of]) continue;
    seen[root_of] = true;
    BigComplex centroid(0.0, 0.0, bits);
    unsigned count = 0;
    for (size_t j = 0; j < n; ++j)
      if (find(j) == root_of) {
        centroid += z[j];
        ++count;
      }
    centroid = centroid / BigReal(static_cast<double>(count), bits);
    if (count > 1) {
      // a root of multiplicity m is a simple root of the (m-1)-th
      // derivative: Newton there recovers full precision
      Polynomial dp = p.derivative(count - 1);
      std::vector<BigComplex> dc(dp.coeffs());
      if (dc.size() >= 2) {
        for (int it = 0; it < 8; ++it) {
          Horner h = eval_with_derivative(dc, centroid);
          if (h.dp.is_zero() || abs(h.p).is_zero()) break;
          BigComplex step = h.p / h.dp;
          if (abs(step) > BigReal(0.25, bits) * (BigReal(1.0, bits) + abs(centroid)))
            break;
          centroid = centroid - step;
        }
      }
    }
    rs.roots.push_back({centroid, count});
  }
  std::sort(rs.roots.begin(), rs.roots.end(), [](const Root& a, const Root& b) {
    if (a.location.re() != b.location.re()) return a.location.re() < b.location.re();
    return a.location.im() < b.location.im();
  });

  BigReal worst(0.0, bits);
  for (const auto& r : rs.roots) {
    // residual against the original (unscaled) polynomial, normalized
    BigComplex val = poly_in.eval(r.location);
    BigReal res = abs(val) / max(BigReal(1.0, bits), poly_in.coeff_inf_norm());
    rs.residuals.push_back(res);
    worst = max(worst, res);
  }
  if (worst > certify_tolerance)
    throw NonConvergence("find_roots: residual " + worst.str(6) +
                         " exceeds certify tolerance at " + std::to_string(bits) +
                         " bits");

  rs.tolerance_used = BigReal(1e-12, bits);
  auto cls = classify_zero_locus(rs.roots, rs.tolerance_used);
  rs.verdict = cls.verdict;
  rs.borderline = cls.borderline;
  return rs;
}

RootSet find_roots_adaptive(const Polynomial& p, int max_doublings) {
  Prec bits = p.precision_bits();
  for (int k = 0;; ++k) {
    try {
      return find_roots(p.with_precision(bits));
    } catch (const NonConvergence&) {
      if (k >= max_doublings) throw;
      bits *= 2;
    }
  }
}

}  // namespace polylab
