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

#include <cmath>
#include <random>

#include "doctest.h"
#include "polylab/shadow.hpp"

using namespace polylab;
using namespace polylab::shadow;

namespace {
double d(const BigReal& x) { return x.to_double(); }

Polynomial rand_cubic(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  // monic cubic with three prescribed random roots (keeps hulls tame)
  Polynomial p = Polynomial::one(128);
  for (int i = 0; i < 3; ++i) {
    BigComplex root(u(rng), u(rng), 128);
    Polynomial lin({-root, BigComplex(1.0, 0.0, 128)}, Basis::Monomial, 128);
    p = p * lin;
  }
  return p;
}

double hausdorff(const std::vector<BigComplex>& a, const std::vector<BigComplex>& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return 1e300;
  double worst = 0.0;
  auto one_way = [&](const std::vector<BigComplex>& s, const std::vector<BigComplex>& t) {
    for (const auto& x : s) {
      double best = 1e300;
      for (const auto& y : t) best = std::min(best, abs(x - y).to_double());
      worst = std::max(worst, best);
    }
  };
  one_way(a, b);
  one_way(b, a);
  return worst;
}

}  // namespace

TEST_CASE("q_poly: powers, derivatives, top-degree constant") {
  Polynomial p = Polynomial::from_doubles({-1, 0, 1}, 128);  // z^2 - 1
  Polynomial q11 = q_poly(p, 1, 1);
  CHECK(q11.degree() == 1);
  CHECK(d(q11.coeff(1).re()) == doctest::Approx(2.0));

  Polynomial q20 = q_poly(p, 2, 0);  // z^4 - 2z^2 + 1
  CHECK(q20.degree() == 4);
  CHECK(d(q20.coeff(0).re()) == doctest::Approx(1.0));
  CHECK(d(q20.coeff(2).re()) == doctest::Approx(-2.0));
  CHECK(d(q20.coeff(4).re()) == doctest::Approx(1.0));

  // m = n deg(P): constant (n d)! times leading^n
  Polynomial q24 = q_poly(p, 2, 4);
  CHECK(q24.degree() == 0);
  CHECK(d(q24.coeff(0).re()) == doctest::Approx(24.0));

  CHECK_THROWS(q_poly(p, 2, 5));
}

TEST_CASE("factored cofactor recurrence matches q_poly") {
  std::mt19937_64 rng(17);
  Polynomial p = rand_cubic(rng);
  Polynomial dp = differentiate(p, 1);
  unsigned n = 4;
  Polynomial r = Polynomial::one(128);
  for (unsigned m = 0; m < n * 3; ++m) {
    if (m > 0) {
      if (m <= n)
        r = dp * r * BigComplex(static_cast<double>(n - (m - 1)), 0.0, 128) +
            p * differentiate(r, 1);
      else
        r = differentiate(r, 1);
    }
    Polynomial lhs = m <= n ? p.pow(n - m) * r : r;
    Polynomial rhs = q_poly(p, n, m);
    BigReal err(0.0, 128);
    for (long k = 0; k <= rhs.degree(); ++k)
      err = max(err, abs(lhs.coeff(static_cast<size_t>(k)) -
                         rhs.coeff(static_cast<size_t>(k))));
    CHECK(d(err) < 1e-25 * (1.0 + d(rhs.coeff_inf_norm())));
  }
}

TEST_CASE("shadow cloud: containment in the hull of the base roots") {
  Polynomial p = Polynomial::from_doubles({-1, 0, 0, 1}, 128);  // z^3 - 1
  ShadowCloud cloud = build_shadow(p, 6, 120);
  CHECK(cloud.points.size() > 50);
  CHECK(cloud.raster.occupied_count() > 10);
  for (const auto& z : cloud.points)
    CHECK(cloud.hull.signed_distance(z) >= -1e-10);
  // center of mass of the cube roots of unity is the origin
  CHECK(d(abs(cloud.center_of_mass)) < 1e-20);
}

TEST_CASE("real-rooted base keeps the shadow on the real line") {
  for (auto coeffs : {std::vector<double>{-1, 0, 1},      // z^2 - 1
                      std::vector<double>{0, -2, 0, 1}}) {  // z(z^2-2)
    Polynomial p = Polynomial::from_doubles(coeffs, 128);
    ShadowCloud cloud = build_shadow(p, 5, 100);
    for (const auto& z : cloud.points) {
      CHECK(std::fabs(d(z.im())) < 1e-10);
      CHECK(std::fabs(d(z.re())) < 1.5 + 1e-10);
    }
  }
}

TEST_CASE("raster stabilization: occupied cells persist under deeper sweeps") {
  Polynomial p = Polynomial::from_doubles({-1, 0, 0, 1}, 128);
  ShadowCloud small = build_shadow(p, 4, 80);
  ShadowCloud big = build_shadow(p, 9, 80);
  // every occupied cell of the shallow sweep is occupied (up to one-cell
  // dilation) in the deeper one
  size_t misses = 0;
  for (size_t iy = 0; iy < small.raster.height; ++iy)
    for (size_t ix = 0; ix < small.raster.width; ++ix) {
      if (!small.raster.cell(ix, iy)) continue;
      bool found = false;
      for (long dy = -1; dy <= 1 && !found; ++dy)
        for (long dx = -1; dx <= 1 && !found; ++dx) {
          long jx = static_cast<long>(ix) + dx, jy = static_cast<long>(iy) + dy;
          if (jx < 0 || jy < 0 || jx >= static_cast<long>(big.raster.width) ||
              jy >= static_cast<long>(big.raster.height))
            continue;
          if (big.raster.cell(static_cast<size_t>(jx), static_cast<size_t>(jy)))
            found = true;
        }
      if (!found) ++misses;
    }
  CHECK(misses == 0);
}

TEST_CASE("f_alpha critical values: hand-derived case and empty alpha = 0") {
  Polynomial p = Polynomial::from_doubles({-1, 0, 1}, 128);  // z^2 - 1
  auto curves = f_alpha_critical_values(p, {0.0, 1.0});
  CHECK(curves.values[0].empty());  // F_0 = identity
  REQUIRE(curves.values[1].size() == 2);
  std::vector<double> got;
  for (const auto& v : curves.values[1]) {
    CHECK(std::fabs(d(v.im())) < 1e-12);
    got.push_back(d(v.re()));
  }
  std::sort(got.begin(), got.end());
  CHECK(got[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(got[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("resultant route agrees with the direct critical-value route") {
  std::mt19937_64 rng(99);
  std::vector<double> alphas{0.0, 0.3, 0.9, 1.7, 2.6};
  for (int trial = 0; trial < 5; ++trial) {
    Polynomial p = rand_cubic(rng);
    auto direct = f_alpha_critical_values(p, alphas);
    auto viaphi = phi_multiroot_boundary(p, 0, alphas);
    for (size_t ai = 0; ai < alphas.size(); ++ai) {
      if (alphas[ai] == 0.0) {
        CHECK(direct.values[ai].empty());
        CHECK(viaphi.per_alpha[ai].empty());
        continue;
      }
      double hd = hausdorff(direct.values[ai], viaphi.per_alpha[ai]);
      CHECK(hd < 1e-6);
    }
  }
}

TEST_CASE("conjecture checks: hypothesis gate and boundary statistics") {
  // convex position, not regular: zeros {1, i, -1 + 0.3i}
  Prec bits = 128;
  Polynomial p = Polynomial::one(bits);
  for (auto root : {BigComplex(1.0, 0.0, bits), BigComplex(0.0, 1.0, bits),
                    BigComplex(-1.0, 0.3, bits)}) {
    Polynomial lin({-root, BigComplex(1.0, 0.0, bits)}, Basis::Monomial, bits);
    p = p * lin;
  }
  ShadowCloud cloud = build_shadow(p, 8, 100);
  auto curves = f_alpha_critical_values(p, default_alpha_grid(3, 96));
  auto rep = conjecture1_checks(cloud, curves);
  CHECK(rep.roots_in_convex_position);
  CHECK_FALSE(rep.roots_form_regular_polygon);
  CHECK(rep.hypothesis_applies);
  CHECK(rep.critical_point_complement_dist_cells.size() == 2);
  WARN_MESSAGE(rep.max_critical_point_dist_cells <= 2.0,
               "critical points sit ", rep.max_critical_point_dist_cells,
               " cells from the complement");
  CHECK(rep.heuristic_items_flagged);

  // regular polygon: excluded by the hypothesis gate
  Polynomial cube = Polynomial::from_doubles({-1, 0, 0, 1}, bits);
  ShadowCloud ccloud = build_shadow(cube, 5, 80);
  auto ccurves = f_alpha_critical_values(cube, default_alpha_grid(3, 64));
  auto crep = conjecture1_checks(ccloud, ccurves);
  CHECK(crep.roots_form_regular_polygon);
  CHECK_FALSE(crep.hypothesis_applies);
}
