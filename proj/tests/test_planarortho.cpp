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

#include "doctest.h"
#include "polylab/planarortho.hpp"

using namespace polylab;
using namespace polylab::planarortho;

namespace {
double d(const BigReal& x) { return x.to_double(); }

double factorial(unsigned k) {
  double f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}
}  // namespace

TEST_CASE("gaussian moments reproduce pi k! / n^(k+1)") {
  ExternalField v = ExternalField::radial_gauss();
  unsigned n = 6;
  PlanarQuadrature q = planar_quadrature(v, n, 25);
  for (unsigned k : {0u, 2u, 5u}) {
    BigReal acc(0.0, 256);
    for (size_t i = 0; i < q.nodes.size(); ++i)
      acc += q.weighted[i] * pow(norm(q.nodes[i]), static_cast<long>(k));
    BigReal expect = pi(256) * BigReal(factorial(k), 256) /
                     pow(BigReal(static_cast<double>(n), 256), static_cast<long>(k) + 1);
    CHECK(d(abs(acc - expect)) < 1e-20 * d(expect));
  }
  // odd angular moments vanish by symmetry
  BigComplex odd(0.0, 0.0, 256);
  for (size_t i = 0; i < q.nodes.size(); ++i)
    odd += q.weighted[i] * q.nodes[i];
  CHECK(d(abs(odd)) < 1e-40);
}

TEST_CASE("doubling radial nodes leaves the moments fixed") {
  ExternalField v = ExternalField::radial_gauss();
  unsigned n = 4;
  PlanarQuadrature q = planar_quadrature(v, n, 20);
  // the builder already doubled until stable; verify against a direct rebuild
  BigReal acc(0.0, 256);
  for (size_t i = 0; i < q.nodes.size(); ++i)
    acc += q.weighted[i] * pow(norm(q.nodes[i]), static_cast<long>(n));
  BigReal expect = pi(256) * BigReal(factorial(n), 256) /
                   pow(BigReal(static_cast<double>(n), 256), static_cast<long>(n) + 1);
  CHECK(d(abs(acc - expect)) < 1e-20 * d(expect));
}

TEST_CASE("radial field: P_n = z^n with orthogonality residuals at roundoff") {
  ExternalField v = ExternalField::radial_gauss();
  for (unsigned n : {3u, 8u, 12u}) {
    PlanarQuadrature q = planar_quadrature(v, n, 25);
    PlanarOPResult r = monic_op(v, n, q);
    REQUIRE(r.p.degree() == static_cast<long>(n));
    CHECK(d(abs(r.p.coeff(n) - BigComplex(1.0, 0.0, 256))) == 0.0);  // exactly monic
    BigReal off(0.0, 256);
    for (unsigned k = 0; k < n; ++k) off = max(off, abs(r.p.coeff(k)));
    CHECK(d(off) < 1e-20);
    for (const auto& resid : r.residuals) CHECK(d(resid) < 1e-20);
    // all zeros at the origin
    for (const auto& z : r.zeros) CHECK(d(abs(z)) < 1e-6);
  }
}

TEST_CASE("rotation covariance for the radial weight") {
  // multiplying the starting monomial by a phase must not change P_n = z^n
  ExternalField v = ExternalField::radial_gauss();
  unsigned n = 5;
  PlanarQuadrature q = planar_quadrature(v, n, 20);
  PlanarOPResult r = monic_op(v, n, q);
  // rotate all quadrature nodes by a phase; the radial weight is invariant
  PlanarQuadrature rot = q;
  BigComplex phase = BigComplex::polar(BigReal(1.0, 256), BigReal(0.7, 256));
  for (auto& z : rot.nodes) z = z * phase;
  PlanarOPResult r2 = monic_op(v, n, rot);
  BigReal gap(0.0, 256);
  for (unsigned k = 0; k <= n; ++k) gap = max(gap, abs(r.p.coeff(k) - r2.p.coeff(k)));
  CHECK(d(gap) < 1e-20);
}

TEST_CASE("gauss-plus-log field: zeros confined and structured") {
  ExternalField v = ExternalField::gauss_plus_log(BigReal(1.0, 256),
                                                  BigComplex(1.0, 0.0, 256));
  unsigned n = 8;
  PlanarQuadrature q = planar_quadrature(v, n, 20);
  PlanarOPResult r = monic_op(v, n, q);
  REQUIRE(r.zeros.size() == n);
  for (const auto& resid : r.residuals) CHECK(d(resid) < 1e-15);
  for (const auto& z : r.zeros) {
    CHECK(d(abs(z)) < 1.0 + 1e-6);  // strictly inside the unit disk scale
    CHECK(d(abs(z)) < q.r_trunc);   // no spurious far-field zeros
  }
}

TEST_CASE("wasserstein transport distance: sanity") {
  std::vector<BigComplex> a{BigComplex(0.0, 0.0, 64), BigComplex(1.0, 0.0, 64)};
  std::vector<BigComplex> b{BigComplex(0.0, 0.5, 64), BigComplex(1.0, 0.5, 64)};
  CHECK(wasserstein1(a, a) == doctest::Approx(0.0));
  CHECK(wasserstein1(a, b) == doctest::Approx(0.5));  // uniform vertical shift
  // unbalanced sizes still transport
  std::vector<BigComplex> c{BigComplex(0.5, 0.0, 64)};
  CHECK(wasserstein1(a, c) == doctest::Approx(0.5));
}

TEST_CASE("zero measure sequence stabilizes for the log-perturbed field") {
  ExternalField v = ExternalField::gauss_plus_log(BigReal(1.0, 256),
                                                  BigComplex(1.0, 0.0, 256));
  ZeroMeasureSequence seq = zero_measure_sequence(v, {6, 10, 14}, 18);
  REQUIRE(seq.rows.size() == 3);
  CHECK(seq.overlay_approximate);
  CHECK(seq.rows[1].discrepancy_to_prev > 0.0);
  CHECK(seq.rows[2].discrepancy_to_prev > 0.0);
  CHECK(seq.rows[2].discrepancy_to_prev < seq.rows[1].discrepancy_to_prev * 1.5);
}
