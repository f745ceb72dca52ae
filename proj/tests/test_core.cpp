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
#include "polylab/hull.hpp"
#include "polylab/linalg.hpp"
#include "polylab/poly.hpp"
#include "polylab/quadrature.hpp"
#include "polylab/roots.hpp"

using namespace polylab;

namespace {

double d(const BigReal& x) { return x.to_double(); }

// deterministic generator for property tests
std::mt19937_64 rng_for(uint64_t seed) { return std::mt19937_64(0x9e3779b97f4a7c15ull ^ seed); }

}  // namespace

TEST_CASE("bigfloat: precision promotion and round trip") {
  BigReal a(1.0, 128), b(3.0, 256);
  BigReal c = a / b;
  CHECK(c.precision_bits() == 256);
  // decimal string round trip
  BigReal x("0.12345678901234567890123456789012345e1", 192);
  BigReal y(x.str(), 192);
  CHECK(abs(x - y).to_double() == 0.0);
  // arithmetic sanity
  CHECK(d(sqrt(BigReal(2.0, 128)) * sqrt(BigReal(2.0, 128))) == doctest::Approx(2.0));
  BigComplex z(1.0, 2.0, 128), w(3.0, -1.0, 128);
  BigComplex p = z * w;  // (1+2i)(3-i) = 5+5i
  CHECK(d(p.re()) == doctest::Approx(5.0));
  CHECK(d(p.im()) == doctest::Approx(5.0));
  BigComplex q = p / w;
  CHECK(d(abs(q - z)) == doctest::Approx(0.0));
}

TEST_CASE("pochhammer: empty product, numeric, symbolic") {
  CHECK(d(pochhammer(BigReal(7.0, 128), 0)) == 1.0);          // (z)_0 = 1
  CHECK(d(pochhammer(BigReal(3.0, 128), 2)) == 12.0);         // 3*4
  Polynomial p = pochhammer_poly(BigReal(0.0, 128), 3, 128);  // z(z+1)(z+2)
  REQUIRE(p.degree() == 3);
  CHECK(d(p.coeff(0).re()) == 0.0);
  CHECK(d(p.coeff(1).re()) == 2.0);
  CHECK(d(p.coeff(2).re()) == 3.0);
  CHECK(d(p.coeff(3).re()) == 1.0);
}

TEST_CASE("differentiate: power rule, constants, overshoot") {
  Polynomial x3 = Polynomial::from_doubles({0, 0, 0, 1}, 128);
  Polynomial d1 = differentiate(x3, 1);
  CHECK(d1.degree() == 2);
  CHECK(d(d1.coeff(2).re()) == 3.0);
  Polynomial p = Polynomial::from_doubles({-1, 0, 1}, 128);
  Polynomial d2 = differentiate(p, 2);
  CHECK(d2.degree() == 0);
  CHECK(d(d2.coeff(0).re()) == 2.0);
  CHECK(differentiate(p, 5).is_zero());
}

TEST_CASE("chebyshev basis: x^2, T_3, and a round-trip oracle") {
  Polynomial x2 = Polynomial::from_doubles({0, 0, 1}, 128);
  Polynomial c = to_chebyshev(x2);
  CHECK(d(c.coeff(0).re()) == doctest::Approx(0.5));
  CHECK(d(abs(c.coeff(1))) == doctest::Approx(0.0));
  CHECK(d(c.coeff(2).re()) == doctest::Approx(0.5));

  Polynomial t3 = Polynomial::from_doubles({0, 0, 0, 1}, 128, Basis::ChebyshevT);
  Polynomial m = from_chebyshev(t3);
  CHECK(d(m.coeff(3).re()) == doctest::Approx(4.0));
  CHECK(d(m.coeff(1).re()) == doctest::Approx(-3.0));

  auto rng = rng_for(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> coeffs(11);
  for (auto& v : coeffs) v = u(rng);
  Polynomial p = Polynomial::from_doubles(coeffs, 128);
  Polynomial back = from_chebyshev(to_chebyshev(p));
  BigReal err(0.0, 128);
  for (size_t k = 0; k <= 10; ++k) err = max(err, abs(back.coeff(k) - p.coeff(k)));
  CHECK(d(err) < 1e-25);
}

TEST_CASE("find_roots: factorizable cases with known roots") {
  Polynomial p = Polynomial::from_doubles({-1, 0, 1}, 128);  // z^2 - 1
  RootSet rs = find_roots(p);
  REQUIRE(rs.roots.size() == 2);
  CHECK(rs.verdict == Verdict::AllReal);
  CHECK(d(abs(rs.roots[0].location - BigComplex(-1.0, 0.0, 128))) < 1e-30);
  CHECK(d(abs(rs.roots[1].location - BigComplex(1.0, 0.0, 128))) < 1e-30);

  // (z+1)^3 = z^3 + 3z^2 + 3z + 1
  Polynomial q = Polynomial::from_doubles({1, 3, 3, 1}, 128);
  RootSet rq = find_roots(q);
  REQUIRE(rq.roots.size() == 1);
  CHECK(rq.roots[0].multiplicity == 3);
  CHECK(rq.verdict == Verdict::AllRealNegative);
  CHECK(d(abs(rq.roots[0].location - BigComplex(-1.0, 0.0, 128))) < 1e-10);

  // z^2 + z + 1: roots at Re = -1/2 -> Hurwitz stable
  Polynomial h = Polynomial::from_doubles({1, 1, 1}, 128);
  RootSet rh = find_roots(h);
  REQUIRE(rh.roots.size() == 2);
  CHECK(rh.verdict == Verdict::HurwitzStable);
  for (const auto& r : rh.roots) CHECK(d(r.location.re()) == doctest::Approx(-0.5));

  CHECK_THROWS_AS(find_roots(Polynomial::zero(128)), DegenerateInput);
}

TEST_CASE("classify_zero_locus: definite verdicts and the borderline band") {
  BigReal tol(1e-12, 128);
  auto mk = [](double re, double im) { return Root{BigComplex(re, im, 128), 1}; };
  CHECK(classify_zero_locus({mk(-1, 0), mk(-2, 0)}, tol).verdict ==
        Verdict::AllRealNegative);
  CHECK(classify_zero_locus({mk(-1, 2), mk(-1, -2)}, tol).verdict ==
        Verdict::HurwitzStable);
  CHECK(classify_zero_locus({mk(-1, 0), mk(2, 0)}, tol).verdict == Verdict::AllReal);
  auto border = classify_zero_locus({mk(-1e-20, 0)}, tol);
  CHECK(border.verdict == Verdict::Mixed);
  CHECK(border.borderline);
}

TEST_CASE("classify_zero_locus: tol-doubling never flips between definite verdicts") {
  auto rng = rng_for(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Root> roots;
    int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) roots.push_back({BigComplex(u(rng), u(rng), 128), 1});
    Verdict prev = Verdict::Mixed;
    bool prev_definite = false;
    for (double t = 1e-14; t < 1.0; t *= 2) {
      auto cls = classify_zero_locus(roots, BigReal(t, 128));
      bool definite = !cls.borderline && cls.verdict != Verdict::Mixed;
      if (prev_definite && definite) CHECK(cls.verdict == prev);
      if (definite) {
        prev = cls.verdict;
        prev_definite = true;
      } else {
        prev_definite = false;
      }
    }
  }
}

TEST_CASE("root-coefficient duality on random monic polynomials") {
  auto rng = rng_for(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    size_t deg = 2 + rng() % 14;  // up to 15
    std::vector<BigComplex> c;
    for (size_t i = 0; i < deg; ++i) c.emplace_back(u(rng), u(rng), 128);
    c.emplace_back(1.0, 0.0, 128);
    Polynomial p(c, Basis::Monomial, 128);
    RootSet rs = find_roots(p);
    CHECK(rs.total_multiplicity() == static_cast<unsigned>(p.degree()));
    Polynomial rebuilt = Polynomial::one(128);
    for (const auto& z : rs.flattened()) {
      Polynomial lin({-z, BigComplex(1.0, 0.0, 128)}, Basis::Monomial, 128);
      rebuilt = rebuilt * lin;
    }
    BigReal err(0.0, 128);
    for (long k = 0; k <= p.degree(); ++k)
      err = max(err, abs(rebuilt.coeff(static_cast<size_t>(k)) -
                         p.coeff(static_cast<size_t>(k))));
    CHECK(d(err) < std::pow(10.0, -0.2 * 128));  // 10^-25.6
  }
}

TEST_CASE("gauss-lucas: derivative roots lie in the hull of the roots") {
  auto rng = rng_for(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 6; ++trial) {
    size_t deg = 3 + rng() % 6;
    std::vector<BigComplex> c;
    for (size_t i = 0; i <= deg; ++i) c.emplace_back(u(rng), u(rng), 128);
    Polynomial p(c, Basis::Monomial, 128);
    if (p.degree() < 2) continue;
    RootSet rp = find_roots(p);
    ConvexHull hull = ConvexHull::of(rp.flattened());
    RootSet rd = find_roots(differentiate(p, 1));
    for (const auto& r : rd.roots) CHECK(hull.signed_distance(r.location) >= -1e-12);
  }
}

TEST_CASE("convex hull: triangle, collinear segment, random disk membership") {
  ConvexHull tri = ConvexHull::of(
      std::vector<BigComplex>{BigComplex(0.0, 0.0, 64), BigComplex(1.0, 0.0, 64),
                              BigComplex(0.0, 1.0, 64)});
  CHECK(tri.vertices().size() == 3);
  CHECK(tri.signed_distance(0.25, 0.25) > 0);
  CHECK(tri.signed_distance(2.0, 2.0) < 0);

  ConvexHull seg = ConvexHull::of(
      std::vector<BigComplex>{BigComplex(0.0, 0.0, 64), BigComplex(1.0, 0.0, 64),
                              BigComplex(0.5, 0.0, 64)});
  CHECK(seg.vertices().size() == 2);
  CHECK(seg.signed_distance(0.5, 0.0) == doctest::Approx(0.0));

  auto rng = rng_for(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<BigComplex> pts;
  while (pts.size() < 100) {
    double x = u(rng), y = u(rng);
    if (x * x + y * y <= 1.0) pts.emplace_back(x, y, 64);
  }
  ConvexHull hull = ConvexHull::of(pts);
  for (const auto& z : pts) CHECK(hull.signed_distance(z) >= -1e-15);
}

TEST_CASE("interpolation reproduces a parabola") {
  std::vector<BigReal> x{BigReal(-1.0, 128), BigReal(0.0, 128), BigReal(1.0, 128)};
  std::vector<BigReal> y{BigReal(1.0, 128), BigReal(0.0, 128), BigReal(1.0, 128)};
  Polynomial p = interpolate(x, y);
  CHECK(p.degree() == 2);
  CHECK(d(p.coeff(2).re()) == doctest::Approx(1.0));
  CHECK(d(p.eval_real(BigReal(0.5, 128))) == doctest::Approx(0.25));
}

TEST_CASE("linalg: determinant, solve, cholesky, symmetric eigen (double and BigReal)") {
  Matrix<double> m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 2;
  CHECK(lu_determinant(m) == doctest::Approx(3.0));
  auto x = lu_solve(m, std::vector<double>{3.0, 3.0});
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(1.0));
  auto eig = sym_eigen(m);
  CHECK(eig.values[0] == doctest::Approx(1.0));
  CHECK(eig.values[1] == doctest::Approx(3.0));

  // BigReal version on a 4x4 with known spectrum: tridiagonal (2,-1) has
  // eigenvalues 2 - 2 cos(k pi / 5)
  size_t n = 4;
  Matrix<BigReal> t(n, n, BigReal(0.0, 128));
  for (size_t i = 0; i < n; ++i) {
    t(i, i) = BigReal(2.0, 128);
    if (i + 1 < n) t(i, i + 1) = t(i + 1, i) = BigReal(-1.0, 128);
  }
  auto be = sym_eigen(t);
  for (size_t k = 1; k <= n; ++k) {
    double expect = 2.0 - 2.0 * std::cos(M_PI * static_cast<double>(k) / 5.0);
    CHECK(d(be.values[k - 1]) == doctest::Approx(expect).epsilon(1e-12));
  }
  // eigenvector residual at extended precision
  for (size_t k = 0; k < n; ++k) {
    std::vector<BigReal> v(n, BigReal(0.0, 128));
    for (size_t i = 0; i < n; ++i) v[i] = be.vectors(i, k);
    auto tv = t.apply(v);
    BigReal resid(0.0, 128);
    for (size_t i = 0; i < n; ++i) resid = max(resid, abs(tv[i] - be.values[k] * v[i]));
    CHECK(d(resid) < 1e-30);
  }

  Matrix<double> spd(2, 2);
  spd(0, 0) = 4;
  spd(0, 1) = 2;
  spd(1, 0) = 2;
  spd(1, 1) = 3;
  auto l = cholesky_lower(spd);
  CHECK(l(0, 0) == doctest::Approx(2.0));
  CHECK(l(1, 0) == doctest::Approx(1.0));
  CHECK(l(1, 1) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("simplex projection") {
  auto w = project_to_simplex(std::vector<double>{0.4, 0.3, 0.3});
  CHECK(w[0] == doctest::Approx(0.4));
  auto v = project_to_simplex(std::vector<double>{2.0, 0.0, 0.0});
  CHECK(v[0] == doctest::Approx(1.0));
  CHECK(v[1] == doctest::Approx(0.0));
  auto z = project_to_simplex(std::vector<double>{-1.0, -1.0});
  CHECK(z[0] == doctest::Approx(0.5));
}

TEST_CASE("gauss-legendre: exactness and extended-precision accuracy") {
  const QuadRule& q = gauss_legendre(12, 128);
  BigReal s0(0.0, 128), s2(0.0, 128), s22(0.0, 128);
  for (size_t i = 0; i < q.nodes.size(); ++i) {
    s0 += q.weights[i];
    s2 += q.weights[i] * q.nodes[i] * q.nodes[i];
    s22 += q.weights[i] * pow(q.nodes[i], 22L);
  }
  CHECK(d(abs(s0 - BigReal(2.0, 128))) < 1e-35);
  CHECK(d(abs(s2 - BigReal(2.0, 128) / BigReal(3.0, 128))) < 1e-35);
  CHECK(d(abs(s22 - BigReal(2.0, 128) / BigReal(23.0, 128))) < 1e-33);  // degree 22
  // mapped rule integrates exp on [0,1]
  QuadRule m = gauss_legendre_mapped(20, BigReal(0.0, 128), BigReal(1.0, 128));
  BigReal se(0.0, 128);
  for (size_t i = 0; i < m.nodes.size(); ++i) se += m.weights[i] * exp(m.nodes[i]);
  CHECK(d(abs(se - (exp(BigReal(1.0, 128)) - 1.0))) < 1e-30);
}

TEST_CASE("differentiation matrix differentiates a polynomial exactly") {
  QuadRule q = gauss_legendre_mapped(10, BigReal(-1.0, 128), BigReal(1.0, 128));
  Matrix<BigReal> dm = differentiation_matrix(q.nodes);
  std::vector<BigReal> f, expect;
  for (const auto& x : q.nodes) {
    f.push_back(x * x * x - 2.0 * x);
    expect.push_back(3.0 * x * x - 2.0);
  }
  auto got = dm.apply(f);
  for (size_t i = 0; i < f.size(); ++i) CHECK(d(abs(got[i] - expect[i])) < 1e-30);
}
