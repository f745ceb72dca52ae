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
#include "polylab/snake.hpp"

using namespace polylab;
using namespace polylab::snake;

namespace {

double d(const BigReal& x) { return x.to_double(); }

// Chebyshev T_k and U_k in the monomial basis
Polynomial cheb_t(unsigned k, Prec bits) {
  std::vector<BigComplex> e(k + 1, BigComplex(0.0, 0.0, bits));
  e[k] = BigComplex(1.0, 0.0, bits);
  return from_chebyshev(Polynomial(e, Basis::ChebyshevT, bits));
}

Polynomial cheb_u(unsigned k, Prec bits) {
  Polynomial u0 = Polynomial::from_doubles({1}, bits);
  if (k == 0) return u0;
  Polynomial u1 = Polynomial::from_doubles({0, 2}, bits);
  for (unsigned i = 1; i < k; ++i) {
    Polynomial u2 = Polynomial::from_doubles({0, 2}, bits) * u1 - u0;
    u0 = u1;
    u1 = u2;
  }
  return u1;
}

double coeff_gap(const Polynomial& a, const Polynomial& b) {
  BigReal err(0.0, a.precision_bits());
  long deg = std::max(a.degree(), b.degree());
  for (long k = 0; k <= deg; ++k)
    err = max(err, abs(a.coeff(static_cast<size_t>(k)) - b.coeff(static_cast<size_t>(k))));
  return err.to_double();
}

bool matches_up_to_sign(const Polynomial& got, const Polynomial& want, double tol) {
  return coeff_gap(got, want) < tol || coeff_gap(-got, want) < tol;
}

}  // namespace

TEST_CASE("constant majorant reproduces the Chebyshev polynomials") {
  Majorant one = Majorant::builtin(MajorantTag::One);
  for (unsigned n : {1u, 3u, 7u, 12u, 20u}) {
    SnakeResult sr = solve_snake(one, n, BigReal(1e-12));
    CHECK(matches_up_to_sign(sr.omega, cheb_t(n, sr.omega.precision_bits()), 1e-10));
    REQUIRE(sr.alternation_points.size() == n + 1);
    for (size_t i = 0; i + 1 < sr.alternation_points.size(); ++i)
      CHECK(d(sr.alternation_points[i]) > d(sr.alternation_points[i + 1]));
    CHECK(d(sr.residual) < 1e-12);
    CHECK_FALSE(sr.degenerate_touch_count);
    // alternation values match the envelope: T_n touches +-1 at cos(k pi / n)
    for (size_t i = 0; i < sr.alternation_points.size(); ++i) {
      double expect = std::cos(M_PI * static_cast<double>(i) / n);
      CHECK(d(sr.alternation_points[i]) == doctest::Approx(expect).epsilon(1e-9));
    }
  }
}

TEST_CASE("semicircle majorant: (1-x^2) U_{n-2} closed form") {
  Majorant mu = Majorant::builtin(MajorantTag::SemiCircle);
  for (unsigned n : {2u, 3u, 5u, 6u, 8u}) {
    SnakeResult sr = solve_snake(mu, n, BigReal(1e-12));
    Prec bits = sr.omega.precision_bits();
    Polynomial expect =
        Polynomial::from_doubles({1, 0, -1}, bits) * cheb_u(n - 2, bits);
    CHECK(matches_up_to_sign(sr.omega, expect, 1e-9));
    CHECK(sr.alternation_points.size() == n + 1);
    CHECK(d(sr.residual) < 1e-10);
  }
}

TEST_CASE("semicircle at n = 1: only the zero polynomial fits") {
  Majorant mu = Majorant::builtin(MajorantTag::SemiCircle);
  CHECK_THROWS_AS(solve_snake(mu, 1, BigReal(1e-12)), InfeasibleMajorant);
}

TEST_CASE("parabola majorant reduces through its endpoint zero factor") {
  Majorant mu = Majorant::builtin(MajorantTag::Parabola);
  SnakeResult sr = solve_snake(mu, 4, BigReal(1e-12));
  Prec bits = sr.omega.precision_bits();
  // (1 - x^2) T_2 up to orientation; the distinct touch set is {1, 0, -1}
  Polynomial expect = Polynomial::from_doubles({1, 0, -1}, bits) * cheb_t(2, bits);
  CHECK(matches_up_to_sign(sr.omega, expect, 1e-10));
  CHECK(sr.degenerate_touch_count);
  CHECK(sr.alternation_points.size() == 3);
  CHECK(d(sr.residual) < 1e-12);
  // constraint satisfaction on a 10x denser grid than the solver's
  for (int i = 0; i <= 1000; ++i) {
    double x = -1.0 + 0.002 * i;
    double v = std::fabs(sr.omega.eval_real(BigReal(x, bits)).to_double()) -
               mu.eval_d(x);
    CHECK(v < 1e-12);
  }
}

TEST_CASE("|1-2x^2| majorant: full alternation through interior zeros") {
  Majorant mu = Majorant::builtin(MajorantTag::AbsOneMinus2x2);
  SnakeResult sr = solve_snake(mu, 4, BigReal(1e-12));
  Prec bits = sr.omega.precision_bits();
  // (1-2x^2) T_2 = -(2x^2-1)^2 up to orientation
  Polynomial expect = Polynomial::from_doubles({1, 0, -2}, bits) * cheb_t(2, bits);
  CHECK(matches_up_to_sign(sr.omega, expect, 1e-10));
  CHECK(sr.alternation_points.size() == 5);
  CHECK_FALSE(sr.degenerate_touch_count);
}

TEST_CASE("sqrt(2x^2+x+1): strictly positive non-even majorant converges") {
  Majorant mu = Majorant::builtin(MajorantTag::Sqrt2x2x1);
  SnakeResult sr = solve_snake(mu, 5, BigReal(1e-10));
  CHECK(sr.alternation_points.size() == 6);
  CHECK(d(sr.residual) < 1e-10);
  Prec bits = sr.omega.precision_bits();
  // snake touches the envelope with alternating signs at the references
  for (size_t i = 0; i < sr.alternation_points.size(); ++i) {
    BigReal t = sr.alternation_points[i];
    double off = std::fabs(std::fabs(sr.omega.eval_real(t).to_double()) -
                           mu.eval_d(t.to_double()));
    CHECK(off < 1e-9);
  }
}

TEST_CASE("snake uniqueness: perturbed tolerance reruns agree up to sign") {
  Majorant mu = Majorant::builtin(MajorantTag::Sqrt2x2x1);
  SnakeResult a = solve_snake(mu, 4, BigReal(1e-10));
  SnakeResult b = solve_snake(mu, 4, BigReal(1e-12));
  CHECK(matches_up_to_sign(a.omega, b.omega, 1e-8));
}

TEST_CASE("chebyshev sign patterns") {
  Majorant one = Majorant::builtin(MajorantTag::One);
  SnakeResult t5 = solve_snake(one, 5, BigReal(1e-12));
  auto p5 = cheb_sign_pattern(t5, BigReal(1e-10));
  CHECK(p5.pattern == ChebPattern::NonNegative);

  // even convex 1 + x^2: conjectured NonNegative (recorded, not asserted)
  Majorant mu = Majorant::user_abs(Polynomial::from_doubles({1, 0, 1}, 192));
  CHECK(mu.is_even());
  CHECK(mu.is_convex());
  for (unsigned n : {4u, 6u, 9u, 12u}) {
    SnakeResult sr = solve_snake(mu, n, BigReal(1e-11));
    auto pat = cheb_sign_pattern(sr, BigReal(1e-10));
    WARN_MESSAGE(pat.pattern == ChebPattern::NonNegative,
                 "even-convex conjecture violated at n=", n,
                 " pattern=", std::string(cheb_pattern_name(pat.pattern)));
  }

  // semicircle: omega = (T_{n-2} - T_n)/2 has a zero between its two nonzero
  // coefficients, so the strict alternation fails -> Neither
  Majorant semi = Majorant::builtin(MajorantTag::SemiCircle);
  SnakeResult s6 = solve_snake(semi, 6, BigReal(1e-12));
  auto pat6 = cheb_sign_pattern(s6, BigReal(1e-10));
  CHECK(pat6.pattern == ChebPattern::Neither);
}

TEST_CASE("duffin-schaeffer value: vertex solution for mu = 1, k = n") {
  Majorant one = Majorant::builtin(MajorantTag::One);
  for (unsigned n : {4u, 5u}) {
    SnakeResult sr = solve_snake(one, n, BigReal(1e-12));
    BigReal ds = duffin_schaeffer_value(one, sr, n);
    double expect = std::pow(2.0, n - 1.0) * std::tgamma(n + 1.0);  // 2^(n-1) n!
    CHECK(d(ds) == doctest::Approx(expect).epsilon(1e-9));
  }
}

TEST_CASE("duffin-schaeffer counterexamples: snake is not extremal") {
  // mu = sqrt(1-x^2), k = 1: the envelope vanishes at the endpoint
  // alternation points, so only n-1 constraints bound p and the supremum
  // is unbounded -- a strictly positive margin over the snake derivative
  Majorant semi = Majorant::builtin(MajorantTag::SemiCircle);
  SnakeResult sr = solve_snake(semi, 6, BigReal(1e-12));
  BigReal ds = duffin_schaeffer_value(semi, sr, 1);
  BigReal wd = sup_norm(differentiate(sr.omega, 1));
  CHECK_FALSE(ds.is_finite());
  CHECK(d(ds) > d(wd) * (1.0 + 1e-3));  // strictly positive margin
  CHECK(ds >= wd);                      // omega itself is feasible

  // under the pinned reading (|p| <= 0 as equality) the same quantity is
  // finite and the snake IS the vertex optimum
  BigReal ds_pinned = duffin_schaeffer_value(semi, sr, 1, true);
  CHECK(ds_pinned.is_finite());
  CHECK(d(abs(ds_pinned - wd)) < 1e-8 * d(wd));

  // mu = 1 - x^2, k = 1 and k = 2 (probed separately): the alternation set
  // itself is degenerate, unbounded under both readings
  Majorant par = Majorant::builtin(MajorantTag::Parabola);
  SnakeResult sp = solve_snake(par, 6, BigReal(1e-12));
  for (unsigned k : {1u, 2u}) {
    BigReal dsp = duffin_schaeffer_value(par, sp, k);
    BigReal wdp = sup_norm(differentiate(sp.omega, k));
    CHECK_FALSE(dsp.is_finite());
    CHECK(dsp >= wdp);
  }
}

TEST_CASE("markov bracket: classical case and bracket validity") {
  Majorant one = Majorant::builtin(MajorantTag::One);
  MarkovBracket mb = markov_bracket(one, 5, 1, 128);
  CHECK(d(mb.lower) == doctest::Approx(25.0).epsilon(1e-9));
  CHECK(d(mb.upper) >= 25.0 - 1e-9);
  CHECK(d(mb.upper) <= 25.0 * 1.01);  // grid relaxation slack

  Majorant semi = Majorant::builtin(MajorantTag::SemiCircle);
  MarkovBracket ms = markov_bracket(semi, 5, 1, 128);
  CHECK(d(ms.lower) <= d(ms.upper) + 1e-9);

  Majorant s2 = Majorant::builtin(MajorantTag::Sqrt2x2x1);
  MarkovBracket m2 = markov_bracket(s2, 4, 2, 128);
  CHECK(d(m2.lower) <= d(m2.upper) + 1e-9);
}

TEST_CASE("markov bracket tightens under grid doubling") {
  Majorant one = Majorant::builtin(MajorantTag::One);
  MarkovBracket coarse = markov_bracket(one, 5, 1, 64);
  MarkovBracket fine = markov_bracket(one, 5, 1, 128);
  double gap_coarse = d(coarse.upper) - d(coarse.lower);
  double gap_fine = d(fine.upper) - d(fine.lower);
  CHECK(gap_fine <= gap_coarse * 0.55 + 1e-12);  // halves or better
}

TEST_CASE("equality probe: classical equality and the known failure") {
  Majorant one = Majorant::builtin(MajorantTag::One);
  EqualityProbe p1 = equality_probe(one, 5, 1);
  CHECK(p1.equality_holds);
  CHECK(p1.pattern.pattern == ChebPattern::NonNegative);
  CHECK(p1.implication_consistent);

  Majorant semi = Majorant::builtin(MajorantTag::SemiCircle);
  EqualityProbe p2 = equality_probe(semi, 6, 1);
  CHECK_FALSE(p2.equality_holds);  // D* exceeds the snake derivative norm
  CHECK_FALSE(p2.ds_value.is_finite());
  CHECK(p2.implication_consistent);

  Majorant even_convex = Majorant::user_abs(Polynomial::from_doubles({1, 0, 1}, 192));
  EqualityProbe p3 = equality_probe(even_convex, 6, 1);
  CHECK(p3.implication_consistent);
}
