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
#include "polylab/charges.hpp"

using namespace polylab;
using namespace polylab::charges;

namespace {

std::vector<BigReal> pt(std::initializer_list<double> xs, Prec bits = 128) {
  std::vector<BigReal> v;
  for (double x : xs) v.emplace_back(x, bits);
  return v;
}

ChargeConfiguration two_unit_charges() {
  return ChargeConfiguration::coulomb({pt({1, 0, 0}), pt({-1, 0, 0})},
                                      {BigReal(1.0, 128), BigReal(1.0, 128)});
}

}  // namespace

TEST_CASE("field gradient: symmetry zero at the midpoint, nonzero for one charge") {
  ChargeConfiguration cfg = two_unit_charges();
  auto g = field_gradient(cfg, pt({0, 0, 0}));
  CHECK(vec_norm(g).to_double() < 1e-35);

  ChargeConfiguration one =
      ChargeConfiguration::coulomb({pt({0, 0, 0}), pt({100, 100, 100})},
                                   {BigReal(1.0, 128), BigReal(1e-30, 128)});
  // effectively a single charge: gradient never vanishes near it
  for (double x : {0.5, 1.0, 2.0}) {
    auto gg = field_gradient(one, pt({x, 0.3, -0.2}));
    CHECK(vec_norm(gg).to_double() > 1e-6);
  }
  CHECK_THROWS_AS(field_gradient(cfg, pt({1, 0, 0})), SingularPoint);
}

TEST_CASE("harmonicity: coulomb hessian is trace-free") {
  ChargeConfiguration cfg = two_unit_charges();
  for (auto x : {pt({0.3, 0.4, -0.2}), pt({0, 0.9, 0.1}), pt({2, 1, 1})}) {
    Matrix<BigReal> h = field_hessian(cfg, x);
    BigReal tr(0.0, 128), norm(0.0, 128);
    for (size_t i = 0; i < 3; ++i) {
      tr += h(i, i);
      for (size_t j = 0; j < 3; ++j) norm = max(norm, abs(h(i, j)));
    }
    CHECK(abs(tr).to_double() < 1e-12 * norm.to_double());
  }
}

TEST_CASE("two equal charges: exactly one equilibrium at the midpoint") {
  ChargeConfiguration cfg = two_unit_charges();
  EquilibriumReport rep = find_equilibria(cfg, 5);
  REQUIRE(rep.count == 1);
  CHECK(rep.maxwell_bound == 1);
  CHECK_FALSE(rep.exceeds_bound);
  for (unsigned k = 0; k < 3; ++k)
    CHECK(std::fabs(rep.points[0].location[k].to_double()) < 1e-10);
  CHECK(rep.points[0].gradient_norm.to_double() < 1e-12);
  CHECK(rep.points[0].signature == HessianSignature::Saddle);

  // fixed-point stability: 10 further Newton steps stay put
  std::vector<BigReal> x = rep.points[0].location;
  for (int it = 0; it < 10; ++it) {
    auto g = field_gradient(cfg, x);
    Matrix<BigReal> h = field_hessian(cfg, x);
    std::vector<BigReal> rhs(3, BigReal(0.0, 128));
    for (unsigned k = 0; k < 3; ++k) rhs[k] = -g[k];
    auto step = lu_solve(h, rhs);
    for (unsigned k = 0; k < 3; ++k) x[k] += step[k];
  }
  double moved = 0;
  for (unsigned k = 0; k < 3; ++k)
    moved = std::hypot(moved, (x[k] - rep.points[0].location[k]).to_double());
  CHECK(moved < 1e-10);
}

TEST_CASE("equilateral triangle: count within the maxwell bound") {
  double h = std::sqrt(3.0) / 2.0;
  ChargeConfiguration cfg = ChargeConfiguration::coulomb(
      {pt({0, 2 * h / 3, 0}), pt({-0.5, -h / 3, 0}), pt({0.5, -h / 3, 0})},
      {BigReal(1.0, 128), BigReal(1.0, 128), BigReal(1.0, 128)});
  EquilibriumReport rep = find_equilibria(cfg, 7);
  CHECK(rep.maxwell_bound == 4);
  CHECK(rep.count <= 4);
  CHECK(rep.count >= 1);
  MESSAGE("equilateral triangle: ", rep.count, " equilibria found");
  for (const auto& eq : rep.points) {
    // positive charges admit no extrema (harmonic potential)
    CHECK(eq.signature == HessianSignature::Saddle);
  }
  ExclusionCertificate cert = certify_equilibria(cfg, rep.box, rep);
  MESSAGE("certificate: excluded=", cert.boxes_excluded,
          " undecided=", cert.boxes_undecided, " exhaustive=", cert.exhaustive);
  CHECK(cert.boxes_excluded > 0);
}

TEST_CASE("two-charge certificate is exhaustive") {
  ChargeConfiguration cfg = two_unit_charges();
  EquilibriumReport rep = find_equilibria(cfg, 5);
  ExclusionCertificate cert = certify_equilibria(cfg, rep.box, rep);
  CHECK(cert.exhaustive);
}

TEST_CASE("equivariance under rotation + translation") {
  ChargeConfiguration cfg = ChargeConfiguration::coulomb(
      {pt({0.9, 0.1, 0}), pt({-0.7, 0.2, 0.3}), pt({0.1, -0.8, -0.2})},
      {BigReal(1.0, 128), BigReal(2.0, 128), BigReal(1.5, 128)});
  EquilibriumReport base = find_equilibria(cfg, 6);

  // a fixed rotation about z by 0.7 rad plus a translation
  double c = std::cos(0.7), s = std::sin(0.7);
  auto transform = [&](const std::vector<BigReal>& x) {
    return pt({c * x[0].to_double() - s * x[1].to_double() + 0.25,
               s * x[0].to_double() + c * x[1].to_double() - 0.125,
               x[2].to_double() + 0.5});
  };
  std::vector<std::vector<BigReal>> moved;
  for (const auto& p : cfg.positions) moved.push_back(transform(p));
  ChargeConfiguration cfg2 = ChargeConfiguration::coulomb(moved, cfg.charges);
  EquilibriumReport rot = find_equilibria(cfg2, 6);

  REQUIRE(base.count == rot.count);
  for (const auto& eq : base.points) {
    auto expect = transform(eq.location);
    double best = 1e300;
    for (const auto& eq2 : rot.points) {
      double acc = 0;
      for (unsigned k = 0; k < 3; ++k) {
        double dd = (expect[k] - eq2.location[k]).to_double();
        acc += dd * dd;
      }
      best = std::min(best, std::sqrt(acc));
    }
    CHECK(best < 1e-10);
  }
}

TEST_CASE("monte carlo sweep: positive 4-charge counts never exceed 9 silently") {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int counterexamples = 0;
  for (int trial = 0; trial < 12; ++trial) {  // full 100-config sweep is in acceptance
    std::vector<std::vector<BigReal>> pos;
    for (int i = 0; i < 4; ++i) pos.push_back(pt({u(rng), u(rng), u(rng)}));
    std::vector<BigReal> q(4, BigReal(1.0, 128));
    ChargeConfiguration cfg = ChargeConfiguration::coulomb(pos, q);
    EquilibriumReport rep = find_equilibria(cfg, 5, 99 + trial);
    CHECK(rep.maxwell_bound == 9);
    if (rep.exceeds_bound) ++counterexamples;
    for (const auto& eq : rep.points)
      CHECK(eq.gradient_norm.to_double() <= 1e-12);
  }
  CHECK(counterexamples == 0);  // an excess would surface as a flagged record
}
