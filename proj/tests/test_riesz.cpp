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
#include "polylab/riesz.hpp"

using namespace polylab;
using namespace polylab::riesz;

TEST_CASE("kernel and point-energy conventions") {
  RieszKernelSpec s1{1.0, 3};
  CHECK(riesz_kernel(s1, 1.0) == doctest::Approx(1.0));
  // two points at distance 1: energy (1/4) * 2 * K(1) = 1/2
  std::vector<double> pts{0, 0, 0, 1, 0, 0};
  CHECK(point_energy(s1, pts, 3) == doctest::Approx(0.5));

  RieszKernelSpec s0{0.0, 3};
  CHECK(riesz_kernel(s0, std::exp(1.0)) == doctest::Approx(-1.0));
}

TEST_CASE("energy scaling under dilation") {
  RieszKernelSpec spec{1.3, 3};
  std::vector<double> pts{0.1, 0.2, -0.3, 0.8, -0.5, 0.2, -0.4, 0.6, 0.7,
                          0.05, -0.9, 0.3};
  double e1 = point_energy(spec, pts, 3);
  double lambda = 1.7;
  std::vector<double> scaled = pts;
  for (auto& v : scaled) v *= lambda;
  double e2 = point_energy(spec, scaled, 3);
  CHECK(std::fabs(e2 - e1 * std::pow(lambda, -spec.s)) < 1e-10 * std::fabs(e1));

  // log case shifts by -log(lambda) (N-1)/N
  RieszKernelSpec log3{0.0, 3};
  double l1 = point_energy(log3, pts, 3);
  double l2 = point_energy(log3, scaled, 3);
  double n = 4;
  CHECK(std::fabs(l2 - (l1 - std::log(lambda) * (n - 1) / n)) < 1e-12);
}

TEST_CASE("rotation invariance of the energy") {
  RieszKernelSpec spec{2.0, 3};
  std::vector<double> pts{0.1, 0.2, -0.3, 0.8, -0.5, 0.2, -0.4, 0.6, 0.7};
  double e1 = point_energy(spec, pts, 3);
  double c = std::cos(0.37), s = std::sin(0.37);
  std::vector<double> rot = pts;
  for (size_t i = 0; i < pts.size(); i += 3) {
    rot[i] = c * pts[i] - s * pts[i + 1];
    rot[i + 1] = s * pts[i] + c * pts[i + 1];
  }
  CHECK(point_energy(spec, rot, 3) == doctest::Approx(e1).epsilon(1e-14));
}

TEST_CASE("shell kernel: newton's theorem and the quadrature-vs-closed-form oracle") {
  RieszKernelSpec coulomb{1.0, 3};
  // uniform sphere acts as a point charge at the center: k(R, R) = 1/R
  CHECK(shell_kernel_closed_d3(coulomb, 2.0, 2.0) == doctest::Approx(0.5));
  CHECK(shell_kernel(coulomb, 2.0, 2.0) == doctest::Approx(0.5).epsilon(1e-12));
  // point outside the sphere
  CHECK(shell_kernel(coulomb, 1.0, 3.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  for (double s : {0.5, 1.0, 1.7, 2.0, 2.5}) {
    RieszKernelSpec spec{s, 3};
    for (auto [u, v] : {std::pair{0.5, 0.9}, std::pair{1.1, 0.3}, std::pair{0.7, 0.7}}) {
      if (u == v && s >= 2.0) continue;  // divergent diagonal
      double a = shell_kernel(spec, u, v);
      double b = shell_kernel_closed_d3(spec, u, v);
      CHECK(a == doctest::Approx(b).epsilon(1e-11));
    }
  }
  CHECK_THROWS_AS(shell_kernel(RieszKernelSpec{2.3, 3}, 1.0, 1.0), KernelSingularity);
}

TEST_CASE("ball equilibrium: surface branch for s <= d-2") {
  RieszKernelSpec coulomb{1.0, 3};
  auto sol = ball_equilibrium_density(coulomb, 1.0);
  CHECK(sol.surface_branch);
  REQUIRE(sol.shells.size() == 1);
  CHECK(sol.shells[0].to_double() == doctest::Approx(1.0));
  CHECK(sol.weight_sum() == doctest::Approx(1.0));
  CHECK(sol.energy.to_double() == doctest::Approx(1.0));  // k(1,1) = 1/R

  RieszKernelSpec log2d{0.0, 2};
  auto flat = ball_equilibrium_density(log2d, 1.0);
  CHECK(flat.surface_branch);  // s = d-2 boundary case
}

TEST_CASE("ball equilibrium: volumetric branch integrates to one") {
  RieszKernelSpec spec{2.0, 3};
  auto sol = ball_equilibrium_density(spec, 1.0, 200);
  CHECK_FALSE(sol.surface_branch);
  CHECK(std::fabs(sol.weight_sum() - 1.0) < 1e-12);
  // spec density at r = 0: 1/pi^2
  // mass of the central shell ~ (4/3) pi r^3 / pi^2 for small r
  double h = 1.0 / 200.0;
  double m0 = sol.weights[0].to_double();
  double predict = 4.0 * M_PI / 3.0 * std::pow(h, 3.0) / (M_PI * M_PI);
  CHECK(m0 == doctest::Approx(predict).epsilon(0.01));
}

TEST_CASE("radial qp on the ball recovers the closed-form density") {
  RieszKernelSpec spec{2.0, 3};
  size_t shells = 120;
  auto truth = ball_equilibrium_density(spec, 1.0, shells);
  auto qp = minimize_radial_qp(spec, {0.0, 1.0}, shells);
  CHECK(std::fabs(qp.weight_sum() - 1.0) < 1e-9);
  double l1 = 0;
  for (size_t i = 0; i < shells; ++i)
    l1 += std::fabs(qp.weights[i].to_double() - truth.weights[i].to_double());
  MESSAGE("L1 distance to closed form at ", shells, " shells: ", l1);
  CHECK(l1 < 0.025);
  // energy of the discrete minimizer cannot exceed the sampled truth's
  CHECK(qp.energy.to_double() <= truth.energy.to_double() + 1e-12);
}

TEST_CASE("self-convergence: doubling the shells moves the energy < 0.1%") {
  RieszKernelSpec spec{2.0, 3};
  auto a = minimize_radial_qp(spec, {0.5, 1.0}, 60);
  auto b = minimize_radial_qp(spec, {0.5, 1.0}, 120);
  CHECK(std::fabs(a.energy.to_double() - b.energy.to_double()) <
        1e-3 * std::fabs(b.energy.to_double()));
}

TEST_CASE("coulomb annulus support collapses outward (recorded)") {
  RieszKernelSpec spec{1.0, 3};
  auto qp = minimize_radial_qp(spec, {0.5, 1.0}, 80);
  // harmonic case: mass should sit at the outer boundary
  double outer_mass = qp.point_mass_outer.to_double();
  for (size_t i = qp.weights.size() - 4; i < qp.weights.size(); ++i)
    outer_mass += qp.weights[i].to_double();
  MESSAGE("outer 4-shell + boundary mass: ", outer_mass);
  CHECK(qp.weight_sum() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("particles on the ball, coulomb case: mass flees to the sphere") {
  RieszKernelSpec spec{1.0, 3};
  ParticleResult pr = minimize_particles(spec, 120, {0.0, 1.0}, 400, 3, 2);
  unsigned near_boundary = 0;
  for (unsigned i = 0; i < pr.n; ++i) {
    double r = std::hypot(pr.points[i * 3], pr.points[i * 3 + 1]);
    r = std::hypot(r, pr.points[i * 3 + 2]);
    if (r > 0.98) ++near_boundary;
  }
  CHECK(near_boundary >= 118);  // >= 98% at this desk scale
}

TEST_CASE("particle histogram matches the volumetric truth by resampled chi2") {
  RieszKernelSpec spec{2.0, 3};
  ParticleResult pr = minimize_particles(spec, 220, {0.0, 1.0}, 350, 5, 2);
  auto cmp = compare_histogram_to_density(spec, 1.0, pr, 150, 12);
  MESSAGE("chi2 = ", cmp.chi2, " vs 95th percentile ", cmp.quantile95);
  CHECK(cmp.below_quantile);
}
