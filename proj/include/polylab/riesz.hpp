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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polylab/bigfloat.hpp"

// Riesz s-energy minimization over balls and annuli: the closed-form ball
// solution, a simplex-constrained quadratic program over radial shells, and
// particle gradient descent. Kernel convention K_s(x) = 1/(s |x|^s) for
// s != 0 and -log|x| for s = 0 (the 1/s factor included).

namespace polylab::riesz {

struct DivergentEnergy : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct KernelSingularity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RieszKernelSpec {
  double s = 1.0;
  unsigned d = 3;
  void validate() const {
    if (!(s > -2.0) || !(s < static_cast<double>(d)))
      throw DivergentEnergy("riesz: -2 < s < d required");
    if (d < 2) throw std::invalid_argument("riesz: d >= 2 required");
  }
};

double riesz_kernel(const RieszKernelSpec& spec, double r);

/// Empirical-measure energy of N points (flat N*d array), diagonal excluded:
/// (1/N^2) sum_{i != j} K_s(x_i - x_j).
double point_energy(const RieszKernelSpec& spec, const std::vector<double>& flat,
                    unsigned d);

/// Average of K_s over two concentric uniform spheres of radii rho and
/// sigma: adaptive panelled Gauss-Legendre on the polar angle with geometric
/// grading toward the coincidence singularity. Throws KernelSingularity for
/// the divergent diagonal (s >= d-1, rho == sigma).
double shell_kernel(const RieszKernelSpec& spec, double rho, double sigma);
/// Closed form for d = 3 (test oracle for the quadrature route).
double shell_kernel_closed_d3(const RieszKernelSpec& spec, double rho, double sigma);

struct RadialDensitySolution {
  std::vector<BigReal> shells;       // radii
  std::vector<BigReal> weights;      // nonnegative, sum to 1
  BigReal point_mass_inner{0.0};
  BigReal point_mass_outer{0.0};
  BigReal energy{0.0};
  bool surface_branch = false;
  double width = 0;  // annulus width per shell (0 for ideal spheres)

  double weight_sum() const;
};

/// Riesz's closed-form ball minimizer: the uniform surface measure for
/// -2 < s <= d-2, the density Gamma(1+s/2) / (R^s pi^(d/2) Gamma(1+(s-d)/2))
/// / (R^2-|x|^2)^((d-s)/2) for d-2 < s < d (sampled on shells).
RadialDensitySolution ball_equilibrium_density(const RieszKernelSpec& spec, double R,
                                               size_t n_shells = 200);

/// Per-bin masses of the closed-form ball density for arbitrary bin edges.
std::vector<double> ball_radial_masses(const RieszKernelSpec& spec, double R,
                                       const std::vector<double>& edges);

struct AnnulusConstraint {
  double r_inner = 0.0;
  double r_outer = 1.0;
};

/// Simplex-constrained QP min w^T K w over radial shells: ideal spheres for
/// s < d-1, thin annuli (with averaged near-diagonal entries) for
/// d-1 <= s < d. Monotone accelerated projected gradient with exact simplex
/// projection.
RadialDensitySolution minimize_radial_qp(const RieszKernelSpec& spec,
                                         const AnnulusConstraint& annulus,
                                         size_t n_shells);

struct ParticleResult {
  std::vector<double> points;  // N x d flat
  unsigned n = 0, d = 3;
  double energy = 0;
  double final_gradient_norm = 0;
  std::vector<double> bin_edges;
  std::vector<double> radial_histogram;  // counts per bin
};

/// Projected gradient descent with Armijo line search on particle positions;
/// radii clamped into [r_inner, r_outer]; deterministic restarts, best
/// energy kept.
ParticleResult minimize_particles(const RieszKernelSpec& spec, unsigned n,
                                  const AnnulusConstraint& constraint,
                                  unsigned iterations, uint64_t seed = 7,
                                  unsigned restarts = 8);

struct HistogramComparison {
  double chi2 = 0;
  double quantile95 = 0;
  bool below_quantile = false;
};

/// Chi-square distance of the particle histogram to the closed-form ball
/// density, compared against the 95th percentile of same-N samples drawn
/// from the truth (inverse-CDF resampling).
HistogramComparison compare_histogram_to_density(const RieszKernelSpec& spec, double R,
                                                 const ParticleResult& particles,
                                                 unsigned resamples = 200,
                                                 uint64_t seed = 11);

}  // namespace polylab::riesz
