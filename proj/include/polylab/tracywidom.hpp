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

#include <vector>

#include "polylab/airy.hpp"
#include "polylab/linalg.hpp"

// The Airy-kernel determinant det(I - K_Ai) on L^2([s,oo)), its Lidskii
// eigenvalue product, the commuting Sturm-Liouville operator
// d/dx (x-s) d/dx - x(x-s), and the finite-n GUE kernel with its edge
// scaling toward the Airy kernel.

namespace polylab::tracywidom {

struct TruncationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DiscretizationUnstable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Gauss-Legendre Nystrom discretization of a symmetric kernel on [s, s+L]:
/// matrix entries sqrt(w_i) K(x_i, x_j) sqrt(w_j).
struct DiscretizedKernel {
  std::vector<BigReal> nodes;
  std::vector<BigReal> weights;
  Matrix<BigReal> matrix;
  BigReal s;
  BigReal length;  // truncation L
};

/// Airy-kernel Nystrom matrix; L grows by doubling until the kernel diagonal
/// beyond s+L is below tail_bound (default 1e-16).
DiscretizedKernel nystrom_airy(const BigReal& s, size_t n_nodes,
                               double tail_bound = 1e-16);

/// Hankel Nystrom matrix with symbol Ai(. - s) on the same grid:
/// sqrt(w_i) Ai(x_i + x_j - s) sqrt(w_j). Its square approximates the Airy
/// kernel matrix.
Matrix<BigReal> hankel_matrix(const DiscretizedKernel& dk);

struct TwDistributionResult {
  BigReal f2_direct;              // det(I - M) by LU
  BigReal f2_lidskii;             // prod (1 - lambda_k)
  std::vector<BigReal> eigenvalues;  // descending
};

/// F2(s) two ways: stable triangular factorization of I - M and the Lidskii
/// eigenvalue product. Both are returned; they must agree.
TwDistributionResult tw_distribution(const BigReal& s, size_t n_nodes);

struct LtwEigensystem {
  std::vector<BigReal> values;  // descending; trailing entries unconverged
  std::vector<std::vector<BigReal>> functions;  // sampled on grid, unit 2-norm
  std::vector<BigReal> grid;
  double length;
  size_t n_basis;
};

/// Self-adjoint Legendre-Galerkin discretization of the Sturm-Liouville form
/// on [s, s+L]: natural boundary at x = s (the leading coefficient vanishes
/// there), Dirichlet decay at s+L. L <= 0 requests automatic selection.
LtwEigensystem ltw_eigensystem(const BigReal& s, double L, size_t n_basis,
                               bool check_stability = false);

struct CommutationReport {
  BigReal relative_commutator_norm;       // ||[K,L]||_F / (||K||_F ||L||_F)
  std::vector<BigReal> alignment_residuals;  // ||L psi - rho psi|| / ||L psi||
  std::vector<BigReal> rayleigh_values;      // rho_k = <L psi_k, psi_k>
  std::vector<BigReal> lambda;               // lambda_k = <K psi_k, psi_k>
  std::vector<BigReal> hankel_sq;            // ||H psi_k||^2
  BigReal f2_from_modes;                     // Lidskii product of lambda
  BigReal f2_direct;
  size_t n_nodes;
};

/// Numerical check that the differential operator shares the Airy kernel's
/// eigenbasis; auto-refines the grid once if the top-mode alignment is poor.
CommutationReport commutation_check(const BigReal& s, size_t n_nodes,
                                    size_t top_modes = 8);

/// Probabilists' Hermite function phi_k(x) = H_k(x)/sqrt(k!) e^{-x^2/4}/(2pi)^{1/4}.
BigReal hermite_phi(unsigned k, const BigReal& x);
/// GUE kernel sum_{k<n} phi_k(x) phi_k(y) (Christoffel-Darboux off-diagonal).
BigReal gue_kernel(unsigned n, const BigReal& x, const BigReal& y);

struct EdgeScalingReport {
  std::vector<unsigned> ns;
  std::vector<double> max_errors;  // max over the (x,y) grid
};

/// Max deviation of sigma_n K_n(mu_n + sigma_n x, mu_n + sigma_n y) from
/// K_Ai(x, y) on a 20x20 grid over [s, s+4]^2, for each n in the sweep.
EdgeScalingReport edge_scaling_check(const std::vector<unsigned>& ns, double s);

struct OperatorSearchResult {
  std::vector<BigReal> a_coeffs;  // a(x) = sum_p a_p x^p
  std::vector<BigReal> b_coeffs;  // b(x) = sum_{q>=1} b_q x^q; b_0 fixed to 0
  BigReal residual;               // smallest normalized commutator norm
  bool exploratory = true;
};

/// Least-squares search for a second-order operator d/dx a d/dx + b with
/// polynomial coefficients minimizing ||[K, L]||_F, identity component
/// projected out and the coefficient vector normalized. EXPLORATORY.
OperatorSearchResult commuting_search_airy(const BigReal& s, unsigned degree_bound,
                                           size_t n_nodes);
OperatorSearchResult commuting_search_gue(unsigned n, const BigReal& s,
                                          unsigned degree_bound, size_t n_nodes);
/// Same search against an arbitrary symmetric Nystrom matrix on a node set.
OperatorSearchResult commuting_search_operator(const Matrix<BigReal>& m,
                                               const std::vector<BigReal>& nodes,
                                               const std::vector<BigReal>& weights,
                                               unsigned degree_bound);

}  // namespace polylab::tracywidom
