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

#include "polylab/linalg.hpp"

// Equilibrium points of N fixed point charges in R^d under the Riesz
// s-kernel (Coulomb s = d-2 by default), counted against the (N-1)^2 bound.

namespace polylab::charges {

struct SingularPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ChargeConfiguration {
  std::vector<std::vector<BigReal>> positions;  // N x d
  std::vector<BigReal> charges;                 // nonzero
  unsigned dim = 3;
  BigReal s;  // Riesz exponent; Coulomb default d-2

  static ChargeConfiguration coulomb(std::vector<std::vector<BigReal>> positions,
                                     std::vector<BigReal> charges);
  void validate() const;
  size_t count() const { return positions.size(); }
  double diameter() const;
  bool all_positive() const;
};

BigReal field_potential(const ChargeConfiguration& cfg, const std::vector<BigReal>& x);
std::vector<BigReal> field_gradient(const ChargeConfiguration& cfg,
                                    const std::vector<BigReal>& x);
Matrix<BigReal> field_hessian(const ChargeConfiguration& cfg,
                              const std::vector<BigReal>& x);

enum class HessianSignature { Saddle, Minimum, Maximum, Degenerate };
const char* signature_name(HessianSignature s);

struct Equilibrium {
  std::vector<BigReal> location;
  BigReal gradient_norm;
  std::vector<BigReal> hessian_eigenvalues;
  HessianSignature signature = HessianSignature::Degenerate;
};

struct SearchBox {
  std::vector<double> lo, hi;
};

/// Hull bounding box of the charges, dilated (3x for mixed-sign charges).
SearchBox default_search_box(const ChargeConfiguration& cfg);

struct EquilibriumReport {
  std::vector<Equilibrium> points;       // isolated, deduplicated
  std::vector<Equilibrium> degenerate;   // flagged, excluded from the count
  unsigned count = 0;
  unsigned maxwell_bound = 0;  // (N-1)^2
  bool exceeds_bound = false;
  bool suspicious_continuum = false;
  size_t seeds_total = 0, seeds_converged = 0;
  BigReal newton_tol;
  SearchBox box;
};

/// Multi-start Newton on grad(Phi) = 0: a seeds_per_axis^d grid plus 10 N^2
/// deterministic pseudo-random seeds. Converged points are polished,
/// deduplicated at 1e-6 x diameter, and classified by Hessian signature;
/// degenerate Hessians are reported separately and excluded from the count.
/// The count is a certified lower bound, not a completeness claim.
EquilibriumReport find_equilibria(const ChargeConfiguration& cfg, const SearchBox& box,
                                  unsigned seeds_per_axis, const BigReal& newton_tol,
                                  uint64_t seed = 1234);
EquilibriumReport find_equilibria(const ChargeConfiguration& cfg,
                                  unsigned seeds_per_axis = 4,
                                  uint64_t seed = 1234);

struct ExclusionCertificate {
  bool exhaustive = false;       // every undecided box is near a found point
  size_t boxes_excluded = 0;
  size_t boxes_undecided = 0;
  size_t max_depth_hits = 0;
  std::vector<std::vector<double>> unaccounted_centers;
};

/// Interval-style subdivision: a box is excluded when a first-order bound
/// certifies the gradient cannot vanish there (center value minus Lipschitz
/// radius, or a dominant-singularity bound near a charge). Intended for
/// N <= 3 at desk scale.
ExclusionCertificate certify_equilibria(const ChargeConfiguration& cfg,
                                        const SearchBox& box,
                                        const EquilibriumReport& report,
                                        int max_depth = 30);

}  // namespace polylab::charges
