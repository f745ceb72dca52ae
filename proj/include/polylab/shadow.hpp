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
#include <string>
#include <vector>

#include "polylab/hull.hpp"
#include "polylab/poly.hpp"
#include "polylab/roots.hpp"

// The shadow of a polynomial P: the closure of the union of all roots of
// Q_{n,m} = d^m (P^n) / dx^m. Root clouds, occupancy rasters, and the
// critical-value curves of F_alpha(z) = z - alpha P(z)/P'(z).

namespace polylab::shadow {

struct ContainmentViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Q_{n,m} = m-fold derivative of P^n; the power is formed by repeated
/// squaring of coefficient convolutions. Requires 0 <= m <= n deg P.
Polynomial q_poly(const Polynomial& p, unsigned n, unsigned m);

/// Occupancy raster over the hull bounding box.
struct Raster {
  double x0 = 0, y0 = 0, h = 1;  // origin and cell size
  size_t width = 0, height = 0;
  std::vector<uint8_t> occupied;

  bool cell(size_t ix, size_t iy) const { return occupied[iy * width + ix] != 0; }
  void mark(double x, double y);
  bool has_unoccupied_4neighbor(size_t ix, size_t iy) const;
  std::vector<std::pair<size_t, size_t>> boundary_cells() const;
  size_t occupied_count() const;
};

struct ShadowCloud {
  Polynomial base;
  unsigned n_max = 0;
  bool figure_mode = false;  // only n = n_max swept (figure replication)
  std::vector<BigComplex> points;  // distinct root locations of every Q_{n,m}
  std::vector<BigComplex> base_roots;
  std::vector<BigComplex> critical_points;  // roots of P'
  BigComplex center_of_mass;
  ConvexHull hull;  // of the roots of P
  Raster raster;
};

/// Sweep 1 <= n <= n_max (or only n = n_max in figure mode), 0 <= m <= nd-1.
/// Internally Q_{n,m} = P^(n-m) R_m with R_{m+1} = (n-m) P' R_m + P R_m',
/// so the root finder only sees the simple-rooted cofactors; the factored
/// form is verified against q_poly in the tests. Every extracted point is
/// checked against the convex hull of the roots of P (tolerance 1e-10).
ShadowCloud build_shadow(const Polynomial& p, unsigned n_max, size_t raster_cells = 400,
                         bool figure_mode = false);

std::vector<double> default_alpha_grid(unsigned degree, size_t samples = 512);

struct CriticalValueCurves {
  std::vector<double> alpha_grid;
  std::vector<std::vector<BigComplex>> values;          // per alpha
  std::vector<std::vector<BigComplex>> critical_points;  // per alpha (poles excluded)
};

/// Critical values of F_alpha(z) = z - alpha P/P': roots of
/// (1-alpha) P'^2 + alpha P P'' excluding the zeros of P', mapped by F_alpha.
CriticalValueCurves f_alpha_critical_values(const Polynomial& p,
                                            const std::vector<double>& alpha_grid);

struct PhiBoundary {
  std::vector<double> alpha_grid;
  std::vector<std::vector<BigComplex>> per_alpha;  // u with a double z-root
  bool degenerate = false;
};

/// Independent route to the same curves: u-values where
/// Phi(alpha, z, u) = alpha P(z) + (u - z) P'(z) has a multiple z-root,
/// located as the roots of the resultant Res_z(Phi, dPhi/dz), which is
/// reconstructed as a polynomial in u from Sylvester-determinant samples.
PhiBoundary phi_multiroot_boundary(const Polynomial& p, size_t u_samples,
                                   const std::vector<double>& alpha_grid);

struct Conjecture1Report {
  bool roots_in_convex_position = false;
  bool roots_form_regular_polygon = false;  // exclusion gate
  bool hypothesis_applies = false;
  // (ii) raster distance (in cells) from each critical point of P to the
  // complement of the occupied region
  std::vector<double> critical_point_complement_dist_cells;
  double max_critical_point_dist_cells = 0;
  // (iv) per-boundary-cell distance to the nearest critical value
  double max_boundary_to_curve_dist = 0;
  double curve_sampling_resolution = 0;
  // (iii) heuristic curvature samples along the smoothed boundary polyline
  std::vector<double> curvature_samples;
  bool heuristic_items_flagged = true;  // (i) and (iii) are qualitative only
};

Conjecture1Report conjecture1_checks(const ShadowCloud& cloud,
                                     const CriticalValueCurves& curves);

/// CSV / PGM emission used by the command-line front end.
void write_cloud_csv(const ShadowCloud& cloud, const std::string& path);
void write_layers_csv(const ShadowCloud& cloud, const CriticalValueCurves& curves,
                      const std::string& dir_prefix);
void write_raster_pgm(const Raster& raster, const std::string& path);

}  // namespace polylab::shadow
