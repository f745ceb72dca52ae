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

#include <functional>
#include <vector>

#include "polylab/poly.hpp"
#include "polylab/roots.hpp"

// Monic polynomials orthogonal against e^{-n V(z)} dA on the plane, their
// zero clouds, and the stabilization diagnostics of the normalized
// zero-counting measures.

namespace polylab::planarortho {

struct TruncationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RankDeficiency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// External field V on C with superlogarithmic growth.
class ExternalField {
 public:
  enum class Kind { Radial, GaussPlusLog, Custom };

  /// V(z) = |z|^2.
  static ExternalField radial_gauss(Prec bits = 256);
  /// V(z) = |z|^2 - 2 c log|z - a|, c > 0, a != 0.
  static ExternalField gauss_plus_log(const BigReal& c, const BigComplex& a);
  static ExternalField custom(std::function<BigReal(const BigComplex&)> fn, Prec bits);

  Kind kind() const { return kind_; }
  Prec precision_bits() const { return bits_; }
  const BigReal& log_charge() const { return c_; }
  const BigComplex& log_center() const { return a_; }
  BigReal eval(const BigComplex& z) const;
  bool growth_checked() const { return growth_checked_; }
  /// Samples V(r) - log(1+r) on a doubling radial grid; it must increase
  /// beyond the truncation scale.
  void check_growth(double r_max = 64.0);

 private:
  Kind kind_ = Kind::Radial;
  Prec bits_ = 256;
  BigReal c_;
  BigComplex a_;
  std::function<BigReal(const BigComplex&)> fn_;
  bool growth_checked_ = false;
};

/// Polar tensor rule: Gauss-Legendre radially on [0, R_trunc], trapezoidal
/// in the angle, with the weight e^{-n V} folded into `weighted`.
struct PlanarQuadrature {
  std::vector<BigComplex> nodes;
  std::vector<BigReal> weights;   // plain area weights (with the r Jacobian)
  std::vector<BigReal> weighted;  // weights * e^{-n V(node)}
  double r_trunc = 0;
  size_t radial_nodes = 0, angular_nodes = 0;
  int target_digits = 0;
  unsigned n = 0;
};

/// R_trunc is chosen so the weighted integrand of degree 2n is below
/// 10^-(digits+5) beyond it; the radial node count doubles until the top
/// moment is stable to 10^-digits. Throws TruncationFailure if the growth
/// is too slow for the requested accuracy.
PlanarQuadrature planar_quadrature(const ExternalField& v, unsigned n,
                                   int target_digits);

struct PlanarOPResult {
  unsigned n = 0;
  Polynomial p;  // monic of degree n
  std::vector<BigComplex> zeros;
  std::vector<BigReal> residuals;  // |<P_n, z^k>| / (||P_n|| ||z^k||), k < n
};

/// Arnoldi-style orthogonalization of the shifted sequence z q_k against the
/// discrete inner product, with a second re-orthogonalization pass; the
/// result stays monic by construction. Zeros via the certified root finder.
PlanarOPResult monic_op(const ExternalField& v, unsigned n, const PlanarQuadrature& quad);

struct ZeroMeasureRow {
  unsigned n = 0;
  std::vector<BigComplex> zeros;
  double discrepancy_to_prev = 0;  // 1-Wasserstein transport distance
};

struct ZeroMeasureSequence {
  std::vector<ZeroMeasureRow> rows;
  double overlay_disk_radius = 1.0;  // equilibrium-measure support (radial V)
  bool overlay_approximate = false;  // flagged for non-radial fields
};

ZeroMeasureSequence zero_measure_sequence(const ExternalField& v,
                                          const std::vector<unsigned>& n_list,
                                          int target_digits);

/// Exact 1-Wasserstein distance between two uniform discrete measures,
/// solved as a transport LP.
double wasserstein1(const std::vector<BigComplex>& a, const std::vector<BigComplex>& b);

}  // namespace polylab::planarortho
