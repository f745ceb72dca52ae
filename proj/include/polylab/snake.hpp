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
#include <optional>
#include <string>
#include <vector>

#include "polylab/poly.hpp"
#include "polylab/roots.hpp"

// Snake polynomials: degree-n polynomials oscillating maximally between a
// majorant envelope +-mu on [-1,1], located by a Remez-type exchange on the
// alternation points. Includes the Chebyshev-expansion sign classification
// and the Markov / Duffin-Schaeffer extremal quantities.

namespace polylab::snake {

struct NoConvergence : std::runtime_error {
  explicit NoConvergence(long iters)
      : std::runtime_error("snake exchange: no convergence after " +
                           std::to_string(iters) + " iterations"),
        iterations(iters) {}
  long iterations;
};
struct InfeasibleMajorant : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InteriorZeroUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LPInfeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BracketInverted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class MajorantTag { One, SemiCircle, Parabola, Sqrt2x2x1, AbsOneMinus2x2, UserAbs, UserSqrt };

/// Nonnegative envelope on [-1,1]: a builtin tag, |q(x)|, or sqrt(q(x)) for a
/// user polynomial q. Nonnegativity is verified on a 10^4-point
/// Chebyshev-density grid at construction; smoothness flags are sampled.
class Majorant {
 public:
  static Majorant builtin(MajorantTag tag, Prec bits = kDefaultPrecision);
  static Majorant user_abs(Polynomial q);
  static Majorant user_sqrt(Polynomial q);

  MajorantTag tag() const { return tag_; }
  Prec precision_bits() const { return bits_; }
  BigReal eval(const BigReal& x) const;
  double eval_d(double x) const { return eval(BigReal(x, bits_)).to_double(); }

  bool is_even() const { return even_; }
  bool is_convex() const { return convex_; }
  /// Sampled zeros of mu on [-1,1] (includes endpoints when mu vanishes there).
  const std::vector<double>& vanishes_at() const { return zeros_; }
  bool has_interior_zero() const;
  /// Polynomial factor of mu vanishing on [-1,1] (Abs-type majorants only):
  /// mu = |factor| * nu with nu > 0; empty when no reduction applies.
  const std::optional<Polynomial>& reducible_factor() const { return factor_; }
  const std::optional<Polynomial>& reduced_abs_poly() const { return reduced_; }
  std::string name() const;

 private:
  Majorant() = default;
  void analyze();
  MajorantTag tag_ = MajorantTag::One;
  Prec bits_ = kDefaultPrecision;
  Polynomial q_;  // payload for user kinds
  bool even_ = false, convex_ = false;
  std::vector<double> zeros_;
  std::optional<Polynomial> factor_;   // product of (x - z) over zeros in [-1,1]
  std::optional<Polynomial> reduced_;  // q / factor for Abs kinds
};

struct SnakeResult {
  Polynomial omega;                          // monomial basis
  std::vector<BigReal> alternation_points;   // decreasing touch points
  BigReal residual;
  Polynomial cheb;                           // omega in the Chebyshev basis
  unsigned n = 0;                            // requested degree bound
  bool degenerate_touch_count = false;       // fewer than n+1 distinct touches
  long exchange_iterations = 0;
};

/// Remez-type exchange: interpolate through alternating envelope values at
/// the reference points, locate the worst violation of |omega| <= mu, and
/// exchange sign-consistently until the violation is below tol. Majorants
/// whose zero set on [-1,1] is carried by a polynomial factor are reduced
/// first (the factor is divided out and the subproblem solved). Orientation:
/// omega = +mu at the first non-degenerate touch.
SnakeResult solve_snake(const Majorant& mu, unsigned n, const BigReal& tol);

enum class ChebPattern { NonNegative, SignAlternating, Neither };
const char* cheb_pattern_name(ChebPattern p);

struct ChebPatternResult {
  ChebPattern pattern;
  long first_violation = -1;  // index pair (i, i+1) start for Neither
};

/// Sign classification of the Chebyshev coefficients; entries below
/// tol * ||a||_inf count as zero and are compatible with both patterns.
ChebPatternResult cheb_sign_pattern(const SnakeResult& sr, const BigReal& tol);

/// Sup norm of p (or a derivative) on [-1,1]: dense Chebyshev grid plus
/// ternary refinement.
BigReal sup_norm(const Polynomial& p, size_t grid = 4096);

/// Duffin-Schaeffer value D*: when the n+1 alternation points all carry a
/// positive envelope value, p is pinned by its values there and the supremum
/// is the weighted l1 norm of the k-th Lagrange derivative row, maximized
/// over x0 (Lagrange derivatives via barycentric differentiation matrices).
/// When fewer than n+1 points carry a positive envelope (the majorant
/// vanishes on part of delta*, as in the classical counterexample
/// majorants), the constraint set no longer bounds p and the supremum is
/// +infinity, which is returned. pin_zero_envelope = true instead reads
/// |p| <= 0 as an equality pin and evaluates the finite formula.
BigReal duffin_schaeffer_value(const Majorant& mu, const SnakeResult& sr, unsigned k,
                               bool pin_zero_envelope = false);

struct MarkovBracket {
  BigReal lower;  // ||omega^(k)|| (snake candidate)
  BigReal upper;  // grid-relaxed LP value
  size_t grid_size;
};

/// Bracket for the Markov constant M_{k,mu}: snake derivative norm from
/// below, grid-relaxed LP (maximize p^(k)(x0) subject to |p(x_j)| <= mu(x_j))
/// from above. The grid is auto-refined once if the bracket inverts.
MarkovBracket markov_bracket(const Majorant& mu, unsigned n, unsigned k,
                             size_t grid_size);

struct EqualityProbe {
  BigReal markov_lower, markov_upper;
  BigReal ds_value;
  BigReal omega_deriv_norm;
  ChebPatternResult pattern;
  bool equality_holds;          // all three coincide within tolerance
  bool implication_consistent;  // good pattern => equality
  unsigned n, k;
};

/// The three extremal quantities side by side with the sign pattern and the
/// pattern=>equality implication flag.
EqualityProbe equality_probe(const Majorant& mu, unsigned n, unsigned k);

}  // namespace polylab::snake
