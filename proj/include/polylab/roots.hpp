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

#include "polylab/poly.hpp"

namespace polylab {

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Verdict { AllRealNegative, AllReal, HurwitzStable, Mixed };

const char* verdict_name(Verdict v);

struct Root {
  BigComplex location;
  unsigned multiplicity = 1;
};

/// Certified multiset of polynomial roots. Residuals are
/// |P(root)| / max(1, ||coeffs||_inf), each at most the certify tolerance.
struct RootSet {
  std::vector<Root> roots;
  std::vector<BigReal> residuals;
  Verdict verdict = Verdict::Mixed;
  bool borderline = false;
  BigReal tolerance_used;   // classification tolerance
  BigReal certify_tolerance;

  unsigned total_multiplicity() const {
    unsigned s = 0;
    for (const auto& r : roots) s += r.multiplicity;
    return s;
  }
  /// Root locations repeated per multiplicity.
  std::vector<BigComplex> flattened() const;
};

struct ClassifyResult {
  Verdict verdict;
  bool borderline;
};

/// Pure classification of a root multiset at tolerance tol:
///   AllRealNegative: |Im| <= tol and Re < -tol for every root;
///   HurwitzStable:   Re < -tol for every root;
///   AllReal:         |Im| <= tol for every root;
/// otherwise Mixed. Roots in the undecidable band (|Re| <= tol, or |Im| in
/// (tol, 2 tol]) force Mixed with the borderline flag.
ClassifyResult classify_zero_locus(const std::vector<Root>& roots, const BigReal& tol);
ClassifyResult classify_zero_locus(const RootSet& rs, const BigReal& tol);

BigReal default_certify_tolerance(Prec bits);

/// Aberth-Ehrlich simultaneous iteration with Newton polishing.
/// Deterministic: initial points on the Fujiwara-bound circle with fixed
/// angular offsets. Clustered roots are merged (radius 1e3 x residual bound)
/// and reported with summed multiplicity. Throws DegenerateInput for the
/// zero polynomial and NonConvergence when the iteration cap is reached at
/// the polynomial's precision (retry at higher precision in that case).
RootSet find_roots(const Polynomial& p, const BigReal& certify_tolerance);
RootSet find_roots(const Polynomial& p);

/// find_roots with automatic precision escalation (doubling, up to
/// max_doublings) on NonConvergence.
RootSet find_roots_adaptive(const Polynomial& p, int max_doublings = 3);

}  // namespace polylab
