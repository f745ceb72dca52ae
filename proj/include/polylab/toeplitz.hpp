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

#include <optional>
#include <string>
#include <vector>

#include "polylab/poly.hpp"
#include "polylab/roots.hpp"

// Zero-location experiments for polynomials assembled from Toeplitz
// determinants of Pochhammer symbols, and for hypergeometric numerator
// polynomials A(x) with (d+1)F_d(a+m, b; a; x) = A(x) / (1-x)^(m+b).

namespace polylab::toeplitz {

struct DegreeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonPolynomialResidue : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite coefficient sequence f_0..f_n with cached hypothesis flags.
class CoefficientSequence {
 public:
  explicit CoefficientSequence(std::vector<BigReal> f);
  static CoefficientSequence binomial_row(unsigned n, Prec bits);

  const std::vector<BigReal>& f() const { return f_; }
  unsigned n() const { return static_cast<unsigned>(f_.size()) - 1; }
  Prec precision_bits() const { return bits_; }
  Polynomial generator() const;  // sum f_k z^k

  /// Roots of the generator are all real and negative (cached on first use).
  bool has_real_negative_zeros() const;
  /// All minors of order <= d of the Toeplitz matrix [f_{j-i}] are
  /// nonnegative; exhaustively enumerated, only supported for n <= 12.
  bool is_polya_frequency_of_order(unsigned d) const;

 private:
  std::vector<BigReal> f_;
  Prec bits_;
  mutable std::optional<bool> real_neg_;
};

/// P_n(z) = sum_k f_k f_{n-k} C(n,k) [ (z)_k (z)_{n-k} - (z+1)_k (z-1)_{n-k} ].
/// Requires n >= 2. The proved degree/positivity property (degree exactly
/// n-2) is asserted; a violation signals a bug and throws DegreeMismatch.
Polynomial toeplitz_poly(const CoefficientSequence& f);

/// Higher-order variant: sum over compositions k_1+...+k_r = n of the
/// multinomial times prod f_{k_i} times the r x r determinant with entries
/// (z + j - i)_{k_i}. Compositions are enumerated in colex order; the
/// determinant is expanded by exact polynomial cofactors for r <= 4 and by
/// fraction-free elimination beyond. Guard: composition count <= 1e7.
Polynomial toeplitz_poly_r(const CoefficientSequence& f, unsigned r);

enum class ConjectureStatus { Supported, CounterexampleFound, NotApplicable };

struct ConjectureOutcome {
  std::string tag;          // "C1", "C2", "C3"
  bool hypothesis_holds;
  ConjectureStatus status;
  Verdict conclusion;
  bool vacuous = false;     // conclusion polynomial has no zeros
  std::string detail;
};

/// Hypothesis check + conclusion verdict for conjectures C1 (P_n inherits
/// real negative zeros), C2 (same for P_n^r), C3 (Polya frequency of order
/// d >= r implies Hurwitz stability of P_n^r).
ConjectureOutcome conjecture_verdict(const CoefficientSequence& f, unsigned r,
                                     const std::string& which);

/// Parameters of (d+1)F_d(a_1+m_1..a_d+m_d, b; a_1..a_d; x).
struct HypergeometricSpec {
  std::vector<BigReal> a;       // all > 0
  std::vector<unsigned> m;      // all >= 1
  BigReal b;                    // > 0
  unsigned total_m() const {
    unsigned s = 0;
    for (unsigned v : m) s += v;
    return s;
  }
  void validate() const;
};

/// A(x) = (1-x)^(m+b) * (d+1)F_d(a+m, b; a; x), certified to be a
/// polynomial of degree <= m by checking that the guard coefficients
/// beyond degree m vanish. Throws NonPolynomialResidue otherwise.
Polynomial hypergeometric_numerator(const HypergeometricSpec& spec,
                                    unsigned guard_terms = 10);

/// Numerator polynomial N_{d,m} of dF_{d-1}(m+1..m+d; 2..d; x).
Polynomial narayana_polynomial(unsigned d, unsigned m, Prec bits);

struct NarayanaScanRow {
  unsigned m;
  long degree;
  Verdict verdict;
  bool borderline;
  bool as_expected;  // AllRealNegative or vacuous constant
};

std::vector<NarayanaScanRow> narayana_scan(unsigned d, unsigned m_max, Prec bits);

}  // namespace polylab::toeplitz
