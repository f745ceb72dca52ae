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

#include "polylab/bigfloat.hpp"
#include "polylab/linalg.hpp"

namespace polylab {

struct QuadRule {
  std::vector<BigReal> nodes;    // ascending
  std::vector<BigReal> weights;
};

/// Gauss-Legendre rule on [-1,1] at the requested precision. Nodes are found
/// by Newton iteration on the three-term recurrence, seeded from the
/// Chebyshev approximation; results are cached per (n, bits).
const QuadRule& gauss_legendre(size_t n, Prec bits);

/// Affinely mapped copy of gauss_legendre onto [a, b].
QuadRule gauss_legendre_mapped(size_t n, const BigReal& a, const BigReal& b);

/// Barycentric weights for a distinct node set.
std::vector<BigReal> barycentric_weights(const std::vector<BigReal>& x);

/// Polynomial interpolation at x0 from node values via the barycentric
/// formula (exact pass-through when x0 hits a node).
BigReal barycentric_eval(const std::vector<BigReal>& x, const std::vector<BigReal>& w,
                         const std::vector<BigReal>& f, const BigReal& x0);

/// Spectral differentiation matrix on an arbitrary distinct node set:
/// (D f)(x_i) approximates f'(x_i) for the interpolating polynomial.
Matrix<BigReal> differentiation_matrix(const std::vector<BigReal>& x);

}  // namespace polylab
