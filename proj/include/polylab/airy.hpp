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

#include "polylab/bigfloat.hpp"

namespace polylab {

struct RangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Airy Ai(x): Maclaurin series on the core interval, exponentially decaying
/// asymptotic series for large positive x, oscillatory asymptotic pair for
/// large negative x. Valid for |x| <= 200; evaluated with enough internal
/// guard bits that the result is accurate at x's precision (>= 1e-14
/// relative at 53+ bits, absolute where Ai underflows).
BigReal airy_ai(const BigReal& x);
BigReal airy_ai_prime(const BigReal& x);

struct AiryPair {
  BigReal ai, ai_prime;
};
AiryPair airy_both(const BigReal& x);

/// Airy kernel by the closed form
///   (Ai(x) Ai'(y) - Ai'(x) Ai(y)) / (x - y),
/// with the confluent diagonal limit Ai'(x)^2 - x Ai(x)^2.
BigReal airy_kernel(const BigReal& x, const BigReal& y);

/// Oracle mode: direct quadrature of the defining integral
/// int_0^inf Ai(x+t) Ai(y+t) dt, truncated and panelled for the requested
/// number of correct digits.
BigReal airy_kernel_integral(const BigReal& x, const BigReal& y, int target_digits);

}  // namespace polylab
