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

#include <array>
#include <vector>

#include "polylab/bigfloat.hpp"

namespace polylab {

/// Convex hull of a planar point set with a signed-distance membership test.
/// Degenerate inputs yield segment or point hulls.
class ConvexHull {
 public:
  static ConvexHull of(const std::vector<BigComplex>& points);
  static ConvexHull of(const std::vector<std::array<double, 2>>& points);

  /// Counterclockwise vertex list (single point / two points when degenerate).
  const std::vector<std::array<double, 2>>& vertices() const { return verts_; }

  /// >= 0 inside or on the hull, negative outside (Euclidean distance).
  double signed_distance(double x, double y) const;
  double signed_distance(const BigComplex& z) const {
    return signed_distance(z.re().to_double(), z.im().to_double());
  }
  bool contains(const BigComplex& z, double tol) const {
    return signed_distance(z) >= -tol;
  }
  double diameter() const;

 private:
  std::vector<std::array<double, 2>> verts_;
};

}  // namespace polylab
