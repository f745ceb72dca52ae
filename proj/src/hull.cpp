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

#include "polylab/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace polylab {

namespace {

double cross(const std::array<double, 2>& o, const std::array<double, 2>& a,
             const std::array<double, 2>& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double point_segment_distance(double px, double py, const std::array<double, 2>& a,
                              const std::array<double, 2>& b) {
  double vx = b[0] - a[0], vy = b[1] - a[1];
  double wx = px - a[0], wy = py - a[1];
  double vv = vx * vx + vy * vy;
  double t = vv > 0 ? std::clamp((wx * vx + wy * vy) / vv, 0.0, 1.0) : 0.0;
  double dx = px - (a[0] + t * vx), dy = py - (a[1] + t * vy);
  return std::hypot(dx, dy);
}

}  // namespace

ConvexHull ConvexHull::of(const std::vector<BigComplex>& points) {
  std::vector<std::array<double, 2>> p;
  p.reserve(points.size());
  for (const auto& z : points) p.push_back({z.re().to_double(), z.im().to_double()});
  return of(p);
}

ConvexHull ConvexHull::of(const std::vector<std::array<double, 2>>& points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: need >= 1 point");
  std::vector<std::array<double, 2>> p = points;
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  ConvexHull h;
  if (p.size() == 1) {
    h.verts_ = p;
    return h;
  }
  // Andrew monotone chain
  std::vector<std::array<double, 2>> hull(2 * p.size());
  size_t k = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
    hull[k++] = p[i];
  }
  size_t lower = k + 1;
  for (size_t i = p.size() - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
    hull[k++] = p[i];
  }
  hull.resize(k - 1);
  h.verts_ = std::move(hull);
  if (h.verts_.size() < 2 && p.size() >= 2) {
    // fully collinear input: keep the extreme segment
    h.verts_ = {p.front(), p.back()};
  }
  return h;
}

double ConvexHull::signed_distance(double x, double y) const {
  if (verts_.size() == 1)
    return -std::hypot(x - verts_[0][0], y - verts_[0][1]);
  if (verts_.size() == 2)
    return -point_segment_distance(x, y, verts_[0], verts_[1]);
  double inside = 1.0;
  double min_edge = std::numeric_limits<double>::infinity();
  size_t n = verts_.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& a = verts_[i];
    const auto& b = verts_[(i + 1) % n];
    double c = cross(a, b, {x, y});
    if (c < 0) inside = -1.0;
    min_edge = std::min(min_edge, point_segment_distance(x, y, a, b));
  }
  return inside * min_edge;
}

double ConvexHull::diameter() const {
  double d = 0;
  for (size_t i = 0; i < verts_.size(); ++i)
    for (size_t j = i + 1; j < verts_.size(); ++j)
      d = std::max(d, std::hypot(verts_[i][0] - verts_[j][0], verts_[i][1] - verts_[j][1]));
  return d;
}

}  // namespace polylab
