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

#include "polylab/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace polylab::shadow {

namespace {

// small dense complex solver for Vandermonde and Sylvester work
struct CMat {
  size_t n;
  std::vector<BigComplex> a;
  CMat(size_t nn, Prec bits) : n(nn), a(nn * nn, BigComplex(0.0, 0.0, bits)) {}
  BigComplex& operator()(size_t i, size_t j) { return a[i * n + j]; }
  const BigComplex& operator()(size_t i, size_t j) const { return a[i * n + j]; }
};

BigComplex cdet(CMat m) {
  size_t n = m.n;
  Prec bits = n ? m(0, 0).precision_bits() : kMinPrecision;
  BigComplex det(1.0, 0.0, bits);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    BigReal best = abs(m(k, k));
    for (size_t i = k + 1; i < n; ++i)
      if (abs(m(i, k)) > best) {
        best = abs(m(i, k));
        piv = i;
      }
    if (best.is_zero()) return BigComplex(0.0, 0.0, bits);
    if (piv != k) {
      for (size_t j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
      det = -det;
    }
    det = det * m(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      BigComplex f = m(i, k) / m(k, k);
      for (size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

std::vector<BigComplex> csolve(CMat m, std::vector<BigComplex> b) {
  size_t n = m.n;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    BigReal best = abs(m(k, k));
    for (size_t i = k + 1; i < n; ++i)
      if (abs(m(i, k)) > best) {
        best = abs(m(i, k));
        piv = i;
      }
    if (piv != k) {
      for (size_t j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
      std::swap(b[k], b[piv]);
    }
    for (size_t i = k + 1; i < n; ++i) {
      BigComplex f = m(i, k) / m(k, k);
      for (size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
      b[i] -= f * b[k];
    }
  }
  std::vector<BigComplex> x(n, BigComplex(0.0, 0.0, b[0].precision_bits()));
  for (size_t i = n; i-- > 0;) {
    BigComplex s = b[i];
    for (size_t j = i + 1; j < n; ++j) s -= m(i, j) * x[j];
    x[i] = s / m(i, i);
  }
  return x;
}

}  // namespace

Polynomial q_poly(const Polynomial& p, unsigned n, unsigned m) {
  if (p.degree() < 1) throw DegenerateInput("q_poly: nonconstant P required");
  unsigned d = static_cast<unsigned>(p.degree());
  if (m > n * d) throw std::invalid_argument("q_poly: m <= n deg(P) required");
  return differentiate(p.pow(n), m);
}

void Raster::mark(double x, double y) {
  long ix = static_cast<long>(std::floor((x - x0) / h));
  long iy = static_cast<long>(std::floor((y - y0) / h));
  ix = std::clamp(ix, 0L, static_cast<long>(width) - 1);
  iy = std::clamp(iy, 0L, static_cast<long>(height) - 1);
  occupied[static_cast<size_t>(iy) * width + static_cast<size_t>(ix)] = 1;
}

bool Raster::has_unoccupied_4neighbor(size_t ix, size_t iy) const {
  if (ix == 0 || iy == 0 || ix + 1 >= width || iy + 1 >= height) return true;
  return !cell(ix - 1, iy) || !cell(ix + 1, iy) || !cell(ix, iy - 1) ||
         !cell(ix, iy + 1);
}

std::vector<std::pair<size_t, size_t>> Raster::boundary_cells() const {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t iy = 0; iy < height; ++iy)
    for (size_t ix = 0; ix < width; ++ix)
      if (cell(ix, iy) && has_unoccupied_4neighbor(ix, iy)) out.emplace_back(ix, iy);
  return out;
}

size_t Raster::occupied_count() const {
  size_t c = 0;
  for (uint8_t v : occupied) c += v;
  return c;
}

ShadowCloud build_shadow(const Polynomial& p, unsigned n_max, size_t raster_cells,
                         bool figure_mode) {
  long d = p.degree();
  if (d < 2) throw DegenerateInput("build_shadow: deg P >= 2 required");
  if (n_max * static_cast<unsigned>(d) > 400)
    throw std::invalid_argument("build_shadow: n_max * deg(P) <= 400 required");

  ShadowCloud cloud;
  cloud.base = p;
  cloud.n_max = n_max;
  cloud.figure_mode = figure_mode;

  RootSet base_roots = find_roots_adaptive(p);
  cloud.base_roots = base_roots.flattened();
  cloud.hull = ConvexHull::of(cloud.base_roots);
  Prec bits = p.precision_bits();
  BigComplex com(0.0, 0.0, bits);
  for (const auto& z : cloud.base_roots) com += z;
  cloud.center_of_mass = com / BigReal(static_cast<double>(cloud.base_roots.size()), bits);

  Polynomial dp = differentiate(p, 1);
  if (dp.degree() >= 1) {
    RootSet crit = find_roots_adaptive(dp);
    for (const auto& r : crit.roots) cloud.critical_points.push_back(r.location);
  }

  // raster over the hull bounding box (small margin so edges are interior)
  double diam = std::max(cloud.hull.diameter(), 1e-9);
  double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
  for (const auto& v : cloud.hull.vertices()) {
    min_x = std::min(min_x, v[0]);
    max_x = std::max(max_x, v[0]);
    min_y = std::min(min_y, v[1]);
    max_y = std::max(max_y, v[1]);
  }
  double h = diam / static_cast<double>(raster_cells);
  cloud.raster.h = h;
  cloud.raster.x0 = min_x - 2 * h;
  cloud.raster.y0 = min_y - 2 * h;
  cloud.raster.width = static_cast<size_t>((max_x - min_x) / h) + 5;
  cloud.raster.height = static_cast<size_t>((max_y - min_y) / h) + 5;
  cloud.raster.occupied.assign(cloud.raster.width * cloud.raster.height, 0);

  auto add_point = [&](const BigComplex& z) {
    if (cloud.hull.signed_distance(z) < -1e-10)
      throw ContainmentViolation("shadow point escapes the hull of the roots of P");
    cloud.points.push_back(z);
    cloud.raster.mark(z.re().to_double(), z.im().to_double());
  };

  unsigned n_lo = figure_mode ? n_max : 1;
  // factored sweep: R_0 = 1; R_{m+1} = (n-m) P' R_m + P R_m' (m < n), then
  // plain derivatives once the P-power is exhausted
  for (unsigned n = n_lo; n <= n_max; ++n) {
    Polynomial r = Polynomial::one(bits);
    unsigned md = n * static_cast<unsigned>(d);
    for (unsigned m = 0; m < md; ++m) {
      if (m > 0) {
        if (m <= n) {
          BigReal c(static_cast<double>(n - (m - 1)), bits);
          r = dp * r * BigComplex(c) + p * differentiate(r, 1);
        } else {
          r = differentiate(r, 1);
        }
        // normalize to unit coefficient norm: roots are scale-invariant
        BigReal nrm = r.coeff_inf_norm();
        if (!nrm.is_zero()) r = r * BigComplex(BigReal(1.0, bits) / nrm);
      }
      if (m < n)
        for (const auto& z : cloud.base_roots) add_point(z);
      if (r.degree() >= 1) {
        Prec root_bits = std::max<Prec>(bits, 96 + 2 * r.degree());
        RootSet rs = find_roots_adaptive(r.with_precision(root_bits));
        for (const auto& root : rs.roots) add_point(root.location.with_precision(bits));
      }
    }
  }
  return cloud;
}

std::vector<double> default_alpha_grid(unsigned degree, size_t samples) {
  std::vector<double> g(samples);
  for (size_t i = 0; i < samples; ++i)
    g[i] = static_cast<double>(degree) * static_cast<double>(i) /
           static_cast<double>(samples - 1);
  return g;
}

CriticalValueCurves f_alpha_critical_values(const Polynomial& p,
                                            const std::vector<double>& alpha_grid) {
  if (p.degree() < 2) throw DegenerateInput("f_alpha: deg P >= 2 required");
  Prec bits = p.precision_bits();
  Polynomial dp = differentiate(p, 1);
  Polynomial ddp = differentiate(p, 2);
  Polynomial dp2 = dp * dp;
  Polynomial pddp = p * ddp;
  BigReal pole_tol = dp.coeff_inf_norm() * 1e-8;

  CriticalValueCurves out;
  out.alpha_grid = alpha_grid;
  for (double alpha : alpha_grid) {
    std::vector<BigComplex> vals, pts;
    if (alpha != 0.0) {
      BigReal a(alpha, bits);
      Polynomial num = dp2 * BigComplex(BigReal(1.0, bits) - a) + pddp * BigComplex(a);
      if (num.degree() >= 1) {
        RootSet rs = find_roots_adaptive(num);
        for (const auto& r : rs.roots) {
          BigComplex dval = dp.eval(r.location);
          if (abs(dval) <= pole_tol) continue;  // pole of F_alpha, not critical
          BigComplex value = r.location - BigComplex(a) * p.eval(r.location) / dval;
          pts.push_back(r.location);
          vals.push_back(value);
        }
      }
    }
    out.values.push_back(std::move(vals));
    out.critical_points.push_back(std::move(pts));
  }
  return out;
}

PhiBoundary phi_multiroot_boundary(const Polynomial& p, size_t u_samples,
                                   const std::vector<double>& alpha_grid) {
  if (p.degree() < 2) throw DegenerateInput("phi_multiroot: deg P >= 2 required");
  Prec bits = p.precision_bits();
  long d = p.degree();
  Polynomial dp = differentiate(p, 1);
  double scale = 0;
  for (const auto& c : p.coeffs()) scale = std::max(scale, abs(c).to_double());

  RootSet base = find_roots_adaptive(p);
  double radius = 1.0;
  for (const auto& r : base.roots) radius = std::max(radius, abs(r.location).to_double());
  BigReal sample_radius(2.0 * radius + 2.0, bits);

  PhiBoundary out;
  out.alpha_grid = alpha_grid;
  for (double alpha : alpha_grid) {
    std::vector<BigComplex> vals;
    if (alpha == 0.0) {
      out.per_alpha.push_back(std::move(vals));
      continue;  // Phi = (u - z) P'(z): only pole artifacts, F_0 = id
    }
    BigReal a(alpha, bits);
    // Phi = A(z) + u B(z), A = alpha P - z P', B = P'
    Polynomial A = p * BigComplex(a) - Polynomial::variable(bits) * dp;
    const Polynomial& B = dp;
    Polynomial Ad = differentiate(A, 1);
    Polynomial Bd = differentiate(B, 1);

    auto coeff_at = [&](const Polynomial& q, long k) {
      return k >= 0 && k <= q.degree() ? q.coeff(static_cast<size_t>(k))
                                       : BigComplex(0.0, 0.0, bits);
    };
    long df = std::max(A.degree(), B.degree());
    long dg = std::max(Ad.degree(), Bd.degree());
    // drop formally-zero leading terms (alpha = d makes the top coefficient
    // of Phi vanish identically)
    {
      BigReal tiny(1e-25 * std::max(1.0, scale), bits);
      while (df > 0 && abs(A.coeff(static_cast<size_t>(df))) < tiny &&
             abs(B.coeff(static_cast<size_t>(df))) < tiny)
        --df;
      while (dg > 0 && abs(Ad.coeff(static_cast<size_t>(dg))) < tiny &&
             abs(Bd.coeff(static_cast<size_t>(dg))) < tiny)
        --dg;
    }
    if (df < 1 || dg < 0) {
      out.per_alpha.push_back(std::move(vals));
      continue;
    }
    size_t syl = static_cast<size_t>(df + dg);
    long deg_u_bound = df + dg;  // resultant degree in u is at most this
    size_t k_samples = u_samples > 0 ? u_samples : static_cast<size_t>(deg_u_bound) + 3;
    if (k_samples < static_cast<size_t>(deg_u_bound) + 1)
      k_samples = static_cast<size_t>(deg_u_bound) + 1;

    std::vector<BigComplex> us, dets;
    for (size_t j = 0; j < k_samples; ++j) {
      double theta = 2.0 * M_PI * (static_cast<double>(j) + 0.37) /
                     static_cast<double>(k_samples);
      BigComplex u = BigComplex::polar(sample_radius, BigReal(theta, bits));
      // Sylvester matrix of f = A + uB (deg df) and g = Ad + uBd (deg dg)
      CMat s(syl, bits);
      for (long row = 0; row < dg; ++row)
        for (long k = 0; k <= df; ++k)
          s(static_cast<size_t>(row), static_cast<size_t>(row + k)) =
              coeff_at(A, df - k) + u * coeff_at(B, df - k);
      for (long row = 0; row < df; ++row)
        for (long k = 0; k <= dg; ++k)
          s(static_cast<size_t>(dg + row), static_cast<size_t>(row + k)) =
              coeff_at(Ad, dg - k) + u * coeff_at(Bd, dg - k);
      us.push_back(u);
      dets.push_back(cdet(std::move(s)));
    }
    // interpolate D(u) through the samples (complex Vandermonde)
    size_t k = k_samples;
    CMat vand(k, bits);
    for (size_t i = 0; i < k; ++i) {
      BigComplex pw(1.0, 0.0, bits);
      for (size_t j = 0; j < k; ++j) {
        vand(i, j) = pw;
        pw = pw * us[i];
      }
    }
    std::vector<BigComplex> coeffs = csolve(std::move(vand), dets);
    Polynomial du(std::move(coeffs), Basis::Monomial, bits);
    if (du.degree() < 1) {
      out.degenerate = out.degenerate || du.is_zero();
      out.per_alpha.push_back(std::move(vals));
      continue;
    }
    RootSet rs = find_roots_adaptive(du);
    for (const auto& r : rs.roots) vals.push_back(r.location);
    out.per_alpha.push_back(std::move(vals));
  }
  return out;
}

Conjecture1Report conjecture1_checks(const ShadowCloud& cloud,
                                     const CriticalValueCurves& curves) {
  Conjecture1Report rep;
  double diam = std::max(cloud.hull.diameter(), 1e-12);

  // hypothesis gate: roots in convex position but not a regular polygon
  rep.roots_in_convex_position = true;
  for (const auto& z : cloud.base_roots) {
    double best = 1e300;
    for (const auto& v : cloud.hull.vertices())
      best = std::min(best, std::hypot(z.re().to_double() - v[0],
                                       z.im().to_double() - v[1]));
    if (best > 1e-9 * diam) rep.roots_in_convex_position = false;
  }
  const auto& verts = cloud.hull.vertices();
  if (verts.size() == cloud.base_roots.size() && verts.size() >= 3) {
    double cx = 0, cy = 0;
    for (const auto& v : verts) {
      cx += v[0];
      cy += v[1];
    }
    cx /= verts.size();
    cy /= verts.size();
    double r0 = std::hypot(verts[0][0] - cx, verts[0][1] - cy);
    bool regular = true;
    for (const auto& v : verts)
      if (std::fabs(std::hypot(v[0] - cx, v[1] - cy) - r0) > 1e-6 * diam)
        regular = false;
    if (regular) {
      // equal radii: also demand equal consecutive edge lengths
      double e0 = std::hypot(verts[1][0] - verts[0][0], verts[1][1] - verts[0][1]);
      for (size_t i = 0; i < verts.size(); ++i) {
        const auto& a = verts[i];
        const auto& b = verts[(i + 1) % verts.size()];
        if (std::fabs(std::hypot(b[0] - a[0], b[1] - a[1]) - e0) > 1e-6 * diam)
          regular = false;
      }
    }
    rep.roots_form_regular_polygon = regular;
  }
  rep.hypothesis_applies =
      rep.roots_in_convex_position && !rep.roots_form_regular_polygon &&
      cloud.base_roots.size() >= 3;

  // (ii) raster distance from critical points to the unoccupied complement
  const Raster& ra = cloud.raster;
  for (const auto& cp : cloud.critical_points) {
    double px = cp.re().to_double(), py = cp.im().to_double();
    double best = 1e300;
    for (size_t iy = 0; iy < ra.height; ++iy)
      for (size_t ix = 0; ix < ra.width; ++ix) {
        if (ra.cell(ix, iy)) continue;
        double cxx = ra.x0 + (static_cast<double>(ix) + 0.5) * ra.h;
        double cyy = ra.y0 + (static_cast<double>(iy) + 0.5) * ra.h;
        best = std::min(best, std::hypot(px - cxx, py - cyy));
      }
    double cells = best / ra.h;
    rep.critical_point_complement_dist_cells.push_back(cells);
    rep.max_critical_point_dist_cells =
        std::max(rep.max_critical_point_dist_cells, cells);
  }

  // (iv) boundary cells vs the critical-value curves
  std::vector<std::array<double, 2>> curve_pts;
  for (const auto& per_alpha : curves.values)
    for (const auto& v : per_alpha)
      curve_pts.push_back({v.re().to_double(), v.im().to_double()});
  double resolution = ra.h;
  for (size_t ai = 0; ai + 1 < curves.values.size(); ++ai) {
    // consecutive-alpha displacement as the curve sampling resolution
    for (const auto& v : curves.values[ai]) {
      double best = 1e300;
      for (const auto& w : curves.values[ai + 1])
        best = std::min(best, std::hypot((v.re() - w.re()).to_double(),
                                         (v.im() - w.im()).to_double()));
      if (best < 1e100) resolution = std::max(resolution, best);
    }
  }
  rep.curve_sampling_resolution = resolution;
  if (!curve_pts.empty()) {
    for (const auto& [ix, iy] : ra.boundary_cells()) {
      double cxx = ra.x0 + (static_cast<double>(ix) + 0.5) * ra.h;
      double cyy = ra.y0 + (static_cast<double>(iy) + 0.5) * ra.h;
      double best = 1e300;
      for (const auto& cp : curve_pts)
        best = std::min(best, std::hypot(cxx - cp[0], cyy - cp[1]));
      rep.max_boundary_to_curve_dist = std::max(rep.max_boundary_to_curve_dist, best);
    }
  }

  // (iii) heuristic curvature along a nearest-neighbor boundary polyline
  auto cells = ra.boundary_cells();
  if (cells.size() >= 8) {
    std::vector<std::array<double, 2>> path;
    std::vector<bool> used(cells.size(), false);
    size_t cur = 0;
    used[0] = true;
    path.push_back({static_cast<double>(cells[0].first), static_cast<double>(cells[0].second)});
    for (size_t step = 1; step < cells.size(); ++step) {
      double best = 1e300;
      size_t pick = cells.size();
      for (size_t i = 0; i < cells.size(); ++i) {
        if (used[i]) continue;
        double dd = std::hypot(static_cast<double>(cells[i].first) - path.back()[0],
                               static_cast<double>(cells[i].second) - path.back()[1]);
        if (dd < best) {
          best = dd;
          pick = i;
        }
      }
      if (pick == cells.size() || best > 5.0) break;  // next component
      used[pick] = true;
      cur = pick;
      path.push_back(
          {static_cast<double>(cells[pick].first), static_cast<double>(cells[pick].second)});
    }
    (void)cur;
    // moving-average smoothing, then circumradius curvature
    std::vector<std::array<double, 2>> smooth(path.size());
    for (size_t i = 0; i < path.size(); ++i) {
      double sx = 0, sy = 0;
      int cnt = 0;
      for (long j = -2; j <= 2; ++j) {
        long idx = static_cast<long>(i) + j;
        if (idx < 0 || idx >= static_cast<long>(path.size())) continue;
        sx += path[static_cast<size_t>(idx)][0];
        sy += path[static_cast<size_t>(idx)][1];
        ++cnt;
      }
      smooth[i] = {sx / cnt, sy / cnt};
    }
    for (size_t i = 4; i + 4 < smooth.size(); i += 4) {
      auto& a = smooth[i - 4];
      auto& b = smooth[i];
      auto& c = smooth[i + 4];
      double ab = std::hypot(b[0] - a[0], b[1] - a[1]);
      double bc = std::hypot(c[0] - b[0], c[1] - b[1]);
      double ca = std::hypot(a[0] - c[0], a[1] - c[1]);
      double cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
      double denom = ab * bc * ca;
      rep.curvature_samples.push_back(denom > 1e-12 ? 2.0 * cross / denom : 0.0);
    }
  }
  return rep;
}

void write_cloud_csv(const ShadowCloud& cloud, const std::string& path) {
  std::ofstream os(path);
  os << "re,im\n";
  for (const auto& z : cloud.points)
    os << z.re().str(17) << "," << z.im().str(17) << "\n";
}

void write_layers_csv(const ShadowCloud& cloud, const CriticalValueCurves& curves,
                      const std::string& dir_prefix) {
  write_cloud_csv(cloud, dir_prefix + "_points.csv");
  {
    std::ofstream os(dir_prefix + "_zeros.csv");
    os << "re,im\n";
    for (const auto& z : cloud.base_roots)
      os << z.re().str(17) << "," << z.im().str(17) << "\n";
  }
  {
    std::ofstream os(dir_prefix + "_critical_points.csv");
    os << "re,im\n";
    for (const auto& z : cloud.critical_points)
      os << z.re().str(17) << "," << z.im().str(17) << "\n";
  }
  {
    std::ofstream os(dir_prefix + "_center_of_mass.csv");
    os << "re,im\n";
    os << cloud.center_of_mass.re().str(17) << "," << cloud.center_of_mass.im().str(17)
       << "\n";
  }
  {
    std::ofstream os(dir_prefix + "_critical_values.csv");
    os << "alpha,re,im\n";
    for (size_t ai = 0; ai < curves.alpha_grid.size(); ++ai)
      for (const auto& v : curves.values[ai])
        os << curves.alpha_grid[ai] << "," << v.re().str(17) << "," << v.im().str(17)
           << "\n";
  }
}

void write_raster_pgm(const Raster& raster, const std::string& path) {
  std::ofstream os(path);
  os << "P2\n" << raster.width << " " << raster.height << "\n255\n";
  for (size_t iy = raster.height; iy-- > 0;) {
    for (size_t ix = 0; ix < raster.width; ++ix)
      os << (raster.cell(ix, iy) ? 0 : 255) << " ";
    os << "\n";
  }
}

}  // namespace polylab::shadow
