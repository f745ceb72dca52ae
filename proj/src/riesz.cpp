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

#include "polylab/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "polylab/linalg.hpp"
#include "polylab/quadrature.hpp"

namespace polylab::riesz {

double riesz_kernel(const RieszKernelSpec& spec, double r) {
  if (r <= 0) throw KernelSingularity("riesz kernel at zero distance");
  if (spec.s == 0.0) return -std::log(r);
  return 1.0 / (spec.s * std::pow(r, spec.s));
}

double point_energy(const RieszKernelSpec& spec, const std::vector<double>& flat,
                    unsigned d) {
  spec.validate();
  size_t n = flat.size() / d;
  double acc = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      double r2 = 0;
      for (unsigned k = 0; k < d; ++k) {
        double dd = flat[i * d + k] - flat[j * d + k];
        r2 += dd * dd;
      }
      acc += riesz_kernel(spec, std::sqrt(r2));
    }
  double nn = static_cast<double>(n);
  return 2.0 * acc / (nn * nn);
}

namespace {

// normalization of the angular measure: 1 / int_0^pi sin^(d-2)
double angular_norm(unsigned d) {
  double m = static_cast<double>(d) - 2.0;
  return std::exp(std::lgamma(m / 2.0 + 1.0) - std::lgamma((m + 1.0) / 2.0)) /
         std::sqrt(M_PI);
}

const QuadRule& gl16() { return gauss_legendre(16, 64); }

double panel_integral(const RieszKernelSpec& spec, double rho, double sigma,
                      double gap, double a, double b) {
  const QuadRule& q = gl16();
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0;
  double m = static_cast<double>(spec.d) - 2.0;
  for (size_t i = 0; i < q.nodes.size(); ++i) {
    double theta = mid + half * q.nodes[i].to_double();
    double w = half * q.weights[i].to_double();
    // cancellation-free: dist^2 = gap^2 + 4 rho sigma sin^2(theta/2)
    double sh = std::sin(0.5 * theta);
    double dist2 = gap * gap + 4.0 * rho * sigma * sh * sh;
    double dist = std::sqrt(std::max(dist2, 1e-300));
    acc += w * std::pow(std::sin(theta), m) * riesz_kernel(spec, dist);
  }
  return acc;
}

double shell_kernel_gap(const RieszKernelSpec& spec, double rho, double sigma,
                        double gap) {
  double acc = 0;
  double hi = M_PI;
  for (int j = 0; j < 1000; ++j) {
    double lo = hi * 0.5;
    double part = panel_integral(spec, rho, sigma, gap, lo, hi);
    acc += part;
    hi = lo;
    if (j >= 8 && std::fabs(part) <= 1e-18 * std::max(1e-300, std::fabs(acc))) break;
    if (hi < 1e-250) break;
  }
  return angular_norm(spec.d) * acc;
}

// d = 3 closed form with the radius gap carried explicitly (no cancellation)
double closed_d3_gap(const RieszKernelSpec& spec, double rho, double sigma,
                     double gap) {
  double s = spec.s;
  double sum = rho + sigma, diff = std::fabs(gap);
  if (s == 0.0) {
    auto g = [](double t) { return t <= 0.0 ? 0.0 : t * t * (std::log(t) - 0.5); };
    return -(g(sum) - g(diff)) / (4.0 * rho * sigma);
  }
  if (s == 2.0) {
    if (diff == 0.0) throw KernelSingularity("log-divergent diagonal at s = 2");
    return std::log(sum / diff) / (2.0 * s * rho * sigma);
  }
  double diff_pow = diff == 0.0 ? 0.0 : std::pow(diff, 2.0 - s);
  if (diff == 0.0 && 2.0 - s < 0)
    throw KernelSingularity("shell self-energy diverges for s >= 2 in d = 3");
  return (std::pow(sum, 2.0 - s) - diff_pow) / (2.0 * s * rho * sigma * (2.0 - s));
}

}  // namespace

double shell_kernel(const RieszKernelSpec& spec, double rho, double sigma) {
  spec.validate();
  if (rho <= 0 || sigma <= 0) {
    // a shell of radius zero is a point: distance is the other radius
    double r = std::max(rho, sigma);
    if (r <= 0) throw KernelSingularity("shell kernel at the origin pair");
    return riesz_kernel(spec, r);
  }
  double gap = std::fabs(rho - sigma) / std::max(rho, sigma);
  if (gap < 1e-14 && spec.s >= static_cast<double>(spec.d) - 1.0)
    throw KernelSingularity("shell self-energy diverges for s >= d-1");
  // geometric panels toward theta = 0 where the coincidence singularity sits
  return shell_kernel_gap(spec, rho, sigma, rho - sigma);
}

double shell_kernel_closed_d3(const RieszKernelSpec& spec, double rho, double sigma) {
  if (spec.d != 3) throw std::invalid_argument("closed form is for d = 3");
  return closed_d3_gap(spec, rho, sigma, rho - sigma);
}

double RadialDensitySolution::weight_sum() const {
  BigReal acc(0.0, 64);
  for (const auto& w : weights) acc += w;
  acc += point_mass_inner;
  acc += point_mass_outer;
  return acc.to_double();
}

std::vector<double> ball_radial_masses(const RieszKernelSpec& spec, double R,
                                       const std::vector<double>& edges) {
  spec.validate();
  double d = static_cast<double>(spec.d);
  double s = spec.s;
  if (!(s > d - 2.0)) throw std::invalid_argument("volumetric masses need s > d-2");
  // density c / (R^2 - r^2)^((d-s)/2), c = Gamma(1+s/2)/(R^s pi^(d/2) Gamma(1+(s-d)/2))
  double log_c = std::lgamma(1.0 + s / 2.0) - s * std::log(R) -
                 (d / 2.0) * std::log(M_PI) - std::lgamma(1.0 + (s - d) / 2.0);
  double c = std::exp(log_c);
  double omega = 2.0 * std::pow(M_PI, d / 2.0) / std::exp(std::lgamma(d / 2.0));
  // substitute r = R sin(phi): integrand omega c R^s sin^(d-1) cos^(1+s-d)
  const QuadRule& q = gauss_legendre(24, 64);
  std::vector<double> masses;
  for (size_t b = 0; b + 1 < edges.size(); ++b) {
    double phi_lo = std::asin(std::clamp(edges[b] / R, 0.0, 1.0));
    double phi_hi = std::asin(std::clamp(edges[b + 1] / R, 0.0, 1.0));
    double mid = 0.5 * (phi_lo + phi_hi), half = 0.5 * (phi_hi - phi_lo);
    double acc = 0;
    for (size_t i = 0; i < q.nodes.size(); ++i) {
      double phi = mid + half * q.nodes[i].to_double();
      double w = half * q.weights[i].to_double();
      acc += w * std::pow(std::sin(phi), d - 1.0) *
             std::pow(std::cos(phi), 1.0 + s - d);
    }
    masses.push_back(omega * c * std::pow(R, s) * acc);
  }
  return masses;
}

namespace {

// K matrix over shells (ideal spheres for s < d-1, thin annuli otherwise)
Matrix<double> shell_matrix(const RieszKernelSpec& spec, double r_in, double r_out,
                            size_t n_shells, std::vector<double>* radii_out,
                            double* width_out) {
  double h = (r_out - r_in) / static_cast<double>(n_shells);
  std::vector<double> radii(n_shells);
  for (size_t i = 0; i < n_shells; ++i)
    radii[i] = r_in + (static_cast<double>(i) + 0.5) * h;
  bool annuli = spec.s >= static_cast<double>(spec.d) - 1.0;
  *radii_out = radii;
  *width_out = annuli ? h : 0.0;

  bool d3 = spec.d == 3;
  auto kernel = [&](double u, double v) {
    return d3 ? shell_kernel_closed_d3(spec, u, v) : shell_kernel(spec, u, v);
  };
  auto kernel_gap = [&](double mid, double t) {
    return d3 ? closed_d3_gap(spec, mid - 0.5 * t, mid + 0.5 * t, t)
              : shell_kernel_gap(spec, mid - 0.5 * t, mid + 0.5 * t, t);
  };

  Matrix<double> k(n_shells, n_shells, 0.0);
  for (size_t i = 0; i < n_shells; ++i)
    for (size_t j = i; j < n_shells; ++j) {
      double val;
      if (!annuli) {
        val = kernel(radii[i], radii[j]);
      } else if (j > i + 1) {
        val = kernel(radii[i], radii[j]);  // separated: midpoint suffices
      } else {
        // averaged over the two annuli: (1/h^2) int L(t) kbar(|t|) dt with
        // the triangular overlap L(t) = max(0, h - |t - c|) and geometric
        // panels graded toward the singular difference t = 0
        double c = radii[j] - radii[i];  // 0 (diagonal) or h (adjacent)
        double mid = 0.5 * (radii[i] + radii[j]);
        const QuadRule& q = gl16();
        auto kbar = [&](double t) { return kernel_gap(mid, t); };
        double acc = 0;
        auto add_range = [&](double a, double b) {
          double m = 0.5 * (a + b), half = 0.5 * (b - a);
          for (size_t qq = 0; qq < q.nodes.size(); ++qq) {
            double t = m + half * q.nodes[qq].to_double();
            double w = half * q.weights[qq].to_double();
            double overlap = std::max(0.0, h - std::fabs(t - c));
            if (overlap <= 0 || std::fabs(t) < 1e-300) continue;
            acc += w * overlap * kbar(std::fabs(t));
          }
        };
        for (double side : {-1.0, 1.0}) {
          double extreme = side < 0 ? c - h : c + h;
          if (side * extreme <= 0) continue;
          double outer = std::fabs(extreme);
          while (outer > 1e-14 * h) {
            double inner = outer * 0.5;
            if (side > 0)
              add_range(inner, outer);
            else
              add_range(-outer, -inner);
            outer = inner;
          }
        }
        val = acc / (h * h);
      }
      k(i, j) = k(j, i) = val;
    }
  return k;
}

}  // namespace

RadialDensitySolution ball_equilibrium_density(const RieszKernelSpec& spec, double R,
                                               size_t n_shells) {
  spec.validate();
  double d = static_cast<double>(spec.d);
  RadialDensitySolution sol;
  if (spec.s <= d - 2.0) {
    // uniform surface measure on the boundary sphere
    sol.surface_branch = true;
    sol.shells = {BigReal(R, 128)};
    sol.weights = {BigReal(1.0, 128)};
    sol.energy = BigReal(shell_kernel(spec, R, R), 128);
    return sol;
  }
  std::vector<double> edges(n_shells + 1);
  for (size_t i = 0; i <= n_shells; ++i)
    edges[i] = R * static_cast<double>(i) / static_cast<double>(n_shells);
  std::vector<double> masses = ball_radial_masses(spec, R, edges);
  std::vector<double> radii;
  double width = R / static_cast<double>(n_shells);
  for (size_t i = 0; i < n_shells; ++i) {
    sol.shells.emplace_back(0.5 * (edges[i] + edges[i + 1]), 128);
    sol.weights.emplace_back(masses[i], 128);
    radii.push_back(0.5 * (edges[i] + edges[i + 1]));
  }
  sol.width = width;
  // discrete energy of the sampled density under the same shell matrix the
  // QP uses (apples-to-apples for validation)
  std::vector<double> rr;
  double ww;
  Matrix<double> k = shell_matrix(spec, 0.0, R, n_shells, &rr, &ww);
  double e = 0;
  for (size_t i = 0; i < n_shells; ++i)
    for (size_t j = 0; j < n_shells; ++j) e += masses[i] * k(i, j) * masses[j];
  sol.energy = BigReal(e, 128);
  return sol;
}

RadialDensitySolution minimize_radial_qp(const RieszKernelSpec& spec,
                                         const AnnulusConstraint& annulus,
                                         size_t n_shells) {
  spec.validate();
  if (!(annulus.r_outer > annulus.r_inner) || annulus.r_inner < 0)
    throw std::invalid_argument("annulus: 0 <= r < R required");
  std::vector<double> radii;
  double width;
  Matrix<double> k =
      shell_matrix(spec, annulus.r_inner, annulus.r_outer, n_shells, &radii, &width);

  // Lipschitz constant by power iteration
  std::vector<double> v(n_shells, 1.0 / std::sqrt(static_cast<double>(n_shells)));
  double lmax = 1.0;
  for (int it = 0; it < 60; ++it) {
    std::vector<double> kv = k.apply(v);
    double nn = std::sqrt(dot(kv, kv));
    if (nn == 0) break;
    for (size_t i = 0; i < n_shells; ++i) v[i] = kv[i] / nn;
    lmax = nn;
  }
  double step = 1.0 / (2.0 * lmax);

  auto energy_of = [&](const std::vector<double>& w) {
    std::vector<double> kw = k.apply(w);
    return dot(w, kw);
  };

  // monotone accelerated projected gradient (function-value safeguarded)
  std::vector<double> w(n_shells, 1.0 / static_cast<double>(n_shells));
  std::vector<double> y = w, w_prev = w;
  double t_acc = 1.0;
  double e_cur = energy_of(w);
  for (long iter = 0; iter < 30000; ++iter) {
    std::vector<double> g = k.apply(y);
    std::vector<double> cand(n_shells);
    for (size_t i = 0; i < n_shells; ++i) cand[i] = y[i] - 2.0 * step * g[i];
    cand = project_to_simplex(std::move(cand));
    double e_cand = energy_of(cand);
    if (e_cand > e_cur) {
      // restart the momentum at the current iterate (keeps monotonicity)
      y = w;
      t_acc = 1.0;
      std::vector<double> g2 = k.apply(y);
      for (size_t i = 0; i < n_shells; ++i) cand[i] = y[i] - 2.0 * step * g2[i];
      cand = project_to_simplex(std::move(cand));
      e_cand = energy_of(cand);
      if (e_cand > e_cur) break;  // converged to projection fixed point
    }
    double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_acc * t_acc));
    for (size_t i = 0; i < n_shells; ++i)
      y[i] = cand[i] + (t_acc - 1.0) / t_next * (cand[i] - w[i]);
    w_prev = w;
    w = cand;
    double delta = e_cur - e_cand;
    e_cur = e_cand;
    t_acc = t_next;
    if (iter > 200 && delta < 1e-15 * std::max(1.0, std::fabs(e_cur))) break;
  }

  RadialDensitySolution sol;
  sol.width = width;
  sol.energy = BigReal(e_cur, 128);
  sol.surface_branch = false;
  for (size_t i = 0; i < n_shells; ++i) {
    sol.shells.emplace_back(radii[i], 128);
    sol.weights.emplace_back(w[i] < 1e-6 ? 0.0 : w[i], 128);  // support threshold
  }
  // boundary masses: end shells that spike above their neighbors
  if (n_shells >= 3) {
    if (w.front() > 10.0 * (w[1] + 1e-12)) {
      sol.point_mass_inner = sol.weights.front();
      sol.weights.front() = BigReal(0.0, 128);
    }
    if (w.back() > 10.0 * (w[n_shells - 2] + 1e-12)) {
      sol.point_mass_outer = sol.weights.back();
      sol.weights.back() = BigReal(0.0, 128);
    }
  }
  return sol;
}

ParticleResult minimize_particles(const RieszKernelSpec& spec, unsigned n,
                                  const AnnulusConstraint& constraint,
                                  unsigned iterations, uint64_t seed,
                                  unsigned restarts) {
  spec.validate();
  if (n > 5000) throw std::invalid_argument("minimize_particles: N <= 5000");
  unsigned d = spec.d;
  double r_in = constraint.r_inner, r_out = constraint.r_outer;

  auto project = [&](std::vector<double>& x) {
    size_t count = x.size() / d;
    for (size_t i = 0; i < count; ++i) {
      double r2 = 0;
      for (unsigned k = 0; k < d; ++k) r2 += x[i * d + k] * x[i * d + k];
      double r = std::sqrt(r2);
      if (r < 1e-14) {
        if (r_in > 0) {
          x[i * d] = r_in;
          for (unsigned k = 1; k < d; ++k) x[i * d + k] = 0;
        }
        continue;
      }
      double clamped = std::clamp(r, r_in, r_out);
      if (clamped != r)
        for (unsigned k = 0; k < d; ++k) x[i * d + k] *= clamped / r;
    }
  };

  auto grad = [&](const std::vector<double>& x, std::vector<double>* g) {
    g->assign(x.size(), 0.0);
    size_t count = x.size() / d;
    double nn = static_cast<double>(count);
    for (size_t i = 0; i < count; ++i)
      for (size_t j = i + 1; j < count; ++j) {
        double r2 = 0;
        for (unsigned k = 0; k < d; ++k) {
          double dd = x[i * d + k] - x[j * d + k];
          r2 += dd * dd;
        }
        double r = std::sqrt(std::max(r2, 1e-300));
        double scale = -2.0 / (nn * nn) / std::pow(r, spec.s + 2.0);
        for (unsigned k = 0; k < d; ++k) {
          double dd = x[i * d + k] - x[j * d + k];
          (*g)[i * d + k] += scale * dd;
          (*g)[j * d + k] -= scale * dd;
        }
      }
  };

  ParticleResult best;
  best.energy = 1e300;
  for (unsigned restart = 0; restart < restarts; ++restart) {
    std::mt19937_64 rng(seed + 7919 * restart);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> x(static_cast<size_t>(n) * d);
    for (auto& v : x) v = u(rng) * r_out;
    project(x);
    double e = point_energy(spec, x, d);
    double step = 0.05 * r_out;
    std::vector<double> g, cand;
    for (unsigned it = 0; it < iterations; ++it) {
      grad(x, &g);
      double gn2 = dot(g, g);
      bool improved = false;
      for (int half = 0; half < 30; ++half) {
        cand = x;
        for (size_t i = 0; i < x.size(); ++i) cand[i] -= step * g[i];
        project(cand);
        double e2 = point_energy(spec, cand, d);
        if (e2 <= e - 1e-4 * step * gn2) {
          x.swap(cand);
          e = e2;
          step *= 1.3;
          improved = true;
          break;
        }
        step *= 0.5;
      }
      if (!improved && step * std::sqrt(gn2) < 1e-15 * r_out) break;
    }
    if (e < best.energy) {
      grad(x, &g);
      // projected gradient norm: radial component clipped on active bounds
      double pg = 0;
      for (unsigned i = 0; i < n; ++i) {
        double r2 = 0, dotrg = 0;
        for (unsigned k = 0; k < d; ++k) {
          r2 += x[i * d + k] * x[i * d + k];
          dotrg += x[i * d + k] * g[i * d + k];
        }
        double r = std::sqrt(r2);
        std::vector<double> gi(d);
        for (unsigned k = 0; k < d; ++k) gi[k] = g[i * d + k];
        if (r >= r_out - 1e-12 * r_out && dotrg < 0) {
          // outward push against the outer bound does not count
          for (unsigned k = 0; k < d; ++k) gi[k] -= dotrg / r2 * x[i * d + k];
        }
        if (r_in > 0 && r <= r_in + 1e-12 * r_out && dotrg > 0) {
          for (unsigned k = 0; k < d; ++k) gi[k] -= dotrg / r2 * x[i * d + k];
        }
        double acc = 0;
        for (unsigned k = 0; k < d; ++k) acc += gi[k] * gi[k];
        pg = std::max(pg, std::sqrt(acc));
      }
      best.points = x;
      best.energy = e;
      best.final_gradient_norm = pg;
    }
  }
  best.n = n;
  best.d = d;
  // radial histogram with sqrt(N) bins
  size_t bins = static_cast<size_t>(std::lround(std::sqrt(static_cast<double>(n))));
  bins = std::max<size_t>(bins, 4);
  best.bin_edges.resize(bins + 1);
  for (size_t b = 0; b <= bins; ++b)
    best.bin_edges[b] =
        r_in + (r_out - r_in) * static_cast<double>(b) / static_cast<double>(bins);
  best.radial_histogram.assign(bins, 0.0);
  for (unsigned i = 0; i < n; ++i) {
    double r2 = 0;
    for (unsigned k = 0; k < d; ++k) r2 += best.points[i * d + k] * best.points[i * d + k];
    double r = std::sqrt(r2);
    size_t b = std::min(bins - 1, static_cast<size_t>((r - r_in) / (r_out - r_in) *
                                                      static_cast<double>(bins)));
    best.radial_histogram[b] += 1.0;
  }
  return best;
}

HistogramComparison compare_histogram_to_density(const RieszKernelSpec& spec, double R,
                                                 const ParticleResult& particles,
                                                 unsigned resamples, uint64_t seed) {
  std::vector<double> expect_mass = ball_radial_masses(spec, R, particles.bin_edges);
  double n = static_cast<double>(particles.n);
  auto chi2_of = [&](const std::vector<double>& counts) {
    double acc = 0;
    for (size_t b = 0; b < expect_mass.size(); ++b) {
      double e = n * expect_mass[b];
      double d2 = counts[b] - e;
      acc += d2 * d2 / std::max(e, 1e-9);
    }
    return acc;
  };
  HistogramComparison out;
  out.chi2 = chi2_of(particles.radial_histogram);

  // inverse-CDF sampling from the per-bin masses (piecewise uniform in r)
  std::vector<double> cdf(expect_mass.size() + 1, 0.0);
  for (size_t b = 0; b < expect_mass.size(); ++b) cdf[b + 1] = cdf[b] + expect_mass[b];
  double total = cdf.back();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::vector<double> samples;
  samples.reserve(resamples);
  for (unsigned t = 0; t < resamples; ++t) {
    std::vector<double> counts(expect_mass.size(), 0.0);
    for (unsigned i = 0; i < particles.n; ++i) {
      double target = u01(rng) * total;
      size_t b =
          static_cast<size_t>(std::upper_bound(cdf.begin(), cdf.end(), target) -
                              cdf.begin());
      b = std::min(std::max<size_t>(b, 1) - 1, counts.size() - 1);
      counts[b] += 1.0;
    }
    samples.push_back(chi2_of(counts));
  }
  std::sort(samples.begin(), samples.end());
  out.quantile95 = samples[static_cast<size_t>(0.95 * (samples.size() - 1))];
  out.below_quantile = out.chi2 <= out.quantile95;
  return out;
}

}  // namespace polylab::riesz
