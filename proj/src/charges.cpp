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

#include "polylab/charges.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace polylab::charges {

ChargeConfiguration ChargeConfiguration::coulomb(
    std::vector<std::vector<BigReal>> positions, std::vector<BigReal> charges) {
  ChargeConfiguration cfg;
  cfg.positions = std::move(positions);
  cfg.charges = std::move(charges);
  cfg.dim = cfg.positions.empty() ? 3u : static_cast<unsigned>(cfg.positions[0].size());
  cfg.s = BigReal(static_cast<double>(cfg.dim) - 2.0);
  cfg.validate();
  return cfg;
}

void ChargeConfiguration::validate() const {
  if (positions.size() != charges.size() || positions.empty())
    throw std::invalid_argument("charge configuration: positions/charges mismatch");
  for (const auto& p : positions)
    if (p.size() != dim) throw std::invalid_argument("charge configuration: bad dim");
  for (const auto& q : charges)
    if (q.is_zero()) throw std::invalid_argument("charge configuration: zero charge");
  double diam = diameter();
  double floor_gap = 1e-9 * std::max(diam, 1.0);
  for (size_t i = 0; i < positions.size(); ++i)
    for (size_t j = i + 1; j < positions.size(); ++j) {
      double dist = 0;
      for (unsigned k = 0; k < dim; ++k) {
        double dd = (positions[i][k] - positions[j][k]).to_double();
        dist += dd * dd;
      }
      if (std::sqrt(dist) <= floor_gap)
        throw std::invalid_argument("charge configuration: coincident charges");
    }
}

double ChargeConfiguration::diameter() const {
  double d = 0;
  for (size_t i = 0; i < positions.size(); ++i)
    for (size_t j = i + 1; j < positions.size(); ++j) {
      double acc = 0;
      for (unsigned k = 0; k < dim; ++k) {
        double dd = (positions[i][k] - positions[j][k]).to_double();
        acc += dd * dd;
      }
      d = std::max(d, std::sqrt(acc));
    }
  return d > 0 ? d : 1.0;
}

bool ChargeConfiguration::all_positive() const {
  for (const auto& q : charges)
    if (q.sign() <= 0) return false;
  return true;
}

namespace {

Prec cfg_bits(const ChargeConfiguration& cfg) {
  Prec p = kDefaultPrecision;
  for (const auto& q : cfg.charges) p = std::max(p, q.precision_bits());
  return p;
}

// r = |x - x_i| and the displacement, throwing at the singularity
BigReal displacement(const ChargeConfiguration& cfg, size_t i,
                     const std::vector<BigReal>& x, std::vector<BigReal>* diff) {
  Prec bits = cfg_bits(cfg);
  BigReal r2(0.0, bits);
  diff->assign(cfg.dim, BigReal(0.0, bits));
  for (unsigned k = 0; k < cfg.dim; ++k) {
    (*diff)[k] = x[k] - cfg.positions[i][k];
    r2 += (*diff)[k] * (*diff)[k];
  }
  BigReal r = sqrt(r2);
  if (r.to_double() < 1e-13 * std::max(1.0, cfg.diameter()))
    throw SingularPoint("field evaluation at a charge location");
  return r;
}

}  // namespace

BigReal field_potential(const ChargeConfiguration& cfg, const std::vector<BigReal>& x) {
  Prec bits = cfg_bits(cfg);
  BigReal acc(0.0, bits);
  std::vector<BigReal> diff;
  for (size_t i = 0; i < cfg.count(); ++i) {
    BigReal r = displacement(cfg, i, x, &diff);
    if (cfg.s.is_zero())
      acc += cfg.charges[i] * (-log(r));
    else
      acc += cfg.charges[i] / (cfg.s * pow(r, cfg.s));
  }
  return acc;
}

std::vector<BigReal> field_gradient(const ChargeConfiguration& cfg,
                                    const std::vector<BigReal>& x) {
  Prec bits = cfg_bits(cfg);
  std::vector<BigReal> g(cfg.dim, BigReal(0.0, bits));
  std::vector<BigReal> diff;
  for (size_t i = 0; i < cfg.count(); ++i) {
    BigReal r = displacement(cfg, i, x, &diff);
    BigReal scale = cfg.charges[i] / pow(r, cfg.s + 2.0);
    for (unsigned k = 0; k < cfg.dim; ++k) g[k] -= scale * diff[k];
  }
  return g;
}

Matrix<BigReal> field_hessian(const ChargeConfiguration& cfg,
                              const std::vector<BigReal>& x) {
  Prec bits = cfg_bits(cfg);
  Matrix<BigReal> h(cfg.dim, cfg.dim, BigReal(0.0, bits));
  std::vector<BigReal> diff;
  for (size_t i = 0; i < cfg.count(); ++i) {
    BigReal r = displacement(cfg, i, x, &diff);
    BigReal inv_s2 = cfg.charges[i] / pow(r, cfg.s + 2.0);
    BigReal inv_s4 = cfg.charges[i] * (cfg.s + 2.0) / pow(r, cfg.s + 4.0);
    for (unsigned a = 0; a < cfg.dim; ++a) {
      h(a, a) -= inv_s2;
      for (unsigned b = 0; b < cfg.dim; ++b) h(a, b) += inv_s4 * diff[a] * diff[b];
    }
  }
  return h;
}

const char* signature_name(HessianSignature s) {
  switch (s) {
    case HessianSignature::Saddle: return "saddle";
    case HessianSignature::Minimum: return "minimum";
    case HessianSignature::Maximum: return "maximum";
    case HessianSignature::Degenerate: return "degenerate";
  }
  return "?";
}

SearchBox default_search_box(const ChargeConfiguration& cfg) {
  SearchBox box;
  box.lo.assign(cfg.dim, 1e300);
  box.hi.assign(cfg.dim, -1e300);
  for (const auto& p : cfg.positions)
    for (unsigned k = 0; k < cfg.dim; ++k) {
      box.lo[k] = std::min(box.lo[k], p[k].to_double());
      box.hi[k] = std::max(box.hi[k], p[k].to_double());
    }
  double dilate = cfg.all_positive() ? 0.25 : 2.0;  // 3x total for mixed signs
  double diam = cfg.diameter();
  for (unsigned k = 0; k < cfg.dim; ++k) {
    double pad = dilate * diam + 0.1 * diam;
    box.lo[k] -= pad;
    box.hi[k] += pad;
  }
  return box;
}

EquilibriumReport find_equilibria(const ChargeConfiguration& cfg,
                                  unsigned seeds_per_axis, uint64_t seed) {
  return find_equilibria(cfg, default_search_box(cfg), seeds_per_axis,
                         BigReal(1e-12, cfg_bits(cfg)), seed);
}

EquilibriumReport find_equilibria(const ChargeConfiguration& cfg, const SearchBox& box,
                                  unsigned seeds_per_axis, const BigReal& newton_tol,
                                  uint64_t seed) {
  cfg.validate();
  Prec bits = cfg_bits(cfg);
  unsigned d = cfg.dim;
  size_t n = cfg.count();
  double diam = cfg.diameter();
  double dedup_radius = 1e-6 * diam;

  EquilibriumReport rep;
  rep.newton_tol = newton_tol;
  rep.box = box;
  rep.maxwell_bound = static_cast<unsigned>((n - 1) * (n - 1));

  // seed list: regular grid + deterministic random fill
  std::vector<std::vector<double>> seeds;
  std::vector<unsigned> idx(d, 0);
  bool grid_done = false;
  while (!grid_done) {
    std::vector<double> pt(d);
    for (unsigned k = 0; k < d; ++k)
      pt[k] = box.lo[k] + (box.hi[k] - box.lo[k]) *
                              (static_cast<double>(idx[k]) + 0.5) /
                              static_cast<double>(seeds_per_axis);
    seeds.push_back(pt);
    grid_done = true;
    for (unsigned k = 0; k < d; ++k) {
      if (++idx[k] < seeds_per_axis) {
        grid_done = false;
        break;
      }
      idx[k] = 0;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (size_t i = 0; i < 10 * n * n; ++i) {
    std::vector<double> pt(d);
    for (unsigned k = 0; k < d; ++k)
      pt[k] = box.lo[k] + (box.hi[k] - box.lo[k]) * u01(rng);
    seeds.push_back(pt);
  }
  rep.seeds_total = seeds.size();

  auto inside_wide = [&](const std::vector<BigReal>& x) {
    for (unsigned k = 0; k < d; ++k) {
      double span = box.hi[k] - box.lo[k];
      double v = x[k].to_double();
      if (v < box.lo[k] - span || v > box.hi[k] + span) return false;
    }
    return true;
  };

  std::vector<std::vector<BigReal>> found;
  for (const auto& seed_pt : seeds) {
    std::vector<BigReal> x;
    x.reserve(d);
    for (unsigned k = 0; k < d; ++k) x.emplace_back(seed_pt[k], bits);
    bool converged = false;
    try {
      for (int it = 0; it < 60; ++it) {
        std::vector<BigReal> g = field_gradient(cfg, x);
        BigReal gnorm = vec_norm(g);
        if (gnorm <= newton_tol) {
          converged = true;
          break;
        }
        Matrix<BigReal> h = field_hessian(cfg, x);
        std::vector<BigReal> rhs(d, BigReal(0.0, bits));
        for (unsigned k = 0; k < d; ++k) rhs[k] = -g[k];
        std::vector<BigReal> step;
        try {
          step = lu_solve(h, rhs);
        } catch (const std::runtime_error&) {
          break;  // singular Hessian: drop the seed
        }
        // keep steps desk-scale: cap at half the diameter
        BigReal slen = vec_norm(step);
        if (slen.to_double() > 0.5 * diam) {
          BigReal f = BigReal(0.5 * diam, bits) / slen;
          for (auto& v : step) v *= f;
        }
        for (unsigned k = 0; k < d; ++k) x[k] += step[k];
        if (!inside_wide(x)) break;
      }
    } catch (const SingularPoint&) {
      continue;  // walked into a charge
    }
    if (!converged || !inside_wide(x)) continue;
    ++rep.seeds_converged;
    // keep only points inside the stated box
    bool in_box = true;
    for (unsigned k = 0; k < d; ++k) {
      double v = x[k].to_double();
      if (v < box.lo[k] || v > box.hi[k]) in_box = false;
    }
    if (!in_box) continue;
    bool dup = false;
    for (const auto& y : found) {
      double dist = 0;
      for (unsigned k = 0; k < d; ++k) {
        double dd = (x[k] - y[k]).to_double();
        dist += dd * dd;
      }
      if (std::sqrt(dist) < dedup_radius) {
        dup = true;
        break;
      }
    }
    if (!dup) found.push_back(x);
  }

  for (const auto& x : found) {
    Equilibrium eq;
    eq.location = x;
    eq.gradient_norm = vec_norm(field_gradient(cfg, x));
    Matrix<BigReal> h = field_hessian(cfg, x);
    auto eig = sym_eigen(h, {.want_vectors = false});
    eq.hessian_eigenvalues = eig.values;
    BigReal hnorm(0.0, bits);
    for (const auto& lam : eig.values) hnorm = max(hnorm, abs(lam));
    int pos = 0, neg = 0, zero = 0;
    for (const auto& lam : eig.values) {
      if (abs(lam) <= hnorm * 1e-8)
        ++zero;
      else if (lam > 0.0)
        ++pos;
      else
        ++neg;
    }
    if (zero > 0)
      eq.signature = HessianSignature::Degenerate;
    else if (pos == static_cast<int>(d))
      eq.signature = HessianSignature::Minimum;
    else if (neg == static_cast<int>(d))
      eq.signature = HessianSignature::Maximum;
    else
      eq.signature = HessianSignature::Saddle;
    if (eq.signature == HessianSignature::Degenerate)
      rep.degenerate.push_back(std::move(eq));
    else
      rep.points.push_back(std::move(eq));
  }
  rep.count = static_cast<unsigned>(rep.points.size());
  rep.exceeds_bound = rep.count > rep.maxwell_bound;

  // continuum probe: many near-collinear points hint at a non-isolated set
  if (rep.points.size() > 50 && d >= 2) {
    size_t m = rep.points.size();
    std::vector<double> mean(d, 0.0);
    for (const auto& p : rep.points)
      for (unsigned k = 0; k < d; ++k) mean[k] += p.location[k].to_double() / m;
    Matrix<double> cov(d, d, 0.0);
    for (const auto& p : rep.points)
      for (unsigned a = 0; a < d; ++a)
        for (unsigned b = 0; b < d; ++b)
          cov(a, b) += (p.location[a].to_double() - mean[a]) *
                       (p.location[b].to_double() - mean[b]) / m;
    auto eig = sym_eigen(cov);
    // residual off the dominant direction
    double resid = 0;
    for (const auto& p : rep.points) {
      double along = 0, norm2 = 0;
      for (unsigned k = 0; k < d; ++k) {
        double c = p.location[k].to_double() - mean[k];
        along += c * eig.vectors(k, d - 1);
        norm2 += c * c;
      }
      resid = std::max(resid, std::sqrt(std::max(0.0, norm2 - along * along)));
    }
    rep.suspicious_continuum = resid < 1e-4 * diam;
  }
  return rep;
}

ExclusionCertificate certify_equilibria(const ChargeConfiguration& cfg,
                                        const SearchBox& box,
                                        const EquilibriumReport& report,
                                        int max_depth) {
  cfg.validate();
  unsigned d = cfg.dim;
  double s = cfg.s.to_double();
  double diam = cfg.diameter();
  ExclusionCertificate cert;

  struct Box {
    std::vector<double> lo, hi;
    int depth;
  };
  std::vector<Box> stack{{box.lo, box.hi, 0}};
  std::vector<Box> undecided;
  size_t processed = 0;
  const size_t box_budget = 400000;

  // double-precision center gradient; the exclusion margin absorbs rounding
  auto grad_center = [&](const std::vector<double>& c) {
    std::vector<double> g(d, 0.0);
    for (size_t i = 0; i < cfg.count(); ++i) {
      double r2 = 0;
      std::vector<double> diff(d);
      for (unsigned k = 0; k < d; ++k) {
        diff[k] = c[k] - cfg.positions[i][k].to_double();
        r2 += diff[k] * diff[k];
      }
      double r = std::sqrt(r2);
      double scale = cfg.charges[i].to_double() / std::pow(r, s + 2.0);
      for (unsigned k = 0; k < d; ++k) g[k] -= scale * diff[k];
    }
    double n2 = 0;
    for (double v : g) n2 += v * v;
    return std::sqrt(n2);
  };

  while (!stack.empty()) {
    Box b = stack.back();
    stack.pop_back();
    if (++processed > box_budget) {
      undecided.push_back(b);
      for (const auto& rest : stack) undecided.push_back(rest);
      ++cert.max_depth_hits;
      break;
    }
    std::vector<double> center(d);
    double radius2 = 0;
    for (unsigned k = 0; k < d; ++k) {
      center[k] = 0.5 * (b.lo[k] + b.hi[k]);
      double half = 0.5 * (b.hi[k] - b.lo[k]);
      radius2 += half * half;
    }
    double radius = std::sqrt(radius2);

    // distances from the box center to each charge
    std::vector<double> dist(cfg.count());
    for (size_t i = 0; i < cfg.count(); ++i) {
      double acc = 0;
      for (unsigned k = 0; k < d; ++k) {
        double dd = center[k] - cfg.positions[i][k].to_double();
        acc += dd * dd;
      }
      dist[i] = std::sqrt(acc);
    }

    bool excluded = false;
    // dominant-singularity bound: one charge overwhelms all others
    for (size_t i = 0; i < cfg.count() && !excluded; ++i) {
      double near = dist[i] + radius;
      double lower = std::fabs(cfg.charges[i].to_double()) / std::pow(near, s + 1.0);
      double upper = 0;
      bool ok = true;
      for (size_t j = 0; j < cfg.count(); ++j) {
        if (j == i) continue;
        double far = dist[j] - radius;
        if (far <= 0.05 * diam) {
          ok = false;
          break;
        }
        upper += std::fabs(cfg.charges[j].to_double()) / std::pow(far, s + 1.0);
      }
      if (ok && lower > 2.0 * upper && dist[i] + radius < 0.25 * diam) excluded = true;
    }
    // center-gradient Lipschitz bound: ||H_i||_2 <= |q_i| (s+1) / r^(s+2)
    if (!excluded) {
      bool clear = true;
      double lip = 0;
      for (size_t i = 0; i < cfg.count(); ++i) {
        double far = dist[i] - radius;
        if (far <= 1e-6 * diam) {
          clear = false;
          break;
        }
        lip += std::fabs(cfg.charges[i].to_double()) * (s + 1.0) /
               std::pow(far, s + 2.0);
      }
      if (clear && grad_center(center) > 1.2 * lip * radius) excluded = true;
    }

    if (excluded) {
      ++cert.boxes_excluded;
      continue;
    }
    if (b.depth >= max_depth) {
      ++cert.max_depth_hits;
      undecided.push_back(b);
      continue;
    }
    // split along the widest axis
    unsigned axis = 0;
    double widest = 0;
    for (unsigned k = 0; k < d; ++k)
      if (b.hi[k] - b.lo[k] > widest) {
        widest = b.hi[k] - b.lo[k];
        axis = k;
      }
    Box left = b, right = b;
    double mid = 0.5 * (b.lo[axis] + b.hi[axis]);
    left.hi[axis] = mid;
    right.lo[axis] = mid;
    left.depth = right.depth = b.depth + 1;
    stack.push_back(left);
    stack.push_back(right);
  }

  cert.boxes_undecided = undecided.size();
  // exhaustive when every undecided box lies near a reported equilibrium or
  // a charge (where no equilibrium can hide behind the singularity bound)
  cert.exhaustive = true;
  for (const auto& b : undecided) {
    std::vector<double> center(d);
    double radius2 = 0;
    for (unsigned k = 0; k < d; ++k) {
      center[k] = 0.5 * (b.lo[k] + b.hi[k]);
      double half = 0.5 * (b.hi[k] - b.lo[k]);
      radius2 += half * half;
    }
    double radius = std::sqrt(radius2);
    bool near = false;
    for (const auto& eq : report.points) {
      double acc = 0;
      for (unsigned k = 0; k < d; ++k) {
        double dd = center[k] - eq.location[k].to_double();
        acc += dd * dd;
      }
      if (std::sqrt(acc) < 4.0 * radius + 1e-3 * diam) near = true;
    }
    for (size_t i = 0; i < cfg.count() && !near; ++i) {
      double acc = 0;
      for (unsigned k = 0; k < d; ++k) {
        double dd = center[k] - cfg.positions[i][k].to_double();
        acc += dd * dd;
      }
      if (std::sqrt(acc) < 4.0 * radius + 1e-3 * diam) near = true;
    }
    if (!near) {
      cert.exhaustive = false;
      cert.unaccounted_centers.push_back(center);
    }
  }
  return cert;
}

}  // namespace polylab::charges
