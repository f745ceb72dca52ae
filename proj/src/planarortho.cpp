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

#include "polylab/planarortho.hpp"

#include <cmath>

#include "polylab/linalg.hpp"
#include "polylab/quadrature.hpp"

namespace polylab::planarortho {

ExternalField ExternalField::radial_gauss(Prec bits) {
  ExternalField f;
  f.kind_ = Kind::Radial;
  f.bits_ = bits;
  f.check_growth();
  return f;
}

ExternalField ExternalField::gauss_plus_log(const BigReal& c, const BigComplex& a) {
  if (!(c > 0.0)) throw std::invalid_argument("gauss_plus_log: c > 0 required");
  if (abs(a).is_zero()) throw std::invalid_argument("gauss_plus_log: a != 0 required");
  ExternalField f;
  f.kind_ = Kind::GaussPlusLog;
  f.bits_ = std::max<Prec>(256, std::max(c.precision_bits(), a.precision_bits()));
  f.c_ = c.with_precision(f.bits_);
  f.a_ = a.with_precision(f.bits_);
  f.check_growth();
  return f;
}

ExternalField ExternalField::custom(std::function<BigReal(const BigComplex&)> fn,
                                    Prec bits) {
  ExternalField f;
  f.kind_ = Kind::Custom;
  f.bits_ = bits;
  f.fn_ = std::move(fn);
  f.check_growth();
  return f;
}

BigReal ExternalField::eval(const BigComplex& z) const {
  switch (kind_) {
    case Kind::Radial:
      return norm(z);
    case Kind::GaussPlusLog:
      return norm(z) - BigReal(2.0, bits_) * c_ * log(abs(z - a_));
    case Kind::Custom:
      return fn_(z);
  }
  return BigReal(0.0, bits_);
}

void ExternalField::check_growth(double r_max) {
  double prev = -1e300;
  bool increasing_tail = true;
  for (double r = 1.0; r <= r_max; r *= 2.0) {
    // sample a few angles; the growth condition is radial in spirit
    double worst = 1e300;
    for (double theta : {0.0, 1.3, 2.9, 4.4}) {
      BigComplex z = BigComplex::polar(BigReal(r, bits_), BigReal(theta, bits_));
      worst = std::min(worst, (eval(z) - log(BigReal(1.0 + r, bits_))).to_double());
    }
    if (r >= 4.0 && worst <= prev) increasing_tail = false;
    prev = worst;
  }
  if (!increasing_tail)
    throw std::invalid_argument("external field: growth condition fails on the test grid");
  growth_checked_ = true;
}

namespace {

// upper envelope of e^{-nV(z)} |z|^(2n+1) over the angle at radius r
double weighted_envelope(const ExternalField& v, unsigned n, double r) {
  double log_term;
  switch (v.kind()) {
    case ExternalField::Kind::Radial:
      log_term = -static_cast<double>(n) * r * r;
      break;
    case ExternalField::Kind::GaussPlusLog: {
      double amag = abs(v.log_center()).to_double();
      double c = v.log_charge().to_double();
      log_term = -static_cast<double>(n) * r * r +
                 2.0 * static_cast<double>(n) * c * std::log(r + amag);
      break;
    }
    case ExternalField::Kind::Custom: {
      double worst = -1e300;
      for (double theta : {0.0, 0.9, 2.1, 3.3, 4.7, 5.8}) {
        BigComplex z = BigComplex::polar(BigReal(r, v.precision_bits()),
                                         BigReal(theta, v.precision_bits()));
        worst = std::max(worst, -v.eval(z).to_double() * static_cast<double>(n));
      }
      log_term = worst;
      break;
    }
    default:
      log_term = 0;
  }
  return log_term + (2.0 * n + 1.0) * std::log(std::max(r, 1e-300));
}

}  // namespace

PlanarQuadrature planar_quadrature(const ExternalField& v, unsigned n,
                                   int target_digits) {
  if (!v.growth_checked())
    throw std::invalid_argument("planar_quadrature: growth not verified");
  Prec bits = std::max<Prec>(v.precision_bits(), 256);

  // peak of the weighted degree-2n envelope, then the truncation radius
  double peak = -1e300;
  for (double r = 0.05; r <= 64.0; r *= 1.05)
    peak = std::max(peak, weighted_envelope(v, n, r));
  double need = peak - (static_cast<double>(target_digits) + 5.0) * std::log(10.0);
  double r_trunc = 0;
  for (double r = 0.5; r <= 512.0; r *= 1.02) {
    if (weighted_envelope(v, n, r) < need && r > 1.0) {
      r_trunc = r * 1.1;
      break;
    }
  }
  if (r_trunc == 0)
    throw TruncationFailure("planar_quadrature: field grows too slowly");

  size_t m_theta = 4 * n + 8;
  if (v.kind() == ExternalField::Kind::GaussPlusLog) {
    // angular refinement near arg(a): the weight is a trig polynomial only
    // when n c is an integer; refine the uniform rule otherwise
    double nc = static_cast<double>(n) * v.log_charge().to_double();
    if (std::fabs(nc - std::round(nc)) > 1e-12) m_theta *= 4;
  }

  auto build = [&](size_t m_r) {
    PlanarQuadrature q;
    q.n = n;
    q.target_digits = target_digits;
    q.r_trunc = r_trunc;
    q.radial_nodes = m_r;
    q.angular_nodes = m_theta;
    QuadRule radial = gauss_legendre_mapped(m_r, BigReal(0.0, bits), BigReal(r_trunc, bits));
    BigReal dtheta = pi(bits) * 2.0 / BigReal(static_cast<double>(m_theta), bits);
    q.nodes.reserve(m_r * m_theta);
    q.weights.reserve(m_r * m_theta);
    q.weighted.reserve(m_r * m_theta);
    for (size_t i = 0; i < m_r; ++i) {
      const BigReal& r = radial.nodes[i];
      BigReal wr = radial.weights[i] * r * dtheta;  // area weight r dr dtheta
      for (size_t j = 0; j < m_theta; ++j) {
        BigReal theta = dtheta * static_cast<double>(j);
        BigComplex z = BigComplex::polar(r, theta);
        BigReal w = wr;
        BigReal density = exp(-BigReal(static_cast<double>(n), bits) * v.eval(z));
        q.nodes.push_back(z);
        q.weights.push_back(w);
        q.weighted.push_back(w * density);
      }
    }
    return q;
  };

  auto top_moment = [&](const PlanarQuadrature& q) {
    BigReal acc(0.0, bits);
    for (size_t i = 0; i < q.nodes.size(); ++i)
      acc += q.weighted[i] * pow(norm(q.nodes[i]), static_cast<long>(n));
    return acc;
  };

  size_t m_r = std::max<size_t>(48, 2 * n);
  PlanarQuadrature q = build(m_r);
  BigReal moment = top_moment(q);
  BigReal tol = pow(BigReal(10.0, bits), -static_cast<long>(target_digits)) *
                max(abs(moment), BigReal(1e-300, bits));
  for (int round = 0;; ++round) {
    if (round >= 5) throw TruncationFailure("planar_quadrature: radial rule stalls");
    PlanarQuadrature q2 = build(2 * m_r);
    BigReal moment2 = top_moment(q2);
    if (abs(moment2 - moment) < tol) {
      return q2;  // keep the finer rule
    }
    m_r *= 2;
    q = std::move(q2);
    moment = moment2;
  }
}

PlanarOPResult monic_op(const ExternalField& v, unsigned n, const PlanarQuadrature& quad) {
  if (quad.n != n)
    throw std::invalid_argument("monic_op: quadrature built for a different n");
  Prec bits = std::max<Prec>(v.precision_bits(), 256);
  size_t m = quad.nodes.size();

  auto inner = [&](const std::vector<BigComplex>& f, const std::vector<BigComplex>& g) {
    BigReal re(0.0, bits), im(0.0, bits);
    for (size_t i = 0; i < m; ++i) {
      // w f conj(g)
      const BigComplex& a = f[i];
      const BigComplex& b = g[i];
      re += quad.weighted[i] * (a.re() * b.re() + a.im() * b.im());
      im += quad.weighted[i] * (a.im() * b.re() - a.re() * b.im());
    }
    return BigComplex(re, im);
  };

  std::vector<std::vector<BigComplex>> basis_vals;  // q_k at the nodes
  std::vector<std::vector<BigComplex>> basis_coef;
  std::vector<BigReal> norms2;

  std::vector<BigComplex> ones(m, BigComplex(1.0, 0.0, bits));
  basis_vals.push_back(ones);
  basis_coef.push_back({BigComplex(1.0, 0.0, bits)});
  norms2.push_back(inner(basis_vals[0], basis_vals[0]).re());
  if (norms2[0] <= 0.0) throw RankDeficiency("monic_op: degenerate weight");

  for (unsigned k = 0; k < n; ++k) {
    // v = z q_k
    std::vector<BigComplex> vals(m, BigComplex(0.0, 0.0, bits));
    for (size_t i = 0; i < m; ++i) vals[i] = quad.nodes[i] * basis_vals[k][i];
    std::vector<BigComplex> coef(basis_coef[k].size() + 1, BigComplex(0.0, 0.0, bits));
    for (size_t c = 0; c < basis_coef[k].size(); ++c) coef[c + 1] = basis_coef[k][c];
    // two Gram-Schmidt passes keep the loss of orthogonality at roundoff
    for (int pass = 0; pass < 2; ++pass) {
      for (unsigned j = 0; j <= k; ++j) {
        BigComplex h = inner(vals, basis_vals[j]) / norms2[j];
        if (h.is_zero()) continue;
        for (size_t i = 0; i < m; ++i) vals[i] -= h * basis_vals[j][i];
        for (size_t c = 0; c < basis_coef[j].size(); ++c) coef[c] -= h * basis_coef[j][c];
      }
    }
    BigReal nn = inner(vals, vals).re();
    BigReal scale = norm(quad.nodes[0]);  // representative magnitude
    (void)scale;
    if (!(nn > 0.0) || nn < norms2[0] * pow2(-static_cast<long>(bits) + 16, bits))
      throw RankDeficiency("monic_op: inner-product matrix numerically singular");
    basis_vals.push_back(std::move(vals));
    basis_coef.push_back(std::move(coef));
    norms2.push_back(nn);
  }

  PlanarOPResult out;
  out.n = n;
  out.p = Polynomial(basis_coef[n], Basis::Monomial, bits);
  // residuals against raw monomials z^k
  std::vector<BigComplex> monom(m, BigComplex(1.0, 0.0, bits));
  BigReal pnorm = sqrt(norms2[n]);
  for (unsigned k = 0; k < n; ++k) {
    if (k > 0)
      for (size_t i = 0; i < m; ++i) monom[i] *= quad.nodes[i];
    BigReal mono_norm = sqrt(inner(monom, monom).re());
    BigReal r = abs(inner(basis_vals[n], monom)) / (pnorm * mono_norm);
    out.residuals.push_back(r);
  }
  if (out.p.degree() >= 1) {
    RootSet rs = find_roots_adaptive(out.p);
    out.zeros = rs.flattened();
  }
  return out;
}

double wasserstein1(const std::vector<BigComplex>& a, const std::vector<BigComplex>& b) {
  if (a.empty() || b.empty()) return 0.0;
  size_t na = a.size(), nb = b.size();
  // transport LP: row sums 1/na, column sums 1/nb
  Matrix<double> e(na + nb, na * nb, 0.0);
  std::vector<double> rhs(na + nb, 0.0);
  std::vector<double> cost(na * nb, 0.0);
  for (size_t i = 0; i < na; ++i) rhs[i] = 1.0 / static_cast<double>(na);
  for (size_t j = 0; j < nb; ++j) rhs[na + j] = 1.0 / static_cast<double>(nb);
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < nb; ++j) {
      size_t var = i * nb + j;
      e(i, var) = 1.0;
      e(na + j, var) = 1.0;
      cost[var] = abs(a[i] - b[j]).to_double();
    }
  auto lp = simplex_min(e, rhs, cost);
  if (lp.status != LPStatus::Optimal) return -1.0;
  return lp.objective;
}

ZeroMeasureSequence zero_measure_sequence(const ExternalField& v,
                                          const std::vector<unsigned>& n_list,
                                          int target_digits) {
  ZeroMeasureSequence out;
  out.overlay_disk_radius = 1.0;
  out.overlay_approximate = v.kind() != ExternalField::Kind::Radial;
  const std::vector<BigComplex>* prev = nullptr;
  for (unsigned n : n_list) {
    PlanarQuadrature quad = planar_quadrature(v, n, target_digits);
    PlanarOPResult r = monic_op(v, n, quad);
    ZeroMeasureRow row;
    row.n = n;
    row.zeros = r.zeros;
    row.discrepancy_to_prev = prev ? wasserstein1(*prev, row.zeros) : 0.0;
    out.rows.push_back(std::move(row));
    prev = &out.rows.back().zeros;
  }
  return out;
}

}  // namespace polylab::planarortho
