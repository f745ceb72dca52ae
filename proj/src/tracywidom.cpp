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

#include "polylab/tracywidom.hpp"

#include <cmath>

#include "polylab/quadrature.hpp"

namespace polylab::tracywidom {

namespace {

double airy_tail_abscissa(double bound) {
  // Ai(t)^2 ~ exp(-(4/3) t^(3/2)): solve for the diagonal to fall below bound
  double rhs = -std::log(bound);
  return std::pow(0.75 * rhs, 2.0 / 3.0) + 1.0;
}

}  // namespace

DiscretizedKernel nystrom_airy(const BigReal& s, size_t n_nodes, double tail_bound) {
  Prec bits = s.precision_bits();
  double sd = s.to_double();
  double L = std::max(4.0, airy_tail_abscissa(tail_bound) - sd);
  for (int guard = 0;; ++guard) {
    BigReal edge(sd + L, bits);
    AiryPair a = airy_both(edge);
    BigReal diag = a.ai_prime * a.ai_prime - edge * a.ai * a.ai;
    if (abs(diag) < BigReal(tail_bound, bits)) break;
    L *= 2.0;
    if (guard >= 6 || L > 150.0)
      throw TruncationFailure("nystrom_airy: kernel tail does not decay by L = " +
                              std::to_string(L));
  }
  DiscretizedKernel dk;
  dk.s = s;
  dk.length = BigReal(L, bits);
  QuadRule q = gauss_legendre_mapped(n_nodes, s, s + dk.length);
  dk.nodes = q.nodes;
  dk.weights = q.weights;
  std::vector<AiryPair> ai(n_nodes, AiryPair{BigReal(bits), BigReal(bits)});
  std::vector<BigReal> sw(n_nodes, BigReal(bits));
  for (size_t i = 0; i < n_nodes; ++i) {
    ai[i] = airy_both(dk.nodes[i]);
    sw[i] = sqrt(dk.weights[i]);
  }
  dk.matrix = Matrix<BigReal>(n_nodes, n_nodes, BigReal(0.0, bits));
  for (size_t i = 0; i < n_nodes; ++i) {
    dk.matrix(i, i) =
        dk.weights[i] * (ai[i].ai_prime * ai[i].ai_prime -
                         dk.nodes[i] * ai[i].ai * ai[i].ai);
    for (size_t j = i + 1; j < n_nodes; ++j) {
      BigReal k = (ai[i].ai * ai[j].ai_prime - ai[i].ai_prime * ai[j].ai) /
                  (dk.nodes[i] - dk.nodes[j]);
      dk.matrix(i, j) = dk.matrix(j, i) = sw[i] * sw[j] * k;
    }
  }
  return dk;
}

Matrix<BigReal> hankel_matrix(const DiscretizedKernel& dk) {
  size_t n = dk.nodes.size();
  Prec bits = dk.s.precision_bits();
  Matrix<BigReal> h(n, n, BigReal(0.0, bits));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      BigReal v = sqrt(dk.weights[i]) * sqrt(dk.weights[j]) *
                  airy_ai(dk.nodes[i] + dk.nodes[j] - dk.s);
      h(i, j) = h(j, i) = v;
    }
  return h;
}

TwDistributionResult tw_distribution(const BigReal& s, size_t n_nodes) {
  Prec bits = s.precision_bits();
  DiscretizedKernel dk = nystrom_airy(s, n_nodes);
  size_t n = n_nodes;
  Matrix<BigReal> imk(n, n, BigReal(0.0, bits));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      imk(i, j) = (i == j ? BigReal(1.0, bits) : BigReal(0.0, bits)) - dk.matrix(i, j);
  TwDistributionResult out;
  out.f2_direct = lu_determinant(imk);
  SymEigenOptions opt;
  opt.want_vectors = false;
  auto eig = sym_eigen(dk.matrix, opt);
  out.f2_lidskii = BigReal(1.0, bits);
  for (const auto& lam : eig.values) out.f2_lidskii *= (BigReal(1.0, bits) - lam);
  out.eigenvalues.assign(eig.values.rbegin(), eig.values.rend());
  return out;
}

namespace {

// Legendre P_j and dP_j/dxi at xi, j = 0..jmax
void legendre_row(const BigReal& xi, size_t jmax, std::vector<BigReal>* p,
                  std::vector<BigReal>* dp) {
  Prec bits = xi.precision_bits();
  p->assign(jmax + 1, BigReal(0.0, bits));
  dp->assign(jmax + 1, BigReal(0.0, bits));
  (*p)[0] = BigReal(1.0, bits);
  if (jmax == 0) return;
  (*p)[1] = xi;
  (*dp)[1] = BigReal(1.0, bits);
  for (size_t j = 2; j <= jmax; ++j) {
    BigReal jj(static_cast<double>(j), bits);
    (*p)[j] = ((2.0 * jj - 1.0) * xi * (*p)[j - 1] - (jj - 1.0) * (*p)[j - 2]) / jj;
    (*dp)[j] = (*dp)[j - 2] + (2.0 * jj - 1.0) * (*p)[j - 1];
  }
}

}  // namespace

LtwEigensystem ltw_eigensystem(const BigReal& s, double L, size_t n_basis,
                               bool check_stability) {
  Prec bits = s.precision_bits();
  double sd = s.to_double();
  if (L <= 0) L = std::max(6.0, airy_tail_abscissa(1e-20) - sd);

  auto assemble = [&](size_t nb, double len) {
    size_t nq = 2 * nb + 16;
    const QuadRule& q = gauss_legendre(nq, bits);
    // basis phi_j(xi) = (1 - xi) P_j(xi), Dirichlet at xi = +1 (x = s + len)
    Matrix<BigReal> a(nb, nb, BigReal(0.0, bits));
    Matrix<BigReal> m(nb, nb, BigReal(0.0, bits));
    std::vector<BigReal> pj, dpj;
    BigReal half_len(0.5 * len, bits);
    for (size_t qi = 0; qi < nq; ++qi) {
      const BigReal& xi = q.nodes[qi];
      legendre_row(xi, nb, &pj, &dpj);
      BigReal one_m_xi = BigReal(1.0, bits) - xi;
      std::vector<BigReal> phi(nb, BigReal(0.0, bits)), dphi(nb, BigReal(0.0, bits));
      for (size_t j = 0; j < nb; ++j) {
        phi[j] = one_m_xi * pj[j];
        dphi[j] = one_m_xi * dpj[j] - pj[j];
      }
      BigReal x = s + half_len * (xi + 1.0);
      BigReal alpha = x - s;
      BigReal beta = -x * (x - s);
      BigReal wa = q.weights[qi] * alpha * BigReal(2.0 / len, bits);
      BigReal wb = q.weights[qi] * beta * half_len;
      BigReal wm = q.weights[qi] * half_len;
      for (size_t i = 0; i < nb; ++i)
        for (size_t j = i; j < nb; ++j) {
          a(i, j) += -wa * dphi[i] * dphi[j] + wb * phi[i] * phi[j];
          m(i, j) += wm * phi[i] * phi[j];
        }
    }
    for (size_t i = 0; i < nb; ++i)
      for (size_t j = 0; j < i; ++j) {
        a(i, j) = a(j, i);
        m(i, j) = m(j, i);
      }
    // generalized symmetric problem -> standard form via Cholesky
    Matrix<BigReal> g = cholesky_lower(m);
    Matrix<BigReal> y(nb, nb, BigReal(0.0, bits));
    for (size_t j = 0; j < nb; ++j) {
      std::vector<BigReal> col(nb, BigReal(0.0, bits));
      for (size_t i = 0; i < nb; ++i) col[i] = a(i, j);
      col = forward_subst(g, col);  // G^-1 A e_j
      for (size_t i = 0; i < nb; ++i) y(i, j) = col[i];
    }
    Matrix<BigReal> b(nb, nb, BigReal(0.0, bits));
    for (size_t i = 0; i < nb; ++i) {
      std::vector<BigReal> row(nb, BigReal(0.0, bits));
      for (size_t j = 0; j < nb; ++j) row[j] = y(i, j);
      row = forward_subst(g, row);  // (G^-1 (G^-1 A)^T)^T row-wise
      for (size_t j = 0; j < nb; ++j) b(i, j) = row[j];
    }
    for (size_t i = 0; i < nb; ++i)
      for (size_t j = i + 1; j < nb; ++j) {
        BigReal sym = (b(i, j) + b(j, i)) * 0.5;
        b(i, j) = b(j, i) = sym;
      }
    auto eig = sym_eigen(b);
    return std::make_tuple(std::move(eig), std::move(g), q, len);
  };

  auto [eig, g, quad, len] = assemble(n_basis, L);

  if (check_stability) {
    auto [eig2, g2, quad2, len2] = assemble(n_basis + n_basis / 2, L);
    size_t top = std::min<size_t>(10, n_basis / 2);
    for (size_t k = 0; k < top; ++k) {
      BigReal v1 = eig.values[n_basis - 1 - k];
      BigReal v2 = eig2.values[eig2.values.size() - 1 - k];
      if (abs(v1 - v2) > BigReal(1e-6, bits) * max(BigReal(1.0, bits), abs(v1)))
        throw DiscretizationUnstable("ltw_eigensystem: eigenvalue " +
                                     std::to_string(k) + " drifts under refinement");
    }
  }

  LtwEigensystem out;
  out.length = L;
  out.n_basis = n_basis;
  size_t nb = n_basis;
  BigReal half_len(0.5 * L, bits);
  for (const auto& xi : quad.nodes) out.grid.push_back(s + half_len * (xi + 1.0));
  // descending order: largest eigenvalue first
  for (size_t k = 0; k < nb; ++k) {
    size_t idx = nb - 1 - k;
    out.values.push_back(eig.values[idx]);
    std::vector<BigReal> y(nb, BigReal(0.0, bits));
    for (size_t i = 0; i < nb; ++i) y[i] = eig.vectors(i, idx);
    std::vector<BigReal> c = backward_subst_t(g, y);
    std::vector<BigReal> f(out.grid.size(), BigReal(0.0, bits));
    std::vector<BigReal> pj, dpj;
    for (size_t qi = 0; qi < out.grid.size(); ++qi) {
      const BigReal& xi = quad.nodes[qi];
      legendre_row(xi, nb, &pj, &dpj);
      BigReal one_m_xi = BigReal(1.0, bits) - xi;
      BigReal acc(0.0, bits);
      for (size_t j = 0; j < nb; ++j) acc += c[j] * one_m_xi * pj[j];
      f[qi] = acc;
    }
    BigReal nrm = vec_norm(f);
    if (nrm > BigReal(0.0, bits))
      for (auto& v : f) v = v / nrm;
    out.functions.push_back(std::move(f));
  }
  return out;
}

namespace {

CommutationReport commutation_check_impl(const BigReal& s, size_t n_nodes,
                                         size_t top_modes) {
  Prec bits = s.precision_bits();
  DiscretizedKernel dk = nystrom_airy(s, n_nodes, 1e-20);
  size_t n = n_nodes;

  Matrix<BigReal> d = differentiation_matrix(dk.nodes);
  // nodal operator D diag(alpha) D + diag(beta), conjugated by W^(1/2)
  Matrix<BigReal> da(n, n, BigReal(0.0, bits));
  for (size_t i = 0; i < n; ++i) {
    BigReal alpha = dk.nodes[i] - s;
    for (size_t j = 0; j < n; ++j) da(i, j) = alpha * d(i, j);
  }
  Matrix<BigReal> lop = d * da;
  for (size_t i = 0; i < n; ++i) lop(i, i) += -dk.nodes[i] * (dk.nodes[i] - s);
  std::vector<BigReal> sw(n, BigReal(bits));
  for (size_t i = 0; i < n; ++i) sw[i] = sqrt(dk.weights[i]);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) lop(i, j) = sw[i] * lop(i, j) / sw[j];

  Matrix<BigReal> comm = dk.matrix * lop - lop * dk.matrix;
  CommutationReport rep;
  rep.n_nodes = n_nodes;
  rep.relative_commutator_norm =
      comm.frobenius_norm() / (dk.matrix.frobenius_norm() * lop.frobenius_norm());

  auto eig = sym_eigen(dk.matrix);
  Matrix<BigReal> h = hankel_matrix(dk);
  rep.f2_from_modes = BigReal(1.0, bits);
  for (const auto& lam : eig.values) rep.f2_from_modes *= (BigReal(1.0, bits) - lam);

  for (size_t k = 0; k < std::min(top_modes, n); ++k) {
    size_t idx = n - 1 - k;  // descending eigenvalues
    std::vector<BigReal> psi(n, BigReal(0.0, bits));
    for (size_t i = 0; i < n; ++i) psi[i] = eig.vectors(i, idx);
    std::vector<BigReal> lpsi = lop.apply(psi);
    BigReal rho = dot(psi, lpsi);
    std::vector<BigReal> resid(n, BigReal(0.0, bits));
    for (size_t i = 0; i < n; ++i) resid[i] = lpsi[i] - rho * psi[i];
    rep.alignment_residuals.push_back(vec_norm(resid) / vec_norm(lpsi));
    rep.rayleigh_values.push_back(rho);
    rep.lambda.push_back(eig.values[idx]);
    std::vector<BigReal> hpsi = h.apply(psi);
    rep.hankel_sq.push_back(dot(hpsi, hpsi));
  }

  Matrix<BigReal> imk(n, n, BigReal(0.0, bits));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      imk(i, j) = (i == j ? BigReal(1.0, bits) : BigReal(0.0, bits)) - dk.matrix(i, j);
  rep.f2_direct = lu_determinant(imk);
  return rep;
}

}  // namespace

CommutationReport commutation_check(const BigReal& s, size_t n_nodes,
                                    size_t top_modes) {
  CommutationReport rep = commutation_check_impl(s, n_nodes, top_modes);
  Prec bits = s.precision_bits();
  bool ok = true;
  for (size_t k = 0; k < std::min<size_t>(5, rep.alignment_residuals.size()); ++k)
    if (rep.alignment_residuals[k] > BigReal(1e-6, bits)) ok = false;
  if (!ok) rep = commutation_check_impl(s, n_nodes + n_nodes / 2, top_modes);
  return rep;
}

BigReal hermite_phi(unsigned k, const BigReal& x) {
  Prec bits = x.precision_bits();
  Prec w = bits + 32;
  BigReal xx = x.with_precision(w);
  BigReal prev(1.0, w);            // phi_hat_0
  BigReal cur = xx;                // phi_hat_1 = x / sqrt(1)
  if (k == 0) cur = prev;
  for (unsigned j = 1; j < k; ++j) {
    BigReal next = (xx * cur - sqrt(BigReal(static_cast<double>(j), w)) * prev) /
                   sqrt(BigReal(static_cast<double>(j) + 1.0, w));
    prev = cur;
    cur = next;
  }
  BigReal gauss = exp(-xx * xx / 4.0) / pow(BigReal(2.0, w) * pi(w), BigReal(0.25, w));
  return (cur * gauss).with_precision(bits);
}

namespace {

// phi_hat_k values (no Gaussian factor) for k = 0..kmax
std::vector<BigReal> hermite_hat_row(unsigned kmax, const BigReal& x) {
  Prec w = x.precision_bits();
  std::vector<BigReal> v;
  v.reserve(kmax + 1);
  v.push_back(BigReal(1.0, w));
  if (kmax == 0) return v;
  v.push_back(x);
  for (unsigned j = 1; j < kmax; ++j)
    v.push_back((x * v[j] - sqrt(BigReal(static_cast<double>(j), w)) * v[j - 1]) /
                sqrt(BigReal(static_cast<double>(j) + 1.0, w)));
  return v;
}

}  // namespace

BigReal gue_kernel(unsigned n, const BigReal& x, const BigReal& y) {
  if (n < 1) throw std::invalid_argument("gue_kernel: n >= 1");
  Prec bits = std::max(x.precision_bits(), y.precision_bits());
  Prec w = bits + 32;
  BigReal xx = x.with_precision(w), yy = y.with_precision(w);
  BigReal gx = exp(-xx * xx / 4.0) / pow(BigReal(2.0, w) * pi(w), BigReal(0.25, w));
  BigReal gy = exp(-yy * yy / 4.0) / pow(BigReal(2.0, w) * pi(w), BigReal(0.25, w));
  auto hx = hermite_hat_row(n, xx);
  auto hy = hermite_hat_row(n, yy);
  BigReal diff = xx - yy;
  BigReal sep = pow2(-static_cast<long>(w) / 3, w) * max(BigReal(1.0, w), abs(xx));
  BigReal result(0.0, w);
  if (abs(diff) <= sep) {
    // diagonal-style evaluation at the midpoint
    BigReal mid = (xx + yy) * 0.5;
    auto h = hermite_hat_row(n, mid);
    BigReal gm = exp(-mid * mid / 4.0) / pow(BigReal(2.0, w) * pi(w), BigReal(0.25, w));
    BigReal nn(static_cast<double>(n), w);
    result = nn * h[n - 1] * h[n - 1];
    if (n >= 2)
      result -= sqrt(nn * (nn - 1.0)) * h[n - 2] * h[n];
    result = result * gm * gm;
  } else {
    BigReal sq = sqrt(BigReal(static_cast<double>(n), w));
    result = sq * (hx[n] * hy[n - 1] - hx[n - 1] * hy[n]) * gx * gy / diff;
  }
  return result.with_precision(bits);
}

EdgeScalingReport edge_scaling_check(const std::vector<unsigned>& ns, double s) {
  EdgeScalingReport rep;
  Prec bits = kDefaultPrecision;
  const int grid = 20;
  // tabulate the Airy kernel once
  std::vector<BigReal> pts;
  for (int i = 0; i < grid; ++i)
    pts.emplace_back(s + 4.0 * (static_cast<double>(i) + 0.5) / grid, bits);
  Matrix<BigReal> kai(grid, grid, BigReal(0.0, bits));
  for (int i = 0; i < grid; ++i)
    for (int j = i; j < grid; ++j) {
      kai(i, j) = airy_kernel(pts[i], pts[j]);
      kai(j, i) = kai(i, j);
    }
  for (unsigned n : ns) {
    BigReal mu = BigReal(2.0, bits) * sqrt(BigReal(static_cast<double>(n), bits));
    BigReal sigma = pow(BigReal(static_cast<double>(n), bits),
                        BigReal(-1.0, bits) / BigReal(6.0, bits));
    double err = 0.0;
    for (int i = 0; i < grid; ++i)
      for (int j = i; j < grid; ++j) {
        BigReal xv = mu + sigma * pts[i];
        BigReal yv = mu + sigma * pts[j];
        BigReal scaled = sigma * gue_kernel(n, xv, yv);
        err = std::max(err, std::fabs((scaled - kai(i, j)).to_double()));
      }
    rep.ns.push_back(n);
    rep.max_errors.push_back(err);
  }
  return rep;
}

OperatorSearchResult commuting_search_operator(const Matrix<BigReal>& m,
                                               const std::vector<BigReal>& nodes,
                                               const std::vector<BigReal>& weights,
                                               unsigned degree_bound) {
  size_t n = nodes.size();
  Prec bits = nodes[0].precision_bits();
  Matrix<BigReal> d = differentiation_matrix(nodes);
  std::vector<BigReal> sw(n, BigReal(bits));
  for (size_t i = 0; i < n; ++i) sw[i] = sqrt(weights[i]);

  // basis operators: W^(1/2) D x^p D W^(-1/2) for p = 0..deg, diag(x^q) for
  // q = 1..deg (q = 0 is the identity -> projected out by exclusion)
  std::vector<Matrix<BigReal>> basis;
  std::vector<BigReal> scales;
  for (unsigned p = 0; p <= degree_bound; ++p) {
    Matrix<BigReal> xa(n, n, BigReal(0.0, bits));
    for (size_t i = 0; i < n; ++i) {
      BigReal xp = pow(nodes[i], static_cast<long>(p));
      for (size_t j = 0; j < n; ++j) xa(i, j) = xp * d(i, j);
    }
    Matrix<BigReal> op = d * xa;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) op(i, j) = sw[i] * op(i, j) / sw[j];
    basis.push_back(std::move(op));
  }
  for (unsigned q = 1; q <= degree_bound; ++q) {
    Matrix<BigReal> op(n, n, BigReal(0.0, bits));
    for (size_t i = 0; i < n; ++i) op(i, i) = pow(nodes[i], static_cast<long>(q));
    basis.push_back(std::move(op));
  }
  // normalize operators to unit Frobenius norm
  for (auto& op : basis) {
    BigReal nm = op.frobenius_norm();
    scales.push_back(nm);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) op(i, j) = op(i, j) / nm;
  }

  size_t nb = basis.size();
  std::vector<Matrix<BigReal>> comms;
  comms.reserve(nb);
  for (const auto& op : basis) comms.push_back(m * op - op * m);
  Matrix<BigReal> gram(nb, nb, BigReal(0.0, bits));
  for (size_t a = 0; a < nb; ++a)
    for (size_t b = a; b < nb; ++b) {
      BigReal acc(0.0, bits);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) acc += comms[a](i, j) * comms[b](i, j);
      gram(a, b) = gram(b, a) = acc;
    }
  auto eig = sym_eigen(gram);
  std::vector<BigReal> c(nb, BigReal(0.0, bits));
  for (size_t i = 0; i < nb; ++i) c[i] = eig.vectors(i, 0);  // smallest eigenvalue

  OperatorSearchResult out;
  BigReal lam0 = eig.values[0];
  if (lam0 < BigReal(0.0, bits)) lam0 = BigReal(0.0, bits);
  out.residual = sqrt(lam0) / m.frobenius_norm();
  // map back to polynomial coefficients (undo per-operator scaling)
  std::vector<BigReal> coeffs(nb, BigReal(0.0, bits));
  for (size_t i = 0; i < nb; ++i) coeffs[i] = c[i] / scales[i];
  // gauge: scale so the largest |coefficient| is 1 and positive
  BigReal big(0.0, bits);
  size_t big_idx = 0;
  for (size_t i = 0; i < nb; ++i)
    if (abs(coeffs[i]) > big) {
      big = abs(coeffs[i]);
      big_idx = i;
    }
  if (big > BigReal(0.0, bits)) {
    BigReal scale = coeffs[big_idx];
    for (auto& v : coeffs) v = v / scale;
  }
  out.a_coeffs.assign(coeffs.begin(), coeffs.begin() + degree_bound + 1);
  out.b_coeffs.assign(coeffs.begin() + degree_bound + 1, coeffs.end());
  return out;
}

OperatorSearchResult commuting_search_airy(const BigReal& s, unsigned degree_bound,
                                           size_t n_nodes) {
  DiscretizedKernel dk = nystrom_airy(s, n_nodes, 1e-20);
  return commuting_search_operator(dk.matrix, dk.nodes, dk.weights, degree_bound);
}

OperatorSearchResult commuting_search_gue(unsigned n, const BigReal& s,
                                          unsigned degree_bound, size_t n_nodes) {
  Prec bits = s.precision_bits();
  double sd = s.to_double();
  // truncate past the spectral edge 2 sqrt(n) plus an Airy-width margin
  double edge = 2.0 * std::sqrt(static_cast<double>(n));
  double L = edge - sd + 6.0 * std::pow(static_cast<double>(n), -1.0 / 6.0) + 4.0;
  QuadRule q = gauss_legendre_mapped(n_nodes, s, BigReal(sd + L, bits));
  Matrix<BigReal> m(n_nodes, n_nodes, BigReal(0.0, bits));
  for (size_t i = 0; i < n_nodes; ++i)
    for (size_t j = i; j < n_nodes; ++j) {
      BigReal v = sqrt(q.weights[i]) * sqrt(q.weights[j]) *
                  gue_kernel(n, q.nodes[i], q.nodes[j]);
      m(i, j) = m(j, i) = v;
    }
  return commuting_search_operator(m, q.nodes, q.weights, degree_bound);
}

}  // namespace polylab::tracywidom
