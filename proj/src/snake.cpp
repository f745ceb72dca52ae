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

#include "polylab/snake.hpp"

#include <algorithm>
#include <cmath>

#include "polylab/linalg.hpp"
#include "polylab/quadrature.hpp"

namespace polylab::snake {

namespace {

constexpr size_t kScanGrid = 4096;
constexpr long kMaxExchange = 400;

std::vector<double> chebyshev_grid_d(size_t g) {
  std::vector<double> x(g + 1);
  for (size_t i = 0; i <= g; ++i)
    x[i] = -std::cos(M_PI * static_cast<double>(i) / static_cast<double>(g));
  x.front() = -1.0;
  x.back() = 1.0;
  return x;
}

}  // namespace

Majorant Majorant::builtin(MajorantTag tag, Prec bits) {
  Majorant m;
  m.tag_ = tag;
  m.bits_ = bits;
  switch (tag) {
    case MajorantTag::One:
      m.q_ = Polynomial::from_doubles({1}, bits);
      break;
    case MajorantTag::SemiCircle:  // sqrt(1 - x^2)
      m.q_ = Polynomial::from_doubles({1, 0, -1}, bits);
      break;
    case MajorantTag::Parabola:  // 1 - x^2
      m.q_ = Polynomial::from_doubles({1, 0, -1}, bits);
      break;
    case MajorantTag::Sqrt2x2x1:  // sqrt(2x^2 + x + 1)
      m.q_ = Polynomial::from_doubles({1, 1, 2}, bits);
      break;
    case MajorantTag::AbsOneMinus2x2:  // |1 - 2x^2|
      m.q_ = Polynomial::from_doubles({1, 0, -2}, bits);
      break;
    default:
      throw std::invalid_argument("Majorant::builtin: user tags need a polynomial");
  }
  m.analyze();
  return m;
}

Majorant Majorant::user_abs(Polynomial q) {
  Majorant m;
  m.tag_ = MajorantTag::UserAbs;
  m.bits_ = q.precision_bits();
  m.q_ = std::move(q);
  m.analyze();
  return m;
}

Majorant Majorant::user_sqrt(Polynomial q) {
  Majorant m;
  m.tag_ = MajorantTag::UserSqrt;
  m.bits_ = q.precision_bits();
  m.q_ = std::move(q);
  m.analyze();
  return m;
}

BigReal Majorant::eval(const BigReal& x) const {
  BigReal zero(0.0, bits_);
  switch (tag_) {
    case MajorantTag::One:
      return BigReal(1.0, bits_);
    case MajorantTag::SemiCircle:
    case MajorantTag::Sqrt2x2x1:
    case MajorantTag::UserSqrt:
      return sqrt(max(zero, q_.eval_real(x)));
    case MajorantTag::Parabola:
      return max(zero, q_.eval_real(x));
    case MajorantTag::AbsOneMinus2x2:
    case MajorantTag::UserAbs:
      return abs(q_.eval_real(x));
  }
  return zero;
}

bool Majorant::has_interior_zero() const {
  for (double z : zeros_)
    if (std::fabs(z) < 1.0 - 1e-12) return true;
  return false;
}

std::string Majorant::name() const {
  switch (tag_) {
    case MajorantTag::One: return "one";
    case MajorantTag::SemiCircle: return "semicircle";
    case MajorantTag::Parabola: return "parabola";
    case MajorantTag::Sqrt2x2x1: return "sqrt_2x2_x_1";
    case MajorantTag::AbsOneMinus2x2: return "abs_1_minus_2x2";
    case MajorantTag::UserAbs: return "user_abs";
    case MajorantTag::UserSqrt: return "user_sqrt";
  }
  return "?";
}

void Majorant::analyze() {
  const size_t g = 10000;
  auto grid = chebyshev_grid_d(g);
  double scale = 0.0;
  std::vector<double> vals(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    vals[i] = eval_d(grid[i]);
    scale = std::max(scale, std::fabs(vals[i]));
  }
  if (scale == 0.0) throw InfeasibleMajorant("majorant is identically zero");
  for (double v : vals)
    if (v < -1e-12 * scale)
      throw std::invalid_argument("majorant is negative on [-1,1]");

  even_ = true;
  for (size_t i = 0; i < grid.size(); ++i) {
    double mirrored = eval_d(-grid[i]);
    if (std::fabs(vals[i] - mirrored) > 1e-10 * scale) {
      even_ = false;
      break;
    }
  }
  convex_ = true;
  {
    BigReal h(1e-4, bits_);
    for (int i = 0; i < 33 && convex_; ++i) {
      BigReal x(-0.99 + 1.98 * static_cast<double>(i) / 32.0, bits_);
      BigReal second = eval(x - h) - eval(x) * 2.0 + eval(x + h);
      if (second < BigReal(-1e-2 * scale, bits_) * h * h) convex_ = false;
    }
  }

  // zero set on [-1,1] from the polynomial payload
  zeros_.clear();
  if (tag_ != MajorantTag::One && q_.degree() >= 1) {
    RootSet rs = find_roots_adaptive(q_);
    for (const auto& r : rs.roots) {
      double re = r.location.re().to_double();
      double im = r.location.im().to_double();
      if (std::fabs(im) < 1e-10 && re > -1.0 - 1e-10 && re < 1.0 + 1e-10)
        zeros_.push_back(std::clamp(re, -1.0, 1.0));
    }
    std::sort(zeros_.begin(), zeros_.end());
  }

  // Abs-type majorants: divide the vanishing factor out, mu = |factor| * nu
  bool abs_kind = tag_ == MajorantTag::Parabola || tag_ == MajorantTag::AbsOneMinus2x2 ||
                  tag_ == MajorantTag::UserAbs;
  if (abs_kind && !zeros_.empty()) {
    RootSet rs = find_roots_adaptive(q_);
    Polynomial factor = Polynomial::one(bits_);
    for (const auto& r : rs.roots) {
      double re = r.location.re().to_double();
      double im = r.location.im().to_double();
      if (std::fabs(im) < 1e-10 && re > -1.0 - 1e-10 && re < 1.0 + 1e-10) {
        for (unsigned q = 0; q < r.multiplicity; ++q) {
          Polynomial lin({BigComplex(-r.location.re()), BigComplex(1.0, 0.0, bits_)},
                         Basis::Monomial, bits_);
          factor = factor * lin;
        }
      }
    }
    if (factor.degree() >= 1) {
      DivMod dm = poly_divmod(q_, factor);
      factor_ = factor;
      reduced_ = dm.quotient;
    }
  }
}

namespace {

struct ScanResult {
  BigReal worst_x;
  BigReal worst_value;  // |omega| - mu at worst_x
  int worst_sign = 0;   // sign of omega there
};

BigReal violation(const Polynomial& omega, const Majorant& mu, const BigReal& x) {
  return abs(omega.eval_real(x)) - mu.eval(x);
}

// ternary-search refinement of a local maximum of |omega| - mu on [a, b]
BigReal refine_max(const Polynomial& omega, const Majorant& mu, BigReal a, BigReal b) {
  Prec bits = omega.precision_bits();
  BigReal gold(0.3819660112501051, bits);
  for (int it = 0; it < 64; ++it) {
    BigReal m1 = a + (b - a) * gold;
    BigReal m2 = b - (b - a) * gold;
    if (violation(omega, mu, m1) < violation(omega, mu, m2))
      a = m1;
    else
      b = m2;
    if ((b - a) < BigReal(1e-15, bits)) break;
  }
  return (a + b) * 0.5;
}

// after the exchange has converged to tol, sharpen the interior references
// by relocating each to the local argmax of the signed touch functional;
// a few passes give reference (hence coefficient) accuracy far below tol
Polynomial polish_references(std::vector<BigReal>* tau_io, const std::vector<int>& sign,
                             const Majorant& mu, Polynomial omega, Prec bits) {
  std::vector<BigReal>& tau = *tau_io;
  const size_t m = tau.size();
  BigReal tiny_mu(1e-13, bits);
  for (int pass = 0; pass < 4; ++pass) {
    for (size_t i = 0; i < m; ++i) {
      if (mu.eval(tau[i]) <= tiny_mu) continue;  // degenerate zero touch stays
      BigReal lo = i + 1 < m ? (tau[i + 1] + tau[i]) * 0.5 : BigReal(-1.0, bits);
      BigReal hi = i > 0 ? (tau[i] + tau[i - 1]) * 0.5 : BigReal(1.0, bits);
      BigReal s(static_cast<double>(sign[i]), bits);
      BigReal gold(0.3819660112501051, bits);
      BigReal a = lo, b = hi;
      auto f = [&](const BigReal& x) { return s * omega.eval_real(x) - mu.eval(x); };
      for (int it = 0; it < 80; ++it) {
        BigReal m1 = a + (b - a) * gold;
        BigReal m2 = b - (b - a) * gold;
        if (f(m1) < f(m2))
          a = m1;
        else
          b = m2;
      }
      tau[i] = (a + b) * 0.5;
    }
    std::vector<BigReal> y;
    y.reserve(m);
    for (size_t i = 0; i < m; ++i)
      y.push_back(BigReal(static_cast<double>(sign[i]), bits) * mu.eval(tau[i]));
    omega = interpolate(tau, y);
  }
  return omega;
}

ScanResult scan_violation(const Polynomial& omega, const Majorant& mu,
                          const std::vector<double>& grid) {
  Prec bits = omega.precision_bits();
  size_t worst_i = 0;
  double worst = -1e300;
  std::vector<double> e(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    BigReal x(grid[i], bits);
    e[i] = violation(omega, mu, x).to_double();
    if (e[i] > worst) {
      worst = e[i];
      worst_i = i;
    }
  }
  BigReal lo(grid[worst_i == 0 ? 0 : worst_i - 1], bits);
  BigReal hi(grid[worst_i + 1 >= grid.size() ? grid.size() - 1 : worst_i + 1], bits);
  ScanResult out;
  out.worst_x = refine_max(omega, mu, lo, hi);
  // endpoints can carry the maximum; compare explicitly
  for (double xe : {grid.front(), grid.back()}) {
    if (violation(omega, mu, BigReal(xe, bits)) > violation(omega, mu, out.worst_x))
      out.worst_x = BigReal(xe, bits);
  }
  out.worst_value = violation(omega, mu, out.worst_x);
  out.worst_sign = omega.eval_real(out.worst_x) >= 0.0 ? 1 : -1;
  return out;
}

struct ExchangeOutcome {
  Polynomial omega;
  std::vector<BigReal> tau;
  std::vector<int> sign;
  BigReal residual;
  long iterations;
};

ExchangeOutcome exchange_loop(const Majorant& mu, unsigned n, const BigReal& tol,
                              Prec bits) {
  std::vector<BigReal> tau;
  std::vector<int> sign;
  for (unsigned i = 0; i <= n; ++i) {
    tau.emplace_back(std::cos(M_PI * static_cast<double>(i) / std::max(1u, n)), bits);
    sign.push_back(i % 2 == 0 ? 1 : -1);
  }
  if (n == 0) tau = {BigReal(1.0, bits)};
  auto grid = chebyshev_grid_d(kScanGrid);

  double mu_scale = 0.0;
  for (double x : grid) mu_scale = std::max(mu_scale, mu.eval_d(x));

  BigReal best_v(1e300, bits);
  std::vector<double> history;
  Polynomial omega(bits);
  for (long iter = 0; iter < kMaxExchange; ++iter) {
    std::vector<BigReal> y;
    y.reserve(tau.size());
    for (size_t i = 0; i < tau.size(); ++i)
      y.push_back(BigReal(static_cast<double>(sign[i]), bits) * mu.eval(tau[i]));
    omega = interpolate(tau, y);

    // collapse detection: no nonzero polynomial fits under the majorant
    double omega_scale = 0.0;
    for (size_t i = 0; i < grid.size(); i += 8)
      omega_scale =
          std::max(omega_scale, std::fabs(omega.eval_real(BigReal(grid[i], bits)).to_double()));
    if (omega_scale < 1e-12 * std::max(1.0, mu_scale))
      throw InfeasibleMajorant("snake: interpolant collapses toward zero");

    ScanResult sc = scan_violation(omega, mu, grid);
    if (sc.worst_value <= tol) {
      omega = polish_references(&tau, sign, mu, omega, bits);
      ScanResult post = scan_violation(omega, mu, grid);
      return {omega, tau, sign, max(post.worst_value, BigReal(0.0, bits)), iter + 1};
    }

    history.push_back(sc.worst_value.to_double());
    if (history.size() > 25) {
      double then = history[history.size() - 25];
      if (history.back() > 0.98 * then) {
        if (mu.has_interior_zero())
          throw InteriorZeroUnsupported(
              "snake exchange stalls near an interior zero of the majorant");
        throw NoConvergence(iter);
      }
    }

    // single-point sign-consistent exchange
    const BigReal& yx = sc.worst_x;
    int sy = sc.worst_sign;
    size_t j = 0;
    while (j < tau.size() && tau[j] > yx) ++j;
    // guard against hitting an existing reference
    bool duplicate = false;
    for (const auto& t : tau)
      if (abs(t - yx) < BigReal(1e-14, bits)) duplicate = true;
    if (duplicate) throw NoConvergence(iter);
    if (j == 0) {
      if (sy == sign[0]) {
        tau[0] = yx;
      } else {
        tau.insert(tau.begin(), yx);
        sign.insert(sign.begin(), sy);
        tau.pop_back();
        sign.pop_back();
      }
    } else if (j == tau.size()) {
      if (sy == sign.back()) {
        tau.back() = yx;
      } else {
        tau.push_back(yx);
        sign.push_back(sy);
        tau.erase(tau.begin());
        sign.erase(sign.begin());
      }
    } else {
      if (sy == sign[j - 1])
        tau[j - 1] = yx;
      else
        tau[j] = yx;
    }
    best_v = min(best_v, sc.worst_value);
  }
  throw NoConvergence(kMaxExchange);
}

}  // namespace

SnakeResult solve_snake(const Majorant& mu, unsigned n, const BigReal& tol) {
  Prec bits = std::max<Prec>(mu.precision_bits(), 192);
  BigReal wtol = tol.with_precision(bits);

  // reduce out the polynomial zero factor when mu = |factor| * nu
  if (mu.reducible_factor()) {
    const Polynomial& factor = *mu.reducible_factor();
    long d = factor.degree();
    if (static_cast<long>(n) < d)
      throw InfeasibleMajorant("snake: zero factor degree exceeds n");
    Majorant nu = Majorant::user_abs(mu.reduced_abs_poly()->with_precision(bits));
    SnakeResult sub = solve_snake(nu, n - static_cast<unsigned>(d), wtol);
    SnakeResult out;
    out.n = n;
    out.omega = factor.with_precision(bits) * sub.omega;
    out.exchange_iterations = sub.exchange_iterations;
    // touch set: subproblem alternation points plus the zeros of the factor
    std::vector<BigReal> touches = sub.alternation_points;
    for (double z : mu.vanishes_at()) touches.emplace_back(z, bits);
    std::sort(touches.begin(), touches.end(),
              [](const BigReal& a, const BigReal& b) { return a > b; });
    touches.erase(std::unique(touches.begin(), touches.end(),
                              [&](const BigReal& a, const BigReal& b) {
                                return abs(a - b) < BigReal(1e-12, bits);
                              }),
                  touches.end());
    out.alternation_points = std::move(touches);
    out.degenerate_touch_count = out.alternation_points.size() != n + 1;
    // orientation: + mu at the first non-degenerate touch
    for (const auto& t : out.alternation_points) {
      BigReal m = mu.eval(t);
      if (m > BigReal(1e-9, bits)) {
        if (out.omega.eval_real(t) < 0.0) out.omega = -out.omega;
        break;
      }
    }
    auto grid = chebyshev_grid_d(4 * kScanGrid);
    BigReal resid(0.0, bits);
    for (double x : grid)
      resid = max(resid, violation(out.omega, mu, BigReal(x, bits)));
    out.residual = max(resid, sub.residual);
    out.cheb = to_chebyshev(out.omega);
    return out;
  }

  ExchangeOutcome ex = exchange_loop(mu, n, wtol, bits);
  SnakeResult out;
  out.n = n;
  out.omega = ex.omega;
  out.alternation_points = ex.tau;
  out.residual = ex.residual;
  out.exchange_iterations = ex.iterations;
  out.degenerate_touch_count = ex.tau.size() != n + 1;
  for (const auto& t : out.alternation_points) {
    BigReal m = mu.eval(t);
    if (m > BigReal(1e-9, bits)) {
      if (out.omega.eval_real(t) < 0.0) out.omega = -out.omega;
      break;
    }
  }
  out.cheb = to_chebyshev(out.omega);
  return out;
}

const char* cheb_pattern_name(ChebPattern p) {
  switch (p) {
    case ChebPattern::NonNegative: return "NonNegative";
    case ChebPattern::SignAlternating: return "SignAlternating";
    case ChebPattern::Neither: return "Neither";
  }
  return "?";
}

ChebPatternResult cheb_sign_pattern(const SnakeResult& sr, const BigReal& tol) {
  const Polynomial& c = sr.cheb;
  Prec bits = c.precision_bits();
  BigReal scale = c.coeff_inf_norm();
  BigReal cut = tol.with_precision(bits) * scale;
  std::vector<int> s;  // -1, 0, +1 per coefficient
  for (size_t i = 0; i < c.coeffs().size(); ++i) {
    BigReal re = c.coeffs()[i].re();
    if (abs(re) <= cut)
      s.push_back(0);
    else
      s.push_back(re > 0.0 ? 1 : -1);
  }
  // orientation-free: the snake is defined up to sign. Zero coefficients are
  // compatible with a_i >= 0 but break the strict alternation a_i a_{i+1} < 0.
  bool all_same = true;
  int first_sign = 0;
  for (int v : s) {
    if (v == 0) continue;
    if (first_sign == 0) first_sign = v;
    if (v != first_sign) all_same = false;
  }
  if (all_same) return {ChebPattern::NonNegative, -1};
  bool alternating = true;
  long violation_at = -1;
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] * s[i + 1] >= 0) {
      alternating = false;
      if (violation_at < 0) violation_at = static_cast<long>(i);
      break;
    }
  }
  if (alternating) return {ChebPattern::SignAlternating, -1};
  return {ChebPattern::Neither, violation_at};
}

BigReal sup_norm(const Polynomial& p, size_t grid) {
  Prec bits = p.precision_bits();
  auto g = chebyshev_grid_d(grid);
  size_t best_i = 0;
  double best = -1.0;
  for (size_t i = 0; i < g.size(); ++i) {
    double v = std::fabs(p.eval_real(BigReal(g[i], bits)).to_double());
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  BigReal a(g[best_i == 0 ? 0 : best_i - 1], bits);
  BigReal b(g[std::min(best_i + 1, g.size() - 1)], bits);
  BigReal gold(0.3819660112501051, bits);
  for (int it = 0; it < 64; ++it) {
    BigReal m1 = a + (b - a) * gold;
    BigReal m2 = b - (b - a) * gold;
    if (abs(p.eval_real(m1)) < abs(p.eval_real(m2)))
      a = m1;
    else
      b = m2;
  }
  BigReal mid = (a + b) * 0.5;
  BigReal v1 = abs(p.eval_real(mid));
  BigReal v2 = abs(p.eval_real(BigReal(1.0, bits)));
  BigReal v3 = abs(p.eval_real(BigReal(-1.0, bits)));
  return max(v1, max(v2, v3));
}

BigReal duffin_schaeffer_value(const Majorant& mu, const SnakeResult& sr, unsigned k,
                               bool pin_zero_envelope) {
  const auto& tau = sr.alternation_points;
  size_t m = tau.size();
  Prec bits = sr.omega.precision_bits();
  if (k == 0 || k > sr.n)
    throw std::invalid_argument("duffin_schaeffer_value: 1 <= k <= n required");
  // count constraints that actually bound p
  size_t pinning = 0;
  BigReal mu_scale(0.0, bits);
  for (const auto& t : tau) mu_scale = max(mu_scale, mu.eval(t));
  for (const auto& t : tau) {
    BigReal v = mu.eval(t);
    if (pin_zero_envelope || v > mu_scale * 1e-12) ++pinning;
  }
  if (pinning < sr.n + 1) {
    BigReal inf(bits);
    mpfr_set_inf(inf.raw(), 1);
    return inf;  // p is underdetermined: the supremum is unbounded
  }
  Matrix<BigReal> d = differentiation_matrix(tau);
  Matrix<BigReal> dk = d;
  for (unsigned i = 1; i < k; ++i) dk = dk * d;
  std::vector<BigReal> w = barycentric_weights(tau);
  std::vector<BigReal> muv;
  muv.reserve(m);
  for (const auto& t : tau) muv.push_back(mu.eval(t));

  auto value_at = [&](const BigReal& x0) {
    // exact node hit: row of dk
    for (size_t r = 0; r < m; ++r) {
      if (abs(x0 - tau[r]) < BigReal(1e-30, bits)) {
        BigReal acc(0.0, bits);
        for (size_t i = 0; i < m; ++i) acc += muv[i] * abs(dk(r, i));
        return acc;
      }
    }
    std::vector<BigReal> t(m, BigReal(0.0, bits));
    BigReal den(0.0, bits);
    for (size_t r = 0; r < m; ++r) {
      t[r] = w[r] / (x0 - tau[r]);
      den += t[r];
    }
    BigReal acc(0.0, bits);
    for (size_t i = 0; i < m; ++i) {
      BigReal num(0.0, bits);
      for (size_t r = 0; r < m; ++r) num += t[r] * dk(r, i);
      acc += muv[i] * abs(num / den);
    }
    return acc;
  };

  auto grid = chebyshev_grid_d(2048);
  size_t best_i = 0;
  double best = -1.0;
  for (size_t i = 0; i < grid.size(); ++i) {
    double v = value_at(BigReal(grid[i], bits)).to_double();
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  BigReal a(grid[best_i == 0 ? 0 : best_i - 1], bits);
  BigReal b(grid[std::min(best_i + 1, grid.size() - 1)], bits);
  BigReal gold(0.3819660112501051, bits);
  for (int it = 0; it < 60; ++it) {
    BigReal m1 = a + (b - a) * gold;
    BigReal m2 = b - (b - a) * gold;
    if (value_at(m1) < value_at(m2))
      a = m1;
    else
      b = m2;
  }
  BigReal refined = value_at((a + b) * 0.5);
  return max(refined, max(value_at(BigReal(1.0, bits)), value_at(BigReal(-1.0, bits))));
}

namespace {

BigReal lp_upper_at(const Majorant& mu, unsigned n, unsigned k, const BigReal& x0,
                    const std::vector<BigReal>& xs, Prec bits) {
  size_t g = xs.size();
  size_t rows = n + 1;
  Matrix<BigReal> e(rows, 2 * g, BigReal(0.0, bits));
  std::vector<BigReal> cost(2 * g, BigReal(0.0, bits));
  for (size_t j = 0; j < g; ++j) {
    BigReal p(1.0, bits);
    for (size_t mdeg = 0; mdeg <= n; ++mdeg) {
      e(mdeg, j) = p;
      e(mdeg, g + j) = -p;
      p *= xs[j];
    }
    BigReal muj = mu.eval(xs[j]);
    cost[j] = muj;
    cost[g + j] = muj;
  }
  // derivative functional d_m = m!/(m-k)! x0^(m-k)
  std::vector<BigReal> d(rows, BigReal(0.0, bits));
  for (size_t mdeg = k; mdeg <= n; ++mdeg) {
    BigReal f(1.0, bits);
    for (unsigned i = 0; i < k; ++i) f *= static_cast<double>(mdeg - i);
    d[mdeg] = f * pow(x0, static_cast<long>(mdeg - k));
  }
  auto lp = simplex_min(e, d, cost);
  if (lp.status != LPStatus::Optimal)
    throw LPInfeasible("markov upper bound: dual LP not optimal");
  return lp.objective;
}

}  // namespace

MarkovBracket markov_bracket(const Majorant& mu, unsigned n, unsigned k,
                             size_t grid_size) {
  if (k < 1 || k > n) throw std::invalid_argument("markov_bracket: 1 <= k <= n");
  Prec bits = std::max<Prec>(mu.precision_bits(), 192);
  SnakeResult sr = solve_snake(mu, n, BigReal(1e-12, bits));
  BigReal lower = sup_norm(differentiate(sr.omega, k));

  auto upper_for = [&](size_t g) {
    std::vector<BigReal> xs;
    xs.reserve(g);
    for (size_t i = 0; i < g; ++i)
      xs.emplace_back(-std::cos(M_PI * static_cast<double>(i) / (g - 1)), bits);
    // sweep x0 over a coarse Chebyshev grid plus refinement near the best
    BigReal best(0.0, bits);
    BigReal best_x(1.0, bits);
    const size_t sweep = 17;
    for (size_t i = 0; i < sweep; ++i) {
      BigReal x0(-std::cos(M_PI * static_cast<double>(i) / (sweep - 1)), bits);
      BigReal v = lp_upper_at(mu, n, k, x0, xs, bits);
      if (v > best) {
        best = v;
        best_x = x0;
      }
    }
    for (int round = 0; round < 2; ++round) {
      BigReal h(std::pow(0.1, round + 1) * 0.2, bits);
      for (int j = -2; j <= 2; ++j) {
        BigReal x0 = best_x + h * static_cast<double>(j);
        if (x0 > 1.0 || x0 < -1.0) continue;
        BigReal v = lp_upper_at(mu, n, k, x0, xs, bits);
        if (v > best) {
          best = v;
          best_x = x0;
        }
      }
    }
    return best;
  };

  MarkovBracket out;
  out.grid_size = grid_size;
  out.lower = lower;
  out.upper = upper_for(grid_size);
  BigReal slack = max(BigReal(1e-9, bits), lower * 1e-9);
  if (out.upper < lower - slack) {
    out.grid_size = grid_size * 2;
    out.upper = upper_for(out.grid_size);
    if (out.upper < lower - slack)
      throw BracketInverted("markov_bracket: upper < lower after refinement");
  }
  return out;
}

EqualityProbe equality_probe(const Majorant& mu, unsigned n, unsigned k) {
  Prec bits = std::max<Prec>(mu.precision_bits(), 192);
  SnakeResult sr = solve_snake(mu, n, BigReal(1e-12, bits));
  EqualityProbe out;
  out.n = n;
  out.k = k;
  out.omega_deriv_norm = sup_norm(differentiate(sr.omega, k));
  out.ds_value = duffin_schaeffer_value(mu, sr, k);
  MarkovBracket mb = markov_bracket(mu, n, k, 128);
  out.markov_lower = mb.lower;
  out.markov_upper = mb.upper;
  out.pattern = cheb_sign_pattern(sr, BigReal(1e-10, bits));
  BigReal scale = max(BigReal(1.0, bits), out.omega_deriv_norm);
  out.equality_holds = abs(out.ds_value - out.omega_deriv_norm) <= scale * 1e-6;
  bool good_pattern = out.pattern.pattern != ChebPattern::Neither;
  out.implication_consistent = !good_pattern || out.equality_holds;
  return out;
}

}  // namespace polylab::snake
