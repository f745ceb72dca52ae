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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "polylab/bigfloat.hpp"

// Dense linear algebra over an abstract real scalar (double or BigReal).
// Desk-scale sizes; classical O(n^3) algorithms chosen for determinism.

namespace polylab {

inline double scalar_epsilon(const double&) { return 2.220446049250313e-16; }
inline BigReal scalar_epsilon(const BigReal& x) {
  return pow2(1 - static_cast<long>(x.precision_bits()), x.precision_bits());
}

template <class T>
class Matrix {
 public:
  Matrix() : r_(0), c_(0) {}
  Matrix(size_t rows, size_t cols, const T& fill = T(0))
      : r_(rows), c_(cols), a_(rows * cols, fill) {}
  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  T& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  Matrix transposed() const {
    Matrix m(c_, r_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matmul: shape mismatch");
    Matrix m(a.r_, b.c_);
    for (size_t i = 0; i < a.r_; ++i)
      for (size_t k = 0; k < a.c_; ++k) {
        const T& aik = a(i, k);
        for (size_t j = 0; j < b.c_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix m(a.r_, a.c_);
    for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
    return m;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix m(a.r_, a.c_);
    for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
    return m;
  }
  std::vector<T> apply(const std::vector<T>& x) const {
    std::vector<T> y(r_, T(0));
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }
  T frobenius_norm() const {
    using std::sqrt;
    T s(0);
    for (const auto& v : a_) s += v * v;
    return sqrt(s);
  }

 private:
  size_t r_, c_;
  std::vector<T> a_;
};

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  T s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
T vec_norm(const std::vector<T>& a) {
  using std::sqrt;
  return sqrt(dot(a, a));
}

/// Determinant via LU with partial pivoting (works on a copy).
template <class T>
T lu_determinant(Matrix<T> a) {
  using std::abs;
  size_t n = a.rows();
  T det(1);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    T best = abs(a(k, k));
    for (size_t i = k + 1; i < n; ++i) {
      T v = abs(a(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (!(best > T(0))) return T(0);
    if (piv != k) {
      for (size_t j = k; j < n; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      T f = a(i, k) / a(k, k);
      for (size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

/// Solve A x = b via LU with partial pivoting.
template <class T>
std::vector<T> lu_solve(Matrix<T> a, std::vector<T> b) {
  using std::abs;
  size_t n = a.rows();
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    T best = abs(a(k, k));
    for (size_t i = k + 1; i < n; ++i) {
      T v = abs(a(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (!(best > T(0))) throw std::runtime_error("lu_solve: singular matrix");
    if (piv != k) {
      for (size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(b[k], b[piv]);
    }
    for (size_t i = k + 1; i < n; ++i) {
      T f = a(i, k) / a(k, k);
      a(i, k) = T(0);
      for (size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  std::vector<T> x(n, T(0));
  for (size_t i = n; i-- > 0;) {
    T s = b[i];
    for (size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

/// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
template <class T>
Matrix<T> cholesky_lower(const Matrix<T>& a) {
  using std::sqrt;
  size_t n = a.rows();
  Matrix<T> l(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j <= i; ++j) {
      T s = a(i, j);
      for (size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      if (i == j) {
        if (!(s > T(0))) throw std::runtime_error("cholesky: not positive definite");
        l(i, i) = sqrt(s);
      } else {
        l(i, j) = s / l(j, j);
      }
    }
  }
  return l;
}

/// Forward substitution L y = b (L lower triangular).
template <class T>
std::vector<T> forward_subst(const Matrix<T>& l, std::vector<T> b) {
  size_t n = l.rows();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < i; ++j) b[i] -= l(i, j) * b[j];
    b[i] = b[i] / l(i, i);
  }
  return b;
}

/// Backward substitution L^T x = y.
template <class T>
std::vector<T> backward_subst_t(const Matrix<T>& l, std::vector<T> y) {
  size_t n = l.rows();
  for (size_t i = n; i-- > 0;) {
    for (size_t j = i + 1; j < n; ++j) y[i] -= l(j, i) * y[j];
    y[i] = y[i] / l(i, i);
  }
  return y;
}

template <class T>
T pythag(const T& a, const T& b) {
  using std::abs;
  using std::sqrt;
  T aa = abs(a), ab = abs(b);
  if (aa > ab) {
    T r = ab / aa;
    return aa * sqrt(T(1) + r * r);
  }
  if (!(ab > T(0))) return T(0);
  T r = aa / ab;
  return ab * sqrt(T(1) + r * r);
}

struct SymEigenOptions {
  bool want_vectors = true;
  long max_ql_iters = 80;
};

template <class T>
struct SymEigen {
  std::vector<T> values;  // ascending
  Matrix<T> vectors;      // column k pairs with values[k]
};

/// Symmetric eigendecomposition: Householder tridiagonalization followed by
/// implicit-shift QL (classical tred2/tql2 scheme).
template <class T>
SymEigen<T> sym_eigen(const Matrix<T>& a_in, SymEigenOptions opt = {}) {
  using std::abs;
  using std::sqrt;
  const size_t n = a_in.rows();
  if (n == 0) return {};
  Matrix<T> a = a_in;
  std::vector<T> d(n, T(0)), e(n, T(0));
  const T eps = scalar_epsilon(a(0, 0));

  // Householder reduction
  for (size_t i = n; i-- > 1;) {
    size_t l = i - 1;
    T h(0), scale(0);
    if (l > 0) {
      for (size_t k = 0; k <= l; ++k) scale += abs(a(i, k));
      if (!(scale > T(0))) {
        e[i] = a(i, l);
      } else {
        for (size_t k = 0; k <= l; ++k) {
          a(i, k) = a(i, k) / scale;
          h += a(i, k) * a(i, k);
        }
        T f = a(i, l);
        T g = f >= T(0) ? -sqrt(h) : sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        a(i, l) = f - g;
        f = T(0);
        for (size_t j = 0; j <= l; ++j) {
          if (opt.want_vectors) a(j, i) = a(i, j) / h;
          g = T(0);
          for (size_t k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
          for (size_t k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
          e[j] = g / h;
          f += e[j] * a(i, j);
        }
        T hh = f / (h + h);
        for (size_t j = 0; j <= l; ++j) {
          f = a(i, j);
          e[j] = g = e[j] - hh * f;
          for (size_t k = 0; k <= j; ++k) a(j, k) -= f * e[k] + g * a(i, k);
        }
      }
    } else {
      e[i] = a(i, l);
    }
    d[i] = h;
  }
  d[0] = T(0);
  e[0] = T(0);
  // accumulation of transforms (or plain diagonal extraction)
  for (size_t i = 0; i < n; ++i) {
    if (opt.want_vectors) {
      bool nonzero_h = d[i] > T(0) || d[i] < T(0);
      if (nonzero_h) {
        for (size_t j = 0; j < i; ++j) {
          T g(0);
          for (size_t k = 0; k < i; ++k) g += a(i, k) * a(k, j);
          for (size_t k = 0; k < i; ++k) a(k, j) -= g * a(k, i);
        }
      }
      d[i] = a(i, i);
      a(i, i) = T(1);
      for (size_t j = 0; j < i; ++j) a(j, i) = a(i, j) = T(0);
    } else {
      d[i] = a(i, i);
    }
  }

  // QL with implicit shifts
  for (size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = T(0);
  for (size_t l = 0; l < n; ++l) {
    long iter = 0;
    size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        T dd = abs(d[m]) + abs(d[m + 1]);
        if (!(abs(e[m]) > dd * eps)) break;
      }
      if (m != l) {
        if (iter++ == opt.max_ql_iters)
          throw std::runtime_error("sym_eigen: QL iteration cap reached");
        T g = (d[l + 1] - d[l]) / (T(2) * e[l]);
        T r = pythag(g, T(1));
        T sgn = g >= T(0) ? r : -r;
        g = d[m] - d[l] + e[l] / (g + sgn);
        T s(1), c(1), p(0);
        bool early = false;
        for (size_t i = m; i-- > l;) {
          T f = s * e[i];
          T b = c * e[i];
          r = pythag(f, g);
          e[i + 1] = r;
          if (!(r > T(0))) {
            d[i + 1] -= p;
            e[m] = T(0);
            early = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + T(2) * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (opt.want_vectors) {
            for (size_t k = 0; k < n; ++k) {
              T fk = a(k, i + 1);
              a(k, i + 1) = s * a(k, i) + c * fk;
              a(k, i) = c * a(k, i) - s * fk;
            }
          }
        }
        if (early) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = T(0);
      }
    } while (m != l);
  }

  std::vector<size_t> idx(n);
  for (size_t i = 0; i < n; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](size_t x, size_t y) { return d[x] < d[y]; });
  SymEigen<T> out;
  out.values.reserve(n);
  for (size_t i = 0; i < n; ++i) out.values.push_back(d[idx[i]]);
  if (opt.want_vectors) {
    out.vectors = Matrix<T>(n, n);
    for (size_t j = 0; j < n; ++j)
      for (size_t i = 0; i < n; ++i) out.vectors(i, j) = a(i, idx[j]);
  }
  return out;
}

enum class LPStatus { Optimal, Infeasible, Unbounded };

template <class T>
struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  T objective = T(0);
  std::vector<T> x;
};

/// Two-phase dense primal simplex with Bland's rule (deterministic,
/// anti-cycling) for  min c^T x  s.t.  A x = b, x >= 0.
template <class T>
LPResult<T> simplex_min(const Matrix<T>& a_in, const std::vector<T>& b_in,
                        const std::vector<T>& c_in) {
  using std::abs;
  const size_t m = a_in.rows();
  const size_t n = a_in.cols();
  const T eps = scalar_epsilon(T(1)) * T(1e6);

  // tableau with artificials: columns [x (n) | artificials (m) | rhs]
  Matrix<T> t(m + 1, n + m + 1, T(0));
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) {
    T sign = b_in[i] < T(0) ? T(-1) : T(1);
    for (size_t j = 0; j < n; ++j) t(i, j) = sign * a_in(i, j);
    t(i, n + i) = T(1);
    t(i, n + m) = sign * b_in[i];
    basis[i] = n + i;
  }

  auto pivot = [&](size_t row, size_t col) {
    T pv = t(row, col);
    for (size_t j = 0; j <= n + m; ++j) t(row, j) = t(row, j) / pv;
    for (size_t i = 0; i <= m; ++i) {
      if (i == row) continue;
      T f = t(i, col);
      if (!(f > T(0)) && !(f < T(0))) continue;
      for (size_t j = 0; j <= n + m; ++j) t(i, j) -= f * t(row, j);
    }
    basis[row] = col;
  };

  auto run_simplex = [&](size_t ncols) -> bool {
    for (long iter = 0; iter < 200000; ++iter) {
      size_t enter = ncols;
      for (size_t j = 0; j < ncols; ++j) {  // Bland: first improving column
        bool in_basis = false;
        for (size_t i = 0; i < m; ++i)
          if (basis[i] == j) in_basis = true;
        if (!in_basis && t(m, j) < -eps) {
          enter = j;
          break;
        }
      }
      if (enter == ncols) return true;  // optimal
      size_t leave = m;
      for (size_t i = 0; i < m; ++i) {
        if (t(i, enter) > eps) {
          if (leave == m) {
            leave = i;
          } else {
            T lhs = t(i, n + m) * t(leave, enter);
            T rhs = t(leave, n + m) * t(i, enter);
            if (lhs < rhs || (!(lhs > rhs) && basis[i] < basis[leave])) leave = i;
          }
        }
      }
      if (leave == m) return false;  // unbounded
      pivot(leave, enter);
    }
    return false;
  };

  // phase 1: minimize sum of artificials
  for (size_t j = 0; j <= n + m; ++j) {
    T s(0);
    for (size_t i = 0; i < m; ++i)
      if (basis[i] >= n) s += t(i, j);
    t(m, j) = (j >= n && j < n + m) ? T(1) - s : -s;
  }
  LPResult<T> out;
  if (!run_simplex(n + m)) {
    out.status = LPStatus::Infeasible;
    return out;
  }
  if (t(m, n + m) < -eps * T(1e3)) {  // phase-1 objective = -sum artificials
    out.status = LPStatus::Infeasible;
    return out;
  }
  // drive leftover artificials out of the basis where possible
  for (size_t i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    size_t col = n;
    for (size_t j = 0; j < n; ++j)
      if (abs(t(i, j)) > eps) {
        col = j;
        break;
      }
    if (col < n) pivot(i, col);
  }
  // phase 2 objective row
  for (size_t j = 0; j <= n + m; ++j) {
    T s(0);
    for (size_t i = 0; i < m; ++i)
      if (basis[i] < n) s += c_in[basis[i]] * t(i, j);
    T cj = j < n ? c_in[j] : T(0);
    t(m, j) = cj - s;
  }
  // forbid re-entering artificial columns
  for (size_t j = n; j < n + m; ++j) t(m, j) = T(1);
  if (!run_simplex(n)) {
    out.status = LPStatus::Unbounded;
    return out;
  }
  out.status = LPStatus::Optimal;
  out.x.assign(n, T(0));
  for (size_t i = 0; i < m; ++i)
    if (basis[i] < n) out.x[basis[i]] = t(i, n + m);
  out.objective = T(0);
  for (size_t j = 0; j < n; ++j) out.objective += c_in[j] * out.x[j];
  return out;
}

/// Euclidean projection onto the probability simplex {w >= 0, sum w = 1}.
template <class T>
std::vector<T> project_to_simplex(std::vector<T> v) {
  std::vector<T> u = v;
  std::sort(u.begin(), u.end(), [](const T& a, const T& b) { return b < a; });
  T theta(0), cum(0);
  for (size_t i = 0; i < u.size(); ++i) {
    cum += u[i];
    T t = (cum - T(1)) / T(static_cast<double>(i + 1));
    if (u[i] - t > T(0)) theta = t;
  }
  for (auto& x : v) {
    x = x - theta;
    if (x < T(0)) x = T(0);
  }
  return v;
}

}  // namespace polylab
