#include "cwidth/small_lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "cwidth/common.hpp"

namespace cwidth {

namespace {

using Matrix = std::vector<double>;  // row-major d×d

// Solves M z = rhs in place by Gaussian elimination with partial pivoting.
bool solve_dense(int d, Matrix m, std::vector<double>& rhs) {
  for (int col = 0; col < d; ++col) {
    int piv = col;
    for (int r = col + 1; r < d; ++r)
      if (std::abs(m[r * d + col]) > std::abs(m[piv * d + col])) piv = r;
    if (std::abs(m[piv * d + col]) < 1e-300) return false;
    if (piv != col) {
      for (int k = 0; k < d; ++k) std::swap(m[col * d + k], m[piv * d + k]);
      std::swap(rhs[col], rhs[piv]);
    }
    for (int r = col + 1; r < d; ++r) {
      const double f = m[r * d + col] / m[col * d + col];
      if (f == 0.0) continue;
      for (int k = col; k < d; ++k) m[r * d + k] -= f * m[col * d + k];
      rhs[r] -= f * rhs[col];
    }
  }
  for (int r = d - 1; r >= 0; --r) {
    double s = rhs[r];
    for (int k = r + 1; k < d; ++k) s -= m[r * d + k] * rhs[k];
    rhs[r] = s / m[r * d + r];
  }
  return true;
}

double vdot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

SmallLp::SmallLp(int dim) : dim_(dim) {
  if (dim < 1 || dim > 8) throw Error(ErrorKind::InvalidParameter, "SmallLp dimension must be in [1, 8]");
}

void SmallLp::add_row(std::span<const double> a, double b) {
  if (static_cast<int>(a.size()) != dim_) throw Error(ErrorKind::InvalidParameter, "row size mismatch");
  a_.insert(a_.end(), a.begin(), a.end());
  b_.push_back(b);
}

double SmallLp::row_dot(std::size_t i, std::span<const double> x) const {
  return vdot(std::span<const double>(a_.data() + i * dim_, dim_), x);
}

SmallLp::Result SmallLp::maximize(std::span<const double> c, std::span<const double> x0) const {
  const int d = dim_;
  const std::size_t m = b_.size();
  std::vector<double> x(x0.begin(), x0.end());
  for (std::size_t i = 0; i < m; ++i)
    if (row_dot(i, x) > b_[i] + 1e-12) throw Error(ErrorKind::InvalidParameter, "LP start point is infeasible");

  std::vector<std::size_t> active;
  std::vector<char> is_active(m, 0);

  auto ratio_test = [&](const std::vector<double>& dir) -> std::optional<std::pair<double, std::size_t>> {
    std::optional<std::pair<double, std::size_t>> best;
    const double dn = std::sqrt(vdot(dir, dir));
    for (std::size_t i = 0; i < m; ++i) {
      if (is_active[i]) continue;
      const double rate = row_dot(i, dir);
      if (rate <= 1e-13 * dn) continue;
      const double step = std::max(0.0, (b_[i] - row_dot(i, x)) / rate);
      if (!best || step < best->first - 1e-15 * (1.0 + best->first)) best = {{step, i}};
    }
    return best;
  };

  // Walk to a vertex, gaining one tight row per step.
  while (static_cast<int>(active.size()) < d) {
    std::vector<std::vector<double>> basis;  // orthonormal basis of the active rows
    for (std::size_t r : active) {
      std::vector<double> v(a_.begin() + r * d, a_.begin() + (r + 1) * d);
      for (const auto& q : basis) {
        const double p = vdot(v, q);
        for (int k = 0; k < d; ++k) v[k] -= p * q[k];
      }
      const double n = std::sqrt(vdot(v, v));
      for (int k = 0; k < d; ++k) v[k] /= n;
      basis.push_back(std::move(v));
    }
    auto complement = [&](std::vector<double> v) {
      for (const auto& q : basis) {
        const double p = vdot(v, q);
        for (int k = 0; k < d; ++k) v[k] -= p * q[k];
      }
      return v;
    };
    std::vector<double> dir = complement(std::vector<double>(c.begin(), c.end()));
    bool objective_driven = std::sqrt(vdot(dir, dir)) > 1e-12 * (1.0 + std::sqrt(vdot(c, c)));
    if (!objective_driven) {
      for (int k = 0; k < d; ++k) {
        std::vector<double> e(d, 0.0);
        e[k] = 1.0;
        dir = complement(e);
        if (std::sqrt(vdot(dir, dir)) > 1e-6) break;
      }
    }
    auto hit = ratio_test(dir);
    if (!hit && !objective_driven) {
      for (auto& v : dir) v = -v;
      hit = ratio_test(dir);
    }
    if (!hit) throw Error(ErrorKind::InvalidBody, "LP is unbounded");
    for (int k = 0; k < d; ++k) x[k] += hit->first * dir[k];
    active.push_back(hit->second);
    is_active[hit->second] = 1;
  }

  Result res;
  const int max_iter = static_cast<int>(50 * m + 1000);
  for (int iter = 0; iter < max_iter; ++iter) {
    Matrix bt(d * d);  // transpose of the active-row matrix
    Matrix bm(d * d);
    for (int r = 0; r < d; ++r)
      for (int k = 0; k < d; ++k) {
        bm[r * d + k] = a_[active[r] * d + k];
        bt[k * d + r] = a_[active[r] * d + k];
      }
    std::vector<double> lambda(c.begin(), c.end());
    if (!solve_dense(d, bt, lambda)) throw Error(ErrorKind::NumericalFailure, "singular LP basis");

    // Bland: among negative multipliers, leave the row with the smallest index.
    const double tol = 1e-12 * (1.0 + std::sqrt(vdot(c, c)));
    int leave = -1;
    for (int r = 0; r < d; ++r)
      if (lambda[r] < -tol && (leave < 0 || active[r] < active[leave])) leave = r;
    if (leave < 0) {
      res.x = x;
      res.value = vdot(c, x);
      res.iterations = iter;
      return res;
    }
    std::vector<double> dir(d, 0.0);
    dir[leave] = -1.0;
    if (!solve_dense(d, bm, dir)) throw Error(ErrorKind::NumericalFailure, "singular LP basis");
    auto hit = ratio_test(dir);
    if (!hit) throw Error(ErrorKind::InvalidBody, "LP is unbounded");
    for (int k = 0; k < d; ++k) x[k] += hit->first * dir[k];
    is_active[active[leave]] = 0;
    active[leave] = hit->second;
    is_active[hit->second] = 1;
  }
  throw Error(ErrorKind::NumericalFailure, "LP iteration limit reached");
}

}  // namespace cwidth
