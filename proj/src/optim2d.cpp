#include "cwidth/optim2d.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>

#include "cwidth/banded.hpp"

namespace cwidth {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void check_grid(int n) {
  if (n < 8 || n % 4 != 0) throw Error(ErrorKind::InvalidParameter, "grid size must be a multiple of 4, at least 8");
}

// (Lx)_i = x_{i-1} − 2cos(Δ)x_i + x_{i+1}, cyclic.
void apply_l(std::span<const double> x, double c2, std::span<double> out) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) out[i] = x[(i + n - 1) % n] - c2 * x[i] + x[(i + 1) % n];
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Primal-dual interior point for min ½|x − y|² s.t. Gx ≥ b, where the rows of G
// are L/Δ² (convexity), I (x ≥ lo) and −I (x ≤ hi).
std::vector<double> ipm_project(std::span<const double> y, ProjectionInfo* info) {
  const int n = static_cast<int>(y.size());
  const int m = 3 * n;
  const double delta = kTwoPi / n;
  const double c2 = 2.0 * std::cos(delta);
  const double sc = 1.0 / (delta * delta);

  // Zig-zag order 0, n−1, 1, n−2, ... turns the cyclic pentadiagonal matrix into bandwidth 4.
  std::vector<int> pos(n);
  for (int i = 0; 2 * i < n; ++i) {
    pos[i] = 2 * i;
    if (n - 1 - i != i) pos[n - 1 - i] = 2 * i + 1;
  }

  auto gx = [&](std::span<const double> x, std::vector<double>& out) {
    out.resize(m);
    apply_l(x, c2, std::span<double>(out.data(), n));
    for (int i = 0; i < n; ++i) {
      out[i] *= sc;
      out[n + i] = x[i];
      out[2 * n + i] = -x[i];
    }
  };
  auto gtl = [&](const std::vector<double>& lam, std::vector<double>& out) {
    out.resize(n);
    std::vector<double> l1(lam.begin(), lam.begin() + n);
    apply_l(l1, c2, out);
    for (int i = 0; i < n; ++i) out[i] = sc * out[i] + lam[n + i] - lam[2 * n + i];
  };
  std::vector<double> b(m, 0.0);
  for (int i = 0; i < n; ++i) {
    b[n + i] = kAnnulusLo;
    b[2 * n + i] = -kAnnulusHi;
  }

  std::vector<double> x(y.begin(), y.end());
  for (double& v : x) v = std::clamp(v, kAnnulusLo, kAnnulusHi);
  std::vector<double> g, s(m), lam(m, 1.0);
  gx(x, g);
  for (int r = 0; r < m; ++r) s[r] = std::max(g[r] - b[r], 1e-2);

  BandedSpd k(n, 4);
  std::vector<double> rd(n), rp(m), w(m), gt, tmp(m), dx(n), ds(m), dl(m);

  auto solve = [&](const std::vector<double>& rc) {
    for (int r = 0; r < m; ++r) tmp[r] = rc[r] / s[r] - w[r] * rp[r];
    gtl(tmp, gt);
    std::vector<double> rhs(n);
    for (int i = 0; i < n; ++i) rhs[pos[i]] = -rd[i] + gt[i];
    k.solve(rhs);
    for (int i = 0; i < n; ++i) dx[i] = rhs[pos[i]];
    gx(dx, ds);
    for (int r = 0; r < m; ++r) {
      ds[r] += rp[r];
      dl[r] = (rc[r] - lam[r] * ds[r]) / s[r];
    }
  };
  auto steplen = [](const std::vector<double>& v, const std::vector<double>& dv) {
    double a = 1.0;
    for (std::size_t r = 0; r < v.size(); ++r)
      if (dv[r] < 0.0) a = std::min(a, -v[r] / dv[r]);
    return a;
  };

  // Rounding eventually stalls the dual residual, so the best iterate seen is kept.
  int it = 0, stall = 0;
  double best_score = std::numeric_limits<double>::infinity();
  std::vector<double> best_x = x;
  for (; it < 300; ++it) {
    gtl(lam, gt);
    for (int i = 0; i < n; ++i) rd[i] = x[i] - y[i] - gt[i];
    gx(x, g);
    for (int r = 0; r < m; ++r) rp[r] = g[r] - b[r] - s[r];
    double mu = 0.0;
    for (int r = 0; r < m; ++r) mu += s[r] * lam[r];
    mu /= m;
    const double score = std::max({max_abs(rd), max_abs(rp), mu});
    if (!std::isfinite(score) || !std::isfinite(mu)) break;
    if (score < best_score) {
      best_score = score;
      best_x = x;
      stall = 0;
    } else if (++stall >= 5) {
      break;
    }
    if ((mu < 1e-12 && max_abs(rd) < 1e-8 && max_abs(rp) < 1e-7) || mu < 1e-18) break;
    for (int r = 0; r < m; ++r) w[r] = lam[r] / s[r];

    k.clear();
    for (int i = 0; i < n; ++i) k.add(pos[i], pos[i], 1.0 + w[n + i] + w[2 * n + i]);
    for (int r = 0; r < n; ++r) {
      const int idx[3] = {(r + n - 1) % n, r, (r + 1) % n};
      const double coef[3] = {sc, -c2 * sc, sc};
      for (int a = 0; a < 3; ++a)
        for (int c = 0; c <= a; ++c) {
          const double v = w[r] * coef[a] * coef[c];
          if (a == c) k.add(pos[idx[a]], pos[idx[a]], v);
          else k.add(pos[idx[a]], pos[idx[c]], v);
        }
    }
    // K ≥ I, so every exact Cholesky pivot is at least 1.
    k.factor(1.0);

    std::vector<double> rc(m);
    for (int r = 0; r < m; ++r) rc[r] = -s[r] * lam[r];
    solve(rc);
    const double aff = std::min(steplen(s, ds), steplen(lam, dl));
    double mua = 0.0;
    for (int r = 0; r < m; ++r) mua += (s[r] + aff * ds[r]) * (lam[r] + aff * dl[r]);
    mua /= m;
    const double sigma = std::pow(mua / mu, 3.0);
    for (int r = 0; r < m; ++r) rc[r] = sigma * mu - s[r] * lam[r] - ds[r] * dl[r];
    solve(rc);
    const double a = std::min(1.0, 0.99 * std::min(steplen(s, ds), steplen(lam, dl)));
    for (int i = 0; i < n; ++i) x[i] += a * dx[i];
    for (int r = 0; r < m; ++r) {
      s[r] += a * ds[r];
      lam[r] += a * dl[r];
    }
  }
  if (info) {
    info->iterations = it;
    info->residual = best_score;
  }
  if (!(best_score < 1e-6)) throw Error(ErrorKind::NumericalFailure, "projection did not converge, residual " + fmt10(best_score));
  return best_x;
}

bool is_feasible(std::span<const double> h) {
  return min_convexity(h) >= -1e-12 && box_violation(h) <= 1e-12;
}

}  // namespace

SupportVector discretize(const ArcBody& k, int n) {
  check_grid(n);
  SupportVector v;
  v.h.resize(n);
  for (int i = 0; i < n; ++i) v.h[i] = k.support(kTwoPi * i / n);
  return v;
}

double min_convexity(std::span<const double> h) {
  const std::size_t n = h.size();
  const double c2 = 2.0 * std::cos(kTwoPi / static_cast<double>(n));
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) m = std::min(m, h[(i + n - 1) % n] - c2 * h[i] + h[(i + 1) % n]);
  return m;
}

double box_violation(std::span<const double> h) {
  double v = 0.0;
  for (double x : h) v = std::max({v, kAnnulusLo - x, x - kAnnulusHi});
  return v;
}

double objective_raw(std::span<const double> h) {
  const std::size_t n = h.size();
  const double d = kTwoPi / static_cast<double>(n);
  double per = 0.0, sq = 0.0, dsq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double diff = (h[(i + 1) % n] - h[i]) / d;
    per += h[i];
    sq += h[i] * h[i];
    dsq += diff * diff;
  }
  per *= d;
  const double a = 0.5 * d * sq - 0.5 * d * dsq;
  return 0.5 * per - a;
}

double objective(const SupportVector& h) {
  check_grid(h.n());
  if (min_convexity(h.h) < -1e-9) throw Error(ErrorKind::InvalidParameter, "support vector is not discretely convex");
  return objective_raw(h.h);
}

std::vector<double> objective_gradient(std::span<const double> h) {
  const std::size_t n = h.size();
  const double d = kTwoPi / static_cast<double>(n);
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = 0.5 - h[i] - (h[(i + n - 1) % n] - 2.0 * h[i] + h[(i + 1) % n]) / (d * d);
  return g;
}

SupportVector snap_feasible(std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  struct Line {
    Vec2 u;
    double c;
    int idx;
  };
  auto meet = [](const Line& a, const Line& b) {
    const double det = cross(a.u, b.u);
    return Vec2{(a.c * b.u.y - b.c * a.u.y) / det, (a.u.x * b.c - b.u.x * a.c) / det};
  };
  auto outside = [](const Line& l, Vec2 p) { return dot(l.u, p) > l.c + 1e-15; };

  // Half-plane intersection of {p·u_i ≤ min(x_i, hi)}; angles arrive sorted.
  std::deque<Line> dq;
  for (int i = 0; i < n; ++i) {
    const Line l{unit(kTwoPi * i / n), std::min(x[i], kAnnulusHi), i};
    while (dq.size() >= 2 && outside(l, meet(dq[dq.size() - 2], dq.back()))) dq.pop_back();
    while (dq.size() >= 2 && outside(l, meet(dq[0], dq[1]))) dq.pop_front();
    dq.push_back(l);
  }
  while (dq.size() >= 3 && outside(dq.front(), meet(dq[dq.size() - 2], dq.back()))) dq.pop_back();
  while (dq.size() >= 3 && outside(dq.back(), meet(dq[0], dq[1]))) dq.pop_front();
  if (dq.size() < 3) throw Error(ErrorKind::NumericalFailure, "support vector bounds no region");

  std::vector<Line> act(dq.begin(), dq.end());
  std::sort(act.begin(), act.end(), [](const Line& a, const Line& b) { return a.idx < b.idx; });
  SupportVector out;
  out.h.assign(n, 0.0);
  for (std::size_t k = 0; k < act.size(); ++k) {
    const Line& a = act[k];
    const Line& b = act[(k + 1) % act.size()];
    const Vec2 v = meet(a, b);
    const int end = b.idx > a.idx ? b.idx : b.idx + n;
    for (int i = a.idx; i < end; ++i) out.h[i % n] = dot(v, unit(kTwoPi * (i % n) / n));
  }
  for (double& v : out.h) v = std::max(v, kAnnulusLo);
  return out;
}

SupportVector project_feasible(const SupportVector& y, ProjectionInfo* info) {
  check_grid(y.n());
  if (is_feasible(y.h)) {
    if (info) *info = {};
    return y;
  }
  return snap_feasible(ipm_project(y.h, info));
}

SupportVector project_feasible_reference(const SupportVector& y, int max_rounds, double tol) {
  check_grid(y.n());
  const int n = y.n();
  const double c2 = 2.0 * std::cos(kTwoPi / n);
  std::vector<double> x = y.h;
  std::vector<double> zc(n, 0.0), zlo(n, 0.0), zhi(n, 0.0);
  const double norm2 = 2.0 + c2 * c2;
  for (int round = 0; round < max_rounds; ++round) {
    double change = 0.0;
    for (int i = 0; i < n; ++i) {
      const int im = (i + n - 1) % n, ip = (i + 1) % n;
      const double viol = -(x[im] - c2 * x[i] + x[ip]) / norm2;
      const double d = std::max(viol, -zc[i]);
      zc[i] += d;
      x[im] += d;
      x[i] -= c2 * d;
      x[ip] += d;
      change = std::max(change, std::abs(d));
    }
    for (int i = 0; i < n; ++i) {
      double d = std::max(kAnnulusLo - x[i], -zlo[i]);
      zlo[i] += d;
      x[i] += d;
      change = std::max(change, std::abs(d));
      d = std::max(x[i] - kAnnulusHi, -zhi[i]);
      zhi[i] += d;
      x[i] -= d;
      change = std::max(change, std::abs(d));
    }
    if (change < tol) return {x};
  }
  throw Error(ErrorKind::NumericalFailure, "reference projection did not converge");
}

SupportVector random_feasible_start(int n, std::uint64_t seed) {
  check_grid(n);
  std::mt19937_64 rng(mix(seed, 77));
  std::uniform_int_distribution<int> count(4, 10);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  std::vector<double> a(count(rng));
  for (double& v : a) v = ang(rng);
  SupportVector s;
  s.h.resize(n);
  for (int i = 0; i < n; ++i) {
    double h = kAnnulusLo;
    for (double t : a) h = std::max(h, kAnnulusHi * std::cos(kTwoPi * i / n - t));
    s.h[i] = h;
  }
  return s;
}

namespace {

struct StartOutcome {
  SupportVector h;
  double value = -std::numeric_limits<double>::infinity();
  std::vector<TraceRow> trace;
  bool ok = false;
};

void symmetrize(std::vector<double>& h) {
  const std::size_t n = h.size(), half = n / 2;
  for (std::size_t i = 0; i < half; ++i) h[i] = h[i + half] = 0.5 * (h[i] + h[i + half]);
}

StartOutcome ascend(int index, SupportVector h0, const RelaxedOptions& opt) {
  StartOutcome out;
  try {
    const double delta = h0.delta();
    if (opt.symmetric) symmetrize(h0.h);
    SupportVector h = project_feasible(h0);
    double val = objective_raw(h.h);
    double step = delta;
    out.trace.push_back({index, 0, val, step});
    for (int it = 1; it <= opt.max_iter; ++it) {
      const auto g = objective_gradient(h.h);
      SupportVector y = h;
      for (int i = 0; i < y.n(); ++i) y.h[i] += step * g[i];
      if (opt.symmetric) symmetrize(y.h);
      SupportVector cand = project_feasible(y);
      const double cv = objective_raw(cand.h);
      if (cv > val) {
        const double gain = cv - val;
        h = std::move(cand);
        val = cv;
        out.trace.push_back({index, it, val, step});
        if (gain < 1e-12) break;
      } else {
        step *= 0.5;
        if (step < 1e-10 * delta) break;
      }
    }
    out.h = std::move(h);
    out.value = val;
    out.ok = true;
  } catch (const Error&) {
    out.ok = false;
  }
  return out;
}

}  // namespace

RelaxedResult optimize_relaxed(const RelaxedOptions& opt) {
  check_grid(opt.n);
  if (opt.starts < 0) throw Error(ErrorKind::InvalidParameter, "starts must be nonnegative");
  std::vector<SupportVector> inits;
  if (opt.warm_disk) inits.push_back({std::vector<double>(opt.n, kAnnulusLo)});
  if (opt.warm_hexagon) inits.push_back(discretize(regular_hexagon(), opt.n));
  for (int s = 0; s < opt.starts; ++s) inits.push_back(random_feasible_start(opt.n, mix(opt.seed, 1000 + s)));
  if (inits.empty()) throw Error(ErrorKind::InvalidParameter, "no starting points");

  const int count = static_cast<int>(inits.size());
  std::vector<StartOutcome> outs(count);
  if (opt.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) outs[i] = ascend(i, inits[i], opt);
  } else {
    for (int i = 0; i < count; ++i) outs[i] = ascend(i, inits[i], opt);
  }

  RelaxedResult res;
  for (int i = 0; i < count; ++i) {
    res.start_values.push_back(outs[i].ok ? outs[i].value : std::nan(""));
    res.trace.insert(res.trace.end(), outs[i].trace.begin(), outs[i].trace.end());
    if (outs[i].ok && (res.best_start < 0 || outs[i].value > res.value)) {
      res.best_start = i;
      res.value = outs[i].value;
    }
  }
  if (res.best_start < 0) throw Error(ErrorKind::NumericalFailure, "every start failed to project");
  res.best = outs[res.best_start].h;
  return res;
}

namespace {

constexpr double kThird = kPi / 3.0;

// Orthonormal basis (Gram-Schmidt) of the given rows; dependent rows are dropped.
std::vector<std::vector<double>> orthonormal_rows(const std::vector<std::vector<double>>& rows) {
  std::vector<std::vector<double>> q;
  for (auto v : rows) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& e : q) {
        const double p = std::inner_product(v.begin(), v.end(), e.begin(), 0.0);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= p * e[i];
      }
    const double nv = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    if (nv > 1e-10) {
      for (double& x : v) x /= nv;
      q.push_back(std::move(v));
    }
  }
  return q;
}

std::vector<double> project_out(std::vector<double> v, const std::vector<std::vector<double>>& q) {
  for (const auto& e : q) {
    const double p = std::inner_product(v.begin(), v.end(), e.begin(), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= p * e[i];
  }
  return v;
}

// Closure rows (2) and the sum row of the constraint Jacobian.
std::vector<std::vector<double>> equality_rows(const std::vector<double>& th) {
  const int n = static_cast<int>(th.size());
  const double eps = 1e-7;
  std::vector<std::vector<double>> rows(3, std::vector<double>(n, 0.0));
  for (int j = 0; j < n; ++j) {
    auto xp = th, xm = th;
    xp[j] += eps;
    xm[j] -= eps;
    const Vec2 d = (1.0 / (2.0 * eps)) * (closure_residual(xp) - closure_residual(xm));
    rows[0][j] = d.x;
    rows[1][j] = d.y;
    rows[2][j] = 1.0;
  }
  return rows;
}

// Projects onto {Σθ = π, 0 ≤ θ ≤ π/3} by bisection on a common shift.
void simplex_box(std::vector<double>& th) {
  double lo = -kPi, hi = kPi;
  auto sum_at = [&](double t) {
    double s = 0.0;
    for (double v : th) s += std::clamp(v - t, 0.0, kThird);
    return s;
  };
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (sum_at(mid) > kPi ? lo : hi) = mid;
  }
  for (double& v : th) v = std::clamp(v - 0.5 * (lo + hi), 0.0, kThird);
}

// Restores closure and the angle sum by Newton steps on the angles strictly inside the box.
bool restore(std::vector<double>& th) {
  const int n = static_cast<int>(th.size());
  simplex_box(th);
  for (int round = 0; round < 2 * n; ++round) {
    std::vector<char> fixed(n);
    for (int i = 0; i < n; ++i) fixed[i] = th[i] <= 1e-13 || th[i] >= kThird - 1e-13;
    bool ok = false;
    for (int it = 0; it < 50; ++it) {
      const Vec2 c = closure_residual(th);
      const double f[3] = {c.x, c.y, std::accumulate(th.begin(), th.end(), 0.0) - kPi};
      if (std::abs(f[0]) + std::abs(f[1]) + std::abs(f[2]) < 1e-14) {
        ok = true;
        break;
      }
      auto rows = equality_rows(th);
      for (auto& r : rows)
        for (int j = 0; j < n; ++j)
          if (fixed[j]) r[j] = 0.0;
      double m[3][3] = {};
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) m[a][b] = std::inner_product(rows[a].begin(), rows[a].end(), rows[b].begin(), 0.0);
      // Solve the 3×3 system with a small ridge in case a row vanished.
      for (int a = 0; a < 3; ++a) m[a][a] += 1e-14;
      double y[3] = {f[0], f[1], f[2]};
      for (int col = 0; col < 3; ++col) {
        int p = col;
        for (int r = col + 1; r < 3; ++r)
          if (std::abs(m[r][col]) > std::abs(m[p][col])) p = r;
        std::swap(m[col], m[p]);
        std::swap(y[col], y[p]);
        for (int r = col + 1; r < 3; ++r) {
          const double fct = m[r][col] / m[col][col];
          for (int k = col; k < 3; ++k) m[r][k] -= fct * m[col][k];
          y[r] -= fct * y[col];
        }
      }
      for (int r = 2; r >= 0; --r) {
        for (int k = r + 1; k < 3; ++k) y[r] -= m[r][k] * y[k];
        y[r] /= m[r][r];
      }
      for (int j = 0; j < n; ++j) th[j] -= rows[0][j] * y[0] + rows[1][j] * y[1] + rows[2][j] * y[2];
    }
    if (!ok) return false;
    bool clamped = false;
    for (double& v : th)
      if (v < 0.0 || v > kThird) {
        v = std::clamp(v, 0.0, kThird);
        clamped = true;
      }
    if (!clamped) return true;
  }
  return false;
}

std::vector<double> fd_gradient(const std::vector<double>& th, double h) {
  std::vector<double> g(th.size());
  for (std::size_t j = 0; j < th.size(); ++j) {
    auto xp = th, xm = th;
    xp[j] += h;
    xm[j] -= h;
    g[j] = (layout_area(xp) - layout_area(xm)) / (2.0 * h);
  }
  return g;
}

// Projected gradient descent of the area on the closure manifold from one start.
std::pair<std::vector<double>, double> descend(std::vector<double> th) {
  const int n = static_cast<int>(th.size());
  double f = layout_area(th);
  double t = 0.1;
  for (int iter = 0; iter < 5000; ++iter) {
    const auto g = fd_gradient(th, 1e-3);
    auto eq = equality_rows(th);
    std::vector<int> active;
    for (int i = 0; i < n; ++i)
      if (th[i] <= 1e-12 || th[i] >= kThird - 1e-12) active.push_back(i);

    std::vector<double> d;
    for (;;) {
      auto rows = eq;
      for (int i : active) {
        std::vector<double> e(n, 0.0);
        e[i] = 1.0;
        rows.push_back(e);
      }
      d = project_out(g, orthonormal_rows(rows));
      for (double& v : d) v = -v;
      // Release the bound whose removal would let the step move inward the most.
      int release = -1;
      double best = 1e-12;
      for (std::size_t a = 0; a < active.size(); ++a) {
        auto r2 = eq;
        for (std::size_t b = 0; b < active.size(); ++b)
          if (b != a) {
            std::vector<double> e(n, 0.0);
            e[active[b]] = 1.0;
            r2.push_back(e);
          }
        auto d2 = project_out(g, orthonormal_rows(r2));
        const int i = active[a];
        const double inward = th[i] <= 1e-12 ? -d2[i] : d2[i];
        if (inward > best) {
          best = inward;
          release = static_cast<int>(a);
        }
      }
      if (release < 0) break;
      active.erase(active.begin() + release);
    }
    const double dn = std::sqrt(std::inner_product(d.begin(), d.end(), d.begin(), 0.0));
    if (dn < 1e-11) break;

    bool moved = false;
    while (t > 1e-14) {
      auto cand = th;
      for (int i = 0; i < n; ++i) cand[i] += t * d[i] / dn;
      if (restore(cand)) {
        const double fc = layout_area(cand);
        if (fc < f - 1e-15) {
          th = std::move(cand);
          f = fc;
          moved = true;
          t = std::min(2.0 * t, 0.5);
          break;
        }
      }
      t *= 0.5;
    }
    if (!moved) break;
  }
  return {th, f};
}

}  // namespace

AnglesResult optimize_angles(int n, int starts, std::uint64_t seed) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorKind::InvalidParameter, "n must be odd and >= 3");
  if (starts < 1) throw Error(ErrorKind::InvalidParameter, "need at least one start");
  AnglesResult best;
  best.area = std::numeric_limits<double>::infinity();
  for (int s = 0; s < starts; ++s) {
    std::vector<double> th = random_spec(n, mix(seed, 500 + s)).angles;
    if (n > 3) {
      auto [x, f] = descend(th);
      th = std::move(x);
    }
    ReuleauxSpec spec{th};
    double a;
    try {
      a = area(build_reuleaux(spec));
    } catch (const Error&) {
      continue;
    }
    if (a < best.area) {
      best.area = a;
      best.spec = spec;
      best.best_start = s;
    }
  }
  if (!std::isfinite(best.area)) throw Error(ErrorKind::NumericalFailure, "no start produced a valid polygon");
  return best;
}

}  // namespace cwidth
