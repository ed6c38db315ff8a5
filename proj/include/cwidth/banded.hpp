#pragma once

#include <span>
#include <vector>

namespace cwidth {

// Symmetric positive definite matrix with lower bandwidth p, factored in place
// by Cholesky. Entry (i, j) with 0 <= i - j <= p is stored at i*(p+1) + (i-j).
class BandedSpd {
 public:
  BandedSpd(int n, int p);

  int size() const { return n_; }
  int bandwidth() const { return p_; }
  void clear();
  // Adds v to (i, j) and, implicitly, (j, i). Requires |i - j| <= p.
  void add(int i, int j, double v);
  double get(int i, int j) const;

  // Throws NumericalFailure when a pivot is not positive. A positive min_pivot
  // is a known lower bound on the exact pivots; rounded pivots below it are raised to it.
  void factor(double min_pivot = 0.0);
  void solve(std::span<double> rhs) const;

 private:
  int n_;
  int p_;
  bool factored_ = false;
  std::vector<double> a_;

  double& at(int i, int d) { return a_[static_cast<std::size_t>(i) * (p_ + 1) + d]; }
  double at(int i, int d) const { return a_[static_cast<std::size_t>(i) * (p_ + 1) + d]; }
};

}  // namespace cwidth
