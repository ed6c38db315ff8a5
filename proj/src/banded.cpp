#include "cwidth/banded.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "cwidth/common.hpp"

namespace cwidth {

BandedSpd::BandedSpd(int n, int p) : n_(n), p_(p), a_(static_cast<std::size_t>(n) * (p + 1), 0.0) {
  if (n < 1 || p < 0) throw Error(ErrorKind::InvalidParameter, "bad banded matrix shape");
}

void BandedSpd::clear() {
  std::fill(a_.begin(), a_.end(), 0.0);
  factored_ = false;
}

void BandedSpd::add(int i, int j, double v) {
  if (i < j) std::swap(i, j);
  if (i - j > p_) throw Error(ErrorKind::InvalidParameter, "entry outside the band");
  at(i, i - j) += v;
}

double BandedSpd::get(int i, int j) const {
  if (i < j) std::swap(i, j);
  return i - j > p_ ? 0.0 : at(i, i - j);
}

void BandedSpd::factor(double min_pivot) {
  for (int i = 0; i < n_; ++i) {
    const int j0 = std::max(0, i - p_);
    for (int j = j0; j <= i; ++j) {
      double s = at(i, i - j);
      const int k0 = std::max(j0, j - p_);
      for (int k = k0; k < j; ++k) s -= at(i, i - k) * at(j, j - k);
      if (j == i) {
        if (min_pivot > 0.0 && !(s >= min_pivot)) s = min_pivot;
        if (!(s > 0.0)) throw Error(ErrorKind::NumericalFailure, "banded matrix is not positive definite");
        at(i, 0) = std::sqrt(s);
      } else {
        at(i, i - j) = s / at(j, 0);
      }
    }
  }
  factored_ = true;
}

void BandedSpd::solve(std::span<double> b) const {
  if (!factored_) throw Error(ErrorKind::InternalConsistency, "solve before factor");
  for (int i = 0; i < n_; ++i) {
    double s = b[i];
    for (int k = std::max(0, i - p_); k < i; ++k) s -= at(i, i - k) * b[k];
    b[i] = s / at(i, 0);
  }
  for (int i = n_ - 1; i >= 0; --i) {
    double s = b[i];
    for (int k = i + 1; k <= std::min(n_ - 1, i + p_); ++k) s -= at(k, k - i) * b[k];
    b[i] = s / at(i, 0);
  }
}

}  // namespace cwidth
