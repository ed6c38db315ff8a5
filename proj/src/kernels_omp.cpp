#include <limits>

#include "cwidth/kernels.hpp"

namespace cwidth::kernels::omp {

void support_max(std::span<const Vec3> pts, std::span<const Vec3> dirs, std::span<double> out) {
  const auto nd = static_cast<std::ptrdiff_t>(dirs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < nd; ++k) {
    double m = -std::numeric_limits<double>::infinity();
    for (const Vec3& p : pts) m = std::max(m, dot(p, dirs[k]));
    out[k] = m;
  }
}

void pairwise_sums(std::span<const Vec3> a, std::span<const Vec3> b, double t, std::span<Vec3> out) {
  const auto na = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] + t * b[j];
}

std::size_t farthest_update(std::span<const Vec3> pts, std::span<const Vec3> nrm, std::size_t c,
                            std::span<double> dist2) {
  const auto n = static_cast<std::ptrdiff_t>(pts.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const Vec3 d = pts[i] - pts[c];
    double e = dot(d, d);
    if (!nrm.empty()) {
      const Vec3 dn = nrm[i] - nrm[c];
      e += dot(dn, dn);
    }
    dist2[i] = std::min(dist2[i], e);
  }
  // The argmax is a serial pass so ties resolve exactly as in the reference.
  std::size_t best = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (dist2[i] > dist2[best]) best = i;
  return best;
}

}  // namespace cwidth::kernels::omp
