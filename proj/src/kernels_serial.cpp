#include <limits>

#include "cwidth/kernels.hpp"

namespace cwidth::kernels::serial {

void support_max(std::span<const Vec3> pts, std::span<const Vec3> dirs, std::span<double> out) {
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    double m = -std::numeric_limits<double>::infinity();
    for (const Vec3& p : pts) m = std::max(m, dot(p, dirs[k]));
    out[k] = m;
  }
}

void pairwise_sums(std::span<const Vec3> a, std::span<const Vec3> b, double t, std::span<Vec3> out) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] + t * b[j];
}

std::size_t farthest_update(std::span<const Vec3> pts, std::span<const Vec3> nrm, std::size_t c,
                            std::span<double> dist2) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec3 d = pts[i] - pts[c];
    double e = dot(d, d);
    if (!nrm.empty()) {
      const Vec3 dn = nrm[i] - nrm[c];
      e += dot(dn, dn);
    }
    dist2[i] = std::min(dist2[i], e);
    if (dist2[i] > dist2[best]) best = i;
  }
  return best;
}

}  // namespace cwidth::kernels::serial
