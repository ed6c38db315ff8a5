#pragma once

#include <cstddef>
#include <span>

#include "cwidth/common.hpp"

// Hot loops of the 3D engine. Both namespaces expose identical signatures and
// must agree bit for bit; the serial versions are the testing reference.
namespace cwidth::kernels {

namespace serial {
// out[k] = max_i pts[i]·dirs[k]
void support_max(std::span<const Vec3> pts, std::span<const Vec3> dirs, std::span<double> out);
// out[i*|b| + j] = a[i] + t·b[j]
void pairwise_sums(std::span<const Vec3> a, std::span<const Vec3> b, double t, std::span<Vec3> out);
// dist2[i] = min(dist2[i], |pts[i] − pts[c]|² + |nrm[i] − nrm[c]|²), with the normal term
// dropped when nrm is empty; returns the index of the largest dist2 (lowest on ties).
std::size_t farthest_update(std::span<const Vec3> pts, std::span<const Vec3> nrm, std::size_t c,
                            std::span<double> dist2);
}  // namespace serial

namespace omp {
void support_max(std::span<const Vec3> pts, std::span<const Vec3> dirs, std::span<double> out);
void pairwise_sums(std::span<const Vec3> a, std::span<const Vec3> b, double t, std::span<Vec3> out);
std::size_t farthest_update(std::span<const Vec3> pts, std::span<const Vec3> nrm, std::size_t c,
                            std::span<double> dist2);
}  // namespace omp

}  // namespace cwidth::kernels
