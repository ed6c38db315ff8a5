#include <benchmark/benchmark.h>

#include "cwidth/kernels.hpp"
#include "cwidth/solid3d.hpp"

using namespace cwidth;

namespace {

const TriMesh& meissner_mesh() {
  static const TriMesh m = meissner(MeissnerKind::VertexSmoothed, 40);
  return m;
}

std::vector<Vec3> directions(int n) { return ball_mesh(1.0, n).vertices; }

template <auto Fn>
void support_max(benchmark::State& state) {
  const auto dirs = directions(static_cast<int>(state.range(0)));
  std::vector<double> out(dirs.size());
  for (auto _ : state) {
    Fn(meissner_mesh().vertices, dirs, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <auto Fn>
void pairwise_sums(benchmark::State& state) {
  const TriMesh a = decimated(meissner_mesh(), 300);
  std::vector<Vec3> out(a.vertices.size() * a.vertices.size());
  for (auto _ : state) {
    Fn(a.vertices, a.vertices, 0.5, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <auto Fn>
void farthest_update(benchmark::State& state) {
  const auto& pts = meissner_mesh().vertices;
  const auto nrm = vertex_normals(meissner_mesh());
  std::vector<double> d(pts.size(), 1e300);
  std::size_t c = 0;
  for (auto _ : state) {
    c = Fn(pts, nrm, c, d);
    benchmark::DoNotOptimize(c);
  }
}

}  // namespace

BENCHMARK(support_max<kernels::serial::support_max>)->Arg(1000);
BENCHMARK(support_max<kernels::omp::support_max>)->Arg(1000);
BENCHMARK(pairwise_sums<kernels::serial::pairwise_sums>);
BENCHMARK(pairwise_sums<kernels::omp::pairwise_sums>);
BENCHMARK(farthest_update<kernels::serial::farthest_update>);
BENCHMARK(farthest_update<kernels::omp::farthest_update>);

BENCHMARK_MAIN();
