#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "cwidth/common.hpp"
#include "cwidth/report.hpp"

namespace cwidth {

// Closed triangulated convex surface; faces are counterclockwise seen from outside.
struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
};

enum class MeissnerKind { VertexSmoothed, FaceSmoothed };

const char* to_string(MeissnerKind kind);

// Quickhull. Points closer than 1e-12·diameter to a face count as inside it.
TriMesh convex_hull3(std::span<const Vec3> points);

// Throws InvalidBody unless the mesh is watertight, has Euler characteristic 2
// and every vertex lies inside every face plane within 1e-7·diameter.
void check_mesh(const TriMesh& m);

double diameter_bound(std::span<const Vec3> points);
// Divergence-theorem volume; a negative result (inverted mesh) throws InvalidBody.
double volume(const TriMesh& m);
double area(const TriMesh& m);
// (1/4π) Σ edge length × exterior dihedral angle.
double mean_width(const TriMesh& m);
double mesh_support(const TriMesh& m, const Vec3& dir);
double mesh_width(const TriMesh& m, const Vec3& dir);
// Largest ball inside the face half-spaces, by linear programming.
double inradius3(const TriMesh& m);

struct WidthStats {
  double min = 0.0;
  double max = 0.0;
};
// Widths over n_dirs random unit directions.
WidthStats width_stats(const TriMesh& m, int n_dirs, std::uint64_t seed);
VerificationReport width_report(const TriMesh& m, int n_dirs, std::uint64_t seed, double target = 1.0,
                                double tol = 0.01);

TriMesh translate(const TriMesh& m, const Vec3& v);
TriMesh scale(const TriMesh& m, double s);
TriMesh reflect_origin(const TriMesh& m);
void write_obj(const TriMesh& m, std::ostream& out);

// Axis-aligned cube centered at the origin.
TriMesh cube(double side = 1.0);
// Hull of n Fibonacci-sphere points.
TriMesh ball_mesh(double radius, int n);
// Regular tetrahedron of unit edge centered at the origin.
std::array<Vec3, 4> unit_tetrahedron();
TriMesh reuleaux_tetrahedron(int quality);
// The smoothed edges: VertexSmoothed uses (0,1), (0,2), (0,3); FaceSmoothed uses (1,2), (1,3), (2,3).
TriMesh meissner(MeissnerKind kind, int quality);
// Unit width across opposite faces, edge √(3/8), centered at the origin.
TriMesh rhombic_dodecahedron();

// Hull of all pairwise vertex sums. Throws ResourceLimit above 10⁶ pairs.
TriMesh minkowski_sum3(const TriMesh& a, const TriMesh& b);
// Farthest-point subsample of at most max_points points, starting at the largest x.
// With normals given, distances are measured between (point, unit normal) pairs, which
// spends more of the budget where the surface turns quickly.
std::vector<Vec3> decimate(std::span<const Vec3> points, std::span<const Vec3> normals, int max_points = 300);
// Area-weighted vertex normals.
std::vector<Vec3> vertex_normals(const TriMesh& m);
// Hull of the farthest-point subsample of the vertices in position-normal space.
TriMesh decimated(const TriMesh& m, int max_points = 300);

struct MixedVolumes {
  double v_kkl = 0.0;
  double v_kll = 0.0;
  double v_k = 0.0;
  double v_l = 0.0;  // cubic coefficient of the fit
};
// Fits t ↦ V(K + tL) at t = 0, 1/3, 2/3, 1. Both inputs are decimated first.
MixedVolumes mixed_volumes_fit(const TriMesh& k, const TriMesh& l);

// 2rπ/(3(3 − 2r)), the smallest volume of a unit-width body with inradius r.
double chakerian_bound(double r);
double meissner_volume_exact();
// Inradius at which chakerian_bound equals the Meissner volume.
double meissner_inradius_exact();

VerificationReport verify_3d_identities(int quality, MeissnerKind kind = MeissnerKind::VertexSmoothed);
// Both kinds plus the polyhedron constants and the mixed-volume checks on cube and dodecahedron.
VerificationReport verify3d_suite(int quality);

}  // namespace cwidth
