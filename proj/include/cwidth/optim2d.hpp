#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cwidth/arcbody.hpp"
#include "cwidth/reuleaux.hpp"

namespace cwidth {

inline constexpr double kAnnulusLo = 0.5;
inline constexpr double kAnnulusHi = kSqrt3 / 3.0;

// Support function sampled at θ_i = 2πi/N.
struct SupportVector {
  std::vector<double> h;

  int n() const { return static_cast<int>(h.size()); }
  double delta() const { return kTwoPi / static_cast<double>(h.size()); }
};

SupportVector discretize(const ArcBody& k, int n);

// min_i of h_{i-1} − 2cos(Δ)h_i + h_{i+1}; nonnegative on support vectors.
double min_convexity(std::span<const double> h);
// Largest violation of the annulus box [1/2, √3/3].
double box_violation(std::span<const double> h);

// ½Per − A of the discretized body. objective() rejects vectors whose
// convexity violation exceeds 1e-9; the raw form does not check.
double objective(const SupportVector& h);
double objective_raw(std::span<const double> h);
// Functional gradient ½ − h_i − (h_{i−1} − 2h_i + h_{i+1})/Δ²; the
// Euclidean gradient of objective_raw is Δ times this.
std::vector<double> objective_gradient(std::span<const double> h);

// Euclidean projection onto {discrete convexity} ∩ {1/2 ≤ h ≤ √3/3}. Solved by
// a primal-dual interior point method on the pentadiagonal normal equations,
// then snapped onto the feasible set exactly. Feasible inputs come back unchanged.
struct ProjectionInfo {
  int iterations = 0;
  double residual = 0.0;
};
SupportVector project_feasible(const SupportVector& y, ProjectionInfo* info = nullptr);
// Dykstra/Hildreth row-action projection onto the same set; slow, kept as a reference.
SupportVector project_feasible_reference(const SupportVector& y, int max_rounds = 200000, double tol = 1e-13);
// Largest support vector below x that is discretely convex, clipped to the annulus.
SupportVector snap_feasible(std::span<const double> x);

struct RelaxedOptions {
  int n = 720;
  int starts = 16;
  std::uint64_t seed = 1;
  bool warm_disk = true;
  bool warm_hexagon = true;
  bool symmetric = false;  // impose h_{i+N/2} = h_i
  bool parallel = true;
  int max_iter = 50000;
};

struct TraceRow {
  int start = 0;
  int iter = 0;
  double objective = 0.0;
  double step = 0.0;
};

struct RelaxedResult {
  SupportVector best;
  double value = 0.0;
  int best_start = -1;
  std::vector<double> start_values;
  std::vector<TraceRow> trace;  // grouped by start, accepted iterates only
};

// Start order: disk(1/2) warm start, hexagon warm start, then the random starts.
RelaxedResult optimize_relaxed(const RelaxedOptions& opt);
SupportVector random_feasible_start(int n, std::uint64_t seed);

struct AnglesResult {
  ReuleauxSpec spec;
  double area = 0.0;
  int best_start = 0;
};

// Minimizes the Reuleaux polygon area over angle vectors that close.
AnglesResult optimize_angles(int n, int starts, std::uint64_t seed);

}  // namespace cwidth
