#pragma once

#include <span>
#include <vector>

namespace cwidth {

// Linear program in a handful of free variables with many inequality rows:
//   maximize  c·x  subject to  a_i·x <= b_i.
// Solved by a vertex-walking primal simplex (Bland's rule) started from a
// strictly feasible point. Intended for dimension <= 4 (in-ball problems).
class SmallLp {
 public:
  explicit SmallLp(int dim);

  int dim() const { return dim_; }
  std::size_t rows() const { return b_.size(); }
  void add_row(std::span<const double> a, double b);

  struct Result {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
  };

  // Throws Error(InvalidBody) when the objective is unbounded and
  // Error(InvalidParameter) when x0 violates a row.
  Result maximize(std::span<const double> c, std::span<const double> x0) const;

 private:
  int dim_;
  std::vector<double> a_;
  std::vector<double> b_;

  double row_dot(std::size_t i, std::span<const double> x) const;
};

}  // namespace cwidth
