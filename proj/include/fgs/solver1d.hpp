#pragma once

#include <span>
#include <vector>

#include "fgs/tridiagonal.hpp"

namespace fgs {

// Reusable buffers for the 1D solvers. One per thread.
class LineWorkspace {
 public:
  std::span<double> doubles(std::size_t slot, std::size_t n);
  std::span<int> ints(std::size_t slot, std::size_t n);

 private:
  std::vector<std::vector<double>> doubles_;
  std::vector<std::vector<int>> ints_;
};

// Matrix I + D^T diag(w) D of the 1D weighted least squares problem.
Tridiagonal wls_system(std::span<const double> w);

// argmin_z sum_x (z_x - f_x)^2 + sum_x w_x (z_{x+1} - z_x)^2.
// w has n-1 non-negative entries; negative entries throw ParameterError.
std::vector<double> wls_1d(std::span<const double> f,
                           std::span<const double> w);
void wls_1d(std::span<const double> f, std::span<const double> w,
            std::span<double> out, LineWorkspace& ws);

// argmin_z sum_x (z_x - f_x)^2 + sum_x w_x |z_{x+1} - z_x|, solved exactly in
// O(n) by a taut-string sweep. Zero weights decouple the signal.
std::vector<double> wtv_1d(std::span<const double> f,
                           std::span<const double> w);
void wtv_1d(std::span<const double> f, std::span<const double> w,
            std::span<double> out, LineWorkspace& ws);

// Dual certificate of a WTV solution: s has n+1 entries with
// s_x = 2 * sum_{i < x} (z_i - f_i), so s_0 = 0 and, at the optimum, s_n = 0,
// |s_x| <= w_{x-1}, and s_x = +w / -w across strict up / down jumps.
std::vector<double> wtv_dual(std::span<const double> f,
                             std::span<const double> z);

struct KktReport {
  bool ok = true;
  double boundary = 0.0;     // max(|s_0|, |s_n|)
  double box_excess = 0.0;   // max(|s_x| - w_x, 0)
  double saturation = 0.0;   // max |s_x - sign(jump) w_x| over strict jumps
};

// Optimality check of z for the WTV problem with data f and weights w.
KktReport check_wtv_optimality(std::span<const double> f,
                               std::span<const double> w,
                               std::span<const double> z, double tol = 1e-8,
                               double jump_tol = 1e-9);

}  // namespace fgs
