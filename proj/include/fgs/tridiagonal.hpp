#pragma once

#include <span>
#include <vector>

namespace fgs {

// n x n tridiagonal matrix; lower[i] sits at (i+1, i), upper[i] at (i, i+1).
struct Tridiagonal {
  std::vector<double> lower;
  std::vector<double> diag;
  std::vector<double> upper;

  std::size_t size() const noexcept { return diag.size(); }
  std::vector<double> multiply(std::span<const double> x) const;
};

// Thomas elimination without pivoting. Requires a diagonally dominant matrix;
// a vanishing pivot throws std::logic_error.
std::vector<double> thomas_solve(const Tridiagonal& m,
                                 std::span<const double> rhs);

// Allocation-free variant. scratch needs at least n entries; out may alias rhs.
void thomas_solve(std::span<const double> lower, std::span<const double> diag,
                  std::span<const double> upper, std::span<const double> rhs,
                  std::span<double> out, std::span<double> scratch);

// ||m z - rhs||_inf
double residual_inf(const Tridiagonal& m, std::span<const double> z,
                    std::span<const double> rhs);

}  // namespace fgs
