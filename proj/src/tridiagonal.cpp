#include "fgs/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fgs/errors.hpp"

namespace fgs {
namespace {

void check_sizes(std::size_t n, std::size_t lower, std::size_t upper,
                 std::size_t rhs) {
  if (n == 0) throw DimensionError("empty tridiagonal system");
  if (lower != n - 1 || upper != n - 1 || rhs != n)
    throw DimensionError("tridiagonal bands and right-hand side disagree");
}

}  // namespace

std::vector<double> Tridiagonal::multiply(std::span<const double> x) const {
  const std::size_t n = size();
  check_sizes(n, lower.size(), upper.size(), x.size());
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = diag[i] * x[i];
    if (i > 0) s += lower[i - 1] * x[i - 1];
    if (i + 1 < n) s += upper[i] * x[i + 1];
    y[i] = s;
  }
  return y;
}

void thomas_solve(std::span<const double> lower, std::span<const double> diag,
                  std::span<const double> upper, std::span<const double> rhs,
                  std::span<double> out, std::span<double> scratch) {
  const std::size_t n = diag.size();
  check_sizes(n, lower.size(), upper.size(), rhs.size());
  if (out.size() != n || scratch.size() < n)
    throw DimensionError("thomas_solve: output or scratch too small");

  // scratch holds the eliminated super-diagonal, out the eliminated rhs.
  if (diag[0] == 0.0) throw std::logic_error("thomas_solve: zero pivot");
  double pivot = diag[0];
  out[0] = rhs[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    scratch[i - 1] = upper[i - 1] / pivot;
    pivot = diag[i] - lower[i - 1] * scratch[i - 1];
    if (pivot == 0.0) throw std::logic_error("thomas_solve: zero pivot");
    out[i] = (rhs[i] - lower[i - 1] * out[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) out[i] -= scratch[i] * out[i + 1];
}

std::vector<double> thomas_solve(const Tridiagonal& m,
                                 std::span<const double> rhs) {
  std::vector<double> out(rhs.size()), scratch(rhs.size());
  thomas_solve(m.lower, m.diag, m.upper, rhs, out, scratch);
  return out;
}

double residual_inf(const Tridiagonal& m, std::span<const double> z,
                    std::span<const double> rhs) {
  const auto mz = m.multiply(z);
  if (rhs.size() != mz.size()) throw DimensionError("residual: size mismatch");
  double r = 0.0;
  for (std::size_t i = 0; i < mz.size(); ++i)
    r = std::max(r, std::abs(mz[i] - rhs[i]));
  return r;
}

}  // namespace fgs
