#include "fgs/solver1d.hpp"

#include <algorithm>

#include "fgs/errors.hpp"
#include "line_checks.hpp"

namespace fgs {

std::span<double> LineWorkspace::doubles(std::size_t slot, std::size_t n) {
  if (doubles_.size() <= slot) doubles_.resize(slot + 1);
  auto& v = doubles_[slot];
  if (v.size() < n) v.resize(n);
  return {v.data(), n};
}

std::span<int> LineWorkspace::ints(std::size_t slot, std::size_t n) {
  if (ints_.size() <= slot) ints_.resize(slot + 1);
  auto& v = ints_[slot];
  if (v.size() < n) v.resize(n);
  return {v.data(), n};
}

Tridiagonal wls_system(std::span<const double> w) {
  const std::size_t n = w.size() + 1;
  Tridiagonal m;
  m.diag.assign(n, 1.0);
  m.lower.resize(n - 1);
  m.upper.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m.diag[i] += w[i];
    m.diag[i + 1] += w[i];
    m.lower[i] = m.upper[i] = -w[i];
  }
  return m;
}

namespace {

void wls_piece(std::span<const double> f, std::span<const double> w,
               std::span<double> out, LineWorkspace& ws) {
  const std::size_t n = f.size();
  if (n == 1) {
    out[0] = f[0];
    return;
  }
  auto diag = ws.doubles(0, n);
  auto off = ws.doubles(1, n - 1);
  auto scratch = ws.doubles(2, n);
  auto rhs = ws.doubles(3, n);
  // Solve for f - f[0] so that constant signals come back bit-exact.
  const double shift = f[0];
  for (std::size_t i = 0; i < n; ++i) rhs[i] = f[i] - shift;
  std::fill(diag.begin(), diag.end(), 1.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    diag[i] += w[i];
    diag[i + 1] += w[i];
    off[i] = -w[i];
  }
  thomas_solve(off, diag, off, rhs, out, scratch);
  for (double& z : out) z += shift;
}

}  // namespace

void wls_1d(std::span<const double> f, std::span<const double> w,
            std::span<double> out, LineWorkspace& ws) {
  detail::check_line(f, w, out.size());
  // Zero-weight edges decouple the system into independent blocks.
  const std::size_t n = f.size();
  std::size_t begin = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 == n || w[i] == 0.0) {
      const std::size_t len = i + 1 - begin;
      wls_piece(f.subspan(begin, len), w.subspan(begin, len - 1),
                out.subspan(begin, len), ws);
      begin = i + 1;
    }
  }
}

std::vector<double> wls_1d(std::span<const double> f,
                           std::span<const double> w) {
  std::vector<double> out(f.size());
  LineWorkspace ws;
  wls_1d(f, w, out, ws);
  return out;
}

}  // namespace fgs
