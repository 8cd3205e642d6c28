#include "fgs/solver1d.hpp"

#include <algorithm>
#include <cmath>

#include "line_checks.hpp"

namespace fgs {
namespace {

// Hull chain with O(1) pop from both ends. Points are (x, y) with integer x.
struct Chain {
  std::span<int> xs;
  std::span<double> ys;
  std::size_t head = 0;
  std::size_t tail = 0;  // one past the last point

  std::size_t size() const { return tail - head; }
  void reset(int x, double y) {
    head = 0;
    tail = 1;
    xs[0] = x;
    ys[0] = y;
  }
  void push(int x, double y) {
    xs[tail] = x;
    ys[tail] = y;
    ++tail;
  }
};

double slope(int x0, double y0, int x1, double y1) {
  return (y1 - y0) / static_cast<double>(x1 - x0);
}

// Taut string through the tube [r_k - half_k, r_k + half_k] around the running
// sum r of f, pinned at both ends. The solution is the slope of the string.
// lower holds the concave hull of the lower tube boundary seen from the apex,
// upper the convex hull of the upper boundary. A new boundary point that
// crosses the opposite chain moves the apex along that chain and emits the
// fixed part of the string.
void taut_string(std::span<const double> f, std::span<const double> half,
                 std::span<double> out, LineWorkspace& ws) {
  const int n = static_cast<int>(f.size());
  if (n == 1) {
    out[0] = f[0];
    return;
  }
  // Running sums of f - f[0]: small magnitudes, and a constant piece comes
  // back bit-exact.
  const double shift = f[0];

  auto r = ws.doubles(3, n + 1);
  r[0] = 0.0;
  for (int k = 0; k < n; ++k) r[k + 1] = r[k] + (f[k] - shift);

  Chain lower{ws.ints(0, n + 1), ws.doubles(4, n + 1)};
  Chain upper{ws.ints(1, n + 1), ws.doubles(5, n + 1)};
  int ax = 0;
  double ay = 0.0;
  lower.reset(ax, ay);
  upper.reset(ax, ay);

  auto emit = [&](int bx, double by) {
    const double m = slope(ax, ay, bx, by) + shift;
    for (int i = ax; i < bx; ++i) out[i] = m;
    ax = bx;
    ay = by;
  };

  for (int k = 1; k <= n; ++k) {
    const double h = k < n ? half[k - 1] : 0.0;
    const double hi = r[k] + h;
    const double lo = r[k] - h;

    // Upper boundary point against the lower chain.
    bool moved = false;
    while (lower.size() >= 2 &&
           slope(ax, ay, k, hi) <=
               slope(ax, ay, lower.xs[lower.head + 1],
                     lower.ys[lower.head + 1])) {
      ++lower.head;
      emit(lower.xs[lower.head], lower.ys[lower.head]);
      moved = true;
    }
    if (moved) {
      upper.reset(ax, ay);
    } else {
      while (upper.size() >= 2 &&
             slope(upper.xs[upper.tail - 2], upper.ys[upper.tail - 2],
                   upper.xs[upper.tail - 1], upper.ys[upper.tail - 1]) >=
                 slope(upper.xs[upper.tail - 2], upper.ys[upper.tail - 2], k,
                       hi))
        --upper.tail;
    }
    upper.push(k, hi);

    // Lower boundary point against the upper chain.
    moved = false;
    while (upper.size() >= 2 &&
           slope(ax, ay, k, lo) >=
               slope(ax, ay, upper.xs[upper.head + 1],
                     upper.ys[upper.head + 1])) {
      ++upper.head;
      emit(upper.xs[upper.head], upper.ys[upper.head]);
      moved = true;
    }
    if (moved) {
      lower.reset(ax, ay);
      // A gate of zero width (lo == hi) pins the apex on it.
      if (ax == k) continue;
    } else {
      while (lower.size() >= 2 &&
             slope(lower.xs[lower.tail - 2], lower.ys[lower.tail - 2],
                   lower.xs[lower.tail - 1], lower.ys[lower.tail - 1]) <=
                 slope(lower.xs[lower.tail - 2], lower.ys[lower.tail - 2], k,
                       lo))
        --lower.tail;
    }
    lower.push(k, lo);
  }
  // Rounding can leave the apex short of the pinned end point.
  if (ax < n) emit(n, r[n]);
}

}  // namespace

void wtv_1d(std::span<const double> f, std::span<const double> w,
            std::span<double> out, LineWorkspace& ws) {
  detail::check_line(f, w, out.size());
  const std::size_t n = f.size();
  auto half = ws.doubles(6, n);
  for (std::size_t i = 0; i + 1 < n; ++i) half[i] = 0.5 * w[i];

  // Zero-weight edges decouple the signal into independent pieces.
  std::size_t begin = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 == n || w[i] == 0.0) {
      const std::size_t len = i + 1 - begin;
      taut_string(f.subspan(begin, len), half.subspan(begin, len - 1),
                  out.subspan(begin, len), ws);
      begin = i + 1;
    }
  }
}

std::vector<double> wtv_1d(std::span<const double> f,
                           std::span<const double> w) {
  std::vector<double> out(f.size());
  LineWorkspace ws;
  wtv_1d(f, w, out, ws);
  return out;
}

std::vector<double> wtv_dual(std::span<const double> f,
                             std::span<const double> z) {
  if (f.size() != z.size()) throw DimensionError("wtv_dual: size mismatch");
  std::vector<double> s(f.size() + 1, 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) s[i + 1] = s[i] + 2.0 * (z[i] - f[i]);
  return s;
}

KktReport check_wtv_optimality(std::span<const double> f,
                               std::span<const double> w,
                               std::span<const double> z, double tol,
                               double jump_tol) {
  if (w.size() + 1 != f.size()) throw DimensionError("kkt: weight count");
  const auto s = wtv_dual(f, z);
  const std::size_t n = f.size();
  KktReport rep;
  rep.boundary = std::max(std::abs(s[0]), std::abs(s[n]));
  for (std::size_t x = 1; x < n; ++x) {
    const double wx = w[x - 1];
    rep.box_excess = std::max(rep.box_excess, std::abs(s[x]) - wx);
    const double jump = z[x] - z[x - 1];
    if (jump > jump_tol)
      rep.saturation = std::max(rep.saturation, std::abs(s[x] - wx));
    else if (jump < -jump_tol)
      rep.saturation = std::max(rep.saturation, std::abs(s[x] + wx));
  }
  rep.ok = rep.boundary <= tol && rep.box_excess <= tol &&
           rep.saturation <= tol;
  return rep;
}

}  // namespace fgs
