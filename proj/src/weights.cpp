#include "fgs/weights.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>

#include "fgs/errors.hpp"

namespace fgs {
namespace {

std::size_t horizontal_count(int w, int h) {
  return static_cast<std::size_t>(w - 1) * h;
}
std::size_t vertical_count(int w, int h) {
  return static_cast<std::size_t>(w) * (h - 1);
}

void check_entries(const std::vector<double>& v) {
  for (double e : v)
    if (!std::isfinite(e) || e < 0.0)
      throw ParameterError("edge weights must be finite and non-negative");
}

}  // namespace

EdgeWeights::EdgeWeights(int width, int height, double fill)
    : width_(width), height_(height) {
  if (width < 1 || height < 1)
    throw DimensionError("weight grid dimensions must be positive");
  if (!std::isfinite(fill) || fill < 0.0)
    throw ParameterError("edge weights must be finite and non-negative");
  horizontal_.assign(horizontal_count(width, height), fill);
  vertical_.assign(vertical_count(width, height), fill);
}

EdgeWeights::EdgeWeights(int width, int height, std::vector<double> horizontal,
                         std::vector<double> vertical)
    : width_(width), height_(height), horizontal_(std::move(horizontal)),
      vertical_(std::move(vertical)) {
  if (width < 1 || height < 1)
    throw DimensionError("weight grid dimensions must be positive");
  if (horizontal_.size() != horizontal_count(width, height) ||
      vertical_.size() != vertical_count(width, height))
    throw DimensionError("weight arrays do not match a " +
                         std::to_string(width) + "x" + std::to_string(height) +
                         " grid");
  check_entries(horizontal_);
  check_entries(vertical_);
}

EdgeWeights compute_weights(const Image& guidance, double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa))
    throw ParameterError("kappa must be positive, got " +
                         std::to_string(kappa));
  const int W = guidance.width(), H = guidance.height();
  const int C = guidance.channels();
  EdgeWeights w(W, H);
  // exp underflows to 0 for steep edges; keep the map strictly positive.
  auto weight = [kappa](double d2) {
    return std::max(std::exp(-d2 / kappa), DBL_MIN);
  };
  for (int y = 0; y < H; ++y) {
    for (int x = 0; x + 1 < W; ++x) {
      double d2 = 0.0;
      for (int c = 0; c < C; ++c) {
        const double d = guidance.at(x + 1, y, c) - guidance.at(x, y, c);
        d2 += d * d;
      }
      w.h(x, y) = weight(d2 / C);
    }
  }
  for (int y = 0; y + 1 < H; ++y) {
    for (int x = 0; x < W; ++x) {
      double d2 = 0.0;
      for (int c = 0; c < C; ++c) {
        const double d = guidance.at(x, y + 1, c) - guidance.at(x, y, c);
        d2 += d * d;
      }
      w.v(x, y) = weight(d2 / C);
    }
  }
  return w;
}

EdgeWeights uniform_weights(int width, int height) {
  return EdgeWeights(width, height, 1.0);
}

EdgeWeights transpose(const EdgeWeights& w) {
  const int W = w.width(), H = w.height();
  EdgeWeights t(H, W);
  // Vertical edge (x, y)-(x, y+1) becomes horizontal edge (y, x)-(y+1, x).
  for (int y = 0; y + 1 < H; ++y)
    for (int x = 0; x < W; ++x) t.h(y, x) = w.v(x, y);
  for (int y = 0; y < H; ++y)
    for (int x = 0; x + 1 < W; ++x) t.v(y, x) = w.h(x, y);
  return t;
}

}  // namespace fgs
