#pragma once

// Deterministic generators shared by the unit and acceptance suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "fgs/image.hpp"
#include "fgs/weights.hpp"

namespace fgs::testing {

// Uniform doubles from mt19937_64 without relying on the library's
// distribution algorithms, so frozen values are portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  std::vector<double> vector(std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (double& e : v) e = uniform(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

inline Image random_image(int w, int h, int channels, Rng& rng,
                          double lo = 0.0, double hi = 255.0) {
  return Image(w, h, channels,
               rng.vector(static_cast<std::size_t>(w) * h * channels, lo, hi));
}

inline EdgeWeights random_weights(int w, int h, Rng& rng, double lo = 0.01,
                                  double hi = 1.0) {
  return EdgeWeights(w, h, rng.vector(static_cast<std::size_t>(w - 1) * h, lo, hi),
                     rng.vector(static_cast<std::size_t>(w) * (h - 1), lo, hi));
}

// Piecewise-smooth test scene: a few shaded regions with straight and curved
// boundaries, a fine stripe texture and mild noise. `variant` changes the
// layout so fixture sets can be drawn from one generator.
inline Image synthetic_scene(int w, int h, int variant, double noise = 4.0,
                             int channels = 1) {
  Rng rng(0x5eed0000u + static_cast<std::uint64_t>(variant));
  const double cx = w * rng.uniform(0.3, 0.7), cy = h * rng.uniform(0.3, 0.7);
  const double r = std::min(w, h) * rng.uniform(0.15, 0.3);
  const double slope = rng.uniform(-1.0, 1.0);
  const double split = h * rng.uniform(0.3, 0.7);
  const double base[3] = {rng.uniform(30, 90), rng.uniform(120, 200),
                          rng.uniform(60, 160)};
  const double ramp = rng.uniform(-0.6, 0.6);
  const double stripe = rng.uniform(6, 14);
  Image img(w, h, channels);
  for (int c = 0; c < channels; ++c) {
    const double tint = 1.0 - 0.15 * c;
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        double v;
        if (y > split + slope * (x - w / 2.0))
          v = base[0] + ramp * x;
        else
          v = base[1] - ramp * y;
        const double dx = x - cx, dy = y - cy;
        if (dx * dx + dy * dy < r * r) v = base[2];
        if (x > w * 0.7 && y < h * 0.35) v += stripe * ((x + y) % 4 < 2 ? 1 : -1);
        v = v * tint + rng.uniform(-noise, noise);
        img.at(x, y, c) = std::clamp(v, 0.0, 255.0);
      }
    }
  }
  return img;
}

}  // namespace fgs::testing
