#include "fgs/presets.hpp"

#include <cmath>
#include <vector>

#include "fgs/errors.hpp"
#include "fgs/reweighted.hpp"
#include "fgs/weights.hpp"

namespace fgs {
namespace {

// Half-sample symmetric reflection: -1 -> 0, n -> n-1.
int reflect(int i, int n) {
  if (n == 1) return 0;
  const int period = 2 * n;
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - 1 - i;
}

std::vector<double> gaussian_kernel(double stddev) {
  const int radius = static_cast<int>(std::lround(3.0 * stddev));
  std::vector<double> k(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    k[i + radius] = std::exp(-0.5 * i * i / (stddev * stddev));
    sum += k[i + radius];
  }
  for (double& v : k) v /= sum;
  return k;
}

}  // namespace

Image gaussian_blur(const Image& img, double stddev) {
  if (!(stddev > 0.0)) throw ParameterError("blur stddev must be positive");
  const auto k = gaussian_kernel(stddev);
  const int radius = static_cast<int>(k.size() / 2);
  const int W = img.width(), H = img.height();
  Image tmp(W, H, img.channels()), out(W, H, img.channels());
  for (int c = 0; c < img.channels(); ++c) {
    for (int y = 0; y < H; ++y)
      for (int x = 0; x < W; ++x) {
        double s = 0.0;
        for (int i = -radius; i <= radius; ++i)
          s += k[i + radius] * img.at(reflect(x + i, W), y, c);
        tmp.at(x, y, c) = s;
      }
    for (int y = 0; y < H; ++y)
      for (int x = 0; x < W; ++x) {
        double s = 0.0;
        for (int i = -radius; i <= radius; ++i)
          s += k[i + radius] * tmp.at(x, reflect(y + i, H), c);
        out.at(x, y, c) = s;
      }
  }
  return out;
}

SmoothResult remove_texture(const Image& f, const TextureParams& p) {
  SmootherConfig cfg;
  cfg.lambda = p.lambda;
  cfg.kappa = p.kappa;
  cfg.alpha = p.alpha;
  cfg.beta1 = p.beta1;
  cfg.iters_K = p.iters_K;
  cfg.iters_T = p.iters_T;
  cfg.prior = Prior::kFirls;
  cfg.potential = Potential::welsch(p.sigma);
  cfg.validate();
  const EdgeWeights w = compute_weights(gaussian_blur(f, p.blur_std), p.kappa);
  return firls(f, w, cfg, cfg.potential);
}

SmoothResult quantize_colors(const Image& f, const QuantizeParams& p) {
  SmootherConfig cfg;
  cfg.lambda = p.lambda;
  cfg.alpha = p.alpha;
  cfg.beta1 = p.beta1;
  cfg.iters_K = p.iters_K;
  cfg.iters_T = p.iters_T;
  cfg.prior = Prior::kFirl1;
  cfg.potential = Potential::log_abs();
  cfg.validate();
  return firl1(f, uniform_weights(f.width(), f.height()), cfg, cfg.potential);
}

}  // namespace fgs
