#pragma once

#include "fgs/config.hpp"
#include "fgs/image.hpp"
#include "fgs/smoother.hpp"

namespace fgs {

// Separable Gaussian blur, radius round(3 std), symmetric reflection at the
// border (abc|cba).
Image gaussian_blur(const Image& img, double stddev);

struct TextureParams {
  double lambda = 0.0;   // must be given
  double sigma = 7.65;   // Welsch scale
  double kappa = 5.0;
  double blur_std = 2.0;
  double alpha = 4.0;
  double beta1 = 1.0;
  int iters_K = 5;
  int iters_T = 5;
};

// FIRLS with the Welsch potential and guidance = Gaussian-blurred input.
SmoothResult remove_texture(const Image& f, const TextureParams& p);

struct QuantizeParams {
  double lambda = 0.0;
  double alpha = 4.0;
  double beta1 = 1.0;
  int iters_K = 5;
  int iters_T = 5;
};

// FIRL1 with log(1 + |tau|) and unit weights.
SmoothResult quantize_colors(const Image& f, const QuantizeParams& p);

}  // namespace fgs
