#pragma once

#include <span>
#include <vector>

#include "fgs/image.hpp"

namespace fgs {

// Per-edge smoothness weights on the 4-neighbour grid.
//   horizontal: (W-1) x H entries, edge between (x, y) and (x+1, y)
//   vertical:   W x (H-1) entries, edge between (x, y) and (x, y+1)
// Entries must be finite and non-negative. Maps produced by compute_weights
// and uniform_weights are additionally in (0, 1].
class EdgeWeights {
 public:
  EdgeWeights() = default;
  EdgeWeights(int width, int height, double fill = 1.0);
  EdgeWeights(int width, int height, std::vector<double> horizontal,
              std::vector<double> vertical);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  double& h(int x, int y) noexcept { return horizontal_[y * (width_ - 1) + x]; }
  double h(int x, int y) const noexcept {
    return horizontal_[y * (width_ - 1) + x];
  }
  double& v(int x, int y) noexcept { return vertical_[y * width_ + x]; }
  double v(int x, int y) const noexcept { return vertical_[y * width_ + x]; }

  // Horizontal weights of row y, length W-1.
  std::span<const double> row(int y) const noexcept {
    return {horizontal_.data() + static_cast<std::size_t>(y) * (width_ - 1),
            static_cast<std::size_t>(width_ - 1)};
  }

  const std::vector<double>& horizontal() const noexcept { return horizontal_; }
  const std::vector<double>& vertical() const noexcept { return vertical_; }

  bool matches(const Image& img) const noexcept {
    return img.width() == width_ && img.height() == height_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> horizontal_;
  std::vector<double> vertical_;
};

// w = exp(-d^2 / kappa) with d the forward difference of the guidance. For
// multi-channel guidance d^2 is the mean of the per-channel squared
// differences. Throws ParameterError when kappa <= 0.
EdgeWeights compute_weights(const Image& guidance, double kappa);

EdgeWeights uniform_weights(int width, int height);

// Weights of the transposed grid: horizontal and vertical maps swap roles.
EdgeWeights transpose(const EdgeWeights& w);

}  // namespace fgs
