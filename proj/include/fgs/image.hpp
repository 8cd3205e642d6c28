#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fgs {

// Planar floating-point image. Samples are stored plane by plane, each plane
// row-major, so sample (x, y, c) lives at (c * height + y) * width + x.
// Values are nominally in [0, 255] but never clamped here.
class Image {
 public:
  Image() = default;
  Image(int width, int height, int channels, double fill = 0.0);
  // Takes ownership of samples; throws DimensionError on a length mismatch and
  // ParameterError on non-finite samples.
  Image(int width, int height, int channels, std::vector<double> samples);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return channels_; }
  std::size_t pixel_count() const noexcept {
    return static_cast<std::size_t>(width_) * height_;
  }
  bool empty() const noexcept { return samples_.empty(); }

  double& at(int x, int y, int c = 0) noexcept {
    return samples_[index(x, y, c)];
  }
  double at(int x, int y, int c = 0) const noexcept {
    return samples_[index(x, y, c)];
  }

  std::span<double> plane(int c) noexcept {
    return {samples_.data() + c * pixel_count(), pixel_count()};
  }
  std::span<const double> plane(int c) const noexcept {
    return {samples_.data() + c * pixel_count(), pixel_count()};
  }

  const std::vector<double>& samples() const noexcept { return samples_; }
  std::vector<double>& samples() noexcept { return samples_; }

  bool same_shape(const Image& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_ &&
           channels_ == other.channels_;
  }

  // Throws ParameterError if any sample is NaN or infinite.
  void check_finite() const;

 private:
  std::size_t index(int x, int y, int c) const noexcept {
    return (static_cast<std::size_t>(c) * height_ + y) * width_ + x;
  }

  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<double> samples_;
};

Image transpose(const Image& img);

// Single-channel extraction and planar merge.
Image channel(const Image& img, int c);
Image merge_channels(std::span<const Image> planes);

}  // namespace fgs
