#include "fgs/image.hpp"

#include <cmath>
#include <string>

#include "fgs/errors.hpp"

namespace fgs {
namespace {

void check_shape(int width, int height, int channels) {
  if (width < 1 || height < 1)
    throw DimensionError("image dimensions must be positive, got " +
                         std::to_string(width) + "x" + std::to_string(height));
  if (channels != 1 && channels != 3)
    throw DimensionError("image must have 1 or 3 channels, got " +
                         std::to_string(channels));
}

}  // namespace

Image::Image(int width, int height, int channels, double fill)
    : width_(width), height_(height), channels_(channels) {
  check_shape(width, height, channels);
  if (!std::isfinite(fill)) throw ParameterError("non-finite fill value");
  samples_.assign(pixel_count() * channels, fill);
}

Image::Image(int width, int height, int channels, std::vector<double> samples)
    : width_(width), height_(height), channels_(channels),
      samples_(std::move(samples)) {
  check_shape(width, height, channels);
  if (samples_.size() != pixel_count() * channels)
    throw DimensionError("sample count " + std::to_string(samples_.size()) +
                         " does not match " + std::to_string(width) + "x" +
                         std::to_string(height) + "x" +
                         std::to_string(channels));
  check_finite();
}

void Image::check_finite() const {
  for (double s : samples_)
    if (!std::isfinite(s)) throw ParameterError("image contains NaN or Inf");
}

Image transpose(const Image& img) {
  Image out(img.height(), img.width(), img.channels());
  for (int c = 0; c < img.channels(); ++c)
    for (int y = 0; y < img.height(); ++y)
      for (int x = 0; x < img.width(); ++x) out.at(y, x, c) = img.at(x, y, c);
  return out;
}

Image channel(const Image& img, int c) {
  auto src = img.plane(c);
  return Image(img.width(), img.height(), 1,
               std::vector<double>(src.begin(), src.end()));
}

Image merge_channels(std::span<const Image> planes) {
  if (planes.empty()) throw DimensionError("no planes to merge");
  const int w = planes[0].width(), h = planes[0].height();
  std::vector<double> samples;
  samples.reserve(planes.size() * planes[0].pixel_count());
  for (const Image& p : planes) {
    if (p.width() != w || p.height() != h || p.channels() != 1)
      throw DimensionError("planes to merge must be single-channel and equal");
    samples.insert(samples.end(), p.samples().begin(), p.samples().end());
  }
  return Image(w, h, static_cast<int>(planes.size()), std::move(samples));
}

}  // namespace fgs
