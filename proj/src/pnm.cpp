#include "fgs/pnm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <string>

#include "fgs/errors.hpp"

namespace fgs {
namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments, then parses a decimal integer.
  int next_int(const char* what) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 1'000'000'000)
        throw DecodeError(std::string(what) + " out of range", start);
      ++pos_;
    }
    if (pos_ == start)
      throw DecodeError(std::string("expected ") + what, pos_);
    return static_cast<int>(value);
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void single_whitespace() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_]))
      throw DecodeError("expected whitespace after maxval", pos_);
    ++pos_;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::uint8_t to_byte(double v) {
  const double r = std::round(std::clamp(v, 0.0, 255.0));
  return static_cast<std::uint8_t>(r);
}

}  // namespace

Image read_pnm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6'))
    throw DecodeError("not a binary PGM/PPM (expected P5 or P6)", 0);
  const int channels = bytes[1] == '5' ? 1 : 3;
  HeaderReader rd(bytes);
  rd.advance(2);
  const std::size_t width_at = rd.pos();
  const int width = rd.next_int("width");
  const int height = rd.next_int("height");
  if (width < 1 || height < 1)
    throw DecodeError("image dimensions must be positive", width_at);
  const std::size_t maxval_at = rd.pos();
  const int maxval = rd.next_int("maxval");
  if (maxval != 255)
    throw DecodeError("unsupported maxval " + std::to_string(maxval) +
                          " (only 255)",
                      maxval_at);
  rd.single_whitespace();

  const std::size_t pixels = static_cast<std::size_t>(width) * height;
  const std::size_t payload = pixels * channels;
  if (bytes.size() - rd.pos() < payload)
    throw DecodeError("truncated payload: need " + std::to_string(payload) +
                          " bytes, have " +
                          std::to_string(bytes.size() - rd.pos()),
                      bytes.size());

  std::vector<double> samples(payload);
  const std::uint8_t* raster = bytes.data() + rd.pos();
  // Interleaved on disk, planar in memory.
  for (std::size_t p = 0; p < pixels; ++p)
    for (int c = 0; c < channels; ++c)
      samples[c * pixels + p] = raster[p * channels + c];
  return Image(width, height, channels, std::move(samples));
}

std::vector<std::uint8_t> write_pnm(const Image& img) {
  const std::string header = std::string(img.channels() == 1 ? "P5" : "P6") +
                             "\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  const std::size_t pixels = img.pixel_count();
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + pixels * img.channels());
  for (std::size_t p = 0; p < pixels; ++p)
    for (int c = 0; c < img.channels(); ++c)
      out.push_back(to_byte(img.plane(c)[p]));
  return out;
}

Image load_pnm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return read_pnm(bytes);
}

void save_pnm(const std::filesystem::path& path, const Image& img) {
  const auto bytes = write_pnm(img);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace fgs
