#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "fgs/image.hpp"

namespace fgs {

// Binary PGM (P5, one channel) or PPM (P6, three channels) with maxval 255.
// Header comments are skipped. Throws DecodeError.
Image read_pnm(std::span<const std::uint8_t> bytes);

// Clamps to [0, 255], rounds half away from zero and emits
// "P5\n<W> <H>\n255\n" (or P6) followed by the payload.
std::vector<std::uint8_t> write_pnm(const Image& img);

// File wrappers; I/O failures throw std::runtime_error.
Image load_pnm(const std::filesystem::path& path);
void save_pnm(const std::filesystem::path& path, const Image& img);

}  // namespace fgs
