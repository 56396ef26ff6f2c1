#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace recot::io {

// 8-bit interleaved raster. channels is 1 (gray) or 3 (RGB).
struct Raster {
  int channels = 0;
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> pixels;  // (y*width + x)*channels + ch

  Raster() = default;
  Raster(int channels, int height, int width, std::uint8_t fill = 0);

  std::uint8_t& at(int y, int x, int ch = 0) {
    return pixels[(static_cast<std::size_t>(y) * width + x) * channels + ch];
  }
  std::uint8_t at(int y, int x, int ch = 0) const {
    return pixels[(static_cast<std::size_t>(y) * width + x) * channels + ch];
  }
  bool operator==(const Raster&) const = default;
};

// Binary netpbm. P6 for 3 channels, P5 for 1; maxval 255 only.
void write_pnm(const std::filesystem::path& path, const Raster& r);
Raster read_pnm(const std::filesystem::path& path);

}  // namespace recot::io
