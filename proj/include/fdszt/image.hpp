#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace fdszt {

// 8-bit grayscale raster, row-major, top-left pixel first.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  GrayImage() = default;
  GrayImage(int width, int height, std::uint8_t fill = 0)
      : width(width),
        height(height),
        pixels(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {}

  std::size_t pixel_count() const { return pixels.size(); }

  std::uint8_t at(int row, int col) const {
    return pixels[static_cast<std::size_t>(row) * width + col];
  }
  std::uint8_t& at(int row, int col) {
    return pixels[static_cast<std::size_t>(row) * width + col];
  }

  bool valid() const {
    return width > 0 && height > 0 &&
           pixels.size() == static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }

  bool operator==(const GrayImage&) const = default;
};

// Binary PGM ("P5"). Header comments ('#' to end of line) are accepted.
// Maxval 1..255 is accepted and pixels are used as stored; maxval > 255 is
// rejected (UnsupportedMaxval). Throws MalformedHeader / TruncatedRaster.
GrayImage parse_pgm(std::span<const std::uint8_t> data);

// Emits "P5\n<width> <height>\n255\n" followed by the raw raster.
std::vector<std::uint8_t> write_pgm(const GrayImage& image);

// 8-bit grayscale PNG (color type 0, no interlace). Decodes to the identical
// GrayImage model as the PGM path.
GrayImage parse_png(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> write_png(const GrayImage& image);

// File helpers; the format is picked from the extension (.pgm / .png).
GrayImage load_image(const std::filesystem::path& path);
void save_image(const std::filesystem::path& path, const GrayImage& image);

}  // namespace fdszt
