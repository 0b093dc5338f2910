#include <zlib.h>

#include <cstdint>
#include <cstring>
#include <string>

#include "fdszt/errors.hpp"
#include "fdszt/image.hpp"

// Minimal PNG support for the one case the toolkit needs: 8-bit grayscale
// (color type 0), non-interlaced. Reading handles all five row filters;
// writing uses filter 0 so output is deterministic.

namespace fdszt {

namespace {

constexpr std::uint8_t kSignature[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};

std::uint32_t read_u32(const std::uint8_t* p) {
  return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) | (std::uint32_t(p[2]) << 8) |
         std::uint32_t(p[3]);
}

void append_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void append_chunk(std::vector<std::uint8_t>& out, const char type[4],
                  const std::uint8_t* data, std::size_t size) {
  append_u32(out, static_cast<std::uint32_t>(size));
  const std::size_t type_pos = out.size();
  out.insert(out.end(), type, type + 4);
  if (size > 0) {
    out.insert(out.end(), data, data + size);
  }
  const std::uint32_t crc = static_cast<std::uint32_t>(
      crc32(0, out.data() + type_pos, static_cast<uInt>(4 + size)));
  append_u32(out, crc);
}

int paeth(int a, int b, int c) {
  const int p = a + b - c;
  const int pa = std::abs(p - a);
  const int pb = std::abs(p - b);
  const int pc = std::abs(p - c);
  if (pa <= pb && pa <= pc) return a;
  if (pb <= pc) return b;
  return c;
}

}  // namespace

GrayImage parse_png(std::span<const std::uint8_t> data) {
  if (data.size() < 8 || std::memcmp(data.data(), kSignature, 8) != 0) {
    throw MalformedHeader("not a PNG (bad signature)");
  }

  std::uint32_t width = 0;
  std::uint32_t height = 0;
  bool have_ihdr = false;
  bool have_iend = false;
  std::vector<std::uint8_t> compressed;

  std::size_t pos = 8;
  while (pos < data.size() && !have_iend) {
    if (data.size() - pos < 12) {
      throw TruncatedRaster("PNG chunk truncated");
    }
    const std::uint32_t length = read_u32(&data[pos]);
    if (data.size() - pos - 12 < length) {
      throw TruncatedRaster("PNG chunk data truncated");
    }
    const char* type = reinterpret_cast<const char*>(&data[pos + 4]);
    const std::uint8_t* chunk = &data[pos + 8];
    const std::uint32_t stored_crc = read_u32(&data[pos + 8 + length]);
    const std::uint32_t actual_crc = static_cast<std::uint32_t>(
        crc32(0, &data[pos + 4], static_cast<uInt>(4 + length)));
    if (stored_crc != actual_crc) {
      throw MalformedHeader("PNG chunk CRC mismatch");
    }

    if (std::memcmp(type, "IHDR", 4) == 0) {
      if (length != 13) {
        throw MalformedHeader("PNG IHDR has wrong length");
      }
      width = read_u32(chunk);
      height = read_u32(chunk + 4);
      const int bit_depth = chunk[8];
      const int color_type = chunk[9];
      const int interlace = chunk[12];
      if (bit_depth != 8 || color_type != 0) {
        throw Error("unsupported PNG: only 8-bit grayscale (color type 0) is handled");
      }
      if (interlace != 0) {
        throw Error("unsupported PNG: interlaced images are not handled");
      }
      if (width == 0 || height == 0 || width > 0x7fffffff || height > 0x7fffffff) {
        throw MalformedHeader("PNG dimensions out of range");
      }
      have_ihdr = true;
    } else if (std::memcmp(type, "IDAT", 4) == 0) {
      compressed.insert(compressed.end(), chunk, chunk + length);
    } else if (std::memcmp(type, "IEND", 4) == 0) {
      have_iend = true;
    }
    // Ancillary chunks are skipped.
    pos += 12 + length;
  }

  if (!have_ihdr || !have_iend) {
    throw MalformedHeader("PNG missing IHDR or IEND");
  }

  const std::size_t stride = static_cast<std::size_t>(width) + 1;  // filter byte per row
  std::vector<std::uint8_t> raw(stride * height);
  uLongf raw_size = static_cast<uLongf>(raw.size());
  const int rc = uncompress(raw.data(), &raw_size, compressed.data(),
                            static_cast<uLong>(compressed.size()));
  if (rc != Z_OK || raw_size != raw.size()) {
    throw TruncatedRaster("PNG IDAT stream does not decompress to the declared size");
  }

  GrayImage image;
  image.width = static_cast<int>(width);
  image.height = static_cast<int>(height);
  image.pixels.resize(static_cast<std::size_t>(width) * height);

  for (std::uint32_t y = 0; y < height; ++y) {
    const std::uint8_t filter = raw[y * stride];
    const std::uint8_t* src = &raw[y * stride + 1];
    std::uint8_t* dst = &image.pixels[static_cast<std::size_t>(y) * width];
    const std::uint8_t* up = y > 0 ? dst - width : nullptr;
    for (std::uint32_t x = 0; x < width; ++x) {
      const int a = x > 0 ? dst[x - 1] : 0;
      const int b = up ? up[x] : 0;
      const int c = (x > 0 && up) ? up[x - 1] : 0;
      int value = src[x];
      switch (filter) {
        case 0: break;
        case 1: value += a; break;
        case 2: value += b; break;
        case 3: value += (a + b) / 2; break;
        case 4: value += paeth(a, b, c); break;
        default: throw MalformedHeader("PNG row uses unknown filter " + std::to_string(filter));
      }
      dst[x] = static_cast<std::uint8_t>(value & 0xff);
    }
  }
  return image;
}

std::vector<std::uint8_t> write_png(const GrayImage& image) {
  const std::size_t stride = static_cast<std::size_t>(image.width) + 1;
  std::vector<std::uint8_t> raw(stride * image.height, 0);
  for (int y = 0; y < image.height; ++y) {
    std::memcpy(&raw[y * stride + 1], &image.pixels[static_cast<std::size_t>(y) * image.width],
                static_cast<std::size_t>(image.width));
  }

  std::vector<std::uint8_t> compressed(compressBound(static_cast<uLong>(raw.size())));
  uLongf compressed_size = static_cast<uLongf>(compressed.size());
  if (compress2(compressed.data(), &compressed_size, raw.data(), static_cast<uLong>(raw.size()),
                Z_DEFAULT_COMPRESSION) != Z_OK) {
    throw Error("PNG compression failed");
  }
  compressed.resize(compressed_size);

  std::uint8_t ihdr[13] = {};
  ihdr[0] = static_cast<std::uint8_t>(image.width >> 24);
  ihdr[1] = static_cast<std::uint8_t>(image.width >> 16);
  ihdr[2] = static_cast<std::uint8_t>(image.width >> 8);
  ihdr[3] = static_cast<std::uint8_t>(image.width);
  ihdr[4] = static_cast<std::uint8_t>(image.height >> 24);
  ihdr[5] = static_cast<std::uint8_t>(image.height >> 16);
  ihdr[6] = static_cast<std::uint8_t>(image.height >> 8);
  ihdr[7] = static_cast<std::uint8_t>(image.height);
  ihdr[8] = 8;   // bit depth
  ihdr[9] = 0;   // grayscale
  ihdr[10] = 0;  // deflate
  ihdr[11] = 0;  // adaptive filtering
  ihdr[12] = 0;  // no interlace

  std::vector<std::uint8_t> out(kSignature, kSignature + 8);
  append_chunk(out, "IHDR", ihdr, sizeof(ihdr));
  append_chunk(out, "IDAT", compressed.data(), compressed.size());
  append_chunk(out, "IEND", nullptr, 0);
  return out;
}

}  // namespace fdszt
