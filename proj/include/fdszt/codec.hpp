#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fdszt/image.hpp"

namespace fdszt {

// Secret-image dimensions, embedded as the first 32 bits:
// height then width, 16-bit big-endian each, MSB first.
struct StegoHeader {
  int height = 0;  // m
  int width = 0;   // n
};

inline constexpr int kHeaderBits = 32;
inline constexpr int kMaxSecretDim = 65535;

// One bit per complete 2x2 mask; trailing odd row/column carries nothing.
long long capacity_bits(const GrayImage& cover);

// Bit sequences are vectors of 0/1 values. Byte <-> bit conversion is
// MSB-first per byte.
std::vector<std::uint8_t> bytes_to_bits(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> bits_to_bytes(std::span<const std::uint8_t> bits);

std::vector<std::uint8_t> encode_header(int height, int width);   // throws HeaderOutOfRange
StegoHeader decode_header(std::span<const std::uint8_t> bits);    // throws ZeroDimension

// Embeds [header || secret raster] one bit per mask, masks visited in
// row-major order over the cover's grid of 2x2 blocks. Masks beyond the
// bitstream and any odd trailing row/column are copied unchanged.
// Throws InsufficientCapacity or EmbedFailed (naming the mask row/col).
GrayImage embed_image(const GrayImage& cover, const GrayImage& secret);

// Reads the header from the first 32 mask bits, validates it, then decodes
// the payload. Throws ZeroDimension or PayloadExceedsCapacity on non-stego
// or corrupted input.
GrayImage extract_image(const GrayImage& stego);

}  // namespace fdszt
