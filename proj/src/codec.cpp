#include "fdszt/codec.hpp"

#include <string>

#include "fdszt/embed.hpp"
#include "fdszt/errors.hpp"

namespace fdszt {

long long capacity_bits(const GrayImage& cover) {
  return static_cast<long long>(cover.height / 2) * (cover.width / 2);
}

std::vector<std::uint8_t> bytes_to_bits(std::span<const std::uint8_t> bytes) {
  std::vector<std::uint8_t> bits;
  bits.reserve(bytes.size() * 8);
  for (std::uint8_t byte : bytes) {
    for (int i = 7; i >= 0; --i) {
      bits.push_back(static_cast<std::uint8_t>((byte >> i) & 1));
    }
  }
  return bits;
}

std::vector<std::uint8_t> bits_to_bytes(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> bytes(bits.size() / 8, 0);
  for (std::size_t i = 0; i < bytes.size() * 8; ++i) {
    bytes[i / 8] = static_cast<std::uint8_t>((bytes[i / 8] << 1) | (bits[i] & 1));
  }
  return bytes;
}

std::vector<std::uint8_t> encode_header(int height, int width) {
  if (height < 1 || height > kMaxSecretDim || width < 1 || width > kMaxSecretDim) {
    throw HeaderOutOfRange("secret dimensions " + std::to_string(height) + "x" +
                           std::to_string(width) + " outside [1, 65535]");
  }
  const std::uint8_t bytes[4] = {
      static_cast<std::uint8_t>(height >> 8), static_cast<std::uint8_t>(height & 0xff),
      static_cast<std::uint8_t>(width >> 8), static_cast<std::uint8_t>(width & 0xff)};
  return bytes_to_bits(bytes);
}

StegoHeader decode_header(std::span<const std::uint8_t> bits) {
  if (bits.size() < kHeaderBits) {
    throw ZeroDimension("header needs 32 bits, got " + std::to_string(bits.size()));
  }
  int values[2] = {0, 0};
  for (int field = 0; field < 2; ++field) {
    for (int i = 0; i < 16; ++i) {
      values[field] = (values[field] << 1) | (bits[field * 16 + i] & 1);
    }
  }
  if (values[0] == 0 || values[1] == 0) {
    throw ZeroDimension("header decodes to " + std::to_string(values[0]) + "x" +
                        std::to_string(values[1]) + "; not a stego image or corrupted");
  }
  return StegoHeader{values[0], values[1]};
}

namespace {

Mask2x2 gather_mask(const GrayImage& image, int mask_row, int mask_col) {
  const int r = mask_row * 2;
  const int c = mask_col * 2;
  return Mask2x2{image.at(r, c), image.at(r, c + 1), image.at(r + 1, c), image.at(r + 1, c + 1)};
}

void scatter_mask(GrayImage& image, int mask_row, int mask_col, const Mask2x2& mask) {
  const int r = mask_row * 2;
  const int c = mask_col * 2;
  image.at(r, c) = mask[0];
  image.at(r, c + 1) = mask[1];
  image.at(r + 1, c) = mask[2];
  image.at(r + 1, c + 1) = mask[3];
}

}  // namespace

GrayImage embed_image(const GrayImage& cover, const GrayImage& secret) {
  if (!cover.valid() || !secret.valid()) {
    throw Error("embed_image: invalid image");
  }
  if (secret.height > kMaxSecretDim || secret.width > kMaxSecretDim) {
    throw HeaderOutOfRange("secret dimensions " + std::to_string(secret.height) + "x" +
                           std::to_string(secret.width) + " outside [1, 65535]");
  }
  const long long available = capacity_bits(cover);
  const long long required = kHeaderBits + 8LL * secret.pixel_count();
  if (required > available) {
    throw InsufficientCapacity(required, available);
  }

  std::vector<std::uint8_t> bits = encode_header(secret.height, secret.width);
  std::vector<std::uint8_t> payload = bytes_to_bits(secret.pixels);
  bits.insert(bits.end(), payload.begin(), payload.end());

  GrayImage stego = cover;
  const int mask_rows = cover.height / 2;
  const int mask_cols = cover.width / 2;
  std::size_t bit_index = 0;
  for (int mr = 0; mr < mask_rows && bit_index < bits.size(); ++mr) {
    for (int mc = 0; mc < mask_cols && bit_index < bits.size(); ++mc) {
      const Mask2x2 mask = gather_mask(cover, mr, mc);
      try {
        const EmbedOutcome outcome = embed_bit_in_mask(mask, bits[bit_index]);
        scatter_mask(stego, mr, mc, outcome.stego_mask);
      } catch (const EmbedFailed& e) {
        throw EmbedFailed("mask row=" + std::to_string(mr) + " col=" + std::to_string(mc) +
                          ": " + e.what());
      }
      ++bit_index;
    }
  }
  return stego;
}

GrayImage extract_image(const GrayImage& stego) {
  if (!stego.valid()) {
    throw Error("extract_image: invalid image");
  }
  const long long available = capacity_bits(stego);
  if (available < kHeaderBits) {
    throw PayloadExceedsCapacity("image holds " + std::to_string(available) +
                                 " bits; a header needs 32");
  }

  const int mask_cols = stego.width / 2;

  // Reads `count` mask bits starting at mask index `from`, row-major order.
  auto read_bits = [&](long long from, long long count) {
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(count));
    for (long long i = from; i < from + count; ++i) {
      const int mr = static_cast<int>(i / mask_cols);
      const int mc = static_cast<int>(i % mask_cols);
      bits.push_back(static_cast<std::uint8_t>(extract_bit_from_mask(gather_mask(stego, mr, mc))));
    }
    return bits;
  };

  const StegoHeader header = decode_header(read_bits(0, kHeaderBits));
  const long long payload_bits = 8LL * header.height * header.width;
  if (kHeaderBits + payload_bits > available) {
    throw PayloadExceedsCapacity("header claims " + std::to_string(header.height) + "x" +
                                 std::to_string(header.width) + " secret (" +
                                 std::to_string(kHeaderBits + payload_bits) +
                                 " bits) but image holds " + std::to_string(available));
  }

  GrayImage secret(header.width, header.height);
  secret.pixels = bits_to_bytes(read_bits(kHeaderBits, payload_bits));
  return secret;
}

}  // namespace fdszt
