#include <zlib.h>

#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "fdszt/errors.hpp"
#include "fdszt/image.hpp"

using namespace fdszt;

namespace {

std::vector<std::uint8_t> to_bytes(const std::string& header,
                                   std::initializer_list<int> raster = {}) {
  std::vector<std::uint8_t> out(header.begin(), header.end());
  for (int b : raster) out.push_back(static_cast<std::uint8_t>(b));
  return out;
}

GrayImage random_image(std::mt19937& rng, int max_dim = 33) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  std::uniform_int_distribution<int> px(0, 255);
  GrayImage img(dim(rng), dim(rng));
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(px(rng));
  return img;
}

}  // namespace

TEST_CASE("parse_pgm reads the smallest legal file") {
  const GrayImage img = parse_pgm(to_bytes("P5\n1 1\n255\n", {0x00}));
  CHECK(img.width == 1);
  CHECK(img.height == 1);
  CHECK(img.pixels == std::vector<std::uint8_t>{0});
}

TEST_CASE("parse_pgm keeps raster order") {
  const GrayImage img = parse_pgm(to_bytes("P5\n2 2\n255\n", {1, 2, 3, 4}));
  CHECK(img.width == 2);
  CHECK(img.height == 2);
  CHECK(img.pixels == std::vector<std::uint8_t>{1, 2, 3, 4});
}

TEST_CASE("parse_pgm handles header comments and odd whitespace") {
  const GrayImage img =
      parse_pgm(to_bytes("P5 # binary pgm\n# another comment\n 2\t1 #w h\n255\n", {7, 9}));
  CHECK(img.width == 2);
  CHECK(img.height == 1);
  CHECK(img.pixels == std::vector<std::uint8_t>{7, 9});
}

TEST_CASE("parse_pgm accepts maxval below 255 without rescaling") {
  const GrayImage img = parse_pgm(to_bytes("P5\n2 1\n77\n", {10, 76}));
  CHECK(img.pixels == std::vector<std::uint8_t>{10, 76});
}

TEST_CASE("parse_pgm error paths") {
  CHECK_THROWS_AS(parse_pgm(to_bytes("P2\n1 1\n255\n", {0})), MalformedHeader);
  CHECK_THROWS_AS(parse_pgm(to_bytes("P5\n2 2\n255\n", {1, 2, 3})), TruncatedRaster);
  CHECK_THROWS_AS(parse_pgm(to_bytes("P5\n2 2\n65535\n", {1, 2, 3, 4})), UnsupportedMaxval);
  CHECK_THROWS_AS(parse_pgm(to_bytes("P5\n0 2\n255\n")), MalformedHeader);
  CHECK_THROWS_AS(parse_pgm(to_bytes("P5\n2 -1\n255\n")), MalformedHeader);
  CHECK_THROWS_AS(parse_pgm(to_bytes("P5\nab 2\n255\n")), MalformedHeader);
  CHECK_THROWS_AS(parse_pgm(to_bytes("P5\n2 2\n0\n", {1, 2, 3, 4})), MalformedHeader);
  CHECK_THROWS_AS(parse_pgm(to_bytes("P5\n2 2")), MalformedHeader);
  CHECK_THROWS_AS(parse_pgm(std::vector<std::uint8_t>{}), MalformedHeader);
}

TEST_CASE("write_pgm emits the canonical header") {
  GrayImage img(1, 1);
  img.pixels[0] = 255;
  CHECK(write_pgm(img) == to_bytes("P5\n1 1\n255\n", {0xFF}));

  GrayImage row(3, 1);
  row.pixels = {0, 128, 255};
  CHECK(write_pgm(row) == to_bytes("P5\n3 1\n255\n", {0x00, 0x80, 0xFF}));
}

TEST_CASE("pgm round trip is exact") {
  std::mt19937 rng(59);
  for (int i = 0; i < 200; ++i) {
    const GrayImage img = random_image(rng);
    CHECK(parse_pgm(write_pgm(img)) == img);
  }
}

TEST_CASE("png round trip is exact and matches the pgm model") {
  std::mt19937 rng(61);
  for (int i = 0; i < 50; ++i) {
    const GrayImage img = random_image(rng);
    const GrayImage from_png = parse_png(write_png(img));
    CHECK(from_png == img);
    CHECK(from_png == parse_pgm(write_pgm(img)));
  }
}

namespace {

// Test-side PNG builder straight from the format definition, so the decoder
// is checked against an independent construction. Every row uses a different
// filter type.
std::vector<std::uint8_t> synthesize_png_all_filters(const GrayImage& img) {
  auto predict_paeth = [](int a, int b, int c) {
    const int p = a + b - c;
    const int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return a;
    if (pb <= pc) return b;
    return c;
  };

  std::vector<std::uint8_t> raw;
  for (int y = 0; y < img.height; ++y) {
    const int filter = y % 5;
    raw.push_back(static_cast<std::uint8_t>(filter));
    for (int x = 0; x < img.width; ++x) {
      const int v = img.at(y, x);
      const int a = x > 0 ? img.at(y, x - 1) : 0;
      const int b = y > 0 ? img.at(y - 1, x) : 0;
      const int c = (x > 0 && y > 0) ? img.at(y - 1, x - 1) : 0;
      int out = v;
      switch (filter) {
        case 1: out = v - a; break;
        case 2: out = v - b; break;
        case 3: out = v - (a + b) / 2; break;
        case 4: out = v - predict_paeth(a, b, c); break;
      }
      raw.push_back(static_cast<std::uint8_t>(out & 0xff));
    }
  }

  std::vector<std::uint8_t> compressed(compressBound(static_cast<uLong>(raw.size())));
  uLongf size = static_cast<uLongf>(compressed.size());
  REQUIRE(compress2(compressed.data(), &size, raw.data(), static_cast<uLong>(raw.size()),
                    Z_DEFAULT_COMPRESSION) == Z_OK);
  compressed.resize(size);

  auto push_u32 = [](std::vector<std::uint8_t>& v, std::uint32_t x) {
    v.push_back(static_cast<std::uint8_t>(x >> 24));
    v.push_back(static_cast<std::uint8_t>(x >> 16));
    v.push_back(static_cast<std::uint8_t>(x >> 8));
    v.push_back(static_cast<std::uint8_t>(x));
  };
  auto push_chunk = [&push_u32](std::vector<std::uint8_t>& v, const char type[4],
                                const std::vector<std::uint8_t>& data) {
    push_u32(v, static_cast<std::uint32_t>(data.size()));
    const std::size_t type_pos = v.size();
    v.insert(v.end(), type, type + 4);
    v.insert(v.end(), data.begin(), data.end());
    push_u32(v, static_cast<std::uint32_t>(
                    crc32(0, v.data() + type_pos, static_cast<uInt>(4 + data.size()))));
  };

  std::vector<std::uint8_t> png = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
  std::vector<std::uint8_t> ihdr;
  push_u32(ihdr, static_cast<std::uint32_t>(img.width));
  push_u32(ihdr, static_cast<std::uint32_t>(img.height));
  ihdr.insert(ihdr.end(), {8, 0, 0, 0, 0});
  push_chunk(png, "IHDR", ihdr);
  push_chunk(png, "IDAT", compressed);
  push_chunk(png, "IEND", {});
  return png;
}

}  // namespace

TEST_CASE("png decoder handles all five row filters") {
  std::mt19937 rng(71);
  std::uniform_int_distribution<int> px(0, 255);
  GrayImage img(16, 15);
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(px(rng));

  const auto png = synthesize_png_all_filters(img);
  CHECK(parse_png(png) == img);
}

TEST_CASE("png error paths") {
  CHECK_THROWS_AS(parse_png(to_bytes("not a png at all")), MalformedHeader);
  // Valid signature but nothing else.
  const std::vector<std::uint8_t> sig = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
  CHECK_THROWS_AS(parse_png(sig), MalformedHeader);
  // Corrupt a byte inside the IDAT payload of a valid file: CRC must trip.
  GrayImage img(4, 4, 200);
  auto png = write_png(img);
  png[png.size() - 20] ^= 0xFF;
  CHECK_THROWS(parse_png(png));
}

TEST_CASE("load/save round trip through both formats") {
  std::mt19937 rng(67);
  const GrayImage img = random_image(rng, 16);
  const auto dir = std::filesystem::temp_directory_path();
  for (const char* name : {"fdszt_unit.pgm", "fdszt_unit.png"}) {
    const auto path = dir / name;
    save_image(path, img);
    CHECK(load_image(path) == img);
    std::filesystem::remove(path);
  }
  CHECK_THROWS_AS(load_image(dir / "fdszt_does_not_exist.pgm"), Error);
}
