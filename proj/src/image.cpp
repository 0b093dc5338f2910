#include "fdszt/image.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <string>

#include "fdszt/errors.hpp"

namespace fdszt {

namespace {

// Whitespace-delimited PNM header tokenizer. '#' starts a comment that runs
// to end of line.
class HeaderScanner {
 public:
  explicit HeaderScanner(std::span<const std::uint8_t> data) : data_(data) {}

  std::string next_token() {
    skip_whitespace_and_comments();
    std::string token;
    while (pos_ < data_.size() && !std::isspace(data_[pos_]) && data_[pos_] != '#') {
      token.push_back(static_cast<char>(data_[pos_]));
      ++pos_;
    }
    if (token.empty()) {
      throw MalformedHeader("unexpected end of header");
    }
    return token;
  }

  // Consumes the single whitespace byte that separates the header from the
  // raster. A raster may legally start with whitespace-valued bytes, so only
  // one is eaten.
  void consume_raster_separator() {
    if (pos_ >= data_.size() || !std::isspace(data_[pos_])) {
      throw MalformedHeader("missing whitespace before raster");
    }
    ++pos_;
  }

  std::size_t position() const { return pos_; }

 private:
  void skip_whitespace_and_comments() {
    while (pos_ < data_.size()) {
      if (std::isspace(data_[pos_])) {
        ++pos_;
      } else if (data_[pos_] == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

long parse_header_int(const std::string& token, const char* what) {
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw MalformedHeader(std::string("bad ") + what + " '" + token + "'");
    }
  }
  if (token.size() > 9) {
    throw MalformedHeader(std::string(what) + " '" + token + "' out of range");
  }
  return std::stol(token);
}

}  // namespace

GrayImage parse_pgm(std::span<const std::uint8_t> data) {
  if (data.size() < 2 || data[0] != 'P' || data[1] != '5') {
    throw MalformedHeader("not a binary PGM (magic is not P5)");
  }
  HeaderScanner scanner(data.subspan(2));

  const long width = parse_header_int(scanner.next_token(), "width");
  const long height = parse_header_int(scanner.next_token(), "height");
  const long maxval = parse_header_int(scanner.next_token(), "maxval");
  if (width < 1 || height < 1) {
    throw MalformedHeader("dimensions " + std::to_string(width) + "x" + std::to_string(height) +
                          " must be positive");
  }
  if (maxval > 255) {
    throw UnsupportedMaxval("maxval " + std::to_string(maxval) + " exceeds 255");
  }
  if (maxval < 1) {
    throw MalformedHeader("maxval must be at least 1");
  }
  scanner.consume_raster_separator();

  const std::size_t raster_offset = 2 + scanner.position();
  const std::size_t raster_size = static_cast<std::size_t>(width) * height;
  if (data.size() - raster_offset < raster_size) {
    throw TruncatedRaster("raster has " + std::to_string(data.size() - raster_offset) +
                          " bytes, needs " + std::to_string(raster_size));
  }

  GrayImage image;
  image.width = static_cast<int>(width);
  image.height = static_cast<int>(height);
  image.pixels.assign(data.begin() + raster_offset, data.begin() + raster_offset + raster_size);
  return image;
}

std::vector<std::uint8_t> write_pgm(const GrayImage& image) {
  const std::string header =
      "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + image.pixels.size());
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), image.pixels.begin(), image.pixels.end());
  return out;
}

GrayImage load_image(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Error("cannot open " + path.string());
  }
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(file)),
                                 std::istreambuf_iterator<char>());
  if (file.bad()) {
    throw Error("read error on " + path.string());
  }
  const std::string ext = path.extension().string();
  if (ext == ".png" || ext == ".PNG") {
    return parse_png(data);
  }
  return parse_pgm(data);
}

void save_image(const std::filesystem::path& path, const GrayImage& image) {
  const std::string ext = path.extension().string();
  const std::vector<std::uint8_t> data =
      (ext == ".png" || ext == ".PNG") ? write_png(image) : write_pgm(image);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error("cannot open " + path.string() + " for writing");
  }
  file.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!file) {
    throw Error("write error on " + path.string());
  }
}

}  // namespace fdszt
