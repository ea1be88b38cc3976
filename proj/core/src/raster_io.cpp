#include "tgglines/raster_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "tgglines/error.hpp"

namespace tgglines {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
  if (width_ == 0 || height_ == 0) {
    throw Error(ErrorCode::empty_image, "image has a zero dimension");
  }
  if (data_.size() != width_ * height_) {
    throw Error(ErrorCode::invalid_argument, "pixel buffer size does not match dimensions");
  }
}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : GrayImage(width, height, std::vector<std::uint8_t>(width * height, fill)) {}

BinaryImage::BinaryImage(std::size_t width, std::size_t height)
    : width_(width), height_(height), bits_(width * height, 0) {}

BinaryImage::BinaryImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> bits)
    : width_(width), height_(height), bits_(std::move(bits)) {
  if (bits_.size() != width_ * height_) {
    throw Error(ErrorCode::invalid_argument, "bit buffer size does not match dimensions");
  }
  if (std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; })) {
    throw Error(ErrorCode::invalid_argument, "binary image values must be 0 or 1");
  }
}

bool BinaryImage::at_or_background(std::int64_t row, std::int64_t col) const noexcept {
  if (row < 0 || col < 0) return false;
  const auto r = static_cast<std::size_t>(row);
  const auto c = static_cast<std::size_t>(col);
  if (r >= height_ || c >= width_) return false;
  return at(r, c);
}

std::size_t BinaryImage::count_foreground() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

namespace {

std::uint8_t luminance(unsigned r, unsigned g, unsigned b) {
  return static_cast<std::uint8_t>((299 * r + 587 * g + 114 * b + 500) / 1000);
}

bool has_png_signature(std::span<const std::uint8_t> bytes) {
  return bytes.size() >= 8 && png_sig_cmp(bytes.data(), 0, 8) == 0;
}

GrayImage decode_png(std::span<const std::uint8_t> bytes) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  if (png_image_begin_read_from_memory(&image, bytes.data(), bytes.size()) == 0) {
    throw Error(ErrorCode::format, std::string("PNG decode failed: ") + image.message);
  }
  if (image.width == 0 || image.height == 0) {
    png_image_free(&image);
    throw Error(ErrorCode::empty_image, "PNG has a zero dimension");
  }
  image.format = PNG_FORMAT_RGBA;
  std::vector<std::uint8_t> rgba(PNG_IMAGE_SIZE(image));
  if (png_image_finish_read(&image, nullptr, rgba.data(), 0, nullptr) == 0) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw Error(ErrorCode::format, "PNG decode failed: " + msg);
  }
  const std::size_t w = image.width;
  const std::size_t h = image.height;
  std::vector<std::uint8_t> gray(w * h);
  for (std::size_t i = 0; i < w * h; ++i) {
    const unsigned a = rgba[4 * i + 3];
    auto over_white = [a](unsigned v) { return (v * a + 255 * (255 - a) + 127) / 255; };
    gray[i] = luminance(over_white(rgba[4 * i]), over_white(rgba[4 * i + 1]),
                        over_white(rgba[4 * i + 2]));
  }
  return GrayImage(w, h, std::move(gray));
}

// Tokenizer for the ASCII header (and ASCII raster) of Netpbm files.
class PnmReader {
 public:
  explicit PnmReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  unsigned long next_number() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw Error(ErrorCode::format, "truncated or malformed PNM header");
    }
    unsigned long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 1'000'000'000UL) throw Error(ErrorCode::format, "PNM value out of range");
      ++pos_;
    }
    return value;
  }

  // P1 allows packed digits without separators.
  std::uint8_t next_bit() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || (bytes_[pos_] != '0' && bytes_[pos_] != '1')) {
      throw Error(ErrorCode::format, "truncated or malformed P1 raster");
    }
    return static_cast<std::uint8_t>(bytes_[pos_++] - '0');
  }

  // Exactly one whitespace byte separates the header from a binary raster.
  std::span<const std::uint8_t> binary_payload() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw Error(ErrorCode::format, "missing separator before PNM raster");
    }
    return bytes_.subspan(pos_ + 1);
  }

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
  std::size_t pos_ = 2;
};

GrayImage decode_pnm(std::span<const std::uint8_t> bytes) {
  const char kind = static_cast<char>(bytes[1]);
  PnmReader reader(bytes);
  const auto width = reader.next_number();
  const auto height = reader.next_number();
  if (width == 0 || height == 0) throw Error(ErrorCode::empty_image, "PNM has a zero dimension");
  const std::size_t n = width * height;
  std::vector<std::uint8_t> gray(n);

  if (kind == '1') {
    for (auto& v : gray) v = reader.next_bit() ? 0 : 255;
  } else if (kind == '4') {
    const auto payload = reader.binary_payload();
    const std::size_t stride = (width + 7) / 8;
    if (payload.size() < stride * height) throw Error(ErrorCode::format, "truncated P4 raster");
    for (std::size_t r = 0; r < height; ++r) {
      for (std::size_t c = 0; c < width; ++c) {
        const bool black = (payload[r * stride + c / 8] >> (7 - c % 8)) & 1U;
        gray[r * width + c] = black ? 0 : 255;
      }
    }
  } else {
    const auto maxval = reader.next_number();
    if (maxval == 0 || maxval > 65535) throw Error(ErrorCode::format, "invalid PGM maxval");
    auto scale = [maxval](unsigned long v) {
      if (v > maxval) throw Error(ErrorCode::format, "PGM sample exceeds maxval");
      return static_cast<std::uint8_t>((v * 255 + maxval / 2) / maxval);
    };
    if (kind == '2') {
      for (auto& v : gray) v = scale(reader.next_number());
    } else {
      const auto payload = reader.binary_payload();
      const std::size_t bytes_per = maxval > 255 ? 2 : 1;
      if (payload.size() < n * bytes_per) throw Error(ErrorCode::format, "truncated P5 raster");
      for (std::size_t i = 0; i < n; ++i) {
        const unsigned long v = bytes_per == 1
                                    ? payload[i]
                                    : (static_cast<unsigned long>(payload[2 * i]) << 8) |
                                          payload[2 * i + 1];
        gray[i] = scale(v);
      }
    }
  }
  return GrayImage(width, height, std::move(gray));
}

}  // namespace

GrayImage decode_image(std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) throw Error(ErrorCode::format, "empty file");
  if (has_png_signature(bytes)) return decode_png(bytes);
  if (bytes.size() >= 2 && bytes[0] == 'P' &&
      (bytes[1] == '1' || bytes[1] == '2' || bytes[1] == '4' || bytes[1] == '5')) {
    return decode_pnm(bytes);
  }
  throw Error(ErrorCode::format, "unsupported image format (expected PNG, PBM or PGM)");
}

GrayImage load_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                  std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error(ErrorCode::io, "read failed for " + path.string());
  return decode_image(bytes);
}

BinaryImage binarize(const GrayImage& img, std::uint8_t threshold, bool foreground_is_dark) {
  std::vector<std::uint8_t> bits(img.data().size());
  std::transform(img.data().begin(), img.data().end(), bits.begin(), [&](std::uint8_t v) {
    const bool dark = v < threshold;
    return static_cast<std::uint8_t>(dark == foreground_is_dark ? 1 : 0);
  });
  return BinaryImage(img.width(), img.height(), std::move(bits));
}

BinaryImage invert(const BinaryImage& img) {
  std::vector<std::uint8_t> bits(img.data().begin(), img.data().end());
  for (auto& b : bits) b ^= 1U;
  return BinaryImage(img.width(), img.height(), std::move(bits));
}

GrayImage to_gray(const BinaryImage& img) {
  std::vector<std::uint8_t> gray(img.data().size());
  std::transform(img.data().begin(), img.data().end(), gray.begin(),
                 [](std::uint8_t b) { return static_cast<std::uint8_t>(b ? 0 : 255); });
  return GrayImage(img.width(), img.height(), std::move(gray));
}

void save_binary(const BinaryImage& img, const std::filesystem::path& path) {
  if (img.width() == 0 || img.height() == 0) {
    throw Error(ErrorCode::empty_image, "cannot save an image with a zero dimension");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io, "cannot open " + path.string() + " for writing");
  out << "P4\n" << img.width() << ' ' << img.height() << '\n';
  const std::size_t stride = (img.width() + 7) / 8;
  std::vector<char> row(stride);
  for (std::size_t r = 0; r < img.height(); ++r) {
    std::fill(row.begin(), row.end(), 0);
    for (std::size_t c = 0; c < img.width(); ++c) {
      if (img.at(r, c)) row[c / 8] = static_cast<char>(row[c / 8] | (0x80 >> (c % 8)));
    }
    out.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
  out.flush();
  if (!out) throw Error(ErrorCode::io, "write failed for " + path.string());
}

std::vector<std::uint8_t> encode_png(const GrayImage& img) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width());
  image.height = static_cast<png_uint_32>(img.height());
  image.format = PNG_FORMAT_GRAY;
  png_alloc_size_t size = 0;
  if (png_image_write_to_memory(&image, nullptr, &size, 0, img.data().data(), 0, nullptr) == 0) {
    throw Error(ErrorCode::format, std::string("PNG encode failed: ") + image.message);
  }
  std::vector<std::uint8_t> out(size);
  if (png_image_write_to_memory(&image, out.data(), &size, 0, img.data().data(), 0, nullptr) ==
      0) {
    throw Error(ErrorCode::format, std::string("PNG encode failed: ") + image.message);
  }
  out.resize(size);
  return out;
}

void save_png(const GrayImage& img, const std::filesystem::path& path) {
  const auto bytes = encode_png(img);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::io, "write failed for " + path.string());
}

}  // namespace tgglines
