#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace tgglines {

/// 8-bit luminance raster, row-major.
class GrayImage {
 public:
  /// Throws Error(empty_image) for a zero dimension and Error(invalid_argument)
  /// when data.size() != width * height.
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> data);
  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill);

  [[nodiscard]] std::size_t width() const noexcept { return width_; }
  [[nodiscard]] std::size_t height() const noexcept { return height_; }
  [[nodiscard]] std::span<const std::uint8_t> data() const noexcept { return data_; }
  [[nodiscard]] std::uint8_t at(std::size_t row, std::size_t col) const noexcept {
    return data_[row * width_ + col];
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> data_;
};

/// Binary raster, row-major; 1 = foreground (ink), 0 = background.
class BinaryImage {
 public:
  /// All-background image. Zero dimensions are allowed here so that
  /// degenerate inputs can flow through the pipeline.
  BinaryImage(std::size_t width, std::size_t height);
  /// Throws Error(invalid_argument) on a size mismatch or a value outside {0,1}.
  BinaryImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> bits);

  [[nodiscard]] std::size_t width() const noexcept { return width_; }
  [[nodiscard]] std::size_t height() const noexcept { return height_; }
  [[nodiscard]] std::span<const std::uint8_t> data() const noexcept { return bits_; }

  [[nodiscard]] bool at(std::size_t row, std::size_t col) const noexcept {
    return bits_[row * width_ + col] != 0;
  }
  void set(std::size_t row, std::size_t col, bool value) noexcept {
    bits_[row * width_ + col] = value ? 1 : 0;
  }
  /// Bounds-checked variant that treats off-grid pixels as background.
  [[nodiscard]] bool at_or_background(std::int64_t row, std::int64_t col) const noexcept;

  [[nodiscard]] std::size_t count_foreground() const noexcept;

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> bits_;
};

/// Decodes a PNG (8-bit gray, gray+alpha, RGB, RGBA or palette) or a
/// PBM/PGM (P1, P2, P4, P5) file. Color is reduced to luminance with the
/// Rec. 601 weights 0.299 R + 0.587 G + 0.114 B; alpha is composited onto white.
/// PBM bits map black -> 0 and white -> 255.
GrayImage load_image(const std::filesystem::path& path);

/// Same as load_image, from an in-memory file image.
GrayImage decode_image(std::span<const std::uint8_t> bytes);

/// foreground_is_dark: pixel -> 1 iff luminance < threshold.
/// otherwise:          pixel -> 1 iff luminance >= threshold.
BinaryImage binarize(const GrayImage& img, std::uint8_t threshold = 128,
                     bool foreground_is_dark = true);

BinaryImage invert(const BinaryImage& img);

/// Foreground renders black (0), background white (255).
GrayImage to_gray(const BinaryImage& img);

/// Writes a raw PBM (P4). Reloading with load_image + binarize(128) is bit-exact.
void save_binary(const BinaryImage& img, const std::filesystem::path& path);

/// Writes an 8-bit grayscale PNG.
void save_png(const GrayImage& img, const std::filesystem::path& path);

/// Encodes an 8-bit grayscale PNG into memory.
std::vector<std::uint8_t> encode_png(const GrayImage& img);

}  // namespace tgglines
