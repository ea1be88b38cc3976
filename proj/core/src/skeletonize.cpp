#include "tgglines/skeletonize.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <numeric>

#include "tgglines/error.hpp"

namespace tgglines {

namespace neighborhood {

int foreground_count(unsigned mask) noexcept { return std::popcount(mask & 0xFFU); }

int transitions(unsigned mask) noexcept {
  int count = 0;
  for (int i = 0; i < 8; ++i) {
    const bool here = (mask >> i) & 1U;
    const bool next = (mask >> ((i + 1) % 8)) & 1U;
    if (!here && next) ++count;
  }
  return count;
}

namespace {

int find(std::array<int, 8>& parent, int i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

// Components of ring positions with the given membership, where two ring
// positions are joined when their offsets are within the given metric bound.
int ring_components(unsigned members, bool eight_connected, unsigned must_touch) {
  std::array<int, 8> parent{};
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < 8; ++i) {
    if (!((members >> i) & 1U)) continue;
    for (int j = i + 1; j < 8; ++j) {
      if (!((members >> j) & 1U)) continue;
      const int dr = std::abs(kRowOffset[i] - kRowOffset[j]);
      const int dc = std::abs(kColOffset[i] - kColOffset[j]);
      const bool adjacent = eight_connected ? (dr <= 1 && dc <= 1) : (dr + dc == 1);
      if (adjacent) parent[find(parent, i)] = find(parent, j);
    }
  }
  unsigned seen_roots = 0;
  for (int i = 0; i < 8; ++i) {
    if (((members >> i) & 1U) && ((must_touch >> i) & 1U)) seen_roots |= 1U << find(parent, i);
  }
  return std::popcount(seen_roots);
}

constexpr unsigned kEdgeNeighbours = 0b01010101U;  // N, E, S, W

std::array<bool, 256> make_simple_table() {
  std::array<bool, 256> table{};
  for (unsigned m = 0; m < 256; ++m) {
    const int fg = ring_components(m, true, 0xFFU);
    const int bg = ring_components(~m & 0xFFU, false, kEdgeNeighbours);
    table[m] = fg == 1 && bg == 1;
  }
  return table;
}

}  // namespace

bool is_simple(unsigned mask) noexcept {
  static const std::array<bool, 256> table = make_simple_table();
  return table[mask & 0xFFU];
}

}  // namespace neighborhood

namespace {

using neighborhood::foreground_count;
using neighborhood::is_simple;
using neighborhood::transitions;

constexpr unsigned bit(int zhang_suen_index) { return 1U << (zhang_suen_index - 2); }

std::array<bool, 256> make_subpass_table(int subpass) {
  std::array<bool, 256> table{};
  for (unsigned m = 0; m < 256; ++m) {
    const int b = foreground_count(m);
    if (b < 2 || b > 6 || transitions(m) != 1) continue;
    auto on = [m](int idx) { return (m & bit(idx)) != 0; };
    const bool c1 = subpass == 0 ? !(on(2) && on(4) && on(6)) : !(on(2) && on(4) && on(8));
    const bool c2 = subpass == 0 ? !(on(4) && on(6) && on(8)) : !(on(2) && on(6) && on(8));
    table[m] = c1 && c2;
  }
  return table;
}

// Image with a one-pixel background frame so neighbour reads never leave the buffer.
class PaddedBits {
 public:
  explicit PaddedBits(const BinaryImage& img)
      : width_(img.width()), height_(img.height()), stride_(img.width() + 2),
        bits_((img.width() + 2) * (img.height() + 2), 0) {
    for (std::size_t r = 0; r < height_; ++r) {
      for (std::size_t c = 0; c < width_; ++c) bits_[index(r, c)] = img.at(r, c) ? 1 : 0;
    }
    for (int i = 0; i < 8; ++i) {
      offsets_[i] = static_cast<std::ptrdiff_t>(neighborhood::kRowOffset[i]) *
                        static_cast<std::ptrdiff_t>(stride_) +
                    neighborhood::kColOffset[i];
    }
  }

  [[nodiscard]] std::size_t index(std::size_t r, std::size_t c) const {
    return (r + 1) * stride_ + (c + 1);
  }

  [[nodiscard]] unsigned mask(std::size_t idx) const {
    unsigned m = 0;
    for (int i = 0; i < 8; ++i) {
      if (bits_[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(idx) + offsets_[i])]) {
        m |= 1U << i;
      }
    }
    return m;
  }

  [[nodiscard]] std::uint8_t& operator[](std::size_t idx) { return bits_[idx]; }

  [[nodiscard]] BinaryImage to_image() const {
    BinaryImage out(width_, height_);
    for (std::size_t r = 0; r < height_; ++r) {
      for (std::size_t c = 0; c < width_; ++c) out.set(r, c, bits_[index(r, c)] != 0);
    }
    return out;
  }

  [[nodiscard]] std::size_t width() const { return width_; }
  [[nodiscard]] std::size_t height() const { return height_; }

 private:
  std::size_t width_;
  std::size_t height_;
  std::size_t stride_;
  std::vector<std::uint8_t> bits_;
  std::array<std::ptrdiff_t, 8> offsets_{};
};

// One Zhang-Suen sub-pass. Returns the number of deleted pixels.
std::size_t run_subpass(PaddedBits& img, const std::array<bool, 256>& table,
                        std::vector<std::size_t>& candidates) {
  candidates.clear();
  for (std::size_t r = 0; r < img.height(); ++r) {
    for (std::size_t c = 0; c < img.width(); ++c) {
      const auto idx = img.index(r, c);
      if (img[idx] && table[img.mask(idx)]) candidates.push_back(idx);
    }
  }
  std::size_t deleted = 0;
  for (const auto idx : candidates) {
    if (is_simple(img.mask(idx))) {
      img[idx] = 0;
      ++deleted;
    }
  }
  return deleted;
}

}  // namespace

Skeleton thin(const BinaryImage& input) {
  static const std::array<bool, 256> first = make_subpass_table(0);
  static const std::array<bool, 256> second = make_subpass_table(1);

  PaddedBits img(input);
  // Every productive iteration deletes at least one pixel.
  const std::size_t max_iterations = input.width() * input.height() + 1;
  std::vector<std::size_t> candidates;
  for (std::size_t iteration = 0;; ++iteration) {
    if (iteration >= max_iterations) {
      throw Error(ErrorCode::no_convergence, "thinning exceeded width*height passes");
    }
    std::size_t deleted = run_subpass(img, first, candidates);
    deleted += run_subpass(img, second, candidates);
    if (deleted == 0) break;
  }
  return Skeleton(img.to_image());
}

std::vector<Pixel> foreground_pixels(const Skeleton& s) {
  std::vector<Pixel> out;
  for (std::size_t r = 0; r < s.height(); ++r) {
    for (std::size_t c = 0; c < s.width(); ++c) {
      if (s.at(r, c)) out.push_back({static_cast<std::int32_t>(r), static_cast<std::int32_t>(c)});
    }
  }
  return out;
}

}  // namespace tgglines
