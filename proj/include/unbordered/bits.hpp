#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace unbordered {

/// Fixed-width bit set used on the hot path of the exhaustive searches.
/// Words = 1 covers rulers of length <= 63.
template <std::size_t Words>
struct FixedBits {
  static constexpr std::size_t capacity = Words * 64;

  std::array<std::uint64_t, Words> w{};

  void set(std::size_t i) noexcept { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  [[nodiscard]] bool test(std::size_t i) const noexcept {
    return (w[i >> 6] >> (i & 63)) & 1U;
  }

  [[nodiscard]] int count() const noexcept {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }

  /// Number of set bits with index in [lo, hi].
  [[nodiscard]] int count_range(std::size_t lo, std::size_t hi) const noexcept {
    if (lo > hi) return 0;
    int c = 0;
    for (std::size_t k = lo >> 6; k <= (hi >> 6); ++k) {
      std::uint64_t x = w[k];
      if (k == (lo >> 6)) x &= ~std::uint64_t{0} << (lo & 63);
      if (k == (hi >> 6) && (hi & 63) != 63)
        x &= (std::uint64_t{1} << ((hi & 63) + 1)) - 1;
      c += std::popcount(x);
    }
    return c;
  }

  /// *this |= (other >> shift)
  void or_shifted_right(const FixedBits& other, std::size_t shift) noexcept {
    const std::size_t ws = shift >> 6;
    const std::size_t bs = shift & 63;
    for (std::size_t k = 0; k + ws < Words; ++k) {
      std::uint64_t x = other.w[k + ws] >> bs;
      if (bs != 0 && k + ws + 1 < Words) x |= other.w[k + ws + 1] << (64 - bs);
      w[k] |= x;
    }
  }

  friend bool operator==(const FixedBits&, const FixedBits&) = default;
};

/// Heap-backed bit set of a run-time size; same layout as FixedBits.
class DistanceBits {
 public:
  explicit DistanceBits(std::size_t bits) : bits_(bits), w_((bits + 63) / 64) {}

  [[nodiscard]] std::size_t size() const noexcept { return bits_; }
  void set(std::size_t i) noexcept { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  [[nodiscard]] bool test(std::size_t i) const noexcept {
    return (w_[i >> 6] >> (i & 63)) & 1U;
  }
  [[nodiscard]] std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  [[nodiscard]] bool all() const noexcept { return count() == bits_; }

 private:
  std::size_t bits_;
  std::vector<std::uint64_t> w_;
};

}  // namespace unbordered
