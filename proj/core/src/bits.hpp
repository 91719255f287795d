#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace dsorder::detail {

/// Square bit matrix with word-parallel row operations.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n_ * words_, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }

  /// row(dst) |= row(src)
  void or_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w) bits_[dst * words_ + w] |= bits_[src * words_ + w];
  }

  std::size_t row_count(std::size_t i) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += std::popcount(bits_[i * words_ + w]);
    return c;
  }

  /// Adds i<j and everything transitivity then forces, assuming the matrix
  /// is already transitively closed and j does not reach i.
  void add_closed(std::size_t i, std::size_t j) {
    std::vector<std::size_t> below{i};
    for (std::size_t u = 0; u < n_; ++u) {
      if (test(u, i)) below.push_back(u);
    }
    for (auto u : below) {
      set(u, j);
      or_row(u, j);
    }
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace dsorder::detail
