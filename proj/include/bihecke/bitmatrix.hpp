#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace bihecke {

// Square 0/1 relation stored as packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }

  bool test(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  void reset(std::size_t r, std::size_t c) {
    bits_[r * words_ + c / 64] &= ~(std::uint64_t{1} << (c % 64));
  }

  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }

  void or_row(std::size_t dst, std::size_t src) {
    auto* d = row(dst);
    const auto* s = row(src);
    for (std::size_t i = 0; i < words_; ++i) d[i] |= s[i];
  }

  std::size_t row_count(std::size_t r) const {
    std::size_t c = 0;
    const auto* p = row(r);
    for (std::size_t i = 0; i < words_; ++i) c += std::popcount(p[i]);
    return c;
  }

  std::vector<std::size_t> row_members(std::size_t r) const {
    std::vector<std::size_t> out;
    const auto* p = row(r);
    for (std::size_t i = 0; i < words_; ++i) {
      std::uint64_t w = p[i];
      while (w) {
        out.push_back(i * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }

  BitMatrix transposed() const {
    BitMatrix t(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c : row_members(r)) t.set(c, r);
    return t;
  }

  bool operator==(const BitMatrix& o) const { return n_ == o.n_ && bits_ == o.bits_; }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace bihecke
