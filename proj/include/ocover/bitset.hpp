#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ocover {

// Fixed-width block bitset used for instance sets. Unlike std::vector<bool>
// it supports non-allocating intersection counts, which the greedy solvers
// call in their inner loops at the 50k-instance / 2k-tag scale.
class DynamicBitset {
 public:
  DynamicBitset() = default;
  explicit DynamicBitset(std::size_t size)
      : words_((size + 63) / 64, 0), size_(size) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t pos) const {
    return (words_[pos >> 6] >> (pos & 63)) & 1u;
  }
  void set(std::size_t pos) { words_[pos >> 6] |= std::uint64_t{1} << (pos & 63); }
  void reset(std::size_t pos) {
    words_[pos >> 6] &= ~(std::uint64_t{1} << (pos & 63));
  }
  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  DynamicBitset& operator|=(const DynamicBitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  DynamicBitset& operator&=(const DynamicBitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  // this := this & ~other
  DynamicBitset& and_not(const DynamicBitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  static std::size_t count_and(const DynamicBitset& a, const DynamicBitset& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      c += std::popcount(a.words_[i] & b.words_[i]);
    return c;
  }
  // |a & ~b|
  static std::size_t count_and_not(const DynamicBitset& a, const DynamicBitset& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      c += std::popcount(a.words_[i] & ~b.words_[i]);
    return c;
  }

  bool intersects(const DynamicBitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  template <typename Fn>
  void for_each_set(Fn fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const int bit = std::countr_zero(w);
        fn(i * 64 + static_cast<std::size_t>(bit));
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const DynamicBitset&, const DynamicBitset&) = default;

 private:
  void trim() {
    if (size_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (size_ & 63));
  }

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

}  // namespace ocover
