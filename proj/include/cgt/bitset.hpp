#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cgt {

// Runtime-sized bitset used as the canonical membership mask of a subgroup.
// Bits beyond size() are kept at zero so word-wise comparisons are exact.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & std::uint64_t{1};
  }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_subset_of(const Bitset& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  Bitset united_with(const Bitset& other) const {
    Bitset r(*this);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] |= other.words_[w];
    return r;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        out.push_back(64 * w + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

  // Compares masks by their sorted member lists: at the first element index
  // where the sets differ, the set containing that index comes first.
  static int compare(const Bitset& a, const Bitset& b) {
    for (std::size_t w = 0; w < a.words_.size() && w < b.words_.size(); ++w) {
      std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return (a.words_[w] & low) ? -1 : 1;
      }
    }
    if (a.words_.size() != b.words_.size())
      return a.words_.size() < b.words_.size() ? -1 : 1;
    return 0;
  }

  friend bool operator<(const Bitset& a, const Bitset& b) {
    return compare(a, b) < 0;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cgt
