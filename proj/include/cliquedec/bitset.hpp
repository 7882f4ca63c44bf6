#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace cliquedec {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

// Runtime-sized bitset stored in 64-bit words. Bits past size() are always
// zero, so word-wise popcounts and comparisons need no masking.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  auto size() const -> int { return size_; }
  auto words() const -> std::span<const Word> { return words_; }

  auto set(int i) -> void {
    assert(i >= 0 && i < size_);
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
  }

  auto reset(int i) -> void {
    assert(i >= 0 && i < size_);
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }

  auto test(int i) const -> bool {
    assert(i >= 0 && i < size_);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }

  auto set_all() -> void {
    std::fill(words_.begin(), words_.end(), ~Word{0});
    trim();
  }

  auto clear() -> void { std::fill(words_.begin(), words_.end(), Word{0}); }

  auto count() const -> int {
    int result = 0;
    for (auto w : words_) result += std::popcount(w);
    return result;
  }

  auto none() const -> bool {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  auto operator&=(const Bitset& other) -> Bitset& {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  auto operator|=(const Bitset& other) -> Bitset& {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  // this &= ~other
  auto subtract(const Bitset& other) -> Bitset& {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  // Clears every bit with index <= i.
  auto clear_through(int i) -> void {
    const int word = i / kWordBits;
    for (int w = 0; w < word && w < static_cast<int>(words_.size()); ++w) words_[w] = 0;
    if (word < static_cast<int>(words_.size())) {
      const int bit = i % kWordBits;
      words_[word] &= bit == kWordBits - 1 ? Word{0} : ~Word{0} << (bit + 1);
    }
  }

  // Visits set bits in increasing order.
  template <typename F>
  auto for_each(F&& f) const -> void {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<int>(w) * kWordBits + b);
        bits &= bits - 1;
      }
    }
  }

  auto to_vector() const -> std::vector<int> {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  friend auto operator==(const Bitset&, const Bitset&) -> bool = default;

  friend auto operator&(Bitset a, const Bitset& b) -> Bitset { return a &= b; }

  static auto intersection_count(const Bitset& a, const Bitset& b) -> int {
    assert(a.size_ == b.size_);
    int result = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i) result += std::popcount(a.words_[i] & b.words_[i]);
    return result;
  }

 private:
  auto trim() -> void {
    if (const int extra = size_ % kWordBits; extra != 0 && !words_.empty())
      words_.back() &= (Word{1} << extra) - 1;
  }

  int size_ = 0;
  std::vector<Word> words_;
};

}  // namespace cliquedec
