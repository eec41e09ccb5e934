#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace facnum {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

inline std::size_t popcount(std::span<const Word> a) {
  std::size_t c = 0;
  for (Word w : a) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

/// a is a subset of b
inline bool is_subset(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

/// Numeric comparison, most significant word first.
inline std::strong_ordering compare_numeric(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

/// Fixed-length bitset over element indices.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_(words_for(size), 0) {}
  Bitset(std::size_t size, std::span<const Word> words)
      : size_(size), words_(words.begin(), words.end()) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  std::size_t count() const { return popcount(words_); }

  std::span<const Word> words() const { return words_; }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool subset_of(const Bitset& o) const { return is_subset(words_, o.words_); }

  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        out.push_back(static_cast<std::uint32_t>(w * kWordBits + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  /// Hex digits, most significant first, ceil(size/4) digits.
  std::string to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    const std::size_t digits = std::max<std::size_t>(1, (size_ + 3) / 4);
    std::string out(digits, '0');
    for (std::size_t d = 0; d < digits; ++d) {
      const std::size_t bit = d * 4;
      const unsigned nibble =
          static_cast<unsigned>((words_.empty() ? 0 : words_[bit / kWordBits] >> (bit % kWordBits)) & 0xFU);
      out[digits - 1 - d] = kDigits[nibble];
    }
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Word w : b.words()) {
      h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace facnum
