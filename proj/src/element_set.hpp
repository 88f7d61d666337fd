#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace artinx {

using Element = std::uint32_t;

inline constexpr std::size_t kMaxOrder = 256;

/// Fixed-width set of element indices in [0, 256).
class ElementSet {
 public:
  static constexpr std::size_t kWords = kMaxOrder / 64;

  constexpr ElementSet() = default;

  static ElementSet singleton(Element e) {
    ElementSet s;
    s.insert(e);
    return s;
  }

  static ElementSet prefix(std::size_t n) {
    ElementSet s;
    for (std::size_t i = 0; i < n; ++i) s.insert(static_cast<Element>(i));
    return s;
  }

  void insert(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  [[nodiscard]] bool contains(Element e) const {
    return (words_[e >> 6] >> (e & 63)) & 1U;
  }

  [[nodiscard]] std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  [[nodiscard]] bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  [[nodiscard]] bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Lexicographic order on the ascending member lists.
  friend bool lex_less(const ElementSet& a, const ElementSet& b) {
    for (std::size_t i = 0; i < kWords; ++i) {
      const std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff) return (a.words_[i] >> std::countr_zero(diff)) & 1U;
    }
    return false;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const int bit = std::countr_zero(w);
        fn(static_cast<Element>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  [[nodiscard]] std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  /// Big-endian hex of the bit vector, `width` = ceil(order / 4) digits.
  [[nodiscard]] std::string to_hex(std::size_t order) const;
  static ElementSet from_hex(const std::string& hex);

  [[nodiscard]] std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace artinx
