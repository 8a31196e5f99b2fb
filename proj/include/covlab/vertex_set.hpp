#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace covlab {

// Fixed-width set over the vertex universe {0, ..., 127}.
class VertexSet {
 public:
  static constexpr int kCapacity = 128;

  constexpr VertexSet() = default;
  constexpr VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) set(v);
  }
  static VertexSet from_vector(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s.set(v);
    return s;
  }
  // {0, ..., n-1}
  static constexpr VertexSet prefix(int n) {
    VertexSet s;
    if (n >= 64) {
      s.words_[0] = ~std::uint64_t{0};
      s.words_[1] = n >= 128 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n - 64)) - 1);
    } else if (n > 0) {
      s.words_[0] = (std::uint64_t{1} << n) - 1;
    }
    return s;
  }

  constexpr void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  constexpr void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  constexpr bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

  constexpr int count() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
  constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }
  constexpr bool intersects(const VertexSet& o) const {
    return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
  }
  constexpr int intersection_size(const VertexSet& o) const {
    return std::popcount(words_[0] & o.words_[0]) + std::popcount(words_[1] & o.words_[1]);
  }
  constexpr bool is_subset_of(const VertexSet& o) const {
    return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
  }

  // Smallest element, or -1.
  constexpr int first() const {
    if (words_[0] != 0) return std::countr_zero(words_[0]);
    if (words_[1] != 0) return 64 + std::countr_zero(words_[1]);
    return -1;
  }
  // Largest element, or -1.
  constexpr int last() const {
    if (words_[1] != 0) return 127 - std::countl_zero(words_[1]);
    if (words_[0] != 0) return 63 - std::countl_zero(words_[0]);
    return -1;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  constexpr VertexSet& operator&=(const VertexSet& o) {
    words_[0] &= o.words_[0];
    words_[1] &= o.words_[1];
    return *this;
  }
  constexpr VertexSet& operator|=(const VertexSet& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }
  constexpr VertexSet& operator-=(const VertexSet& o) {
    words_[0] &= ~o.words_[0];
    words_[1] &= ~o.words_[1];
    return *this;
  }
  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  constexpr std::uint64_t low_word() const { return words_[0]; }
  constexpr std::uint64_t high_word() const { return words_[1]; }

  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;
  // Numeric order of the 128-bit value.
  friend constexpr std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.words_[1] <=> b.words_[1]; c != 0) return c;
    return a.words_[0] <=> b.words_[0];
  }

 private:
  std::array<std::uint64_t, 2> words_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::uint64_t h = s.low_word() * 0x9E3779B97F4A7C15ULL;
    h ^= s.high_word() + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace covlab
