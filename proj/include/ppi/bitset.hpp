#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace ppi {

/// Fixed-size set of element indices. Subgroups of an enumerated ambient group
/// are identified by these.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return n_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool subset_of(const Bitset &o) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k])
        return false;
    return true;
  }

  Bitset &operator&=(const Bitset &o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      words_[k] &= o.words_[k];
    return *this;
  }
  Bitset &operator|=(const Bitset &o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      words_[k] |= o.words_[k];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset &b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset &b) { return a |= b; }

  template <class F> void for_each(F &&f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<std::uint32_t>(k * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    for_each([&](std::uint32_t i) { out.push_back(i); });
    return out;
  }

  bool operator==(const Bitset &) const = default;

  /// Total order: the set holding the smallest index in the symmetric
  /// difference sorts first.
  std::strong_ordering operator<=>(const Bitset &o) const noexcept {
    if (auto c = n_ <=> o.n_; c != 0)
      return c;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t d = words_[k] ^ o.words_[k];
      if (d) {
        std::uint64_t low = d & (~d + 1);
        return (words_[k] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ull ^ n_;
    for (auto w : words_)
      h = (h ^ w) * 0x100000001b3ull + (h >> 29);
    return h;
  }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset &b) const noexcept { return b.hash(); }
};

} // namespace ppi
