#pragma once

/**
 * @file perm.hpp
 * @brief Permutations of {1..n} stored as image tables.
 *
 * Points are 0-based internally and 1-based in cycle notation. Products act
 * left to right: (a * b)(i) = b(a(i)).
 */

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace ppi {

using Point = std::uint16_t;

inline constexpr std::size_t kMaxDegree = 4096;

class Permutation {
public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree) : images_(degree) {
    check_degree(degree);
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// From a 0-based image table; throws unless it is a bijection.
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    check_degree(images_.size());
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size())
        throw Error(Errc::PointOutOfRange, "image " + std::to_string(p + 1));
      if (seen[p])
        throw Error(Errc::RepeatedPoint, "image " + std::to_string(p + 1));
      seen[p] = true;
    }
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  /// Smallest moved point, or degree() for the identity.
  std::size_t first_moved() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return i;
    return images_.size();
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r.images_[images_[i]] = static_cast<Point>(i);
    return r;
  }

  /// Left-to-right product: i -> b(a(i)).
  friend Permutation operator*(const Permutation &a, const Permutation &b) {
    if (a.degree() != b.degree())
      throw Error(Errc::DegreeMismatch, std::to_string(a.degree()) + " vs " +
                                            std::to_string(b.degree()));
    Permutation r;
    r.images_.resize(a.images_.size());
    for (std::size_t i = 0; i < a.images_.size(); ++i)
      r.images_[i] = b.images_[a.images_[i]];
    return r;
  }

  bool operator==(const Permutation &) const = default;
  std::strong_ordering operator<=>(const Permutation &o) const {
    if (auto c = degree() <=> o.degree(); c != 0)
      return c;
    return std::lexicographical_compare_three_way(
        images_.begin(), images_.end(), o.images_.begin(), o.images_.end());
  }

  /// Disjoint cycle notation, 1-based; "()" for the identity.
  std::string to_string() const {
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (done[i] || images_[i] == i)
        continue;
      out += '(';
      std::size_t j = i;
      bool first = true;
      while (!done[j]) {
        done[j] = true;
        if (!first)
          out += ' ';
        out += std::to_string(j + 1);
        first = false;
        j = images_[j];
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point p : images_)
      h = (h ^ p) * 1099511628211ull;
    return h;
  }

private:
  static void check_degree(std::size_t degree) {
    if (degree == 0 || degree > kMaxDegree)
      throw Error(Errc::InvalidArgument,
                  "degree " + std::to_string(degree) + " outside 1.." +
                      std::to_string(kMaxDegree));
  }

  std::vector<Point> images_;
};

inline std::ostream &operator<<(std::ostream &os, const Permutation &p) {
  return os << p.to_string();
}

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept { return p.hash(); }
};

inline Permutation compose(const Permutation &a, const Permutation &b) { return a * b; }

inline Permutation identity(std::size_t degree) { return Permutation(degree); }

/// g^k for k >= 0, by repeated squaring.
inline Permutation power(Permutation g, std::uint64_t k) {
  Permutation r(g.degree());
  while (k) {
    if (k & 1)
      r = r * g;
    g = g * g;
    k >>= 1;
  }
  return r;
}

/// Least common multiple of the cycle lengths.
inline std::uint64_t order_of_element(const Permutation &g) {
  std::uint64_t ord = 1;
  std::vector<bool> done(g.degree(), false);
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (done[i])
      continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !done[j]; j = g[j]) {
      done[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

/// Parses `perm := "()" | cycle+ ; cycle := "(" int (ws int)* ")"`.
/// Whitespace is accepted around every token.
inline Permutation parse_permutation(std::string_view text, std::size_t degree) {
  if (degree == 0 || degree > kMaxDegree)
    throw Error(Errc::InvalidArgument, "degree " + std::to_string(degree));
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto fail = [&](const std::string &why) {
    throw Error(Errc::MalformedCycle,
                why + " at offset " + std::to_string(pos) + " in \"" +
                    std::string(text) + "\"");
  };

  skip_ws();
  if (pos == text.size())
    fail("empty input");

  bool saw_identity = false;
  std::size_t cycles = 0;
  while (true) {
    skip_ws();
    if (pos == text.size())
      break;
    if (text[pos] != '(')
      fail("expected '('");
    ++pos;
    std::vector<std::size_t> cycle;
    while (true) {
      skip_ws();
      if (pos == text.size())
        fail("unbalanced parenthesis");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("non-numeric token");
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > kMaxDegree * 10)
          throw Error(Errc::PointOutOfRange, std::to_string(value));
        ++pos;
      }
      if (pos < text.size() && text[pos] != ')' &&
          !std::isspace(static_cast<unsigned char>(text[pos])))
        fail("non-numeric token");
      if (value < 1 || value > degree)
        throw Error(Errc::PointOutOfRange,
                    std::to_string(value) + " not in 1.." + std::to_string(degree));
      if (used[value - 1])
        throw Error(Errc::RepeatedPoint, std::to_string(value));
      used[value - 1] = true;
      cycle.push_back(value - 1);
    }
    if (cycle.empty()) {
      saw_identity = true;
    } else {
      for (std::size_t i = 0; i < cycle.size(); ++i)
        images[cycle[i]] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
    }
    ++cycles;
  }
  if (saw_identity && cycles != 1)
    fail("\"()\" must stand alone");
  return Permutation(std::move(images));
}

} // namespace ppi
