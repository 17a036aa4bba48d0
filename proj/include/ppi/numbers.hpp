#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace ppi {

inline bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e)
      out.emplace_back(d, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

/// Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline std::uint64_t p_prime_part(std::uint64_t n, std::uint64_t p) { return n / p_part(n, p); }

inline bool is_p_power(std::uint64_t n, std::uint64_t p) { return p_part(n, p) == n; }

/// Sorted, deduplicated set of primes.
class PrimeSet {
public:
  PrimeSet() = default;
  PrimeSet(std::initializer_list<std::uint64_t> ps) {
    for (auto p : ps)
      insert(p);
  }

  static PrimeSet of(std::uint64_t n) {
    PrimeSet s;
    for (auto [p, e] : factorize(n))
      s.primes_.push_back(p);
    return s;
  }

  void insert(std::uint64_t p) {
    if (!is_prime(p))
      throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p)
      primes_.insert(it, p);
  }

  bool contains(std::uint64_t p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
  }
  bool empty() const noexcept { return primes_.empty(); }
  std::size_t size() const noexcept { return primes_.size(); }
  const std::vector<std::uint64_t> &primes() const noexcept { return primes_; }
  auto begin() const { return primes_.begin(); }
  auto end() const { return primes_.end(); }

  bool operator==(const PrimeSet &) const = default;

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < primes_.size(); ++i)
      s += (i ? ", " : "") + std::to_string(primes_[i]);
    return s + "}";
  }

private:
  std::vector<std::uint64_t> primes_;
};

/// n is a pi-number when every prime divisor of n lies in pi. 1 always is.
inline bool is_pi_number(std::uint64_t n, const PrimeSet &pi) {
  for (auto [p, e] : factorize(n))
    if (!pi.contains(p))
      return false;
  return true;
}

} // namespace ppi
