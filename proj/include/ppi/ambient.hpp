#pragma once

/**
 * @file ambient.hpp
 * @brief An enumerated group ("ambient") and subgroups of it as element bitsets.
 *
 * Every subgroup computation in the library happens inside one Ambient: a
 * Group whose elements have been listed in lexicographic order of their image
 * tables. Elements are referred to by their position in that listing, and a
 * Subgroup is the bitset of positions it occupies plus a short generator list.
 */

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "error.hpp"
#include "group.hpp"
#include "perm.hpp"

namespace ppi {

using Index = std::uint32_t;

inline constexpr std::uint64_t kDefaultElementCap = 20000;

/// Bitset + generators, the ambient-free payload of a Subgroup. Used as the
/// value type of per-ambient caches so the caches never own the ambient.
struct SubgroupData {
  Bitset bits;
  std::vector<Index> gens;
};

/// Thread-safe map keyed by a pair of bitsets with insert-if-absent semantics.
template <class V> class PairMemo {
public:
  using Key = std::pair<Bitset, Bitset>;

  std::optional<V> find(const Bitset &a, const Bitset &b) const {
    std::lock_guard lock(mu_);
    auto it = map_.find(Key{a, b});
    if (it == map_.end())
      return std::nullopt;
    return it->second;
  }

  void insert(const Bitset &a, const Bitset &b, V value) const {
    std::lock_guard lock(mu_);
    map_.try_emplace(Key{a, b}, std::move(value));
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return map_.size();
  }

private:
  struct KeyHash {
    std::size_t operator()(const Key &k) const noexcept {
      return k.first.hash() * 31 + k.second.hash();
    }
  };
  mutable std::mutex mu_;
  mutable std::unordered_map<Key, V, KeyHash> map_;
};

class Subgroup;

/// A Group together with its canonical element listing (the ElementIndex).
class Ambient : public std::enable_shared_from_this<Ambient> {
public:
  static std::shared_ptr<const Ambient> create(Group group,
                                               std::uint64_t cap = kDefaultElementCap) {
    if (group.order() > cap)
      throw CapExceeded(group.order(), cap);
    return std::shared_ptr<const Ambient>(new Ambient(std::move(group)));
  }

  const Group &group() const noexcept { return group_; }
  std::size_t degree() const noexcept { return group_.degree(); }
  Index size() const noexcept { return static_cast<Index>(elements_.size()); }
  std::uint64_t order() const noexcept { return elements_.size(); }

  const Permutation &element(Index i) const { return elements_[i]; }
  const std::vector<Permutation> &elements() const noexcept { return elements_; }

  static constexpr Index identity() noexcept { return 0; }

  std::optional<Index> index_of(const Permutation &p) const {
    if (p.degree() != degree())
      throw Error(Errc::DegreeMismatch, std::to_string(p.degree()) + " vs " +
                                            std::to_string(degree()));
    if (!group_.contains(p))
      return std::nullopt;
    std::vector<Point> key(base_.size());
    for (std::size_t k = 0; k < base_.size(); ++k)
      key[k] = p[base_[k]];
    return lookup(key);
  }

  Index mul(Index a, Index b) const {
    if (!table_.empty())
      return table_[static_cast<std::size_t>(a) * elements_.size() + b];
    return mul_slow(a, b);
  }

  Index inv(Index a) const { return inverse_[a]; }

  /// x^g = g^-1 x g.
  Index conj(Index x, Index g) const { return mul(mul(inverse_[g], x), g); }

  /// [a, b] = a^-1 b^-1 a b.
  Index commutator(Index a, Index b) const {
    return mul(mul(inverse_[a], inverse_[b]), mul(a, b));
  }

  Index pow(Index a, std::uint64_t k) const {
    Index r = identity();
    Index base = a;
    while (k) {
      if (k & 1)
        r = mul(r, base);
      base = mul(base, base);
      k >>= 1;
    }
    return r;
  }

  std::uint64_t element_order(Index a) const { return orders_[a]; }

  /// Per-ambient caches; see subgroups.hpp and pi_property.hpp.
  const PairMemo<SubgroupData> &normalizer_memo() const { return normalizers_; }
  const PairMemo<std::vector<SubgroupData>> &overgroup_memo() const { return overgroups_; }
  const PairMemo<bool> &pi_memo() const { return pi_; }

private:
  explicit Ambient(Group group) : group_(std::move(group)) {
    elements_ = group_.all_elements();
    std::sort(elements_.begin(), elements_.end());
    base_ = group_.base();

    std::size_t bits = 1;
    while ((std::size_t{1} << bits) < degree())
      ++bits;
    packed_ = bits * base_.size() <= 64;
    bits_ = bits;

    for (Index i = 0; i < size(); ++i) {
      std::vector<Point> key(base_.size());
      for (std::size_t k = 0; k < base_.size(); ++k)
        key[k] = elements_[i][base_[k]];
      if (packed_)
        packed_index_.emplace(pack(key), i);
      else
        string_index_.emplace(std::string(reinterpret_cast<const char *>(key.data()),
                                          key.size() * sizeof(Point)),
                              i);
    }

    if (size() <= kTableLimit) {
      std::vector<Index> table(static_cast<std::size_t>(size()) * size());
      for (Index a = 0; a < size(); ++a)
        for (Index b = 0; b < size(); ++b)
          table[static_cast<std::size_t>(a) * size() + b] = mul_slow(a, b);
      table_ = std::move(table);
    }

    inverse_.resize(size());
    orders_.resize(size());
    for (Index i = 0; i < size(); ++i) {
      inverse_[i] = *lookup_perm(elements_[i].inverse());
      orders_[i] = order_of_element(elements_[i]);
    }
  }

  static constexpr Index kTableLimit = 1500;

  std::uint64_t pack(const std::vector<Point> &key) const {
    std::uint64_t v = 0;
    for (Point p : key)
      v = (v << bits_) | p;
    return v;
  }

  std::optional<Index> lookup(const std::vector<Point> &key) const {
    if (packed_) {
      auto it = packed_index_.find(pack(key));
      if (it == packed_index_.end())
        return std::nullopt;
      return it->second;
    }
    auto it = string_index_.find(std::string(reinterpret_cast<const char *>(key.data()),
                                             key.size() * sizeof(Point)));
    if (it == string_index_.end())
      return std::nullopt;
    return it->second;
  }

  std::optional<Index> lookup_perm(const Permutation &p) const {
    std::vector<Point> key(base_.size());
    for (std::size_t k = 0; k < base_.size(); ++k)
      key[k] = p[base_[k]];
    return lookup(key);
  }

  Index mul_slow(Index a, Index b) const {
    const auto &pa = elements_[a];
    const auto &pb = elements_[b];
    std::vector<Point> key(base_.size());
    for (std::size_t k = 0; k < base_.size(); ++k)
      key[k] = pb[pa[base_[k]]];
    return *lookup(key);
  }

  Group group_;
  std::vector<Permutation> elements_;
  std::vector<Point> base_;
  std::size_t bits_ = 1;
  bool packed_ = true;
  std::unordered_map<std::uint64_t, Index> packed_index_;
  std::unordered_map<std::string, Index> string_index_;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  std::vector<std::uint64_t> orders_;

  PairMemo<SubgroupData> normalizers_;
  PairMemo<std::vector<SubgroupData>> overgroups_;
  PairMemo<bool> pi_;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

/// Enumerates G, or throws CapExceeded when |G| > cap.
inline AmbientPtr elements(const Group &g, std::uint64_t cap = kDefaultElementCap) {
  return Ambient::create(g, cap);
}

/// A subgroup of an Ambient, identified by its element bitset.
class Subgroup {
public:
  Subgroup(AmbientPtr ambient, Bitset bits, std::vector<Index> gens)
      : ambient_(std::move(ambient)), bits_(std::move(bits)), gens_(std::move(gens)),
        order_(bits_.count()) {}

  Subgroup(AmbientPtr ambient, SubgroupData data)
      : Subgroup(std::move(ambient), std::move(data.bits), std::move(data.gens)) {}

  const Ambient &ambient() const noexcept { return *ambient_; }
  const AmbientPtr &ambient_ptr() const noexcept { return ambient_; }
  const Bitset &bits() const noexcept { return bits_; }
  const std::vector<Index> &generators() const noexcept { return gens_; }
  std::uint64_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  bool contains(Index i) const noexcept { return bits_.test(i); }
  bool contains(const Permutation &p) const {
    auto i = ambient_->index_of(p);
    return i && bits_.test(*i);
  }

  bool subset_of(const Subgroup &o) const noexcept { return bits_.subset_of(o.bits_); }

  std::vector<Index> elements() const { return bits_.members(); }

  SubgroupData data() const { return {bits_, gens_}; }

  std::vector<Permutation> generator_perms() const {
    std::vector<Permutation> out;
    for (Index g : gens_)
      out.push_back(ambient_->element(g));
    if (out.empty())
      out.push_back(ambient_->element(Ambient::identity()));
    return out;
  }

  /// The subgroup as a stand-alone Group with its own BSGS.
  Group group() const { return Group::from_generators(generator_perms()); }

  friend bool operator==(const Subgroup &a, const Subgroup &b) noexcept {
    return a.ambient_ == b.ambient_ && a.bits_ == b.bits_;
  }

  /// Deterministic order used everywhere: by order, then by bitset.
  friend bool canonical_less(const Subgroup &a, const Subgroup &b) noexcept {
    if (a.order_ != b.order_)
      return a.order_ < b.order_;
    return a.bits_ < b.bits_;
  }

  std::string describe() const {
    std::string s = "<";
    for (std::size_t k = 0; k < gens_.size(); ++k)
      s += (k ? ", " : "") + ambient_->element(gens_[k]).to_string();
    return s + "> order " + std::to_string(order_);
  }

private:
  AmbientPtr ambient_;
  Bitset bits_;
  std::vector<Index> gens_;
  std::uint64_t order_;
};

inline void sort_canonical(std::vector<Subgroup> &v) {
  std::sort(v.begin(), v.end(), [](const Subgroup &a, const Subgroup &b) {
    return canonical_less(a, b);
  });
}

inline Subgroup trivial_subgroup(const AmbientPtr &amb) {
  Bitset b(amb->size());
  b.set(Ambient::identity());
  return Subgroup(amb, std::move(b), {});
}

/// <H, g>, by adding whole right cosets of H (Dimino).
inline Subgroup extend(const Subgroup &h, Index g) {
  if (h.contains(g))
    return h;
  const Ambient &amb = h.ambient();
  const std::vector<Index> old = h.elements();
  std::vector<Index> gens = h.generators();
  gens.push_back(g);

  Bitset bits = h.bits();
  std::vector<Index> reps{Ambient::identity()};
  auto add_coset = [&](Index r) {
    for (Index x : old)
      bits.set(amb.mul(x, r));
    reps.push_back(r);
  };
  add_coset(g);
  for (std::size_t k = 0; k < reps.size(); ++k)
    for (Index s : gens) {
      Index t = amb.mul(reps[k], s);
      if (!bits.test(t))
        add_coset(t);
    }
  return Subgroup(h.ambient_ptr(), std::move(bits), std::move(gens));
}

/// Subgroup generated by the given elements; redundant generators are dropped.
template <class Range> Subgroup generate(const AmbientPtr &amb, const Range &gens) {
  Subgroup h = trivial_subgroup(amb);
  for (Index g : gens)
    h = extend(h, g);
  return h;
}

inline Subgroup whole_group(const AmbientPtr &amb) {
  std::vector<Index> gens;
  for (const auto &p : amb->group().generators())
    gens.push_back(*amb->index_of(p));
  return generate(amb, gens);
}

/// Subgroup generated by permutations; NotASubgroup if one lies outside.
inline Subgroup subgroup_from_perms(const AmbientPtr &amb, const std::vector<Permutation> &perms) {
  std::vector<Index> gens;
  for (const auto &p : perms) {
    auto i = amb->index_of(p);
    if (!i)
      throw Error(Errc::NotASubgroup, p.to_string() + " is not in the ambient group");
    gens.push_back(*i);
  }
  return generate(amb, gens);
}

} // namespace ppi
