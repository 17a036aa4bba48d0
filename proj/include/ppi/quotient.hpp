#pragma once

/**
 * @file quotient.hpp
 * @brief G/N realized as the action of G on the right cosets of N.
 */

#include <cstdint>
#include <vector>

#include "chief.hpp"

namespace ppi {

class QuotientMap {
public:
  /// N must be normal in G. The image has degree |G:N|.
  QuotientMap(Subgroup g, Subgroup n, std::uint64_t cap = kDefaultElementCap)
      : source_(std::move(g)), kernel_(std::move(n)) {
    if (!is_normal(source_, kernel_))
      throw Error(Errc::NotNormal, kernel_.describe() + " is not normal");
    const Ambient &amb = source_.ambient();
    const std::uint64_t index = source_.order() / kernel_.order();
    if (index > kMaxDegree)
      throw CapExceeded(index, kMaxDegree);

    coset_.assign(amb.size(), -1);
    const std::vector<Index> n_elems = kernel_.elements();
    source_.bits().for_each([&](Index x) {
      if (coset_[x] >= 0)
        return;
      auto c = static_cast<std::int32_t>(reps_.size());
      reps_.push_back(x);
      for (Index m : n_elems)
        coset_[amb.mul(m, x)] = c;
    });

    std::vector<Permutation> gens;
    for (Index s : source_.generators())
      gens.push_back(action_of(s));
    if (gens.empty())
      gens.emplace_back(reps_.size());
    image_ = Ambient::create(Group::from_generators(gens), cap);

    rep_image_.resize(reps_.size());
    for (std::size_t c = 0; c < reps_.size(); ++c)
      rep_image_[c] = *image_->index_of(action_of(reps_[c]));
  }

  const Subgroup &source() const noexcept { return source_; }
  const Subgroup &kernel() const noexcept { return kernel_; }
  const AmbientPtr &image_ambient() const noexcept { return image_; }
  Subgroup image() const { return whole_group(image_); }
  std::size_t index() const noexcept { return reps_.size(); }

  /// Canonical coset representative (least element of the coset).
  Index coset_rep(Index g) const { return reps_[static_cast<std::size_t>(coset_[g])]; }

  /// Image of an element of G in the quotient ambient.
  Index map(Index g) const {
    if (coset_[g] < 0)
      throw Error(Errc::NotASubgroup, "element is outside the source group");
    return rep_image_[static_cast<std::size_t>(coset_[g])];
  }

  /// XN/N for X inside G.
  Subgroup image_of(const Subgroup &x) const {
    if (!x.subset_of(source_))
      throw Error(Errc::NotASubgroup, x.describe() + " is not inside the source");
    std::vector<Index> gens;
    for (Index s : x.generators())
      gens.push_back(map(s));
    return generate(image_, gens);
  }

  /// Full preimage in G of a subgroup of the quotient.
  Subgroup preimage_of(const Subgroup &y) const {
    if (y.ambient_ptr() != image_)
      throw Error(Errc::NotASubgroup, "subgroup is not in the quotient");
    Subgroup out = kernel_;
    for (Index t : y.generators())
      for (std::size_t c = 0; c < reps_.size(); ++c)
        if (rep_image_[c] == t) {
          out = extend(out, reps_[c]);
          break;
        }
    return out;
  }

private:
  Permutation action_of(Index g) const {
    const Ambient &amb = source_.ambient();
    std::vector<Point> img(reps_.size());
    for (std::size_t c = 0; c < reps_.size(); ++c)
      img[c] = static_cast<Point>(coset_[amb.mul(reps_[c], g)]);
    return Permutation(std::move(img));
  }

  Subgroup source_;
  Subgroup kernel_;
  std::vector<std::int32_t> coset_;
  std::vector<Index> reps_;
  std::vector<Index> rep_image_;
  AmbientPtr image_;
};

inline QuotientMap quotient(const Subgroup &g, const Subgroup &n,
                            std::uint64_t cap = kDefaultElementCap) {
  return QuotientMap(g, n, cap);
}

} // namespace ppi
