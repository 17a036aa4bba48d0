#pragma once

/**
 * @file chief.hpp
 * @brief Chief series: steps, series, lazy depth-first enumeration.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normal.hpp"

namespace ppi {

/// lower < upper, both normal in G, upper/lower minimal normal in G/lower.
struct ChiefStep {
  Subgroup lower;
  Subgroup upper;

  std::uint64_t factor_order() const { return upper.order() / lower.order(); }
};

struct ChiefSeries {
  std::vector<ChiefStep> steps;

  /// Orders of 1 = G_0 < G_1 < ... < G_n = G.
  std::vector<std::uint64_t> orders() const {
    std::vector<std::uint64_t> out{steps.empty() ? 1 : steps.front().lower.order()};
    for (const auto &s : steps)
      out.push_back(s.upper.order());
    return out;
  }

  std::string describe() const {
    std::string s;
    auto o = orders();
    for (std::size_t k = 0; k < o.size(); ++k)
      s += (k ? " < " : "") + std::to_string(o[k]);
    return s;
  }
};

/// Every chief series of G exactly once, depth-first from the trivial
/// subgroup, branching over minimal_normal_overgroups in canonical order.
class ChiefSeriesIter {
public:
  explicit ChiefSeriesIter(Subgroup g) : g_(std::move(g)) {
    push(trivial_subgroup(g_.ambient_ptr()));
  }

  std::optional<ChiefSeries> next() {
    while (!stack_.empty()) {
      Frame &top = stack_.back();
      if (top.node.order() == g_.order()) {
        ChiefSeries s;
        for (std::size_t k = 1; k < stack_.size(); ++k)
          s.steps.push_back({stack_[k - 1].node, stack_[k].node});
        stack_.pop_back();
        return s;
      }
      if (top.next < top.children.size()) {
        Subgroup child = top.children[top.next++];
        push(std::move(child));
      } else {
        stack_.pop_back();
      }
    }
    return std::nullopt;
  }

private:
  struct Frame {
    Subgroup node;
    std::vector<Subgroup> children;
    std::size_t next = 0;
  };

  void push(Subgroup n) {
    std::vector<Subgroup> kids;
    if (n.order() != g_.order())
      kids = minimal_normal_overgroups(g_, n);
    stack_.push_back(Frame{std::move(n), std::move(kids), 0});
  }

  Subgroup g_;
  std::vector<Frame> stack_;
};

inline ChiefSeriesIter chief_series_iter(const Subgroup &g) { return ChiefSeriesIter(g); }

/// The first series chief_series_iter yields.
inline ChiefSeries first_chief_series(const Subgroup &g) { return *ChiefSeriesIter(g).next(); }

/// Number of chief series, stopping once `limit` is exceeded (returns limit + 1).
inline std::size_t count_chief_series(const Subgroup &g, std::size_t limit) {
  ChiefSeriesIter it(g);
  std::size_t n = 0;
  while (it.next())
    if (++n > limit)
      break;
  return n;
}

/// Sorted factor orders of a series.
inline std::vector<std::uint64_t> jordan_holder_factor_orders(const ChiefSeries &s) {
  std::vector<std::uint64_t> out;
  for (const auto &step : s.steps)
    out.push_back(step.factor_order());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace ppi
