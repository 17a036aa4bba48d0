#pragma once

// Brute-force reference implementations. Nothing here includes the library:
// permutations are raw image vectors, groups are explicit element lists with
// a full multiplication table, subgroups are sorted index vectors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;  // 0-based images
using Sub = std::vector<int>;   // sorted element indices

// Left-to-right: apply a, then b.
inline Perm mul(const Perm &a, const Perm &b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = b[a[i]];
  return r;
}

inline Perm inv(const Perm &a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[a[i]] = static_cast<int>(i);
  return r;
}

inline Perm ident(std::size_t n) {
  Perm r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

// Cycle notation, 1-based, written independently of the library parser.
inline Perm from_cycles(const std::string &s, std::size_t n) {
  Perm r = ident(n);
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') {
      ++i;
      continue;
    }
    std::vector<int> cyc;
    ++i;
    while (s[i] != ')') {
      if (s[i] == ' ') {
        ++i;
        continue;
      }
      int v = 0;
      while (std::isdigit(static_cast<unsigned char>(s[i])))
        v = v * 10 + (s[i++] - '0');
      cyc.push_back(v - 1);
    }
    ++i;
    for (std::size_t k = 0; k < cyc.size(); ++k)
      r[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  return r;
}

// All products of generators, breadth first.
inline std::set<Perm> closure(const std::vector<Perm> &gens, std::size_t n) {
  std::set<Perm> seen{ident(n)};
  std::vector<Perm> frontier{ident(n)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto &x : frontier)
      for (const auto &g : gens) {
        Perm y = mul(x, g);
        if (seen.insert(y).second)
          next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline std::uint64_t elem_order(const Perm &p) {
  std::uint64_t o = 1;
  Perm x = p;
  while (x != ident(p.size())) {
    x = mul(x, p);
    ++o;
  }
  return o;
}

inline std::vector<std::uint64_t> primes_of(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  return out;
}

inline bool is_pi_number(std::uint64_t n, const std::vector<std::uint64_t> &pi) {
  for (auto p : primes_of(n))
    if (std::find(pi.begin(), pi.end(), p) == pi.end())
      return false;
  return true;
}

inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

// An explicit finite group: elements, Cayley table, inverses.
struct Table {
  std::vector<Perm> elems;
  std::vector<std::vector<int>> mt;
  std::vector<int> iv;
  int e = 0;

  Table() = default;

  explicit Table(const std::set<Perm> &s) : elems(s.begin(), s.end()) {
    std::map<Perm, int> idx;
    for (std::size_t i = 0; i < elems.size(); ++i)
      idx[elems[i]] = static_cast<int>(i);
    std::size_t n = elems.size();
    mt.assign(n, std::vector<int>(n));
    iv.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b)
        mt[a][b] = idx.at(mul(elems[a], elems[b]));
      iv[a] = idx.at(inv(elems[a]));
    }
    e = idx.at(ident(elems[0].size()));
  }

  std::size_t size() const { return elems.size(); }
  int conj(int x, int g) const { return mt[mt[iv[g]][x]][g]; }

  Sub all() const {
    Sub s(size());
    std::iota(s.begin(), s.end(), 0);
    return s;
  }

  // Subgroup generated by a set of indices.
  Sub gen(const std::vector<int> &g) const {
    std::vector<char> in(size(), 0);
    std::vector<int> out{e};
    in[e] = 1;
    for (std::size_t k = 0; k < out.size(); ++k)
      for (int s : g) {
        int y = mt[out[k]][s];
        if (!in[y]) {
          in[y] = 1;
          out.push_back(y);
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  Sub join(const Sub &a, const Sub &b) const {
    std::vector<int> g(a);
    g.insert(g.end(), b.begin(), b.end());
    return gen(g);
  }

  static Sub meet(const Sub &a, const Sub &b) {
    Sub r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
  }

  static bool sub_of(const Sub &a, const Sub &b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  Sub conj_sub(const Sub &h, int g) const {
    Sub r;
    for (int x : h)
      r.push_back(conj(x, g));
    std::sort(r.begin(), r.end());
    return r;
  }

  bool normal_in(const Sub &h, const Sub &g) const {
    for (int x : g)
      if (conj_sub(h, x) != h)
        return false;
    return true;
  }

  Sub normalizer(const Sub &g, const Sub &h) const {
    Sub r;
    for (int x : g)
      if (conj_sub(h, x) == h)
        r.push_back(x);
    return r;
  }

  Sub centralizer(const Sub &g, const Sub &h) const {
    Sub r;
    for (int x : g) {
      bool ok = true;
      for (int y : h)
        ok = ok && mt[x][y] == mt[y][x];
      if (ok)
        r.push_back(x);
    }
    return r;
  }

  Sub derived(const Sub &g) const {
    std::vector<int> comms;
    for (int a : g)
      for (int b : g)
        comms.push_back(mt[mt[iv[a]][iv[b]]][mt[a][b]]);
    return gen(comms);
  }

  Sub normal_closure(const Sub &g, const Sub &h) const {
    std::vector<int> all;
    for (int x : h)
      for (int y : g)
        all.push_back(conj(x, y));
    return gen(all);
  }

  // Every subgroup inside g: close the cyclic subgroups under joins.
  std::vector<Sub> subgroups(const Sub &g) const {
    std::set<Sub> seen;
    std::vector<Sub> cyc;
    for (int x : g)
      if (seen.insert(gen({x})).second)
        cyc.push_back(gen({x}));
    std::vector<Sub> all(seen.begin(), seen.end());
    for (std::size_t k = 0; k < all.size(); ++k)
      for (const auto &c : cyc) {
        Sub j = join(all[k], c);
        if (seen.insert(j).second)
          all.push_back(j);
      }
    std::sort(all.begin(), all.end(),
              [](const Sub &a, const Sub &b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    return all;
  }

  // Normal subgroups of g: normal closures of single elements, closed under joins.
  std::vector<Sub> normal_subgroups(const Sub &g) const {
    std::set<Sub> seen;
    std::vector<Sub> base;
    for (int x : g) {
      Sub n = normal_closure(g, gen({x}));
      if (seen.insert(n).second)
        base.push_back(n);
    }
    std::vector<Sub> all(seen.begin(), seen.end());
    for (std::size_t k = 0; k < all.size(); ++k)
      for (const auto &b : base) {
        Sub j = join(all[k], b);
        if (seen.insert(j).second)
          all.push_back(j);
      }
    std::sort(all.begin(), all.end(),
              [](const Sub &a, const Sub &b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    return all;
  }

  // Normal M > N of g with nothing normal strictly between.
  std::vector<Sub> minimal_over(const Sub &g, const Sub &n, const std::vector<Sub> &normals) const {
    std::vector<Sub> out;
    for (const auto &m : normals) {
      if (m.size() <= n.size() || !sub_of(n, m))
        continue;
      bool minimal = true;
      for (const auto &k : normals)
        if (k.size() > n.size() && k.size() < m.size() && sub_of(n, k) && sub_of(k, m))
          minimal = false;
      if (minimal)
        out.push_back(m);
    }
    (void)g;
    return out;
  }

  // Every chief series of g as the list of its terms, stopping after `limit`.
  std::vector<std::vector<Sub>> chief_series(const Sub &g, std::size_t limit = 100000) const {
    auto normals = normal_subgroups(g);
    std::map<Sub, std::vector<Sub>> cover;
    for (const auto &n : normals)
      cover[n] = minimal_over(g, n, normals);
    std::vector<std::vector<Sub>> out;
    std::vector<Sub> path{Sub{e}};
    std::function<void()> dfs = [&] {
      if (out.size() >= limit)
        return;
      if (path.back().size() == g.size()) {
        out.push_back(path);
        return;
      }
      for (const auto &m : cover.at(path.back())) {
        path.push_back(m);
        dfs();
        path.pop_back();
      }
    };
    dfs();
    return out;
  }

  // The condition for the chief factor b/a, computed inside the explicit
  // quotient g/a whose elements are the cosets of a.
  bool factor_ok_in_quotient(const Sub &g, const Sub &h, const Sub &a, const Sub &b) const {
    std::vector<int> coset_of(size(), -1);
    std::vector<Sub> cosets;
    for (int x : g) {
      if (coset_of[x] >= 0)
        continue;
      Sub c;
      for (int y : a)
        c.push_back(mt[y][x]);
      std::sort(c.begin(), c.end());
      for (int y : c)
        coset_of[y] = static_cast<int>(cosets.size());
      cosets.push_back(c);
    }
    std::size_t q = cosets.size();
    auto qmul = [&](int c, int d) { return coset_of[mt[cosets[c][0]][cosets[d][0]]]; };
    auto qinv = [&](int c) { return coset_of[iv[cosets[c][0]]]; };
    // X/a with X = <h, a> ∩ b
    Sub x = meet(join(h, a), b);
    std::set<int> xbar;
    for (int y : x)
      xbar.insert(coset_of[y]);
    std::size_t norm = 0;
    for (std::size_t c = 0; c < q; ++c) {
      bool fixes = true;
      for (int y : xbar)
        fixes = fixes && xbar.count(qmul(qmul(qinv(static_cast<int>(c)), y), static_cast<int>(c)));
      norm += fixes;
    }
    std::uint64_t index = q / norm;
    return is_pi_number(index, primes_of(xbar.size()));
  }

  // The property by exhaustive search over all chief series, quotient form.
  bool partial_pi(const Sub &g, const Sub &h) const { return partial_pi(g, h, chief_series(g)); }

  bool partial_pi(const Sub &g, const Sub &h, const std::vector<std::vector<Sub>> &all_series) const {
    for (const auto &series : all_series) {
      bool ok = true;
      for (std::size_t k = 0; ok && k + 1 < series.size(); ++k)
        ok = factor_ok_in_quotient(g, h, series[k], series[k + 1]);
      if (ok)
        return true;
    }
    return false;
  }

  bool p_nilpotent(const Sub &g, std::uint64_t p) const {
    std::size_t target = g.size() / p_part(g.size(), p);
    for (const auto &n : normal_subgroups(g))
      if (n.size() == target)
        return true;
    return false;
  }

  // Largest normal subgroup such that some chief series of g through it has
  // every factor below it passing `rule`; the good ones are joined together.
  Sub hypercenter(const Sub &g, const std::function<bool(std::uint64_t)> &rule) const {
    Sub z{e};
    for (const auto &series : chief_series(g)) {
      for (std::size_t k = 0; k + 1 < series.size(); ++k) {
        if (!rule(series[k + 1].size() / series[k].size()))
          break;
        z = join(z, series[k + 1]);
      }
    }
    return z;
  }

  Sub frattini(const Sub &g) const {
    auto subs = subgroups(g);
    Sub phi = g;
    for (const auto &m : subs) {
      if (m.size() == g.size())
        continue;
      bool maximal = true;
      for (const auto &o : subs)
        if (o.size() > m.size() && o.size() < g.size() && sub_of(m, o))
          maximal = false;
      if (maximal)
        phi = meet(phi, m);
    }
    return phi;
  }
};

inline Table table_of(const std::vector<std::string> &gens, std::size_t n) {
  std::vector<Perm> ps;
  for (const auto &g : gens)
    ps.push_back(from_cycles(g, n));
  return Table(closure(ps, n));
}

} // namespace oracle
