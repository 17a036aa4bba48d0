#pragma once

/**
 * @file corpus.hpp
 * @brief Group catalog: the corpus file format and the built-in groups.
 *
 * A corpus file is a JSON array of objects, one per line by convention:
 *
 *     [
 *       {"name": "A5", "degree": 5, "generators": ["(1 2 3 4 5)", "(1 2 3)"], "expected_order": 60},
 *       {"name": "C3", "degree": 3, "generators": ["(1 2 3)"], "tags": ["abelian"]}
 *     ]
 */

#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "group.hpp"
#include "perm.hpp"

namespace ppi {

struct CorpusEntry {
  std::string name;
  std::size_t degree = 1;
  std::vector<std::string> generators;
  std::optional<std::uint64_t> expected_order;
  std::vector<std::string> tags;

  bool has_tag(std::string_view t) const {
    for (const auto &x : tags)
      if (x == t)
        return true;
    return false;
  }

  bool operator==(const CorpusEntry &) const = default;
};

/// Parses the generators and runs Schreier-Sims.
inline Group build_group(const CorpusEntry &e) {
  std::vector<Permutation> gens;
  for (const auto &s : e.generators)
    gens.push_back(parse_permutation(s, e.degree));
  if (gens.empty())
    gens.emplace_back(e.degree);
  return Group::from_generators(gens);
}

namespace detail {

inline std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline CorpusEntry entry_from_json(const nlohmann::json &j, std::size_t k) {
  auto where = "entry " + std::to_string(k);
  if (!j.is_object())
    throw Error(Errc::ParseError, where + ": expected an object");
  for (const auto &[key, _] : j.items())
    if (key != "name" && key != "degree" && key != "generators" && key != "expected_order" &&
        key != "tags")
      throw Error(Errc::ParseError, where + ": unknown key \"" + key + "\"");
  CorpusEntry e;
  if (!j.contains("name") || !j["name"].is_string())
    throw Error(Errc::ParseError, where + ": \"name\" must be a string");
  e.name = j["name"].get<std::string>();
  where += " (" + e.name + ")";
  if (!j.contains("degree") || !j["degree"].is_number_unsigned() || j["degree"].get<std::uint64_t>() == 0)
    throw Error(Errc::ParseError, where + ": \"degree\" must be a positive integer");
  e.degree = j["degree"].get<std::size_t>();
  if (!j.contains("generators") || !j["generators"].is_array())
    throw Error(Errc::ParseError, where + ": \"generators\" must be an array");
  for (const auto &g : j["generators"]) {
    if (!g.is_string())
      throw Error(Errc::ParseError, where + ": generators must be strings");
    e.generators.push_back(g.get<std::string>());
  }
  if (j.contains("expected_order")) {
    if (!j["expected_order"].is_number_unsigned())
      throw Error(Errc::ParseError, where + ": \"expected_order\" must be a positive integer");
    e.expected_order = j["expected_order"].get<std::uint64_t>();
  }
  if (j.contains("tags")) {
    if (!j["tags"].is_array())
      throw Error(Errc::ParseError, where + ": \"tags\" must be an array");
    for (const auto &t : j["tags"]) {
      if (!t.is_string())
        throw Error(Errc::ParseError, where + ": tags must be strings");
      e.tags.push_back(t.get<std::string>());
    }
  }
  return e;
}

} // namespace detail

/// Checks name uniqueness, generator syntax and expected orders.
inline void validate_corpus(const std::vector<CorpusEntry> &entries) {
  std::set<std::string> names;
  for (const auto &e : entries) {
    if (!names.insert(e.name).second)
      throw Error(Errc::DuplicateName, e.name);
    Group g = build_group(e);
    if (e.expected_order && *e.expected_order != g.order())
      throw Error(Errc::OrderMismatch, e.name + ": expected " + std::to_string(*e.expected_order) +
                                           ", constructed " + std::to_string(g.order()));
  }
}

inline std::vector<CorpusEntry> load_corpus_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    auto [line, col] = detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ", column " +
                                      std::to_string(col) + ": " + e.what());
  }
  if (!doc.is_array())
    throw Error(Errc::ParseError, "line 1, column 1: corpus must be a JSON array");
  std::vector<CorpusEntry> out;
  for (std::size_t k = 0; k < doc.size(); ++k)
    out.push_back(detail::entry_from_json(doc[k], k));
  validate_corpus(out);
  return out;
}

inline std::vector<CorpusEntry> load_corpus_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_corpus_text(ss.str());
}

inline nlohmann::ordered_json to_json(const CorpusEntry &e) {
  nlohmann::ordered_json j;
  j["name"] = e.name;
  j["degree"] = e.degree;
  j["generators"] = e.generators;
  if (e.expected_order)
    j["expected_order"] = *e.expected_order;
  if (!e.tags.empty())
    j["tags"] = e.tags;
  return j;
}

/// One object per line inside a JSON array.
inline std::string serialize_corpus(const std::vector<CorpusEntry> &entries) {
  std::string out = "[\n";
  for (std::size_t k = 0; k < entries.size(); ++k) {
    out += "  " + to_json(entries[k]).dump();
    out += k + 1 < entries.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

namespace detail {

inline std::string cycle_text(std::size_t from, std::size_t to) {
  std::string s = "(";
  for (std::size_t i = from; i <= to; ++i)
    s += (i == from ? "" : " ") + std::to_string(i);
  return s + ")";
}

inline std::string affine_multiplier(std::size_t q, std::size_t a) {
  // x -> a*x on Z/q, points are residues + 1.
  std::string s;
  std::vector<bool> done(q, false);
  for (std::size_t x = 1; x < q; ++x) {
    if (done[x] || (a * x) % q == x)
      continue;
    s += "(";
    std::size_t y = x;
    bool first = true;
    while (!done[y]) {
      done[y] = true;
      s += (first ? "" : " ") + std::to_string(y + 1);
      first = false;
      y = (a * y) % q;
    }
    s += ")";
  }
  return s;
}

} // namespace detail

/// The built-in catalog. Every entry carries its expected order.
inline std::vector<CorpusEntry> builtin_corpus() {
  using detail::cycle_text;
  std::vector<CorpusEntry> c;
  auto add = [&](std::string name, std::size_t degree, std::vector<std::string> gens,
                 std::uint64_t order, std::vector<std::string> tags = {}) {
    c.push_back(CorpusEntry{std::move(name), degree, std::move(gens), order, std::move(tags)});
  };

  add("C1", 1, {"()"}, 1, {"abelian"});
  for (std::size_t n = 2; n <= 32; ++n)
    add("C" + std::to_string(n), n, {cycle_text(1, n)}, n, {"abelian", "cyclic"});

  for (std::size_t n = 3; n <= 16; ++n) {
    std::string refl;
    for (std::size_t i = 1; i < n + 1 - i; ++i)
      refl += "(" + std::to_string(i) + " " + std::to_string(n + 1 - i) + ")";
    add("D" + std::to_string(2 * n), n, {cycle_text(1, n), refl}, 2 * n, {"dihedral"});
  }

  for (std::size_t p : {2, 3, 5})
    for (std::size_t k = 2; k <= 3; ++k) {
      std::vector<std::string> gens;
      for (std::size_t i = 0; i < k; ++i)
        gens.push_back(cycle_text(i * p + 1, i * p + p));
      std::uint64_t order = 1;
      for (std::size_t i = 0; i < k; ++i)
        order *= p;
      add("C" + std::to_string(p) + "^" + std::to_string(k), p * k, gens, order,
          {"abelian", "elementary-abelian"});
    }

  std::uint64_t fact = 1;
  for (std::size_t n = 2; n <= 6; ++n) {
    fact *= n;
    add("S" + std::to_string(n), n, {cycle_text(1, n), "(1 2)"}, fact, {"symmetric"});
    if (n >= 3) {
      std::vector<std::string> gens;
      for (std::size_t i = 1; i + 2 <= n; ++i)
        gens.push_back(cycle_text(i, i + 2));
      std::vector<std::string> tags{"alternating"};
      if (n == 5)
        tags.insert(tags.end(), {"simple", "remark-R2"});
      if (n == 6)
        tags.push_back("simple");
      add("A" + std::to_string(n), n, gens, fact / 2, tags);
    }
  }

  add("Q8", 8, {"(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)"}, 8, {"p-group"});
  add("C2xC4", 6, {"(1 2)", "(3 4 5 6)"}, 8, {"abelian"});
  add("SL23", 8, {"(3 4 5)(6 8 7)", "(1 3 2 6)(4 5 8 7)"}, 24, {"soluble"});
  add("GL23", 8, {"(3 4 5)(6 8 7)", "(1 3 2 6)(4 5 8 7)", "(3 6)(4 7)(5 8)"}, 48, {"soluble"});
  add("PSL27", 7, {"(1 2 3 4 5 6 7)", "(2 3)(4 7)"}, 168, {"simple", "remark-R1"});
  add("AGL18", 8, {"(1 2)(3 4)(5 6)(7 8)", "(2 3 5 4 7 8 6)"}, 56, {"soluble"});
  add("F21", 7, {cycle_text(1, 7), detail::affine_multiplier(7, 2)}, 21, {"soluble"});
  add("F42", 7, {cycle_text(1, 7), detail::affine_multiplier(7, 3)}, 42, {"soluble"});
  add("F20", 5, {cycle_text(1, 5), detail::affine_multiplier(5, 2)}, 20, {"soluble"});
  add("F55", 11, {cycle_text(1, 11), detail::affine_multiplier(11, 3)}, 55, {"soluble"});
  add("F39", 13, {cycle_text(1, 13), detail::affine_multiplier(13, 3)}, 39, {"soluble"});
  add("Dic3", 7, {"(1 2 3)", "(1 2)(4 5 6 7)"}, 12, {"soluble"});
  add("C3xS3", 6, {"(1 2 3)", "(4 5 6)", "(4 5)"}, 18, {"soluble"});
  add("S3xS3", 6, {"(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)"}, 36, {"soluble"});
  add("C2xA4", 6, {"(1 2 3)", "(2 3 4)", "(5 6)"}, 24, {"soluble"});
  add("C2xS4", 6, {"(1 2 3 4)", "(1 2)", "(5 6)"}, 48, {"soluble"});
  return c;
}

inline std::optional<CorpusEntry> find_entry(const std::vector<CorpusEntry> &corpus,
                                             std::string_view name) {
  for (const auto &e : corpus)
    if (e.name == name)
      return e;
  return std::nullopt;
}

} // namespace ppi
