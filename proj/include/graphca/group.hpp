#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphca/error.hpp"
#include "graphca/graph.hpp"

namespace graphca {

inline constexpr std::size_t max_group_order = 64;

/// Finite group given by its multiplication table: table[a][b] = a*b.
class FiniteGroup {
 public:
  using Element = std::size_t;

  /// Validates the table (Latin square, identity, inverses, associativity)
  /// and throws NotAGroup otherwise. Empty `names` means "0", "1", ...
  static FiniteGroup from_table(std::vector<std::vector<Element>> table,
                                std::vector<std::string> names = {}) {
    const std::size_t m = table.size();
    if (m == 0) fail(ErrorCode::NotAGroup, "empty multiplication table");
    if (m > max_group_order)
      fail(ErrorCode::SizeLimitExceeded, "group order " + std::to_string(m) + " exceeds " +
                                             std::to_string(max_group_order));
    for (const auto& row : table) {
      if (row.size() != m) fail(ErrorCode::NotAGroup, "multiplication table is not square");
      std::vector<char> seen(m, 0);
      for (Element x : row) {
        if (x >= m) fail(ErrorCode::NotAGroup, "table entry " + std::to_string(x) + " out of range");
        if (seen[x]++) fail(ErrorCode::NotAGroup, "table is not a Latin square");
      }
    }
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<char> seen(m, 0);
      for (std::size_t r = 0; r < m; ++r)
        if (seen[table[r][c]]++) fail(ErrorCode::NotAGroup, "table is not a Latin square");
    }

    FiniteGroup grp;
    grp.table_ = std::move(table);
    bool found = false;
    for (Element e = 0; e < m && !found; ++e) {
      bool ok = true;
      for (Element x = 0; x < m && ok; ++x) ok = grp.table_[e][x] == x && grp.table_[x][e] == x;
      if (ok) {
        grp.identity_ = e;
        found = true;
      }
    }
    if (!found) fail(ErrorCode::NotAGroup, "no identity element");
    grp.inverse_.assign(m, m);
    for (Element x = 0; x < m; ++x)
      for (Element y = 0; y < m; ++y)
        if (grp.table_[x][y] == grp.identity_ && grp.table_[y][x] == grp.identity_) grp.inverse_[x] = y;
    for (Element x = 0; x < m; ++x)
      if (grp.inverse_[x] == m) fail(ErrorCode::NotAGroup, "element " + std::to_string(x) + " has no inverse");
    for (Element a = 0; a < m; ++a)
      for (Element b = 0; b < m; ++b)
        for (Element c = 0; c < m; ++c)
          if (grp.table_[grp.table_[a][b]][c] != grp.table_[a][grp.table_[b][c]])
            fail(ErrorCode::NotAGroup, "multiplication is not associative");

    if (names.empty()) {
      for (std::size_t i = 0; i < m; ++i) names.push_back(std::to_string(i));
    } else if (names.size() != m) {
      fail(ErrorCode::NotAGroup, "element name count does not match group order");
    }
    if (std::set<std::string>(names.begin(), names.end()).size() != m)
      fail(ErrorCode::NotAGroup, "element names are not distinct");
    grp.names_ = std::move(names);
    return grp;
  }

  std::size_t order() const noexcept { return table_.size(); }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const { return table_.at(a).at(b); }
  Element inverse(Element a) const { return inverse_.at(a); }
  const std::vector<std::vector<Element>>& table() const noexcept { return table_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Element a) const { return names_.at(a); }

  std::optional<Element> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  std::size_t element_order(Element a) const {
    std::size_t k = 1;
    for (Element x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (Element a = 0; a < order(); ++a)
      for (Element b = 0; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

 private:
  std::vector<std::vector<Element>> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::vector<std::string> names_;
};

// Built-in groups. Element orders:
//   cyclic m        k -> "k"
//   dihedral 2m     b^j -> j, a b^j -> m + j; names "1","b","b^2",...,"a","ab",...
//   quaternion8     "1","-1","i","-i","j","-j","k","-k"
//   symmetric m     permutations of {1..m} in lexicographic one-line order,
//                   named in cycle notation without separators, e.g.
//                   "(12)(34)"; product is composition, right factor
//                   applied first.

inline FiniteGroup cyclic_group(std::size_t m) {
  if (m == 0) fail(ErrorCode::NotAGroup, "cyclic group needs positive order");
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  return FiniteGroup::from_table(std::move(t));
}

/// Dihedral group of the given order 2m, <a, b | a^2 = b^m = 1, aba = b^-1>.
inline FiniteGroup dihedral_group(std::size_t order) {
  if (order < 2 || order % 2 != 0) fail(ErrorCode::NotAGroup, "dihedral group order must be even and >= 2");
  const std::size_t m = order / 2;
  auto encode = [m](std::size_t x, std::size_t y) { return x * m + y % m; };
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  for (std::size_t p = 0; p < order; ++p)
    for (std::size_t q = 0; q < order; ++q) {
      const std::size_t x = p / m, y = p % m, z = q / m, w = q % m;
      const std::size_t twisted = z == 1 ? (m - y) % m : y;
      t[p][q] = encode((x + z) % 2, twisted + w);
    }
  std::vector<std::string> names;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      std::string s = x ? "a" : "";
      if (y == 1) s += "b";
      if (y > 1) s += "b^" + std::to_string(y);
      names.push_back(s.empty() ? "1" : s);
    }
  return FiniteGroup::from_table(std::move(t), std::move(names));
}

inline FiniteGroup quaternion_group() {
  // Units 1,i,j,k as 0..3; unit_mul[a][b] = {sign, unit}.
  constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  constexpr std::size_t unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t p = 0; p < 8; ++p)
    for (std::size_t q = 0; q < 8; ++q) {
      const std::size_t a = p / 2, b = q / 2;
      const bool negative = ((p % 2) ^ (q % 2) ^ (sign[a][b] < 0 ? 1 : 0)) != 0;
      t[p][q] = unit[a][b] * 2 + (negative ? 1 : 0);
    }
  return FiniteGroup::from_table(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

namespace detail {

inline std::vector<std::vector<std::size_t>> permutations_of(std::size_t m) {
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<std::vector<std::size_t>> cycles_of(const std::vector<std::size_t>& perm) {
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      cycle.push_back(j);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace detail

inline FiniteGroup symmetric_group(std::size_t m) {
  if (m == 0 || m > 4) fail(ErrorCode::SizeLimitExceeded, "symmetric group supported for 1 <= m <= 4");
  const auto perms = detail::permutations_of(m);
  auto index_of = [&](const std::vector<std::size_t>& p) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<std::vector<std::size_t>> t(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<std::size_t> c(m);
      for (std::size_t i = 0; i < m; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = index_of(c);
    }
  std::vector<std::string> names;
  for (const auto& p : perms) {
    std::string s;
    for (const auto& cycle : detail::cycles_of(p)) {
      s += "(";
      for (auto point : cycle) s += std::to_string(point + 1);
      s += ")";
    }
    names.push_back(s.empty() ? "()" : s);
  }
  return FiniteGroup::from_table(std::move(t), std::move(names));
}

/// Elements of symmetric_group(m) that are a single cycle of even length.
/// These are odd permutations; the set is inverse-closed and a union of
/// conjugacy classes.
inline std::vector<std::size_t> even_cycle_set(std::size_t m) {
  if (m == 0 || m > 4) fail(ErrorCode::SizeLimitExceeded, "symmetric group supported for 1 <= m <= 4");
  const auto perms = detail::permutations_of(m);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    const auto cycles = detail::cycles_of(perms[i]);
    if (cycles.size() == 1 && cycles.front().size() % 2 == 0) out.push_back(i);
  }
  return out;
}

/// Parses "cyclic:m", "dihedral:2m", "quaternion8" or "symmetric:m".
inline FiniteGroup build_group(std::string_view spec) {
  auto arg = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (spec.substr(0, prefix.size()) != prefix) return std::nullopt;
    const std::string digits(spec.substr(prefix.size()));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorCode::NotAGroup, "bad group parameter in '" + std::string(spec) + "'");
    return std::stoul(digits);
  };
  if (spec == "quaternion8" || spec == "Q8") return quaternion_group();
  if (auto m = arg("cyclic:")) return cyclic_group(*m);
  if (auto m = arg("dihedral:")) return dihedral_group(*m);
  if (auto m = arg("symmetric:")) return symmetric_group(*m);
  fail(ErrorCode::NotAGroup, "unknown group '" + std::string(spec) + "'");
}

/// Connection set as a sorted list of distinct element indices.
class ConnectionSet {
 public:
  ConnectionSet() = default;
  ConnectionSet(const FiniteGroup& grp, std::vector<std::size_t> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (auto s : elements) {
      if (s >= grp.order())
        fail(ErrorCode::InvalidConnectionSet, "element index " + std::to_string(s) + " out of range");
      if (s == grp.identity()) fail(ErrorCode::InvalidConnectionSet, "identity belongs to the connection set");
    }
    elements_ = std::move(elements);
  }

  const std::vector<std::size_t>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(std::size_t x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

 private:
  std::vector<std::size_t> elements_;
};

using Witness = std::pair<std::size_t, std::size_t>;

struct ConnectionSetReport {
  bool inverse_closed = false;
  bool generates = false;
  bool conjugation_closed = false;
  /// First (s1, s2), s1 != s2, with s1 s2 in S.
  std::optional<Witness> pair_s1s2;
  /// First (s1, s2), s1 != s2, with both s1 s2 and s1 s2^-1 in S.
  std::optional<Witness> pair_s1s2_and_s1s2inv;
};

inline bool generates(const FiniteGroup& grp, const ConnectionSet& s) {
  std::vector<char> seen(grp.order(), 0);
  std::deque<std::size_t> queue{grp.identity()};
  seen[grp.identity()] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto g : s.elements()) {
      const auto y = grp.mul(g, x);
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        queue.push_back(y);
      }
    }
  }
  return reached == grp.order();
}

/// Evaluates the conditions used by the Cayley constructions. Witness
/// pairs are the first found scanning s1 then s2 in index order.
inline ConnectionSetReport check_connection_set(const FiniteGroup& grp, const ConnectionSet& s) {
  ConnectionSetReport r;
  r.inverse_closed = std::all_of(s.elements().begin(), s.elements().end(),
                                 [&](auto x) { return s.contains(grp.inverse(x)); });
  r.generates = generates(grp, s);
  r.conjugation_closed = true;
  for (auto a : s.elements())
    for (auto b : s.elements())
      if (!s.contains(grp.mul(grp.mul(a, b), grp.inverse(a)))) r.conjugation_closed = false;
  for (auto s1 : s.elements())
    for (auto s2 : s.elements()) {
      if (s1 == s2 || !s.contains(grp.mul(s1, s2))) continue;
      if (!r.pair_s1s2) r.pair_s1s2 = Witness{s1, s2};
      if (!r.pair_s1s2_and_s1s2inv && s.contains(grp.mul(s1, grp.inverse(s2))))
        r.pair_s1s2_and_s1s2inv = Witness{s1, s2};
    }
  return r;
}

/// Cay(H, S): x ~ s x for every s in S. S must be inverse-closed.
inline Graph cayley_graph(const FiniteGroup& grp, const ConnectionSet& s) {
  for (auto x : s.elements())
    if (!s.contains(grp.inverse(x)))
      fail(ErrorCode::InvalidConnectionSet, "connection set is not inverse-closed: " + grp.name(x) +
                                                " present but its inverse is not");
  Graph g(grp.order());
  for (std::size_t x = 0; x < grp.order(); ++x)
    for (auto sx : s.elements()) g.add_edge(static_cast<Vertex>(x), static_cast<Vertex>(grp.mul(sx, x)));
  g.set_labels(grp.names());
  return g;
}

/// h -> s h as a vertex map of the Cayley graph.
inline std::vector<Vertex> left_translation(const FiniteGroup& grp, std::size_t s) {
  std::vector<Vertex> map(grp.order());
  for (std::size_t h = 0; h < grp.order(); ++h) map[h] = static_cast<Vertex>(grp.mul(s, h));
  return map;
}

}  // namespace graphca
