#pragma once

// Finite strict posets, interval-order levels and the correspondence with
// Fishburn matrices.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "matrix.hpp"

namespace fishburn {

class Poset {
 public:
  Poset() = default;

  /// Builds the poset from strict-order pairs (a, b) meaning a < b; the
  /// transitive closure is taken.  Cycles are rejected.
  static Poset from_relations(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& pairs) {
    Poset p(n);
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) throw error("relation element out of range");
      p.rel_[a][b] = true;
    }
    for (unsigned k = 0; k < n; ++k)
      for (unsigned i = 0; i < n; ++i)
        if (p.rel_[i][k])
          for (unsigned j = 0; j < n; ++j)
            if (p.rel_[k][j]) p.rel_[i][j] = true;
    for (unsigned i = 0; i < n; ++i)
      if (p.rel_[i][i]) throw error("relation is not a strict order");
    return p;
  }

  /// Takes an explicit relation table; it must already be a strict order.
  static Poset from_table(std::vector<std::vector<bool>> rel) {
    Poset p(static_cast<unsigned>(rel.size()));
    for (const auto& row : rel)
      if (row.size() != rel.size()) throw error("relation table must be square");
    p.rel_ = std::move(rel);
    if (!p.is_strict_order()) throw error("relation is not a strict order");
    return p;
  }

  static Poset chain(unsigned n) {
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return from_relations(n, pairs);
  }
  static Poset antichain(unsigned n) { return Poset(n); }

  unsigned size() const { return n_; }
  bool less(unsigned a, unsigned b) const { return rel_[a][b]; }
  bool comparable(unsigned a, unsigned b) const { return rel_[a][b] || rel_[b][a]; }

  std::vector<unsigned> down_set(unsigned e) const {
    std::vector<unsigned> out;
    for (unsigned a = 0; a < n_; ++a)
      if (rel_[a][e]) out.push_back(a);
    return out;
  }
  std::vector<unsigned> up_set(unsigned e) const {
    std::vector<unsigned> out;
    for (unsigned b = 0; b < n_; ++b)
      if (rel_[e][b]) out.push_back(b);
    return out;
  }

  std::vector<std::pair<unsigned, unsigned>> relations() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned a = 0; a < n_; ++a)
      for (unsigned b = 0; b < n_; ++b)
        if (rel_[a][b]) out.emplace_back(a, b);
    return out;
  }

  bool is_strict_order() const {
    for (unsigned a = 0; a < n_; ++a) {
      if (rel_[a][a]) return false;
      for (unsigned b = 0; b < n_; ++b) {
        if (!rel_[a][b]) continue;
        if (rel_[b][a]) return false;
        for (unsigned c = 0; c < n_; ++c)
          if (rel_[b][c] && !rel_[a][c]) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  explicit Poset(unsigned n) : n_(n), rel_(n, std::vector<bool>(n, false)) {}

  unsigned n_ = 0;
  std::vector<std::vector<bool>> rel_;
};

inline bool is_two_plus_two_free(const Poset& p) {
  unsigned n = p.size();
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      if (!p.less(a, b)) continue;
      for (unsigned c = 0; c < n; ++c)
        for (unsigned d = 0; d < n; ++d) {
          if (!p.less(c, d)) continue;
          if (c == a || c == b || d == a || d == b) continue;
          if (!p.comparable(a, c) && !p.comparable(a, d) && !p.comparable(b, c) && !p.comparable(b, d))
            return false;
        }
    }
  return true;
}

struct LevelAssignment {
  unsigned magnitude = 0;
  std::vector<unsigned> level;    // 1-based, per element
  std::vector<unsigned> uplevel;  // 1-based, per element
};

namespace detail {

// Ranks the distinct sets in `sets` along an inclusion chain, smallest first.
// Returns the 1-based rank of each element's set.
inline std::vector<unsigned> chain_ranks(const std::vector<std::vector<unsigned>>& sets, unsigned& distinct) {
  std::vector<std::vector<unsigned>> uniq = sets;
  std::sort(uniq.begin(), uniq.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  for (std::size_t i = 1; i < uniq.size(); ++i) {
    if (!std::includes(uniq[i].begin(), uniq[i].end(), uniq[i - 1].begin(), uniq[i - 1].end()))
      throw error("down-sets not a chain");
  }
  distinct = static_cast<unsigned>(uniq.size());
  std::vector<unsigned> rank;
  for (const auto& s : sets)
    rank.push_back(static_cast<unsigned>(std::find(uniq.begin(), uniq.end(), s) - uniq.begin()) + 1);
  return rank;
}

}  // namespace detail

inline LevelAssignment level_assignment(const Poset& p) {
  std::vector<std::vector<unsigned>> downs, ups;
  for (unsigned e = 0; e < p.size(); ++e) {
    downs.push_back(p.down_set(e));
    ups.push_back(p.up_set(e));
  }
  LevelAssignment out;
  unsigned m_down = 0, m_up = 0;
  out.level = detail::chain_ranks(downs, m_down);
  // Up-sets are ordered by reverse inclusion: the largest up-set is U_1.
  auto up_rank = detail::chain_ranks(ups, m_up);
  if (m_down != m_up) throw error("down-sets not a chain");
  out.magnitude = m_down;
  for (unsigned r : up_rank) out.uplevel.push_back(m_up + 1 - r);
  return out;
}

inline TriMatrix poset_to_matrix(const Poset& p) {
  if (p.size() == 0) throw error("empty poset");
  LevelAssignment la = level_assignment(p);
  std::vector<std::vector<TriMatrix::Cell>> rows(la.magnitude, std::vector<TriMatrix::Cell>(la.magnitude, 0));
  for (unsigned e = 0; e < p.size(); ++e) {
    if (la.uplevel[e] < la.level[e]) throw error("up-level below level");
    ++rows[la.level[e] - 1][la.uplevel[e] - 1];
  }
  return TriMatrix::from_rows(rows);
}

/// Elements are emitted in (i, j)-lexicographic order of their intervals [i, j].
inline Poset matrix_to_poset(const TriMatrix& m) {
  if (!is_fishburn(m)) throw error("matrix is not a Fishburn matrix");
  std::vector<std::pair<unsigned, unsigned>> intervals;
  for (unsigned i = 1; i <= m.dim(); ++i)
    for (unsigned j = i; j <= m.dim(); ++j)
      for (unsigned c = 0; c < m(i, j); ++c) intervals.emplace_back(i, j);
  unsigned n = static_cast<unsigned>(intervals.size());
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) rel[a][b] = intervals[a].second < intervals[b].first;
  return Poset::from_table(std::move(rel));
}

inline Poset dual_poset(const Poset& p) {
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (auto [a, b] : p.relations()) pairs.emplace_back(b, a);
  return Poset::from_relations(p.size(), pairs);
}

inline bool is_primitive_poset(const Poset& p) {
  for (unsigned a = 0; a < p.size(); ++a)
    for (unsigned b = a + 1; b < p.size(); ++b)
      if (p.down_set(a) == p.down_set(b) && p.up_set(a) == p.up_set(b)) return false;
  return true;
}

inline constexpr unsigned kCanonicalFormMaxSize = 8;

/// Isomorphism-invariant key: the lexicographically smallest row-major
/// relation table over all relabelings, prefixed by n.
inline std::string canonical_form(const Poset& p) {
  unsigned n = p.size();
  if (n > kCanonicalFormMaxSize) throw error("canonical_form supports at most 8 elements");
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::string best;
  std::string key(n * n, '0');
  do {
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b) key[a * n + b] = p.less(perm[a], perm[b]) ? '1' : '0';
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

inline nlohmann::json to_json(const Poset& p) {
  nlohmann::json rels = nlohmann::json::array();
  for (auto [a, b] : p.relations()) rels.push_back({a, b});
  return {{"n", p.size()}, {"relations", rels}};
}

inline Poset poset_from_json(const nlohmann::json& j) {
  auto pairs = j.at("relations").get<std::vector<std::pair<unsigned, unsigned>>>();
  return Poset::from_relations(j.at("n").get<unsigned>(), pairs);
}

}  // namespace fishburn
