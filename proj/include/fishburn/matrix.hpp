#pragma once

// Upper-triangular nonnegative integer matrices: Fishburn / row-Fishburn
// predicates, anti-diagonal duality and the cell-sum statistics.
//
// Rows and columns are 1-based in the public API, matching the usual
// convention M(i, j) with rows numbered top to bottom.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "series.hpp"

namespace fishburn {

struct StatVector {
  unsigned mag = 0;
  std::uint64_t iso = 0, min = 0, max = 0, inner = 0;  // inner = "int"
  std::uint64_t se = 0, nw = 0, dg = 0, rs = 0;

  std::uint64_t size() const { return iso + min + max + inner; }

  friend bool operator==(const StatVector&, const StatVector&) = default;
  friend auto operator<=>(const StatVector&, const StatVector&) = default;
};

class TriMatrix {
 public:
  using Cell = std::uint32_t;

  /// k x k zero matrix.
  explicit TriMatrix(unsigned k) : k_(k), cells_(std::size_t(k) * (k + 1) / 2, 0) {
    if (k == 0) throw error("matrix dimension must be positive");
  }

  /// From full rows; entries below the diagonal must be zero.
  static TriMatrix from_rows(const std::vector<std::vector<Cell>>& rows) {
    unsigned k = static_cast<unsigned>(rows.size());
    TriMatrix m(k);
    for (unsigned i = 1; i <= k; ++i) {
      if (rows[i - 1].size() != k) throw error("matrix rows must have length k");
      for (unsigned j = 1; j <= k; ++j) {
        Cell c = rows[i - 1][j - 1];
        if (i > j && c != 0) throw error("matrix is not upper-triangular");
        if (i <= j) m.cells_[m.index(i, j)] = c;
      }
    }
    return m;
  }

  /// From the flattened triangle in row-major order (row 1: (1,1)..(1,k), ...).
  static TriMatrix from_triangle(unsigned k, std::vector<Cell> cells) {
    TriMatrix m(k);
    if (cells.size() != m.cells_.size()) throw error("triangle has wrong length");
    m.cells_ = std::move(cells);
    return m;
  }

  unsigned dim() const { return k_; }

  Cell operator()(unsigned i, unsigned j) const {
    if (i < 1 || j < 1 || i > k_ || j > k_) throw error("cell index out of range");
    return i > j ? 0 : cells_[index(i, j)];
  }

  const std::vector<Cell>& triangle() const { return cells_; }

  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (Cell c : cells_) s += c;
    return s;
  }

  TriMatrix with(unsigned i, unsigned j, Cell value) const {
    if (i > j) throw error("matrix is not upper-triangular");
    TriMatrix m = *this;
    m.cells_[index(i, j)] = value;
    return m;
  }

  friend bool operator==(const TriMatrix&, const TriMatrix&) = default;
  // Dimension first, then the flattened triangle lexicographically.
  friend bool operator<(const TriMatrix& a, const TriMatrix& b) {
    if (a.k_ != b.k_) return a.k_ < b.k_;
    return a.cells_ < b.cells_;
  }

 private:
  std::size_t index(unsigned i, unsigned j) const {
    // rows 1..i-1 hold k + (k-1) + ... cells
    std::size_t before = std::size_t(i - 1) * k_ - std::size_t(i - 1) * (i - 2) / 2;
    return before + (j - i);
  }

  unsigned k_;
  std::vector<Cell> cells_;
};

inline bool row_nonzero(const TriMatrix& m, unsigned i) {
  for (unsigned j = i; j <= m.dim(); ++j)
    if (m(i, j) != 0) return true;
  return false;
}

inline bool column_nonzero(const TriMatrix& m, unsigned j) {
  for (unsigned i = 1; i <= j; ++i)
    if (m(i, j) != 0) return true;
  return false;
}

inline bool is_row_fishburn(const TriMatrix& m) {
  for (unsigned i = 1; i <= m.dim(); ++i)
    if (!row_nonzero(m, i)) return false;
  return true;
}

inline bool is_fishburn(const TriMatrix& m) {
  if (!is_row_fishburn(m)) return false;
  for (unsigned j = 1; j <= m.dim(); ++j)
    if (!column_nonzero(m, j)) return false;
  return true;
}

inline bool is_primitive(const TriMatrix& m) {
  for (auto c : m.triangle())
    if (c > 1) return false;
  return true;
}

/// Transposition along the anti-diagonal: N(i, j) = M(k-j+1, k-i+1).
inline TriMatrix dual(const TriMatrix& m) {
  unsigned k = m.dim();
  TriMatrix out(k);
  for (unsigned i = 1; i <= k; ++i)
    for (unsigned j = i; j <= k; ++j) out = out.with(i, j, m(k - j + 1, k - i + 1));
  return out;
}

inline bool is_self_dual(const TriMatrix& m) { return dual(m) == m; }

inline StatVector stats(const TriMatrix& m) {
  unsigned k = m.dim();
  StatVector s;
  s.mag = k;
  s.iso = m(1, k);
  for (unsigned i = 1; i <= k; ++i) {
    for (unsigned j = i; j <= k; ++j) {
      std::uint64_t c = m(i, j);
      if (c == 0 || (i == 1 && j == k)) continue;
      if (i == 1)
        s.min += c;
      else if (j == k)
        s.max += c;
      else
        s.inner += c;
      if (i + j == k + 1)
        s.dg += c;
      else if (i + j > k + 1 && j < k)
        s.se += c;
      else if (i + j < k + 1 && i > 1)
        s.nw += c;
    }
  }
  s.rs = s.dg + s.se + s.max + s.iso;
  return s;
}

/// Text form: k, then k lines of the full square with zeros below the diagonal.
inline std::string to_text(const TriMatrix& m) {
  std::ostringstream os;
  os << m.dim() << '\n';
  for (unsigned i = 1; i <= m.dim(); ++i) {
    for (unsigned j = 1; j <= m.dim(); ++j) os << (j > 1 ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

inline TriMatrix matrix_from_text(std::istream& in) {
  unsigned k = 0;
  if (!(in >> k) || k == 0) throw error("malformed matrix text");
  std::vector<std::vector<TriMatrix::Cell>> rows(k, std::vector<TriMatrix::Cell>(k));
  for (auto& row : rows)
    for (auto& c : row)
      if (!(in >> c)) throw error("malformed matrix text");
  return TriMatrix::from_rows(rows);
}

inline nlohmann::json to_json(const TriMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (unsigned i = 1; i <= m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (unsigned j = 1; j <= m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return {{"dim", m.dim()}, {"rows", rows}};
}

inline TriMatrix matrix_from_json(const nlohmann::json& j) {
  auto rows = j.at("rows").get<std::vector<std::vector<TriMatrix::Cell>>>();
  if (rows.size() != j.at("dim").get<unsigned>()) throw error("dim does not match rows");
  return TriMatrix::from_rows(rows);
}

inline nlohmann::json to_json(const StatVector& s) {
  return {{"mag", s.mag}, {"iso", s.iso}, {"min", s.min}, {"max", s.max}, {"int", s.inner},
          {"se", s.se},   {"nw", s.nw},   {"dg", s.dg},   {"rs", s.rs}};
}

}  // namespace fishburn
