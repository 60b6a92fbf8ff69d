#pragma once

// Brute-force enumerators.  They share no code with the generating functions
// and serve as ground truth for them.
//
// Non-primitive families are produced from primitive supports: the support is
// found by a pruned search over 0/1 fillings, then every composition of the
// target total into the support cells gives one matrix.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "poset.hpp"

namespace fishburn {

inline constexpr unsigned kOracleMaxDim = 6;
inline constexpr unsigned kOracleMaxSize = 8;
inline constexpr unsigned kOracleMaxPosetSize = 6;

using MatrixVisitor = std::function<void(const TriMatrix&)>;

namespace detail {

struct Cell {
  unsigned i, j;
};

inline std::vector<Cell> triangle_cells(unsigned k) {
  std::vector<Cell> cells;
  for (unsigned i = 1; i <= k; ++i)
    for (unsigned j = i; j <= k; ++j) cells.push_back({i, j});
  return cells;
}

// Calls `emit` with every assignment of positive integers to `slots` cells
// whose sum is exactly `total`.
inline void compositions(unsigned slots, unsigned total, std::vector<unsigned>& parts,
                         const std::function<void(const std::vector<unsigned>&)>& emit) {
  if (parts.size() == slots) {
    if (total == 0) emit(parts);
    return;
  }
  unsigned left = slots - static_cast<unsigned>(parts.size()) - 1;  // cells after this one
  if (total < left + 1) return;
  for (unsigned v = 1; v + left <= total; ++v) {
    parts.push_back(v);
    compositions(slots, total - v, parts, emit);
    parts.pop_back();
  }
}

// Multiplicities for a 0/1 support of `k` x `k` cells, summing to `total`.
inline void fill_support(unsigned k, const std::vector<Cell>& support, unsigned total, const MatrixVisitor& visit) {
  std::vector<unsigned> parts;
  compositions(static_cast<unsigned>(support.size()), total, parts, [&](const std::vector<unsigned>& p) {
    std::vector<std::vector<TriMatrix::Cell>> rows(k, std::vector<TriMatrix::Cell>(k, 0));
    for (std::size_t c = 0; c < support.size(); ++c) rows[support[c].i - 1][support[c].j - 1] = p[c];
    visit(TriMatrix::from_rows(rows));
  });
}

// Row-major search for 0/1 supports of a k x k upper triangle with at most
// `max_cells` ones, every row nonzero and, if `columns`, every column nonzero.
inline void supports(unsigned k, unsigned max_cells, bool columns,
                     const std::function<void(const std::vector<Cell>&)>& emit) {
  auto cells = triangle_cells(k);
  std::vector<Cell> chosen;
  std::vector<unsigned> row_count(k + 1, 0), col_count(k + 1, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos > 0) {
      const Cell& prev = cells[pos - 1];
      if (prev.j == k) {
        // row prev.i is complete; column prev.i saw its last cell at (i, i)
        if (row_count[prev.i] == 0) return;
        if (columns && col_count[prev.i] == 0) return;
        unsigned rows_left = k - prev.i;
        if (chosen.size() + rows_left > max_cells) return;
      }
    }
    if (pos == cells.size()) {
      emit(chosen);
      return;
    }
    const Cell& c = cells[pos];
    rec(pos + 1);
    if (chosen.size() < max_cells) {
      chosen.push_back(c);
      ++row_count[c.i];
      ++col_count[c.j];
      rec(pos + 1);
      --row_count[c.i];
      --col_count[c.j];
      chosen.pop_back();
    }
  };
  rec(0);
}

inline std::vector<TriMatrix> collect(const std::function<void(const MatrixVisitor&)>& gen) {
  std::vector<TriMatrix> out;
  gen([&](const TriMatrix& m) { out.push_back(m); });
  std::sort(out.begin(), out.end());
  return out;
}

inline void require_size(unsigned n, unsigned max, const char* what) {
  if (n < 1 || n > max) throw error(std::string(what) + " out of oracle range 1.." + std::to_string(max));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Fishburn matrices

/// Visits every k x k Fishburn matrix: all of them if primitive (by raw 0/1
/// search), otherwise those with cell sum at most `max_cell_sum`.
inline void for_each_fishburn_dim(unsigned k, bool primitive, std::optional<unsigned> max_cell_sum,
                                  const MatrixVisitor& visit) {
  detail::require_size(k, kOracleMaxDim, "dimension");
  if (primitive) {
    auto cells = detail::triangle_cells(k);
    std::uint64_t count = std::uint64_t(1) << cells.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      std::vector<TriMatrix::Cell> tri(cells.size());
      for (std::size_t c = 0; c < cells.size(); ++c) tri[c] = (mask >> c) & 1u;
      TriMatrix m = TriMatrix::from_triangle(k, std::move(tri));
      if (!is_fishburn(m)) continue;
      if (max_cell_sum && m.total() > *max_cell_sum) continue;
      visit(m);
    }
    return;
  }
  if (!max_cell_sum) throw error("non-primitive enumeration needs a cell-sum bound");
  detail::supports(k, *max_cell_sum, true, [&](const std::vector<detail::Cell>& s) {
    for (unsigned total = static_cast<unsigned>(s.size()); total <= *max_cell_sum; ++total)
      detail::fill_support(k, s, total, visit);
  });
}

inline std::vector<TriMatrix> enum_fishburn_dim(unsigned k, bool primitive,
                                                std::optional<unsigned> max_cell_sum = std::nullopt) {
  return detail::collect([&](const MatrixVisitor& v) { for_each_fishburn_dim(k, primitive, max_cell_sum, v); });
}

/// Visits every Fishburn matrix (any dimension) with cell sum exactly n.
inline void for_each_fishburn_by_size(unsigned n, bool primitive, const MatrixVisitor& visit) {
  detail::require_size(n, kOracleMaxSize, "size");
  for (unsigned k = 1; k <= n; ++k) {
    detail::supports(k, n, true, [&](const std::vector<detail::Cell>& s) {
      if (primitive) {
        if (s.size() == n) detail::fill_support(k, s, n, visit);
      } else {
        detail::fill_support(k, s, n, visit);
      }
    });
  }
}

inline std::vector<TriMatrix> enum_fishburn_by_size(unsigned n, bool primitive) {
  return detail::collect([&](const MatrixVisitor& v) { for_each_fishburn_by_size(n, primitive, v); });
}

// ---------------------------------------------------------------------------
// Row-Fishburn matrices

inline void for_each_row_fishburn_by_size(unsigned n, bool primitive, const MatrixVisitor& visit) {
  detail::require_size(n, kOracleMaxSize, "size");
  for (unsigned k = 1; k <= n; ++k) {
    detail::supports(k, n, false, [&](const std::vector<detail::Cell>& s) {
      if (!primitive || s.size() == n) detail::fill_support(k, s, n, visit);
    });
  }
}

inline std::vector<TriMatrix> enum_row_fishburn_by_size(unsigned n, bool primitive) {
  return detail::collect([&](const MatrixVisitor& v) { for_each_row_fishburn_by_size(n, primitive, v); });
}

// ---------------------------------------------------------------------------
// Self-dual Fishburn matrices

enum class SelfDualGrading { by_size, by_reduced_size, by_dim };

namespace detail {

// A cell (i, j) with i + j >= k + 1 on or below the anti-diagonal side is
// described by the rows it makes nonzero in the full self-dual matrix: row
// i directly and row k + 1 - j through its mirror image.  With a = k + 1 - j
// and b = i we get a <= b and a + b <= k + 1; a == b is an anti-diagonal cell.
struct HalfCell {
  unsigned a, b;
  unsigned i(unsigned) const { return b; }
  unsigned j(unsigned k) const { return k + 1 - a; }
};

inline std::vector<HalfCell> half_cells(unsigned k) {
  std::vector<HalfCell> out;
  for (unsigned a = 1; a <= k; ++a)
    for (unsigned b = a; a + b <= k + 1; ++b) out.push_back({a, b});
  return out;
}

inline TriMatrix mirror_fill(unsigned k, const std::vector<HalfCell>& support, const std::vector<unsigned>& vals) {
  std::vector<std::vector<TriMatrix::Cell>> rows(k, std::vector<TriMatrix::Cell>(k, 0));
  for (std::size_t c = 0; c < support.size(); ++c) {
    unsigned i = support[c].i(k), j = support[c].j(k);
    rows[i - 1][j - 1] = vals[c];
    rows[k - j][k - i] = vals[c];
  }
  return TriMatrix::from_rows(rows);
}

// Self-dual Fishburn matrices of dimension k whose diagonal and south-east
// cells sum to n.  Rows are covered in order of their smaller index a; a row
// not yet covered when its group is passed can never be covered.
inline void self_dual_reduced(unsigned k, unsigned n, bool primitive, const MatrixVisitor& visit) {
  auto cells = half_cells(k);
  std::vector<HalfCell> chosen;
  std::vector<unsigned> cover(k + 1, 0);
  auto uncovered_from = [&](unsigned first) {
    unsigned u = 0;
    for (unsigned r = first; r <= k; ++r) u += cover[r] == 0;
    return u;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos > 0 && (pos == cells.size() || cells[pos].a != cells[pos - 1].a)) {
      unsigned done = cells[pos - 1].a;
      if (cover[done] == 0) return;
    }
    unsigned next_a = pos == cells.size() ? k + 1 : cells[pos].a;
    // every remaining cell covers at most two rows
    unsigned need = (uncovered_from(next_a) + 1) / 2;
    if (chosen.size() + need > n) return;
    if (pos == cells.size()) {
      if (uncovered_from(1) != 0) return;
      std::vector<unsigned> parts;
      if (primitive) {
        if (chosen.size() == n) visit(mirror_fill(k, chosen, std::vector<unsigned>(n, 1)));
        return;
      }
      compositions(static_cast<unsigned>(chosen.size()), n, parts,
                   [&](const std::vector<unsigned>& p) { visit(mirror_fill(k, chosen, p)); });
      return;
    }
    rec(pos + 1);
    if (chosen.size() < n) {
      const HalfCell& c = cells[pos];
      chosen.push_back(c);
      ++cover[c.a];
      ++cover[c.b];
      rec(pos + 1);
      --cover[c.a];
      --cover[c.b];
      chosen.pop_back();
    }
  };
  rec(0);
}

}  // namespace detail

/// by_size: cell sum n (n <= 8); by_reduced_size: rs = n (n <= 8), built from
/// diagonal and south-east fillings only; by_dim: k = n (n <= 6), primitive or
/// with cell sum at most `max_cell_sum`.
inline void for_each_self_dual(SelfDualGrading grading, unsigned n, bool primitive, const MatrixVisitor& visit,
                               std::optional<unsigned> max_cell_sum = std::nullopt) {
  switch (grading) {
    case SelfDualGrading::by_size:
      for_each_fishburn_by_size(n, primitive, [&](const TriMatrix& m) {
        if (is_self_dual(m)) visit(m);
      });
      return;
    case SelfDualGrading::by_dim:
      for_each_fishburn_dim(n, primitive, max_cell_sum, [&](const TriMatrix& m) {
        if (is_self_dual(m)) visit(m);
      });
      return;
    case SelfDualGrading::by_reduced_size:
      detail::require_size(n, kOracleMaxSize, "reduced size");
      for (unsigned k = 1; k <= 2 * n; ++k) detail::self_dual_reduced(k, n, primitive, visit);
      return;
  }
}

inline std::vector<TriMatrix> enum_selfdual(SelfDualGrading grading, unsigned n, bool primitive,
                                            std::optional<unsigned> max_cell_sum = std::nullopt) {
  return detail::collect(
      [&](const MatrixVisitor& v) { for_each_self_dual(grading, n, primitive, v, max_cell_sum); });
}

// ---------------------------------------------------------------------------
// Interval orders as posets

/// One representative per isomorphism class of interval orders on n elements,
/// from all naturally labeled strict orders (a < b only if a precedes b).
inline std::vector<Poset> enum_interval_order_posets(unsigned n) {
  detail::require_size(n, kOracleMaxPosetSize, "poset size");
  std::vector<std::pair<unsigned, unsigned>> slots;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::map<std::string, Poset> seen;
  std::uint64_t count = std::uint64_t(1) << slots.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1u) rel[slots[s].first][slots[s].second] = true;
    bool transitive = true;
    for (unsigned a = 0; a < n && transitive; ++a)
      for (unsigned b = a + 1; b < n && transitive; ++b)
        if (rel[a][b])
          for (unsigned c = b + 1; c < n; ++c)
            if (rel[b][c] && !rel[a][c]) {
              transitive = false;
              break;
            }
    if (!transitive) continue;
    Poset p = Poset::from_table(std::move(rel));
    if (!is_two_plus_two_free(p)) continue;
    seen.try_emplace(canonical_form(p), p);
  }
  std::vector<Poset> out;
  for (auto& [key, p] : seen) out.push_back(std::move(p));
  return out;
}

/// Canonical keys of the interval orders on n elements, sorted.
inline std::vector<std::string> enum_interval_orders(unsigned n) {
  std::vector<std::string> keys;
  for (const auto& p : enum_interval_order_posets(n)) keys.push_back(canonical_form(p));
  return keys;
}

}  // namespace fishburn
