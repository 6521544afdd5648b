#pragma once

// Exact rank computations over Q.
//
// Rows are kept as primitive integer vectors (content divided out, leading
// entry positive) and new rows are reduced by fraction-free elimination
// v <- p*v - a*row, so no rational arithmetic happens inside the loop.

#include <algorithm>
#include <cstddef>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hwv/rational.hpp"

namespace hwv {

using SparseIntRow = std::vector<std::pair<std::size_t, Integer>>;
using SparseRatRow = std::vector<std::pair<std::size_t, Rational>>;

/// Assigns consecutive column indices to arbitrary ordered keys.
template <class Key>
class Indexer {
 public:
  std::size_t operator()(const Key& key) {
    auto [it, inserted] = index_.try_emplace(key, index_.size());
    return it->second;
  }
  std::size_t size() const { return index_.size(); }

 private:
  std::map<Key, std::size_t> index_;
};

namespace detail {

inline void make_primitive(SparseIntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [col, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [col, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace detail

/// Sorts by column, merges duplicates and drops zeros.
inline SparseRatRow canonical_row(SparseRatRow row) {
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRatRow out;
  out.reserve(row.size());
  for (auto& [col, v] : row) {
    if (!out.empty() && out.back().first == col) {
      out.back().second += v;
    } else {
      out.emplace_back(col, std::move(v));
    }
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

/// Clears denominators of a canonical rational row.
inline SparseIntRow integer_row(const SparseRatRow& row) {
  Integer l = 1;
  for (const auto& [col, v] : row) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  SparseIntRow out;
  out.reserve(row.size());
  for (const auto& [col, v] : row) {
    Integer n = v.get_num() * (l / v.get_den());
    out.emplace_back(col, std::move(n));
  }
  return out;
}

/// Incrementally built row echelon form over Q.
class RowEchelon {
 public:
  /// Adds `row` (columns strictly increasing, no zero entries) and reports
  /// whether it was independent of the rows inserted so far.
  bool insert(SparseIntRow row) {
    std::size_t pos = 0;
    while (pos < row.size()) {
      auto it = pivot_row_.find(row[pos].first);
      if (it == pivot_row_.end()) {
        ++pos;
        continue;
      }
      const SparseIntRow& piv = rows_[it->second];
      const Integer a = row[pos].second;
      const Integer& p = piv.front().second;
      SparseIntRow merged;
      merged.reserve(row.size() + piv.size());
      // Columns before pos are untouched by the pivot row.
      for (std::size_t k = 0; k < pos; ++k) merged.emplace_back(row[k].first, p * row[k].second);
      std::size_t i = pos, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          merged.emplace_back(row[i].first, p * row[i].second);
          ++i;
        } else if (i == row.size() || piv[j].first < row[i].first) {
          merged.emplace_back(piv[j].first, -a * piv[j].second);
          ++j;
        } else {
          Integer v = p * row[i].second - a * piv[j].second;
          if (v != 0) merged.emplace_back(row[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      row = std::move(merged);
      detail::make_primitive(row);
      // Everything before pos is a non-pivot column, the entry at pos vanished.
    }
    if (row.empty()) return false;
    detail::make_primitive(row);
    pivot_row_.emplace(row.front().first, rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

  bool insert(const SparseRatRow& row) { return insert(integer_row(canonical_row(row))); }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<SparseIntRow> rows_;
  std::unordered_map<std::size_t, std::size_t> pivot_row_;
};

/// Rank of a family of rational row vectors.
inline std::size_t exact_rank(const std::vector<SparseRatRow>& rows) {
  RowEchelon ech;
  for (const auto& r : rows) ech.insert(r);
  return ech.rank();
}

/// Rank of a dense rational matrix given row by row.
inline std::size_t exact_rank(const std::vector<std::vector<Rational>>& dense) {
  RowEchelon ech;
  for (const auto& r : dense) {
    SparseRatRow row;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j] != 0) row.emplace_back(j, r[j]);
    }
    ech.insert(row);
  }
  return ech.rank();
}

}  // namespace hwv
