#pragma once

// Partitions, skew diagrams, tableaux and the charge statistic.
// Cells are 1-based (row, column) pairs; "scan order" is row by row, top to
// bottom, each row left to right.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hwv/config.hpp"
#include "hwv/rational.hpp"

namespace hwv {

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      require(parts_[i] >= 0, "partition has a negative part");
      require(i == 0 || parts_[i - 1] >= parts_[i], "partition is not weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  const std::vector<int>& parts() const { return parts_; }
  /// 0-based access, zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }

  /// n(λ) = Σ (i-1) λ_i.
  int n() const {
    int s = 0;
    for (int i = 0; i < length(); ++i) s += i * parts_[i];
    return s;
  }

  bool contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i) {
      if (other.parts_[i] > parts_[i]) return false;
    }
    return true;
  }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

inline Partition transpose(const Partition& lambda) {
  std::vector<int> out(lambda[0], 0);
  for (int j = 1; j <= lambda[0]; ++j) {
    for (int p : lambda.parts()) {
      if (p >= j) ++out[j - 1];
    }
  }
  return Partition(std::move(out));
}

/// μ ⊴ λ in dominance order.
inline bool dominance_le(const Partition& mu, const Partition& lambda) {
  require(mu.size() == lambda.size(), "dominance order needs partitions of equal size");
  int a = 0, b = 0;
  for (int i = 0; i < std::max(mu.length(), lambda.length()); ++i) {
    a += mu[i];
    b += lambda[i];
    if (a > b) return false;
  }
  return true;
}

/// Sorts a nonnegative vector into a partition.
inline Partition sorted_partition(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

/// Partitions of t, largest first in lexicographic order.
inline std::vector<Partition> partitions_of(int t, int max_parts = -1) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int bound) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_parts >= 0 && static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(rest, bound); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(t, t);
  return out;
}

/// All m-tuples of nonnegative integers with sum t, lexicographically decreasing.
inline std::vector<std::vector<int>> weak_compositions(int t, int m) {
  std::vector<std::vector<int>> out;
  if (m <= 0) {
    if (t == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(m, 0);
  std::function<void(int, int)> rec = [&](int i, int rest) {
    if (i == m - 1) {
      cur[i] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = rest; v >= 0; --v) {
      cur[i] = v;
      rec(i + 1, rest - v);
    }
  };
  rec(0, t);
  return out;
}

/// Compositions of t into positive parts.
inline std::vector<std::vector<int>> compositions(int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = rest; p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p);
      cur.pop_back();
    }
  };
  rec(t);
  return out;
}

class SkewDiagram {
 public:
  SkewDiagram() = default;
  SkewDiagram(Partition outer, Partition inner = {})
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    require(outer_.contains(inner_), "inner partition is not contained in outer partition");
  }

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  bool is_straight() const { return inner_.empty(); }
  int size() const { return outer_.size() - inner_.size(); }
  int rows() const { return outer_.length(); }

  /// Ambient row i (1-based) consists of columns first_col(i)..last_col(i).
  int first_col(int i) const { return inner_[i - 1] + 1; }
  int last_col(int i) const { return outer_[i - 1]; }
  int row_length(int i) const { return outer_[i - 1] - inner_[i - 1]; }

  /// Row lengths for ambient rows 1..rows(); this is the weight of S_E.
  std::vector<int> row_lengths() const {
    std::vector<int> out;
    for (int i = 1; i <= rows(); ++i) out.push_back(row_length(i));
    return out;
  }

  bool contains(const Cell& c) const {
    return c.row >= 1 && c.row <= rows() && c.col >= first_col(c.row) && c.col <= last_col(c.row);
  }

  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    out.reserve(size());
    for (int i = 1; i <= rows(); ++i) {
      for (int j = first_col(i); j <= last_col(i); ++j) out.push_back({i, j});
    }
    return out;
  }

  /// Position of a cell in scan order.
  int index_of(const Cell& c) const {
    int k = 0;
    for (int i = 1; i < c.row; ++i) k += row_length(i);
    return k + (c.col - first_col(c.row));
  }

  auto operator<=>(const SkewDiagram&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// Skew diagrams with t cells and no empty rows or columns inside their
/// bounding box (every finite cell pattern has exactly one such placement).
inline std::vector<SkewDiagram> normalized_skew_diagrams(int t) {
  std::vector<SkewDiagram> out;
  for (const auto& len : compositions(t)) {
    const int k = static_cast<int>(len.size());
    std::vector<int> kappa(k, 0), lambda(k, 0);
    lambda[k - 1] = len[k - 1];
    std::function<void(int)> rec = [&](int i) {
      if (i < 0) {
        out.emplace_back(Partition(lambda), Partition(kappa));
        return;
      }
      // κ_i ≤ λ_{i+1} keeps every column occupied.
      for (int c = std::max(kappa[i + 1], lambda[i + 1] - len[i]); c <= lambda[i + 1]; ++c) {
        kappa[i] = c;
        lambda[i] = c + len[i];
        rec(i - 1);
      }
    };
    rec(k - 2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Antidiagonal Δ_t: t cells, one per row and column, running from upper right
/// to lower left.
inline SkewDiagram antidiagonal(int t) {
  std::vector<int> outer, inner;
  for (int i = 1; i <= t; ++i) {
    outer.push_back(t - i + 1);
    inner.push_back(t - i);
  }
  return SkewDiagram(Partition(outer), Partition(inner));
}

class Tableau {
 public:
  Tableau() = default;
  /// Entries listed in scan order.
  Tableau(SkewDiagram shape, std::vector<int> entries)
      : shape_(std::move(shape)), entries_(std::move(entries)) {
    require(static_cast<int>(entries_.size()) == shape_.size(),
            "tableau entry count does not match its shape");
    for (int v : entries_) require(v >= 1, "tableau entries must be positive");
  }

  /// Straight-shape tableau from its rows.
  static Tableau from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts, entries;
    for (const auto& r : rows) {
      parts.push_back(static_cast<int>(r.size()));
      entries.insert(entries.end(), r.begin(), r.end());
    }
    return Tableau(SkewDiagram(Partition(parts)), entries);
  }

  const SkewDiagram& shape() const { return shape_; }
  /// Entries in scan order; this is the standard scan.
  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  int at(const Cell& c) const { return entries_[shape_.index_of(c)]; }

  std::vector<int> row(int i) const {
    int k = 0;
    for (int h = 1; h < i; ++h) k += shape_.row_length(h);
    return {entries_.begin() + k, entries_.begin() + k + shape_.row_length(i)};
  }

  int max_entry() const {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
  }

  /// Occurrence counts of 1..len (len defaults to the largest entry).
  std::vector<int> weight(int len = -1) const {
    if (len < 0) len = max_entry();
    std::vector<int> w(len, 0);
    for (int v : entries_) {
      require(v <= len, "tableau entry exceeds weight length");
      ++w[v - 1];
    }
    return w;
  }

  auto operator<=>(const Tableau&) const = default;

 private:
  SkewDiagram shape_;
  std::vector<int> entries_;
};

inline std::vector<int> standard_scan(const Tableau& t) { return t.entries(); }

enum class Flavor { ordered, semistandard, row_semistandard, standard };

namespace detail {

// Scan-order neighbour indices (-1 if absent).
struct Neighbours {
  std::vector<Cell> cells;
  std::vector<int> left, up;
  explicit Neighbours(const SkewDiagram& e) : cells(e.cells()) {
    for (const auto& c : cells) {
      Cell l{c.row, c.col - 1}, u{c.row - 1, c.col};
      left.push_back(e.contains(l) ? e.index_of(l) : -1);
      up.push_back(e.contains(u) ? e.index_of(u) : -1);
    }
  }
};

inline bool row_strict(Flavor f) { return f == Flavor::row_semistandard || f == Flavor::standard; }
inline bool col_strict(Flavor f) { return f == Flavor::semistandard || f == Flavor::standard; }

}  // namespace detail

inline bool has_flavor(const Tableau& t, Flavor f) {
  detail::Neighbours nb(t.shape());
  const auto& v = t.entries();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (nb.left[k] >= 0) {
      int a = v[nb.left[k]];
      if (detail::row_strict(f) ? !(a < v[k]) : !(a <= v[k])) return false;
    }
    if (nb.up[k] >= 0) {
      int a = v[nb.up[k]];
      if (detail::col_strict(f) ? !(a < v[k]) : !(a <= v[k])) return false;
    }
  }
  if (f == Flavor::standard) {
    std::vector<int> s = v;
    std::sort(s.begin(), s.end());
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] != static_cast<int>(k) + 1) return false;
    }
  }
  return true;
}

inline bool is_ordered(const Tableau& t) { return has_flavor(t, Flavor::ordered); }
inline bool is_semistandard(const Tableau& t) { return has_flavor(t, Flavor::semistandard); }
inline bool is_row_semistandard(const Tableau& t) { return has_flavor(t, Flavor::row_semistandard); }
inline bool is_standard(const Tableau& t) { return has_flavor(t, Flavor::standard); }

/// True if the entries are exactly 1..t (a "t-tableau").
inline bool is_permutation_tableau(const Tableau& t) {
  std::vector<int> s = t.entries();
  std::sort(s.begin(), s.end());
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

/// All tableaux of a flavor with entries ≤ max_entry, in scan-lexicographic
/// order. Standard tableaux always use entries 1..|shape|.
inline std::vector<Tableau> enumerate_tableaux(const SkewDiagram& shape, Flavor flavor,
                                               const std::optional<std::vector<int>>& weight = {},
                                               int max_entry = 0) {
  const int t = shape.size();
  if (flavor == Flavor::standard) max_entry = t;
  if (weight) max_entry = std::max(max_entry, static_cast<int>(weight->size()));
  require(max_entry >= 1 || t == 0, "max_entry must be at least 1");
  std::vector<Tableau> out;
  if (weight) {
    int sum = 0;
    for (int w : *weight) {
      require(w >= 0, "weights must be nonnegative");
      sum += w;
    }
    if (sum != t) return out;
  }
  detail::Neighbours nb(shape);
  std::vector<int> entries(t, 0);
  std::vector<int> remaining;
  if (weight) remaining = *weight;
  std::vector<char> used(flavor == Flavor::standard ? t + 1 : 0, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == t) {
      out.emplace_back(shape, entries);
      return;
    }
    int lo = 1;
    if (nb.left[k] >= 0) lo = std::max(lo, entries[nb.left[k]] + (detail::row_strict(flavor) ? 1 : 0));
    if (nb.up[k] >= 0) lo = std::max(lo, entries[nb.up[k]] + (detail::col_strict(flavor) ? 1 : 0));
    for (int v = lo; v <= max_entry; ++v) {
      if (weight && remaining[v - 1] == 0) continue;
      if (!used.empty() && used[v]) continue;
      entries[k] = v;
      if (weight) --remaining[v - 1];
      if (!used.empty()) used[v] = 1;
      rec(k + 1);
      if (weight) ++remaining[v - 1];
      if (!used.empty()) used[v] = 0;
    }
  };
  rec(0);
  return out;
}

/// T_E (1..t row by row) and S_E (row i filled with i).
inline std::pair<Tableau, Tableau> canonical_tableaux(const SkewDiagram& e) {
  std::vector<int> tv, sv;
  int k = 0;
  for (const auto& c : e.cells()) {
    tv.push_back(++k);
    sv.push_back(c.row);
  }
  return {Tableau(e, tv), Tableau(e, sv)};
}

/// The row-ordered tableau row-equivalent to t.
inline Tableau row_sorted(const Tableau& t) {
  std::vector<int> out;
  for (int i = 1; i <= t.shape().rows(); ++i) {
    auto r = t.row(i);
    std::sort(r.begin(), r.end());
    out.insert(out.end(), r.begin(), r.end());
  }
  return Tableau(t.shape(), out);
}

/// Three-way comparison of the row-ordered representatives by standard scan.
inline std::strong_ordering tableau_preorder_compare(const Tableau& s, const Tableau& t) {
  require(s.shape() == t.shape(), "tableau comparison needs equal shapes");
  return row_sorted(s).entries() <=> row_sorted(t).entries();
}

inline bool tableau_preorder_le(const Tableau& s, const Tableau& t) {
  return tableau_preorder_compare(s, t) <= 0;
}

// ---------------------------------------------------------------------------
// Charge.
//
// Reading word: rows from bottom to top, each row left to right. Standard
// subwords are extracted by starting at the right end and scanning leftwards
// (cyclically) for 1, then 2, and so on. The letter 1 gets index 0; the index
// goes up by one whenever r+1 is found to the right of r (i.e. after wrapping)
// and stays the same otherwise. The charge is the sum of all indices.
// With this reading the superstandard tableau has charge 0 and the one-row
// word 1 2 ... n has charge n(n-1)/2.
// ---------------------------------------------------------------------------

inline std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (int i = t.shape().rows(); i >= 1; --i) {
    auto r = t.row(i);
    w.insert(w.end(), r.begin(), r.end());
  }
  return w;
}

inline bool is_partition_weight(const std::vector<int>& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] > w[i - 1]) return false;
  }
  return true;
}

inline int charge_of_word(const std::vector<int>& word) {
  int letters = 0;
  for (int v : word) letters = std::max(letters, v);
  std::vector<int> count(letters, 0);
  for (int v : word) {
    require(v >= 1, "charge needs positive letters");
    ++count[v - 1];
  }
  require(is_partition_weight(count), "charge needs a word of partition weight");
  const int n = static_cast<int>(word.size());
  std::vector<char> used(n, 0);
  int total = 0, left = n;
  while (left > 0) {
    int top = 0;
    while (top < letters && count[top] > 0) ++top;
    int pos = n;  // virtual start just right of the end
    int index = 0;
    for (int r = 1; r <= top; ++r) {
      // Scan leftwards cyclically from pos-1.
      int p = pos;
      bool wrapped = false;
      for (int step = 0; step < n; ++step) {
        --p;
        if (p < 0) {
          p = n - 1;
          wrapped = true;
        }
        if (!used[p] && word[p] == r) break;
      }
      if (r > 1 && wrapped) ++index;
      total += index;
      used[p] = 1;
      --count[r - 1];
      --left;
      pos = p;
    }
  }
  return total;
}

inline int charge(const Tableau& t) { return charge_of_word(reading_word(t)); }

/// Polynomial in one variable with integer coefficients (degree → coefficient).
struct QPolynomial {
  std::map<int, Integer> coeffs;

  void add(int degree, const Integer& c) {
    auto& slot = coeffs[degree];
    slot += c;
    if (slot == 0) coeffs.erase(degree);
  }
  bool is_zero() const { return coeffs.empty(); }
  Integer at_one() const {
    Integer s = 0;
    for (const auto& [d, c] : coeffs) s += c;
    return s;
  }
  std::optional<int> lowest_degree() const {
    if (coeffs.empty()) return std::nullopt;
    return coeffs.begin()->first;
  }
  Integer coefficient(int degree) const {
    auto it = coeffs.find(degree);
    return it == coeffs.end() ? Integer(0) : it->second;
  }
  bool operator==(const QPolynomial&) const = default;
};

/// K_{λμ}(q) = Σ q^{charge(T)} over semistandard T of shape λ and weight μ.
inline QPolynomial kostka_polynomial(const Partition& lambda, const Partition& mu) {
  require(lambda.size() == mu.size(), "Kostka polynomial needs partitions of equal size");
  QPolynomial out;
  for (const auto& t : enumerate_tableaux(SkewDiagram(lambda), Flavor::semistandard, mu.parts())) {
    out.add(charge(t), 1);
  }
  return out;
}

inline Integer kostka_number(const Partition& lambda, const std::vector<int>& weight) {
  return enumerate_tableaux(SkewDiagram(lambda), Flavor::semistandard, weight).size();
}

/// K̃_{λμ}(q) = q^{n(μ)} K_{λμ}(1/q).
inline QPolynomial modified_kostka_polynomial(const Partition& lambda, const Partition& mu) {
  QPolynomial k = kostka_polynomial(lambda, mu), out;
  for (const auto& [d, c] : k.coeffs) out.add(mu.n() - d, c);
  return out;
}

}  // namespace hwv
