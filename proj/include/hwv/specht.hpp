#pragma once

// Group algebra of Sym_t over Q, Young symmetrisers, tabloids and
// polytabloids, hom-space bases and coinvariant bases.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <utility>
#include <vector>

#include "hwv/combinatorics.hpp"
#include "hwv/config.hpp"
#include "hwv/linalg.hpp"
#include "hwv/pictures.hpp"
#include "hwv/rational.hpp"

namespace hwv {

/// Bijection of {1..t}; images()[k-1] is the image of k.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size() + 1, 0);
    for (int v : img_) {
      require(v >= 1 && v <= size() && !seen[v], "not a permutation");
      seen[v] = 1;
    }
  }
  static Permutation identity(int t) {
    std::vector<int> v(t);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }
  /// The transposition (a b) in Sym_t.
  static Permutation transposition(int t, int a, int b) {
    auto p = identity(t);
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int k) const { return img_[k - 1]; }
  const std::vector<int>& images() const { return img_; }

  /// (g*h)(x) = g(h(x)).
  Permutation operator*(const Permutation& h) const {
    require(size() == h.size(), "composing permutations of different degree");
    std::vector<int> out(img_.size());
    for (int k = 0; k < size(); ++k) out[k] = img_[h.img_[k] - 1];
    Permutation p;
    p.img_ = std::move(out);
    return p;
  }

  Permutation inverse() const {
    std::vector<int> out(img_.size());
    for (int k = 0; k < size(); ++k) out[img_[k] - 1] = k + 1;
    Permutation p;
    p.img_ = std::move(out);
    return p;
  }

  int sign() const {
    int s = 1;
    std::vector<char> seen(img_.size(), 0);
    for (int k = 0; k < size(); ++k) {
      if (seen[k]) continue;
      int len = 0;
      for (int j = k; !seen[j]; j = img_[j] - 1) {
        seen[j] = 1;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

/// All permutations of {1..t} mapping every block onto itself.
inline std::vector<Permutation> block_stabilizer(int t, const std::vector<std::vector<int>>& blocks) {
  std::vector<Permutation> out{Permutation::identity(t)};
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Permutation> next;
    std::vector<int> perm = sorted;
    do {
      auto img = Permutation::identity(t).images();
      for (std::size_t k = 0; k < sorted.size(); ++k) img[sorted[k] - 1] = perm[k];
      Permutation p(img);
      for (const auto& q : out) next.push_back(p * q);
    } while (std::next_permutation(perm.begin(), perm.end()));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Sparse element Σ c_g g of Q[Sym_t].
class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(int t) : t_(t) {}
  static GroupAlgebraElement basis(const Permutation& g, const Rational& c = 1) {
    GroupAlgebraElement a(g.size());
    a.add(g, c);
    return a;
  }

  int degree() const { return t_; }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Permutation& g, const Rational& c) {
    require(g.size() == t_, "permutation degree differs from group algebra degree");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Permutation& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const {
    auto out = *this;
    for (const auto& [g, c] : o.terms_) out.add(g, c);
    return out;
  }
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const { return *this + o * Rational(-1); }
  GroupAlgebraElement operator*(const Rational& s) const {
    GroupAlgebraElement out(t_);
    for (const auto& [g, c] : terms_) out.add(g, c * s);
    return out;
  }
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const {
    require(t_ == o.t_, "multiplying group algebra elements of different degree");
    GroupAlgebraElement out(t_);
    for (const auto& [g, c] : terms_) {
      for (const auto& [h, d] : o.terms_) out.add(g * h, c * d);
    }
    return out;
  }

  /// (Σ c_g g)* = Σ c_g g⁻¹.
  GroupAlgebraElement star() const {
    GroupAlgebraElement out(t_);
    for (const auto& [g, c] : terms_) out.add(g.inverse(), c);
    return out;
  }

  bool operator==(const GroupAlgebraElement&) const = default;

 private:
  int t_ = 0;
  std::map<Permutation, Rational> terms_;
};

/// Σ_{g∈H} g or Σ_{g∈H} sgn(g) g.
inline GroupAlgebraElement subgroup_sum(int t, const std::vector<Permutation>& h, bool signed_sum) {
  GroupAlgebraElement out(t);
  for (const auto& g : h) out.add(g, signed_sum ? g.sign() : 1);
  return out;
}

/// The permutation g with T = g ∘ T_E: g sends the T_E number of a cell to the
/// entry of T in that cell, so its images are the standard scan of T.
inline Permutation permutation_of(const Tableau& t) {
  require(is_permutation_tableau(t), "tableau entries must be exactly 1..t");
  return Permutation(t.entries());
}

/// Row blocks and column blocks of T_E (sets of T_E numbers).
inline std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> row_column_blocks(
    const SkewDiagram& e) {
  std::map<int, std::vector<int>> rows, cols;
  int k = 0;
  for (const auto& c : e.cells()) {
    ++k;
    rows[c.row].push_back(k);
    cols[c.col].push_back(k);
  }
  std::vector<std::vector<int>> r, c;
  for (auto& [i, v] : rows) r.push_back(v);
  for (auto& [j, v] : cols) c.push_back(v);
  return {r, c};
}

struct YoungSymmetrizers {
  GroupAlgebraElement e1;  // signed sum over the column stabiliser of T_E
  GroupAlgebraElement e2;  // sum over the row stabiliser of T_E
};

inline YoungSymmetrizers young_symmetrizers(const SkewDiagram& e) {
  const int t = e.size();
  require(t <= limits::group_algebra_max_t(), "skew diagram exceeds the group algebra size bound");
  auto [rows, cols] = row_column_blocks(e);
  return {subgroup_sum(t, block_stabilizer(t, cols), true), subgroup_sum(t, block_stabilizer(t, rows), false)};
}

/// e = e₁e₂.
inline GroupAlgebraElement young_symmetrizer(const SkewDiagram& e) {
  auto s = young_symmetrizers(e);
  return s.e1 * s.e2;
}

// ---------------------------------------------------------------------------
// Indexed representation of Sym_t for the heavy rank computations. Elements
// are numbered by lexicographic rank; coefficients are machine integers
// (symmetriser products have small integer coefficients).
// ---------------------------------------------------------------------------

using IndexedElement = std::vector<std::pair<int, std::int64_t>>;

class SymmetricGroup {
 public:
  explicit SymmetricGroup(int t) : t_(t) {
    std::vector<int> p(t);
    std::iota(p.begin(), p.end(), 1);
    do {
      elems_.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    if (t <= 6) {
      const int n = order();
      table_.resize(static_cast<std::size_t>(n) * n);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) table_[static_cast<std::size_t>(a) * n + b] = index(elems_[a] * elems_[b]);
      }
    }
  }

  /// Shared instance per degree.
  static const SymmetricGroup& of(int t) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SymmetricGroup>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[t];
    if (!slot) slot = std::make_unique<SymmetricGroup>(t);
    return *slot;
  }

  int degree() const { return t_; }
  int order() const { return static_cast<int>(elems_.size()); }
  const Permutation& element(int i) const { return elems_[i]; }

  int index(const Permutation& p) const {
    int r = 0;
    for (int i = 0; i < t_; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < t_; ++j) smaller += p(j + 1) < p(i + 1);
      r = r * (t_ - i) + smaller;
    }
    return r;
  }

  int compose(int a, int b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
    return index(elems_[a] * elems_[b]);
  }

  IndexedElement from(const GroupAlgebraElement& a) const {
    IndexedElement out;
    for (const auto& [g, c] : a.terms()) {
      require(c.get_den() == 1 && c.get_num().fits_slong_p(), "indexed element needs small integer coefficients");
      out.emplace_back(index(g), c.get_num().get_si());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  GroupAlgebraElement to_element(const IndexedElement& v) const {
    GroupAlgebraElement out(t_);
    for (const auto& [i, c] : v) out.add(elems_[i], Rational(static_cast<long>(c)));
    return out;
  }

  IndexedElement multiply(const IndexedElement& a, const IndexedElement& b) const {
    std::vector<std::int64_t> acc(order(), 0);
    for (const auto& [x, cx] : a) {
      for (const auto& [y, cy] : b) acc[compose(x, y)] += cx * cy;
    }
    IndexedElement out;
    for (int i = 0; i < order(); ++i) {
      if (acc[i] != 0) out.emplace_back(i, acc[i]);
    }
    return out;
  }

  /// g·v.
  IndexedElement left_translate(int g, const IndexedElement& v) const {
    IndexedElement out;
    out.reserve(v.size());
    for (const auto& [h, c] : v) out.emplace_back(compose(g, h), c);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int t_;
  std::vector<Permutation> elems_;
  std::vector<std::uint16_t> table_;
};

inline SparseIntRow to_int_row(const IndexedElement& v) {
  SparseIntRow row;
  row.reserve(v.size());
  for (const auto& [i, c] : v) row.emplace_back(static_cast<std::size_t>(i), Integer(static_cast<long>(c)));
  return row;
}

/// dim Aa.
inline std::size_t left_ideal_dimension(const GroupAlgebraElement& a) {
  const auto& g = SymmetricGroup::of(a.degree());
  auto v = g.from(a);
  RowEchelon ech;
  for (int x = 0; x < g.order(); ++x) ech.insert(to_int_row(g.left_translate(x, v)));
  return ech.rank();
}

/// Rank of a family of group algebra elements.
inline std::size_t group_algebra_rank(const std::vector<GroupAlgebraElement>& family) {
  if (family.empty()) return 0;
  const auto& g = SymmetricGroup::of(family.front().degree());
  RowEchelon ech;
  for (const auto& a : family) ech.insert(to_int_row(g.from(a)));
  return ech.rank();
}

// ---------------------------------------------------------------------------
// Tabloids and polytabloids.
// ---------------------------------------------------------------------------

/// Sparse vector over the tabloids of a fixed shape; a tabloid is keyed by the
/// standard scan of its row-sorted representative.
struct TabloidVector {
  SkewDiagram shape;
  std::map<std::vector<int>, Rational> terms;

  void add(const Tableau& t, const Rational& c) {
    if (c == 0) return;
    auto key = row_sorted(t).entries();
    auto [it, inserted] = terms.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  bool operator==(const TabloidVector&) const = default;
};

/// Column stabiliser of a diagram acting on scan positions, with signs.
inline std::vector<Permutation> column_stabilizer(const SkewDiagram& e) {
  return block_stabilizer(e.size(), row_column_blocks(e).second);
}

/// {T}.
inline TabloidVector tabloid(const Tableau& t) {
  TabloidVector v{t.shape(), {}};
  v.add(t, 1);
  return v;
}

/// [T] = Σ_{π∈C_E} sgn(π) {T∘π}.
inline TabloidVector polytabloid(const Tableau& t) {
  require(is_permutation_tableau(t), "polytabloids need entries 1..t");
  TabloidVector v{t.shape(), {}};
  for (const auto& pi : column_stabilizer(t.shape())) {
    std::vector<int> e(t.size());
    for (int k = 0; k < t.size(); ++k) e[k] = t.entries()[pi(k + 1) - 1];
    v.add(Tableau(t.shape(), e), pi.sign());
  }
  return v;
}

/// g·T = g ∘ T (entries relabelled by g).
inline Tableau act(const Permutation& g, const Tableau& t) {
  std::vector<int> e;
  for (int v : t.entries()) e.push_back(g(v));
  return Tableau(t.shape(), e);
}

/// Standard polytabloids of E.
inline std::vector<TabloidVector> specht_basis(const SkewDiagram& e) {
  require(e.size() <= limits::group_algebra_max_t(), "skew diagram exceeds the group algebra size bound");
  std::vector<TabloidVector> out;
  for (const auto& t : enumerate_tableaux(e, Flavor::standard)) out.push_back(polytabloid(t));
  return out;
}

inline std::size_t tabloid_rank(const std::vector<TabloidVector>& family) {
  Indexer<std::vector<int>> idx;
  RowEchelon ech;
  for (const auto& v : family) {
    SparseRatRow row;
    for (const auto& [k, c] : v.terms) row.emplace_back(idx(k), c);
    ech.insert(row);
  }
  return ech.rank();
}

// ---------------------------------------------------------------------------
// Hom spaces e*Af.
// ---------------------------------------------------------------------------

namespace detail {

struct HomData {
  const SymmetricGroup* group;
  IndexedElement estar, f;
};

inline HomData hom_data(const SkewDiagram& e, const SkewDiagram& f) {
  require(e.size() == f.size(), "hom spaces need diagrams of equal size");
  const int t = e.size();
  require(t <= limits::group_algebra_max_t(), "skew diagram exceeds the group algebra size bound");
  const auto& g = SymmetricGroup::of(t);
  auto se = young_symmetrizers(e);
  auto sf = young_symmetrizers(f);
  return {&g, g.multiply(g.from(se.e2), g.from(se.e1)), g.multiply(g.from(sf.e1), g.from(sf.e2))};
}

}  // namespace detail

/// dim e*Af, as the exact rank of {e* g f : g ∈ Sym_t}. The span is computed
/// as e* applied to a basis of Af extracted from the translates g f.
inline std::size_t homspace_dimension(const SkewDiagram& e, const SkewDiagram& f) {
  auto d = detail::hom_data(e, f);
  const auto& g = *d.group;
  RowEchelon af, image;
  for (int x = 0; x < g.order(); ++x) {
    auto gf = g.left_translate(x, d.f);
    if (af.insert(to_int_row(gf))) {
      auto w = g.multiply(d.estar, gf);
      if (!w.empty()) image.insert(to_int_row(w));
    }
  }
  return image.rank();
}

/// e*[T] for T running over the standard representatives of the admissible
/// semistandard tableaux of shape F and weight = row lengths of E.
inline std::vector<GroupAlgebraElement> homspace_basis(const SkewDiagram& e, const SkewDiagram& f) {
  auto d = detail::hom_data(e, f);
  const auto& g = *d.group;
  std::vector<GroupAlgebraElement> out;
  for (const auto& adm : enumerate_admissible(f, e)) {
    auto t = representative_standard_tableau(adm.tableau, e);
    int x = g.index(permutation_of(t));
    out.push_back(g.to_element(g.multiply(d.estar, g.left_translate(x, d.f))));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coinvariants (Ae ⊗ Af)_{Sym_ν}.
// ---------------------------------------------------------------------------

/// Λ_i = consecutive blocks of sizes ν_1, ν_2, ...
inline std::vector<std::vector<int>> young_blocks(const std::vector<int>& nu) {
  std::vector<std::vector<int>> out;
  int k = 0;
  for (int n : nu) {
    require(n >= 0, "composition parts must be nonnegative");
    std::vector<int> b;
    for (int j = 0; j < n; ++j) b.push_back(++k);
    out.push_back(b);
  }
  return out;
}

/// T_P: the numbers of Λ_i written into P⁻¹(i) in scan order.
inline Tableau belonging_tableau(const Tableau& p, const std::vector<int>& nu) {
  auto blocks = young_blocks(nu);
  std::vector<std::size_t> next(blocks.size(), 0);
  std::vector<int> out;
  for (int v : p.entries()) {
    require(v >= 1 && v <= static_cast<int>(nu.size()), "tableau entry outside the composition");
    out.push_back(blocks[v - 1][next[v - 1]++]);
  }
  return Tableau(p.shape(), out);
}

struct CoinvariantElement {
  Tableau P, Q;
  DiagramMapping alpha;  // μ → λ, piecewise pictures
  Tableau TP;            // shape E
  Tableau T;             // shape F, T = T_P ∘ α
};

inline std::vector<CoinvariantElement> coinvariants_basis(const Partition& e, const Partition& f,
                                                          const std::vector<int>& nu) {
  const int t = e.size();
  require(f.size() == t, "coinvariants need shapes of equal size");
  require(std::accumulate(nu.begin(), nu.end(), 0) == t, "composition must sum to t");
  require(t <= limits::group_algebra_max_t(), "shape exceeds the group algebra size bound");
  std::vector<CoinvariantElement> out;
  for (auto& pp : enumerate_piecewise_pictures(e, f, nu)) {
    auto tp = belonging_tableau(pp.P, nu);
    auto t_f = pp.alpha.pull_back(tp);
    out.push_back({pp.P, pp.Q, pp.alpha, tp, t_f});
  }
  return out;
}

struct CoinvariantCheck {
  std::size_t ambient_dimension = 0;   // f^E f^F
  std::size_t quotient_dimension = 0;  // dim (Ae⊗Af)_{Sym_ν}
  std::size_t candidates = 0;
  std::size_t candidate_rank = 0;      // rank of the candidates modulo the relations
};

/// Exact quotient dimension of Ae⊗Af by span{g·x − x} (g running over the
/// adjacent transpositions generating Sym_ν, x over a basis), and the rank of
/// the candidate basis in that quotient.
inline CoinvariantCheck check_coinvariants(const Partition& e, const Partition& f, const std::vector<int>& nu) {
  const SkewDiagram es(e), fs(f);
  auto cands = coinvariants_basis(e, f, nu);
  Indexer<std::pair<std::vector<int>, std::vector<int>>> idx;
  auto tensor = [&](const TabloidVector& a, const TabloidVector& b, const Rational& s, SparseRatRow& row) {
    for (const auto& [ka, ca] : a.terms) {
      for (const auto& [kb, cb] : b.terms) row.emplace_back(idx({ka, kb}), s * ca * cb);
    }
  };
  std::vector<Permutation> gens;
  const int t = e.size();
  for (const auto& block : young_blocks(nu)) {
    for (std::size_t j = 0; j + 1 < block.size(); ++j) gens.push_back(Permutation::transposition(t, block[j], block[j + 1]));
  }
  auto se = enumerate_tableaux(es, Flavor::standard);
  auto sf = enumerate_tableaux(fs, Flavor::standard);
  CoinvariantCheck out;
  RowEchelon basis;
  RowEchelon rel;
  for (const auto& s1 : se) {
    auto p1 = polytabloid(s1);
    for (const auto& s2 : sf) {
      auto p2 = polytabloid(s2);
      SparseRatRow b;
      tensor(p1, p2, 1, b);
      basis.insert(b);
      for (const auto& g : gens) {
        SparseRatRow row;
        tensor(polytabloid(act(g, s1)), polytabloid(act(g, s2)), 1, row);
        tensor(p1, p2, -1, row);
        rel.insert(row);
      }
    }
  }
  out.ambient_dimension = basis.rank();
  out.quotient_dimension = out.ambient_dimension - rel.rank();
  out.candidates = cands.size();
  const std::size_t before = rel.rank();
  for (const auto& c : cands) {
    SparseRatRow row;
    tensor(polytabloid(c.TP), polytabloid(c.T), 1, row);
    rel.insert(row);
  }
  out.candidate_rank = rel.rank() - before;
  return out;
}

}  // namespace hwv
