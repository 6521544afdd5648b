#pragma once

// Diagram mappings between skew diagrams and admissible mappings (pictures).

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hwv/combinatorics.hpp"
#include "hwv/config.hpp"

namespace hwv {

/// A bijection source → target, stored as the image of each source cell in
/// source scan order.
class DiagramMapping {
 public:
  DiagramMapping() = default;
  DiagramMapping(SkewDiagram source, SkewDiagram target, std::vector<Cell> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    require(source_.size() == target_.size(), "diagram mapping between diagrams of different size");
    require(static_cast<int>(images_.size()) == source_.size(), "diagram mapping has wrong length");
    std::vector<char> hit(target_.size(), 0);
    for (const auto& c : images_) {
      require(target_.contains(c), "diagram mapping image outside target");
      int k = target_.index_of(c);
      require(!hit[k], "diagram mapping is not injective");
      hit[k] = 1;
    }
  }

  static DiagramMapping identity(const SkewDiagram& e) { return {e, e, e.cells()}; }

  const SkewDiagram& source() const { return source_; }
  const SkewDiagram& target() const { return target_; }
  const std::vector<Cell>& images() const { return images_; }

  Cell operator()(const Cell& a) const { return images_[source_.index_of(a)]; }

  DiagramMapping inverse() const {
    std::vector<Cell> inv(target_.size());
    auto src = source_.cells();
    for (std::size_t k = 0; k < src.size(); ++k) inv[target_.index_of(images_[k])] = src[k];
    return {target_, source_, inv};
  }

  /// (this ∘ other)(a) = this(other(a)).
  DiagramMapping compose(const DiagramMapping& other) const {
    require(other.target_ == source_, "composing incompatible diagram mappings");
    std::vector<Cell> out;
    for (const auto& c : other.images_) out.push_back((*this)(c));
    return {other.source_, target_, out};
  }

  /// T ∘ α for a tableau T on the target.
  Tableau pull_back(const Tableau& t) const {
    require(t.shape() == target_, "tableau shape is not the mapping target");
    std::vector<int> out;
    for (const auto& c : images_) out.push_back(t.at(c));
    return Tableau(source_, out);
  }

  auto operator<=>(const DiagramMapping&) const = default;

 private:
  SkewDiagram source_, target_;
  std::vector<Cell> images_;
};

/// α_T = T_E⁻¹ ∘ T for a t-tableau T of shape F.
inline DiagramMapping mapping_from_tableau(const Tableau& t, const SkewDiagram& e) {
  require(is_permutation_tableau(t), "tableau entries must be exactly 1..t");
  require(t.size() == e.size(), "tableau and target diagram differ in size");
  auto ecells = e.cells();
  std::vector<Cell> images;
  for (int v : t.entries()) images.push_back(ecells[v - 1]);
  return {t.shape(), e, images};
}

/// T_E ∘ α.
inline Tableau tableau_from_mapping(const DiagramMapping& alpha) {
  return alpha.pull_back(canonical_tableaux(alpha.target()).first);
}

/// (p,q) ⪯ (r,s) iff p < r, or p = r and q ≥ s.
inline bool prec_le(const Cell& a, const Cell& b) {
  return a.row < b.row || (a.row == b.row && a.col >= b.col);
}

inline bool componentwise_le(const Cell& a, const Cell& b) {
  return a.row <= b.row && a.col <= b.col;
}

namespace detail {

inline bool order_preserving(const DiagramMapping& alpha) {
  auto cells = alpha.source().cells();
  const auto& img = alpha.images();
  for (std::size_t x = 0; x < cells.size(); ++x) {
    for (std::size_t y = 0; y < cells.size(); ++y) {
      if (x != y && componentwise_le(cells[x], cells[y]) && !prec_le(img[x], img[y])) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Admissibility as order preservation of α : (F,≤) → (E,⪯) and of its inverse.
inline bool is_admissible(const DiagramMapping& alpha) {
  return detail::order_preserving(alpha) && detail::order_preserving(alpha.inverse());
}

// Wind directions of a relative to b.
namespace wind {
inline bool E(const Cell& a, const Cell& b) { return a.row == b.row && a.col > b.col; }
inline bool W(const Cell& a, const Cell& b) { return a.row == b.row && a.col < b.col; }
inline bool S(const Cell& a, const Cell& b) { return a.col == b.col && a.row > b.row; }
inline bool N(const Cell& a, const Cell& b) { return a.col == b.col && a.row < b.row; }
inline bool SW(const Cell& a, const Cell& b) { return a.row > b.row && a.col < b.col; }
inline bool SE(const Cell& a, const Cell& b) { return a.row > b.row && a.col > b.col; }
inline bool NE(const Cell& a, const Cell& b) { return a.row < b.row && a.col > b.col; }
inline bool NW(const Cell& a, const Cell& b) { return a.row < b.row && a.col < b.col; }
}  // namespace wind

/// Conditions (1)-(3) of the wind-direction characterisation for α alone.
inline bool wind_conditions(const DiagramMapping& alpha) {
  using namespace wind;
  auto cells = alpha.source().cells();
  const auto& img = alpha.images();
  for (std::size_t x = 0; x < cells.size(); ++x) {
    for (std::size_t y = 0; y < cells.size(); ++y) {
      if (x == y) continue;
      const Cell &a = cells[x], &b = cells[y], &fa = img[x], &fb = img[y];
      if (E(a, b) && !(W(fa, fb) || SW(fa, fb))) return false;
      if (S(a, b) && !(SW(fa, fb) || S(fa, fb))) return false;
      if (NE(a, b) && !(NE(fa, fb) || N(fa, fb) || NW(fa, fb) || W(fa, fb) || SW(fa, fb))) return false;
    }
  }
  return true;
}

/// Condition (4): a(SE)b ⇒ α(a)(SW)α(b).
inline bool wind_condition_four(const DiagramMapping& alpha) {
  auto cells = alpha.source().cells();
  const auto& img = alpha.images();
  for (std::size_t x = 0; x < cells.size(); ++x) {
    for (std::size_t y = 0; y < cells.size(); ++y) {
      if (x != y && wind::SE(cells[x], cells[y]) && !wind::SW(img[x], img[y])) return false;
    }
  }
  return true;
}

/// Second, independent admissibility test via wind directions.
inline bool is_admissible_wind(const DiagramMapping& alpha) {
  return wind_conditions(alpha) && wind_conditions(alpha.inverse());
}

/// Condition (a): S_E ∘ α is semistandard.
inline bool satisfies_a(const DiagramMapping& alpha) {
  return is_semistandard(alpha.pull_back(canonical_tableaux(alpha.target()).second));
}

/// Condition (b) (strict = false) or (b') (strict = true): whenever α(b) lies
/// strictly below α(a) in one column, b lies in a strictly lower row than a
/// (and, for (b'), in a column weakly left of a).
inline bool satisfies_b(const DiagramMapping& alpha, bool strict = false) {
  auto cells = alpha.source().cells();
  const auto& img = alpha.images();
  for (std::size_t x = 0; x < cells.size(); ++x) {
    for (std::size_t y = 0; y < cells.size(); ++y) {
      if (x == y || !wind::S(img[y], img[x])) continue;
      if (cells[y].row <= cells[x].row) return false;
      if (strict && cells[y].col > cells[x].col) return false;
    }
  }
  return true;
}

/// Replaces α by a mapping with the same S_E ∘ α that satisfies (b'), by
/// repeatedly swapping b = α⁻¹(r+1,s) with the cell below a = α⁻¹(r,s).
inline DiagramMapping normalize_to_bprime(const DiagramMapping& alpha) {
  if (!satisfies_a(alpha) || !satisfies_b(alpha)) {
    throw ConstraintError("normalize_to_bprime: mapping violates condition (a) or (b)");
  }
  const SkewDiagram& f = alpha.source();
  const SkewDiagram& e = alpha.target();
  auto cells = f.cells();
  std::vector<Cell> img = alpha.images();
  const int t = f.size();
  for (int iter = 0; iter <= t * t + 1; ++iter) {
    std::map<Cell, int> pre;  // target cell → source scan index
    for (int k = 0; k < t; ++k) pre[img[k]] = k;
    int found = -1, bidx = -1;
    for (int k = 0; k < t && found < 0; ++k) {
      Cell below{img[k].row + 1, img[k].col};
      if (!e.contains(below)) continue;
      int kb = pre[below];
      if (cells[kb].col > cells[k].col) {
        found = k;
        bidx = kb;
      }
    }
    if (found < 0) {
      DiagramMapping out(f, e, img);
      if (!satisfies_b(out, true)) throw VerificationError("normalize_to_bprime: result violates (b')");
      return out;
    }
    Cell b1{cells[found].row + 1, cells[found].col};
    if (!f.contains(b1)) throw VerificationError("normalize_to_bprime: swap partner outside diagram");
    std::swap(img[bidx], img[f.index_of(b1)]);
  }
  throw VerificationError("normalize_to_bprime: no convergence");
}

/// The unique candidate picture for a semistandard S: row i of E, read left to
/// right, goes to S⁻¹(i) in ⪯ order. Returned as α : F → E.
inline DiagramMapping candidate_picture(const Tableau& s, const SkewDiagram& e) {
  const SkewDiagram& f = s.shape();
  auto fcells = f.cells();
  std::vector<std::vector<Cell>> preimage(e.rows() + 1);
  for (std::size_t k = 0; k < fcells.size(); ++k) {
    int v = s.entries()[k];
    require(v <= e.rows(), "tableau entry exceeds the rows of the target");
    preimage[v].push_back(fcells[k]);
  }
  std::vector<Cell> images(fcells.size());
  for (int i = 1; i <= e.rows(); ++i) {
    auto& pre = preimage[i];
    require(static_cast<int>(pre.size()) == e.row_length(i), "tableau weight differs from target row lengths");
    std::sort(pre.begin(), pre.end(), [](const Cell& a, const Cell& b) {
      return prec_le(a, b) && a != b;
    });
    for (int k = 0; k < e.row_length(i); ++k) {
      images[f.index_of(pre[k])] = {i, e.first_col(i) + k};
    }
  }
  return {f, e, images};
}

struct AdmissibleTableau {
  Tableau tableau;
  DiagramMapping picture;
};

/// Admissible semistandard tableaux of shape F and weight = row lengths of E,
/// each with its picture F → E.
inline std::vector<AdmissibleTableau> enumerate_admissible(const SkewDiagram& f, const SkewDiagram& e) {
  require(f.size() == e.size(), "enumerate_admissible needs diagrams of equal size");
  std::vector<AdmissibleTableau> out;
  for (auto& s : enumerate_tableaux(f, Flavor::semistandard, e.row_lengths())) {
    auto alpha = candidate_picture(s, e);
    if (is_admissible(alpha)) out.push_back({std::move(s), std::move(alpha)});
  }
  return out;
}

/// A standard tableau T of shape F with S_E ∘ α_T = S: the T_E numbers of row
/// i of E are written into S⁻¹(i) in scan order.
inline Tableau representative_standard_tableau(const Tableau& s, const SkewDiagram& e) {
  auto te = canonical_tableaux(e).first;
  std::vector<int> next(e.rows() + 1, 0);
  int k = 0;
  for (int i = 1; i <= e.rows(); ++i) {
    next[i] = k + 1;
    k += e.row_length(i);
  }
  auto w = s.weight(e.rows());
  require(w == e.row_lengths(), "tableau weight differs from target row lengths");
  std::vector<int> out;
  for (int v : s.entries()) out.push_back(next[v]++);
  Tableau t(s.shape(), out);
  if (!is_standard(t)) throw ConstraintError("tableau has no standard representative");
  return t;
}

/// Cells of an ordered tableau P holding the value i, as a skew diagram in the
/// ambient coordinates of P's shape.
inline SkewDiagram value_piece(const Tableau& p, int i) {
  require(p.shape().is_straight(), "pieces are defined for straight shapes");
  std::vector<int> outer, inner;
  for (int r = 1; r <= p.shape().rows(); ++r) {
    int le = 0, lt = 0;
    for (int v : p.row(r)) {
      if (v <= i) ++le;
      if (v < i) ++lt;
    }
    outer.push_back(le);
    inner.push_back(lt);
  }
  // Trailing rows with no cells ≤ i are zero and get trimmed by Partition.
  return SkewDiagram(Partition(outer), Partition(inner));
}

/// A triple (P, Q, α) with P, Q ordered of shapes λ, μ and common weight ν and
/// α : μ → λ with P ∘ α = Q whose restriction to every piece Q⁻¹(i) → P⁻¹(i)
/// is a picture.
struct PiecewisePicture {
  std::vector<int> nu;
  Tableau P, Q;
  DiagramMapping alpha;
};

/// All such triples for fixed ν, ordered by (P, Q) and then by the tuple of
/// piece tableaux.
inline std::vector<PiecewisePicture> enumerate_piecewise_pictures(const Partition& lambda,
                                                                  const Partition& mu,
                                                                  const std::vector<int>& nu) {
  require(lambda.size() == mu.size(), "shapes must have equal size");
  const int m = static_cast<int>(nu.size());
  SkewDiagram ls(lambda), ms(mu);
  std::vector<PiecewisePicture> out;
  auto ps = enumerate_tableaux(ls, Flavor::ordered, nu);
  auto qs = enumerate_tableaux(ms, Flavor::ordered, nu);
  for (const auto& p : ps) {
    for (const auto& q : qs) {
      std::vector<std::vector<AdmissibleTableau>> per_piece;
      std::vector<SkewDiagram> qpieces;
      bool empty = false;
      for (int i = 1; i <= m; ++i) {
        auto fp = value_piece(q, i);
        auto ep = value_piece(p, i);
        per_piece.push_back(enumerate_admissible(fp, ep));
        qpieces.push_back(fp);
        if (per_piece.back().empty()) empty = true;
      }
      if (empty) continue;
      std::vector<std::size_t> choice(m, 0);
      while (true) {
        std::vector<Cell> images(mu.size());
        for (int i = 0; i < m; ++i) {
          const auto& pic = per_piece[i][choice[i]].picture;
          auto src = pic.source().cells();
          for (std::size_t k = 0; k < src.size(); ++k) images[ms.index_of(src[k])] = pic.images()[k];
        }
        out.push_back({nu, p, q, DiagramMapping(ms, ls, images)});
        int i = m - 1;
        while (i >= 0 && ++choice[i] == per_piece[i].size()) choice[i--] = 0;
        if (i < 0) break;
      }
    }
  }
  return out;
}

}  // namespace hwv
