#pragma once

// Explicit highest weight vectors on Mat_{r×s}^m and their pullbacks to
// n×n matrices, tuples of n×n matrices and the nilpotent cone.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hwv/combinatorics.hpp"
#include "hwv/config.hpp"
#include "hwv/pictures.hpp"
#include "hwv/polyring.hpp"
#include "hwv/specht.hpp"

namespace hwv {

namespace detail {

/// Integer accumulator for polynomials built from signed sums of products.
class PolyBuilder {
 public:
  explicit PolyBuilder(RingDims d) : dims_(d) {}
  void add(Monomial mono, std::int64_t c) {
    std::sort(mono.begin(), mono.end());
    acc_[std::move(mono)] += c;
  }
  Polynomial finish() const {
    Polynomial p(dims_);
    for (const auto& [mono, c] : acc_) {
      if (c != 0) p.add_term(mono, Rational(static_cast<long>(c)));
    }
    return p;
  }

 private:
  RingDims dims_;
  std::unordered_map<Monomial, std::int64_t, MonomialHash> acc_;
};

inline int cell_row_at(const std::vector<Cell>& cells, const Permutation& pi, int k) {
  return cells[pi(k + 1) - 1].row;
}

/// Σ_σ sgn(σ) Π_c entry(σ(c), c) with entry(k, c) a variable index.
template <class Entry>
void add_determinant(PolyBuilder& b, int t, Entry&& entry, std::int64_t scale = 1) {
  std::vector<int> perm(t);
  for (int k = 0; k < t; ++k) perm[k] = k;
  do {
    Monomial mono;
    mono.reserve(t);
    for (int c = 0; c < t; ++c) mono.push_back(entry(perm[c], c));
    int inv = 0;
    for (int a = 0; a < t; ++a) {
      for (int c = a + 1; c < t; ++c) inv += perm[a] > perm[c];
    }
    b.add(std::move(mono), (inv % 2 ? -1 : 1) * scale);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

inline void check_special(const Partition& lambda, const Tableau& t, int rows_needed, int cols_needed, int r, int s,
                          int m) {
  require(t.shape() == SkewDiagram(lambda), "tableau shape differs from λ");
  require(lambda.size() <= limits::construction_max_t(), "t exceeds the construction bound");
  require(lambda.size() <= rows_needed, "t must not exceed the number of available rows");
  require(lambda.length() <= cols_needed, "l(λ) exceeds the number of available columns");
  require(r >= 1 && s >= 1 && m >= 1, "ring dimensions must be positive");
  require(t.max_entry() <= m, "tableau entries exceed m");
}

/// Orbit of T under the column stabiliser of its (straight) shape, as a set.
inline std::set<Tableau> column_orbit(const Tableau& t) {
  std::set<Tableau> out;
  for (const auto& pi : column_stabilizer(t.shape())) {
    std::vector<int> e(t.size());
    for (int k = 0; k < t.size(); ++k) e[k] = t.entries()[pi(k + 1) - 1];
    out.emplace(t.shape(), e);
  }
  return out;
}

}  // namespace detail

/// ψ(f_S) = det(A_{S_11} e_1 | ... ) restricted to the last t rows, on Mat_{r×s}^m.
inline Polynomial psi_f(const Partition& lambda, const Tableau& s_tab, int r, int s, int m) {
  detail::check_special(lambda, s_tab, r, s, r, s, m);
  const RingDims d{m, r, s};
  const int t = lambda.size();
  auto cells = s_tab.shape().cells();
  detail::PolyBuilder b(d);
  detail::add_determinant(b, t, [&](int k, int c) {
    return var_index(d, {s_tab.entries()[c], r - t + k + 1, cells[c].row});
  });
  return b.finish();
}

/// u_T: Σ over the column orbit of T of ψ(f_S).
inline Polynomial build_uT(const Partition& lambda, const Tableau& tab, int r, int s, int m) {
  detail::check_special(lambda, tab, r, s, r, s, m);
  const RingDims d{m, r, s};
  const int t = lambda.size();
  auto cells = tab.shape().cells();
  detail::PolyBuilder b(d);
  for (const auto& sv : detail::column_orbit(tab)) {
    detail::add_determinant(b, t, [&](int k, int c) {
      return var_index(d, {sv.entries()[c], r - t + k + 1, cells[c].row});
    });
  }
  return b.finish();
}

/// v_T on Mat_{s×r}^m: columns A'_{S_ij} e_{s-i+1}, first t rows.
inline Polynomial build_vT(const Partition& lambda, const Tableau& tab, int r, int s, int m) {
  detail::check_special(lambda, tab, r, s, r, s, m);
  const RingDims d{m, s, r};
  const int t = lambda.size();
  auto cells = tab.shape().cells();
  detail::PolyBuilder b(d);
  for (const auto& sv : detail::column_orbit(tab)) {
    detail::add_determinant(b, t, [&](int k, int c) {
      return var_index(d, {sv.entries()[c], s - cells[c].row + 1, k + 1});
    });
  }
  return b.finish();
}

/// Φ: k[Mat_{r×s}^m] → k[Mat_{s×r}^m], x(l)_{ij} ↦ y(l)_{s+1-j, r+1-i}.
inline Polynomial flip(const Polynomial& p) {
  const RingDims d = p.dims();
  const RingDims e{d.m, d.cols, d.rows};
  Polynomial out(e);
  for (const auto& [mono, c] : p.terms()) {
    Monomial mm;
    for (int v : mono) {
      auto id = var_id(d, v);
      mm.push_back(var_index(e, {id.l, d.cols + 1 - id.j, d.rows + 1 - id.i}));
    }
    out.add_term(std::move(mm), c);
  }
  return out;
}

namespace detail {

inline std::vector<Tableau> row_strict_fillings(const Partition& lambda, int m, bool weak_columns) {
  std::vector<Tableau> out;
  const SkewDiagram shape(lambda);
  const int t = lambda.size();
  auto cells = shape.cells();
  std::vector<int> e(t, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == t) {
      out.emplace_back(shape, e);
      return;
    }
    int lo = (k > 0 && cells[k - 1].row == cells[k].row) ? e[k - 1] + 1 : 1;
    if (weak_columns && cells[k].row > 1) lo = std::max(lo, e[k - lambda[cells[k].row - 2]]);
    for (int v = lo; v <= m; ++v) {
      e[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace detail

/// Tableaux of shape λ with strictly increasing rows and entries ≤ m; they
/// index the f_S spanning ∧^λ F.
inline std::vector<Tableau> strict_row_tableaux(const Partition& lambda, int m) {
  return detail::row_strict_fillings(lambda, m, false);
}

/// Row semi-standard tableaux (strict rows, weak columns) with entries ≤ m;
/// they index the basis u_T.
inline std::vector<Tableau> row_semistandard_tableaux(const Partition& lambda, int m) {
  return detail::row_strict_fillings(lambda, m, true);
}

struct DualPoint {
  Tableau tableau;
  MatrixTuple point;
};

/// A(T) for every strictly-row-increasing T: A(T)_{T_ij} e_i = e_{r-t+(T_λ)_ij},
/// all other columns zero. (The row shift r-t places the images inside the
/// last t rows read by the determinants.)
inline std::vector<DualPoint> dual_points(const Partition& lambda, int m, int r, int s) {
  const int t = lambda.size();
  require(t <= r && lambda.length() <= s, "dual points need t ≤ r and l(λ) ≤ s");
  require(lambda[0] <= m, "dual points need λ_1 ≤ m");
  std::vector<DualPoint> out;
  auto cells = SkewDiagram(lambda).cells();
  for (auto& tab : strict_row_tableaux(lambda, m)) {
    MatrixTuple pt;
    for (int l = 0; l < m; ++l) pt.mats.emplace_back(r, s);
    for (int k = 0; k < t; ++k) pt.mats[tab.entries()[k] - 1](r - t + k, cells[k].row - 1) = 1;
    out.push_back({std::move(tab), std::move(pt)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Main construction.
// ---------------------------------------------------------------------------

struct HwvLabel {
  std::vector<int> nu;
  Tableau P;               // ordered, shape λ, weight ν
  Tableau Q;               // ordered, shape μ, weight ν
  DiagramMapping alpha;    // μ → λ, P ∘ α = Q, pictures on every piece
};

inline void check_main(const Partition& lambda, const Partition& mu, int m, int r, int s) {
  require(lambda.size() == mu.size(), "λ and μ must have the same size");
  require(mu.length() <= r, "l(μ) must not exceed r");
  require(lambda.length() <= s, "l(λ) must not exceed s");
  require(m >= 1, "m must be positive");
  require(lambda.size() <= limits::construction_max_t(), "t exceeds the construction bound");
}

/// Labels of multidegree ν.
inline std::vector<HwvLabel> enumerate_labels(const Partition& lambda, const Partition& mu,
                                              const std::vector<int>& nu) {
  std::vector<HwvLabel> out;
  for (auto& pp : enumerate_piecewise_pictures(lambda, mu, nu)) {
    out.push_back({pp.nu, std::move(pp.P), std::move(pp.Q), std::move(pp.alpha)});
  }
  return out;
}

/// Labels for all ν ∈ Σ_t (m-tuples summing to t).
inline std::vector<HwvLabel> enumerate_labels(const Partition& lambda, const Partition& mu, int m, int r, int s) {
  check_main(lambda, mu, m, r, s);
  std::vector<HwvLabel> out;
  for (const auto& nu : weak_compositions(lambda.size(), m)) {
    for (auto& l : enumerate_labels(lambda, mu, nu)) out.push_back(std::move(l));
  }
  return out;
}

/// u_{ν,P,Q,α} = Σ_{π∈C_μ, σ∈C_λ} sgn(π)sgn(σ) Π_{a∈μ} x(Q(a))_{r-π(a)_1+1, σ(α(a))_1}.
inline Polynomial build_u(const HwvLabel& label, int r, int s) {
  const SkewDiagram& ms = label.Q.shape();
  const SkewDiagram& ls = label.P.shape();
  const int m = static_cast<int>(label.nu.size());
  check_main(ls.outer(), ms.outer(), m, r, s);
  require(label.alpha.pull_back(label.P) == label.Q, "label violates P ∘ α = Q");
  const RingDims d{m, r, s};
  const int t = ms.size();
  auto mcells = ms.cells();
  auto lcells = ls.cells();
  std::vector<int> alpha_idx(t);
  for (int k = 0; k < t; ++k) alpha_idx[k] = ls.index_of(label.alpha.images()[k]);
  auto cmu = column_stabilizer(ms);
  auto clam = column_stabilizer(ls);
  detail::PolyBuilder b(d);
  for (const auto& pi : cmu) {
    for (const auto& sigma : clam) {
      Monomial mono;
      mono.reserve(t);
      for (int k = 0; k < t; ++k) {
        int row = r - detail::cell_row_at(mcells, pi, k) + 1;
        int col = detail::cell_row_at(lcells, sigma, alpha_idx[k]);
        mono.push_back(var_index(d, {label.Q.entries()[k], row, col}));
      }
      b.add(std::move(mono), pi.sign() * sigma.sign());
    }
  }
  return b.finish();
}

/// Spanning-set element for a word γ ∈ {1..m}^t and τ ∈ Sym_t.
inline Polynomial spanning_corollary(const Partition& lambda, const Partition& mu, const std::vector<int>& gamma,
                                     const Permutation& tau, int m, int r, int s) {
  check_main(lambda, mu, m, r, s);
  const int t = lambda.size();
  require(static_cast<int>(gamma.size()) == t && tau.size() == t, "γ and τ must have length t");
  for (int g : gamma) require(g >= 1 && g <= m, "word letter outside 1..m");
  const RingDims d{m, r, s};
  auto alpha = canonical_tableaux(SkewDiagram(mu)).second.entries();   // scan of S_μ
  auto beta = canonical_tableaux(SkewDiagram(lambda)).second.entries();  // scan of S_λ
  auto cmu = column_stabilizer(SkewDiagram(mu));
  auto clam = column_stabilizer(SkewDiagram(lambda));
  detail::PolyBuilder b(d);
  for (const auto& pi : cmu) {
    for (const auto& sigma : clam) {
      Monomial mono;
      for (int i = 1; i <= t; ++i) {
        mono.push_back(var_index(d, {gamma[i - 1], r - alpha[pi(i) - 1] + 1, beta[sigma(tau(i)) - 1]}));
      }
      b.add(std::move(mono), pi.sign() * sigma.sign());
    }
  }
  return b.finish();
}

// ---------------------------------------------------------------------------
// Pullbacks.
// ---------------------------------------------------------------------------

/// Matrix of variables x_{ab} of component l on a square ring.
inline std::vector<std::vector<Polynomial>> variable_matrix(const RingDims& d, int l) {
  std::vector<std::vector<Polynomial>> out(d.rows, std::vector<Polynomial>(d.cols));
  for (int a = 1; a <= d.rows; ++a) {
    for (int b = 1; b <= d.cols; ++b) out[a - 1][b - 1] = Polynomial::variable(d, {l, a, b});
  }
  return out;
}

inline std::vector<std::vector<Polynomial>> symbolic_product(const std::vector<std::vector<Polynomial>>& x,
                                                             const std::vector<std::vector<Polynomial>>& y,
                                                             const RingDims& d) {
  const std::size_t n = x.size();
  std::vector<std::vector<Polynomial>> out(n, std::vector<Polynomial>(y.front().size(), Polynomial(d)));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < y.front().size(); ++b) {
      for (std::size_t k = 0; k < y.size(); ++k) out[a][b] = out[a][b] + x[a][k] * y[k][b];
    }
  }
  return out;
}

/// Nonempty words over {1..l} of length ≤ max_len, by length then lexicographically.
inline std::vector<std::vector<int>> words_up_to(int l, int max_len) {
  std::vector<std::vector<int>> out, layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer) {
      for (int a = 1; a <= l; ++a) {
        auto v = w;
        v.push_back(a);
        next.push_back(v);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

namespace detail {

inline Polynomial pullback_words(const Polynomial& p, int n, int l, const std::vector<std::vector<int>>& words) {
  const RingDims d = p.dims();
  require(d.rows + d.cols <= n, "pullback needs r + s ≤ n");
  require(static_cast<int>(words.size()) == d.m, "number of words does not match the number of components");
  const RingDims target{l, n, n};
  std::vector<std::vector<std::vector<Polynomial>>> xs;
  for (int a = 1; a <= l; ++a) xs.push_back(variable_matrix(target, a));
  std::map<std::vector<int>, std::vector<std::vector<Polynomial>>> memo;
  std::function<const std::vector<std::vector<Polynomial>>&(const std::vector<int>&)> product =
      [&](const std::vector<int>& w) -> const std::vector<std::vector<Polynomial>>& {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<Polynomial>> val;
    if (w.size() == 1) {
      val = xs[w[0] - 1];
    } else {
      std::vector<int> head(w.begin(), w.end() - 1);
      val = symbolic_product(product(head), xs[w.back() - 1], target);
    }
    return memo.emplace(w, std::move(val)).first->second;
  };
  std::vector<Polynomial> images(d.num_vars());
  for (int k = 0; k < d.num_vars(); ++k) {
    auto id = var_id(d, k);
    images[k] = product(words[id.l - 1])[n - d.rows + id.i - 1][id.j - 1];
  }
  return substitute(p, images, target);
}

}  // namespace detail

/// x(l)_{ij} ↦ (X^l)_{n-r+i, j} as a polynomial on Mat_n.
inline Polynomial pullback_phi(const Polynomial& p, int n) {
  std::vector<std::vector<int>> words;
  for (int l = 1; l <= p.dims().m; ++l) words.emplace_back(l, 1);
  return detail::pullback_words(p, n, 1, words);
}

/// x(k)_{ij} ↦ (X_{ξ_1} ⋯ X_{ξ_j})_{n-r+i, j} for the k-th word ξ.
inline Polynomial pullback_psi(const Polynomial& p, int n, int l, int max_word_len) {
  return detail::pullback_words(p, n, l, words_up_to(l, max_word_len));
}

/// φ(X): the lower-left r×s corners of X, X², ..., X^m.
inline MatrixTuple phi_point(const Matrix& x, int r, int s, int m) {
  const int n = x.rows();
  require(x.cols() == n && r + s <= n, "phi needs a square matrix with r + s ≤ n");
  MatrixTuple out;
  Matrix power = x;
  for (int l = 1; l <= m; ++l) {
    Matrix corner(r, s);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < s; ++j) corner(i, j) = power(n - r + i, j);
    }
    out.mats.push_back(std::move(corner));
    if (l < m) power = power * x;
  }
  return out;
}

/// ψ(X̲): corners of the word products, words ordered as in pullback_psi.
inline MatrixTuple psi_point(const std::vector<Matrix>& xs, int r, int s, int max_word_len) {
  require(!xs.empty(), "psi needs at least one matrix");
  const int n = xs.front().rows();
  require(r + s <= n, "psi needs r + s ≤ n");
  MatrixTuple out;
  for (const auto& w : words_up_to(static_cast<int>(xs.size()), max_word_len)) {
    Matrix prod = xs[w[0] - 1];
    for (std::size_t k = 1; k < w.size(); ++k) prod = prod * xs[w[k] - 1];
    Matrix corner(r, s);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < s; ++j) corner(i, j) = prod(n - r + i, j);
    }
    out.mats.push_back(std::move(corner));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Nilpotent matrices.
// ---------------------------------------------------------------------------

/// Jordan matrix with ones on the superdiagonal inside each block.
inline Matrix jordan_nilpotent(const Partition& type) {
  const int n = type.size();
  Matrix j(n, n);
  int start = 0;
  for (int b : type.parts()) {
    for (int k = 0; k + 1 < b; ++k) j(start + k, start + k + 1) = 1;
    start += b;
  }
  return j;
}

inline Matrix matrix_power(const Matrix& x, int e) {
  Matrix out = Matrix::identity(x.rows());
  for (int k = 0; k < e; ++k) out = out * x;
  return out;
}

/// Inverse of a unitriangular matrix (upper or lower) by substitution.
inline Matrix unitriangular_inverse(const Matrix& a, bool upper) {
  const int n = a.rows();
  Matrix inv = Matrix::identity(n);
  // Solve a · inv = I column by column.
  for (int c = 0; c < n; ++c) {
    if (upper) {
      for (int i = n - 1; i >= 0; --i) {
        Rational v = (i == c) ? 1 : 0;
        for (int k = i + 1; k < n; ++k) v -= a(i, k) * inv(k, c);
        inv(i, c) = v;
      }
    } else {
      for (int i = 0; i < n; ++i) {
        Rational v = (i == c) ? 1 : 0;
        for (int k = 0; k < i; ++k) v -= a(i, k) * inv(k, c);
        inv(i, c) = v;
      }
    }
  }
  return inv;
}

/// C J C⁻¹ with C = L·U, L and U unitriangular with entries in {-2..2} drawn
/// from a seeded generator.
inline Matrix sample_nilpotent(const Partition& type, std::uint64_t seed) {
  const int n = type.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-2, 2);
  Matrix l = Matrix::identity(n), u = Matrix::identity(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) l(i, j) = dist(rng);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) u(i, j) = dist(rng);
  }
  Matrix c = l * u;
  Matrix cinv = unitriangular_inverse(u, true) * unitriangular_inverse(l, false);
  Matrix x = c * jordan_nilpotent(type) * cinv;
  if (n > 0) {
    const int k = type[0];
    if (!matrix_power(x, k).is_zero() || (k >= 1 && matrix_power(x, k - 1).is_zero())) {
      throw VerificationError("sampled matrix does not have the requested nilpotency index");
    }
  }
  return x;
}

}  // namespace hwv
