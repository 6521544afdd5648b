#pragma once

// Sparse polynomials over Q in the matrix entries x(l)_{ij} of an m-tuple of
// rows×cols matrices, with torus weights, unipotent actions and evaluation.
//
// Conventions. GL_r × GL_s acts on Mat_{r×s}^m by A_l ↦ R A_l S⁻¹ and on
// functions by ((R,S)·f)(A) = f(R⁻¹ A S). The variable x(l)_{ij} has weight
// (−e_i, +e_j), so the lower-left corner x(l)_{r,1} is the highest weight
// variable. U_r × U_s (upper unitriangular) acts by A ↦ uAv; its generators
// are the row operation "row i += c·row i+1" and the column operation
// "column j+1 += c·column j". For square tuples under conjugation the
// generators are X ↦ (1 + cE_{i,i+1}) X (1 − cE_{i,i+1}) and x_{ab} has weight
// e_b − e_a.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hwv/config.hpp"
#include "hwv/rational.hpp"

namespace hwv {

struct RingDims {
  int m = 1;     // number of matrix components
  int rows = 1;  // r
  int cols = 1;  // s
  int num_vars() const { return m * rows * cols; }
  bool operator==(const RingDims&) const = default;
};

/// x(l)_{ij}, all indices 1-based.
struct VariableId {
  int l = 1, i = 1, j = 1;
  auto operator<=>(const VariableId&) const = default;
};

inline int var_index(const RingDims& d, const VariableId& v) {
  require(v.l >= 1 && v.l <= d.m && v.i >= 1 && v.i <= d.rows && v.j >= 1 && v.j <= d.cols,
          "variable index outside the ring dimensions");
  return ((v.l - 1) * d.rows + (v.i - 1)) * d.cols + (v.j - 1);
}

inline VariableId var_id(const RingDims& d, int index) {
  VariableId v;
  v.j = index % d.cols + 1;
  index /= d.cols;
  v.i = index % d.rows + 1;
  v.l = index / d.rows + 1;
  return v;
}

/// A monomial as the sorted multiset of its variable indices.
using Monomial = std::vector<int>;

/// Graded order: total degree first, then lexicographic on the variable list.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = m.size();
    for (int v : m) h = h * 1000003u ^ static_cast<std::size_t>(v);
    return h;
  }
};

/// Dense rational matrix, 0-based indexing.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  int rows() const { return r_; }
  int cols() const { return c_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  Matrix operator*(const Matrix& o) const {
    require(c_ == o.r_, "matrix product dimension mismatch");
    Matrix out(r_, o.c_);
    for (int i = 0; i < r_; ++i) {
      for (int k = 0; k < c_; ++k) {
        const Rational& x = (*this)(i, k);
        if (x == 0) continue;
        for (int j = 0; j < o.c_; ++j) out(i, j) += x * o(k, j);
      }
    }
    return out;
  }
  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
  }
  bool operator==(const Matrix&) const = default;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

/// An m-tuple of equally sized matrices.
struct MatrixTuple {
  std::vector<Matrix> mats;
  RingDims dims() const {
    require(!mats.empty(), "empty matrix tuple");
    return {static_cast<int>(mats.size()), mats.front().rows(), mats.front().cols()};
  }
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, MonomialLess>;

  Polynomial() = default;
  explicit Polynomial(RingDims d) : dims_(d) {}
  static Polynomial constant(RingDims d, const Rational& c) {
    Polynomial p(d);
    p.add_term({}, c);
    return p;
  }
  static Polynomial variable(RingDims d, VariableId v) {
    Polynomial p(d);
    p.add_term({var_index(d, v)}, 1);
    return p;
  }

  const RingDims& dims() const { return dims_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  /// Adds c·mono; mono need not be sorted.
  void add_term(Monomial mono, const Rational& c) {
    if (c == 0) return;
    std::sort(mono.begin(), mono.end());
    auto [it, inserted] = terms_.try_emplace(std::move(mono), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }

  Polynomial operator+(const Polynomial& o) const {
    require(dims_ == o.dims_, "adding polynomials on different rings");
    Polynomial out = *this;
    for (const auto& [mono, c] : o.terms_) out.add_term(mono, c);
    return out;
  }
  Polynomial operator-(const Polynomial& o) const { return *this + o * Rational(-1); }
  Polynomial operator*(const Rational& s) const {
    Polynomial out(dims_);
    if (s == 0) return out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, c * s);
    return out;
  }
  Polynomial operator*(const Polynomial& o) const {
    require(dims_ == o.dims_, "multiplying polynomials on different rings");
    Polynomial out(dims_);
    for (const auto& [a, ca] : terms_) {
      for (const auto& [b, cb] : o.terms_) {
        Monomial mono;
        mono.reserve(a.size() + b.size());
        std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(mono));
        out.add_term(std::move(mono), ca * cb);
      }
    }
    return out;
  }
  bool operator==(const Polynomial&) const = default;

 private:
  RingDims dims_;
  Terms terms_;
};

/// Exponent form of a monomial: (variable, exponent) pairs.
inline std::vector<std::pair<VariableId, int>> exponents(const RingDims& d, const Monomial& mono) {
  std::vector<std::pair<VariableId, int>> out;
  for (std::size_t k = 0; k < mono.size();) {
    std::size_t e = k;
    while (e < mono.size() && mono[e] == mono[k]) ++e;
    out.emplace_back(var_id(d, mono[k]), static_cast<int>(e - k));
    k = e;
  }
  return out;
}

inline Rational evaluate(const Polynomial& p, const MatrixTuple& pt) {
  require(pt.dims() == p.dims(), "evaluation point does not match the ring dimensions");
  const RingDims& d = p.dims();
  std::vector<Rational> val(d.num_vars());
  for (int k = 0; k < d.num_vars(); ++k) {
    auto v = var_id(d, k);
    val[k] = pt.mats[v.l - 1](v.i - 1, v.j - 1);
  }
  Rational sum = 0, prod;
  for (const auto& [mono, c] : p.terms()) {
    prod = c;
    for (int v : mono) {
      prod *= val[v];
      if (prod == 0) break;
    }
    sum += prod;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Gradings.
// ---------------------------------------------------------------------------

struct BiWeight {
  std::vector<int> row;  // GL_r part
  std::vector<int> col;  // GL_s part
  bool operator==(const BiWeight&) const = default;
};

/// x(l)_{i,j}^e factors joined by '*', or "1".
inline std::string format_monomial(const RingDims& d, const Monomial& mono) {
  if (mono.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : exponents(d, mono)) {
    if (!out.empty()) out += "*";
    out += "x(" + std::to_string(v.l) + ")_{" + std::to_string(v.i) + "," + std::to_string(v.j) + "}";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace detail {

template <class Key, class F>
Key homogeneous_value(const Polynomial& p, F&& key_of, const char* what) {
  require(!p.is_zero(), std::string(what) + " of the zero polynomial");
  const Monomial* first = nullptr;
  Key k{};
  for (const auto& [mono, c] : p.terms()) {
    Key km = key_of(mono);
    if (!first) {
      first = &mono;
      k = km;
    } else if (km != k) {
      throw ConstraintError(std::string(what) + ": polynomial is not homogeneous (" +
                            format_monomial(p.dims(), *first) + " vs " + format_monomial(p.dims(), mono) + ")");
    }
  }
  return k;
}

}  // namespace detail

/// Torus weight for the left/right action: x(l)_{ij} ↦ (−e_i, +e_j).
inline BiWeight torus_weight(const Polynomial& p) {
  const RingDims d = p.dims();
  return detail::homogeneous_value<BiWeight>(
      p,
      [&](const Monomial& mono) {
        BiWeight w{std::vector<int>(d.rows, 0), std::vector<int>(d.cols, 0)};
        for (int v : mono) {
          auto id = var_id(d, v);
          --w.row[id.i - 1];
          ++w.col[id.j - 1];
        }
        return w;
      },
      "torus_weight");
}

/// Weight for conjugation on square tuples: x(l)_{ab} ↦ e_b − e_a.
inline std::vector<int> conjugation_weight(const Polynomial& p) {
  const RingDims d = p.dims();
  require(d.rows == d.cols, "conjugation weight needs square matrices");
  return detail::homogeneous_value<std::vector<int>>(
      p,
      [&](const Monomial& mono) {
        std::vector<int> w(d.rows, 0);
        for (int v : mono) {
          auto id = var_id(d, v);
          --w[id.i - 1];
          ++w[id.j - 1];
        }
        return w;
      },
      "conjugation_weight");
}

/// Number of variables from each component.
inline std::vector<int> multidegree(const Polynomial& p) {
  const RingDims d = p.dims();
  return detail::homogeneous_value<std::vector<int>>(
      p,
      [&](const Monomial& mono) {
        std::vector<int> w(d.m, 0);
        for (int v : mono) ++w[var_id(d, v).l - 1];
        return w;
      },
      "multidegree");
}

/// Σ_l ν_l · l.
inline int weighted_degree(const std::vector<int>& nu) {
  int s = 0;
  for (std::size_t l = 0; l < nu.size(); ++l) s += nu[l] * static_cast<int>(l + 1);
  return s;
}

// ---------------------------------------------------------------------------
// Linear substitutions and unipotent invariance.
// ---------------------------------------------------------------------------

/// Image of each variable as a list of (variable, coefficient).
using LinearSubstitution = std::vector<std::vector<std::pair<int, Rational>>>;

inline Polynomial substitute_linear(const Polynomial& p, const LinearSubstitution& sub) {
  Polynomial out(p.dims());
  for (const auto& [mono, c] : p.terms()) {
    std::vector<std::pair<Monomial, Rational>> acc{{{}, c}};
    for (int v : mono) {
      std::vector<std::pair<Monomial, Rational>> next;
      next.reserve(acc.size() * sub[v].size());
      for (const auto& [m, cm] : acc) {
        for (const auto& [w, cw] : sub[v]) {
          Monomial mm = m;
          mm.push_back(w);
          next.emplace_back(std::move(mm), cm * cw);
        }
      }
      acc = std::move(next);
    }
    for (auto& [m, cm] : acc) out.add_term(std::move(m), cm);
  }
  return out;
}

enum class Action { LeftRight, Conjugation };

struct Generator {
  enum class Kind { Row, Column, Conjugation } kind;
  int index;  // i for row/conjugation generators, j for column generators
  std::string describe() const {
    const char* k = kind == Kind::Row ? "row" : kind == Kind::Column ? "column" : "conjugation";
    return std::string(k) + " " + std::to_string(index);
  }
};

inline std::vector<Generator> unipotent_generators(const RingDims& d, Action action) {
  std::vector<Generator> out;
  if (action == Action::LeftRight) {
    for (int i = 1; i < d.rows; ++i) out.push_back({Generator::Kind::Row, i});
    for (int j = 1; j < d.cols; ++j) out.push_back({Generator::Kind::Column, j});
  } else {
    require(d.rows == d.cols, "conjugation needs square matrices");
    for (int i = 1; i < d.rows; ++i) out.push_back({Generator::Kind::Conjugation, i});
  }
  return out;
}

/// The substitution x ↦ (g·A)-entry for generator g with parameter c.
inline LinearSubstitution generator_substitution(const RingDims& d, const Generator& g, const Rational& c) {
  LinearSubstitution sub(d.num_vars());
  for (int k = 0; k < d.num_vars(); ++k) {
    auto v = var_id(d, k);
    auto& img = sub[k];
    img.emplace_back(k, 1);
    auto other = [&](int i, int j) { return var_index(d, {v.l, i, j}); };
    switch (g.kind) {
      case Generator::Kind::Row:
        if (v.i == g.index) img.emplace_back(other(v.i + 1, v.j), c);
        break;
      case Generator::Kind::Column:
        if (v.j == g.index + 1) img.emplace_back(other(v.i, v.j - 1), c);
        break;
      case Generator::Kind::Conjugation: {
        // ((1 + cE_{i,i+1}) X (1 − cE_{i,i+1}))_{ab}
        const int i = g.index;
        if (v.i == i) img.emplace_back(other(i + 1, v.j), c);
        if (v.j == i + 1) {
          img.emplace_back(other(v.i, i), -c);
          if (v.i == i) img.emplace_back(other(i + 1, i), -c * c);
        }
        break;
      }
    }
  }
  return sub;
}

inline Polynomial apply_generator(const Polynomial& p, const Generator& g, const Rational& c) {
  return substitute_linear(p, generator_substitution(p.dims(), g, c));
}

/// Deterministic pseudorandom point with entries in {-2..2} scaled by distinct primes.
inline MatrixTuple random_point(const RingDims& d, std::uint64_t seed) {
  static constexpr int primes[] = {1, 2, 3, 5, 7, 11, 13};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-2, 2);
  MatrixTuple pt;
  for (int l = 0; l < d.m; ++l) {
    Matrix a(d.rows, d.cols);
    for (int i = 0; i < d.rows; ++i) {
      for (int j = 0; j < d.cols; ++j) a(i, j) = dist(rng) * primes[(i + j + l) % 7];
    }
    pt.mats.push_back(std::move(a));
  }
  return pt;
}

struct InvarianceResult {
  bool invariant = true;
  std::optional<Generator> generator;
  Rational c;
  std::optional<MatrixTuple> point;  // where g·p − p is nonzero, if one was found
};

/// Proves U-invariance: for every generator g and c = 1..N (N exceeding the
/// degree in c of g(c)·p − p) the difference is checked to vanish
/// identically. A polynomial in c of degree < N vanishing at N points is zero.
inline InvarianceResult unipotent_invariance_proof(const Polynomial& p, Action action = Action::LeftRight) {
  InvarianceResult res;
  if (p.is_zero()) return res;
  const int deg = p.degree();
  const int points = (action == Action::Conjugation ? 2 * deg : deg) + 1;
  for (const auto& g : unipotent_generators(p.dims(), action)) {
    for (int c = 1; c <= points; ++c) {
      Polynomial diff = apply_generator(p, g, c) - p;
      if (diff.is_zero()) continue;
      res.invariant = false;
      res.generator = g;
      res.c = c;
      for (std::uint64_t seed = 0; seed < 16; ++seed) {
        auto pt = random_point(p.dims(), seed);
        if (evaluate(diff, pt) != 0) {
          res.point = pt;
          break;
        }
      }
      return res;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Polynomial substitution (used by the pullbacks).
// ---------------------------------------------------------------------------

/// p(x ↦ images[x]) where every image lives on the ring `target`.
inline Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images, const RingDims& target) {
  require(static_cast<int>(images.size()) == p.dims().num_vars(), "substitution needs one image per variable");
  Polynomial out(target);
  std::map<std::pair<int, int>, Polynomial> powers;
  auto power = [&](int v, int e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Polynomial acc = Polynomial::constant(target, 1);
    for (int k = 0; k < e; ++k) acc = acc * images[v];
    return powers.emplace(key, std::move(acc)).first->second;
  };
  for (const auto& [mono, c] : p.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t k = 0; k < mono.size();) {
      std::size_t e = k;
      while (e < mono.size() && mono[e] == mono[k]) ++e;
      term = term * power(mono[k], static_cast<int>(e - k));
      k = e;
    }
    out = out + term;
  }
  return out;
}

}  // namespace hwv
