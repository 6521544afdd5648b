#pragma once

// Dimension oracles independent of the explicit constructions.

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hwv/combinatorics.hpp"
#include "hwv/config.hpp"
#include "hwv/linalg.hpp"
#include "hwv/polyring.hpp"
#include "hwv/rational.hpp"

namespace hwv {

// ---------------------------------------------------------------------------
// Symmetric group characters (Murnaghan–Nakayama on beta-sets).
// ---------------------------------------------------------------------------

namespace detail {

inline Integer mn_character(std::vector<int> beta, const std::vector<int>& cls, std::size_t pos,
                            std::map<std::pair<std::vector<int>, std::size_t>, Integer>& memo) {
  if (pos == cls.size()) return 1;
  auto key = std::make_pair(beta, pos);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const int k = cls[pos];
  std::set<int> present(beta.begin(), beta.end());
  Integer total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i], nb = b - k;
    if (nb < 0 || present.count(nb)) continue;
    int between = 0;
    for (int x : beta) between += (x > nb && x < b);
    auto next = beta;
    next[i] = nb;
    std::sort(next.begin(), next.end(), std::greater<>());
    Integer v = mn_character(next, cls, pos + 1, memo);
    if (between % 2) total -= v; else total += v;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

/// χ^λ evaluated on the class of cycle type ρ.
inline Integer character(const Partition& lambda, const Partition& rho) {
  require(lambda.size() == rho.size(), "character needs partitions of equal size");
  require(lambda.size() <= limits::character_max_t, "character size bound exceeded");
  static std::mutex mu;
  std::vector<int> beta;
  const int len = lambda.length();
  for (int i = 0; i < len; ++i) beta.push_back(lambda[i] + (len - 1 - i));
  // Memo entries depend on the class being removed, so keep one table per class.
  static std::map<std::vector<int>, std::map<std::pair<std::vector<int>, std::size_t>, Integer>> per_class;
  std::lock_guard<std::mutex> lock(mu);
  return detail::mn_character(beta, rho.parts(), 0, per_class[rho.parts()]);
}

/// z_ρ = Π i^{m_i} m_i!.
inline Integer centralizer_order(const Partition& rho) {
  std::map<int, int> mult;
  for (int p : rho.parts()) ++mult[p];
  Integer z = 1;
  for (const auto& [i, m] : mult) {
    for (int k = 1; k <= m; ++k) z *= Integer(i) * k;
  }
  return z;
}

/// g_{λμη} = Σ_ρ χ^λ(ρ) χ^μ(ρ) χ^η(ρ) / z_ρ.
inline Integer kronecker(const Partition& lambda, const Partition& mu, const Partition& eta) {
  const int t = lambda.size();
  require(mu.size() == t && eta.size() == t, "Kronecker coefficients need partitions of equal size");
  Rational sum = 0;
  for (const auto& rho : partitions_of(t)) {
    Integer num = character(lambda, rho) * character(mu, rho) * character(eta, rho);
    sum += Rational(num) / Rational(centralizer_order(rho));
  }
  if (sum.get_den() != 1) throw VerificationError("Kronecker coefficient is not an integer");
  return sum.get_num();
}

/// Coefficient of z^ν in s_λ ∗ s_μ (z_1..z_m): Σ_η g_{λμη} K_{η,ν}.
inline Integer multigraded_multiplicity(const Partition& lambda, const Partition& mu, const std::vector<int>& nu) {
  if (lambda.size() != mu.size()) return 0;
  int sum = 0;
  for (int v : nu) {
    require(v >= 0, "multidegree entries must be nonnegative");
    sum += v;
  }
  if (sum != lambda.size()) return 0;
  Integer total = 0;
  for (const auto& eta : partitions_of(lambda.size())) {
    if (eta.length() > static_cast<int>(nu.size())) continue;
    Integer g = kronecker(lambda, mu, eta);
    if (g != 0) total += g * kostka_number(eta, nu);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Brute-force highest weight vectors on Mat_{r×s}^m.
// ---------------------------------------------------------------------------

/// Monomials of multidegree ν in which row i occurs row_count[i] times and
/// column j occurs col_count[j] times.
inline std::vector<Monomial> weighted_monomials(const RingDims& d, const std::vector<int>& nu,
                                                std::vector<int> row_count, std::vector<int> col_count,
                                                std::size_t limit) {
  std::vector<Monomial> out;
  std::vector<int> comp = nu;
  Monomial cur;
  const int nv = d.num_vars();
  std::function<void(int)> rec = [&](int start) {
    bool done = std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
    if (done) {
      if (std::all_of(row_count.begin(), row_count.end(), [](int c) { return c == 0; }) &&
          std::all_of(col_count.begin(), col_count.end(), [](int c) { return c == 0; })) {
        out.push_back(cur);
        if (out.size() > limit) throw ConstraintError("brute force instance too large");
      }
      return;
    }
    for (int v = start; v < nv; ++v) {
      auto id = var_id(d, v);
      if (comp[id.l - 1] == 0 || row_count[id.i - 1] == 0 || col_count[id.j - 1] == 0) continue;
      // Components are filled in order, so skip past finished ones.
      bool earlier_open = false;
      for (int l = 0; l < id.l - 1; ++l) earlier_open |= comp[l] > 0;
      if (earlier_open) break;
      --comp[id.l - 1];
      --row_count[id.i - 1];
      --col_count[id.j - 1];
      cur.push_back(v);
      rec(v);
      cur.pop_back();
      ++comp[id.l - 1];
      ++row_count[id.i - 1];
      ++col_count[id.j - 1];
    }
  };
  rec(0);
  return out;
}

/// dim of U_r×U_s-invariants of multidegree ν and weight (−μ^rev, λ), as the
/// exact kernel of p ↦ (g(c)·p − p) over all generators g and c = 1..deg+1.
inline std::size_t brute_force_hwv_dim(int r, int s, int m, const std::vector<int>& nu, const Partition& lambda,
                                       const Partition& mu) {
  require(static_cast<int>(nu.size()) == m, "multidegree must have m entries");
  if (lambda.size() != mu.size()) return 0;
  if (mu.length() > r || lambda.length() > s) return 0;
  const RingDims d{m, r, s};
  std::vector<int> rows(r, 0), cols(s, 0);
  for (int i = 1; i <= r; ++i) rows[i - 1] = mu[r - i];
  for (int j = 1; j <= s; ++j) cols[j - 1] = lambda[j - 1];
  auto monos = weighted_monomials(d, nu, rows, cols, limits::brute_force_max_monomials);
  if (monos.empty()) return 0;
  const int deg = static_cast<int>(monos.front().size());
  auto gens = unipotent_generators(d, Action::LeftRight);
  std::vector<std::vector<LinearSubstitution>> subs;
  for (const auto& g : gens) {
    std::vector<LinearSubstitution> per_c;
    for (int c = 1; c <= deg + 1; ++c) per_c.push_back(generator_substitution(d, g, c));
    subs.push_back(std::move(per_c));
  }
  Indexer<std::pair<int, Monomial>> idx;
  RowEchelon ech;
  for (const auto& mono : monos) {
    Polynomial p(d);
    p.add_term(mono, 1);
    SparseRatRow row;
    int block = 0;
    for (const auto& per_c : subs) {
      for (const auto& sub : per_c) {
        Polynomial diff = substitute_linear(p, sub) - p;
        for (const auto& [mm, c] : diff.terms()) row.emplace_back(idx({block, mm}), c);
        ++block;
      }
    }
    ech.insert(row);
  }
  return monos.size() - ech.rank();
}

// ---------------------------------------------------------------------------
// Nilpotent cone.
// ---------------------------------------------------------------------------

inline bool is_dominant(const std::vector<int>& chi) {
  for (std::size_t i = 1; i < chi.size(); ++i) {
    if (chi[i] > chi[i - 1]) return false;
  }
  return true;
}

/// [λ, μ] padded to length n.
inline std::vector<int> weight_from_pair(const Partition& lambda, const Partition& mu, int n) {
  require(lambda.length() + mu.length() <= n, "[λ,μ] needs l(λ) + l(μ) ≤ n");
  std::vector<int> chi(n, 0);
  for (int i = 0; i < lambda.length(); ++i) chi[i] = lambda[i];
  for (int i = 0; i < mu.length(); ++i) chi[n - 1 - i] -= mu[i];
  return chi;
}

/// s_k = sum of the principal k×k minors of X, on the ring (1, n, n).
inline Polynomial principal_minor_sum(int n, int k) {
  const RingDims d{1, n, n};
  Polynomial out(d);
  std::vector<int> choose(n, 0);
  std::fill(choose.end() - k, choose.end(), 1);
  do {
    std::vector<int> idx;
    for (int a = 0; a < n; ++a) {
      if (choose[a]) idx.push_back(a + 1);
    }
    std::vector<int> perm(k);
    for (int a = 0; a < k; ++a) perm[a] = a;
    do {
      int inv = 0;
      for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) inv += perm[a] > perm[b];
      }
      Monomial mono;
      for (int a = 0; a < k; ++a) mono.push_back(var_index(d, {1, idx[a], idx[perm[a]]}));
      out.add_term(mono, inv % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::next_permutation(choose.begin(), choose.end()));
  return out;
}

namespace detail {

/// Degree-d monomials on Mat_n grouped by conjugation weight.
inline const std::map<std::vector<int>, std::vector<Monomial>>& monomials_by_weight(int n, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::map<std::vector<int>, std::vector<Monomial>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::map<std::vector<int>, std::vector<Monomial>> out;
  const RingDims dims{1, n, n};
  Monomial cur;
  std::vector<int> w(n, 0);
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (left == 0) {
      out[w].push_back(cur);
      return;
    }
    for (int v = start; v < dims.num_vars(); ++v) {
      auto id = var_id(dims, v);
      --w[id.i - 1];
      ++w[id.j - 1];
      cur.push_back(v);
      rec(v, left - 1);
      cur.pop_back();
      ++w[id.i - 1];
      --w[id.j - 1];
    }
  };
  rec(0, d);
  return cache.emplace(key, std::move(out)).first->second;
}

inline const std::vector<Monomial>& monomials_of(int n, int d, const std::vector<int>& w) {
  static const std::vector<Monomial> none;
  const auto& all = monomials_by_weight(n, d);
  auto it = all.find(w);
  return it == all.end() ? none : it->second;
}

/// Spanning rows of the degree-d, weight-w slice of the ideal (s_1, ..., s_n).
inline std::vector<SparseRatRow> ideal_slice(int n, int d, const std::vector<int>& w,
                                             const std::vector<Polynomial>& s, Indexer<Monomial>& idx) {
  std::vector<SparseRatRow> rows;
  const RingDims dims{1, n, n};
  for (int k = 1; k <= n && k <= d; ++k) {
    for (const auto& mono : monomials_of(n, d - k, w)) {
      Polynomial base(dims);
      base.add_term(mono, 1);
      Polynomial prod = s[k - 1] * base;
      SparseRatRow row;
      for (const auto& [mm, c] : prod.terms()) row.emplace_back(idx(mm), c);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace detail

/// dim of degree-d weight-χ U_n-invariants in k[Mat_n]/(s_1, ..., s_n), by
/// exact linear algebra with the raising derivations
/// D_i f = Σ_b x_{i+1,b} ∂f/∂x_{i,b} − Σ_a x_{a,i} ∂f/∂x_{a,i+1}.
inline std::size_t brute_force_nilcone_hwv_dim(int n, const std::vector<int>& chi, int d,
                                               int max_n = limits::nilcone_max_n,
                                               int max_d = limits::nilcone_max_degree) {
  require(static_cast<int>(chi.size()) == n, "weight must have length n");
  require(n <= max_n && d <= max_d, "nilpotent cone brute force instance too large");
  require(d >= 0, "degree must be nonnegative");
  const RingDims dims{1, n, n};
  const auto& monos = detail::monomials_of(n, d, chi);
  if (monos.empty()) return 0;
  std::vector<Polynomial> s;
  for (int k = 1; k <= n; ++k) s.push_back(principal_minor_sum(n, k));

  // Rank of the ideal in weight χ.
  Indexer<Monomial> idx_chi;
  RowEchelon ideal_chi;
  for (auto& row : detail::ideal_slice(n, d, chi, s, idx_chi)) ideal_chi.insert(row);

  // Target: ⊕_i V_{χ+α_i}, columns keyed by (i, monomial).
  Indexer<std::pair<int, Monomial>> idx;
  RowEchelon target;
  for (int i = 1; i < n; ++i) {
    auto w = chi;
    ++w[i - 1];
    --w[i];
    for (int k = 1; k <= n && k <= d; ++k) {
      for (const auto& mono : detail::monomials_of(n, d - k, w)) {
        Polynomial base(dims);
        base.add_term(mono, 1);
        Polynomial prod = s[k - 1] * base;
        SparseRatRow row;
        for (const auto& [mm, c] : prod.terms()) row.emplace_back(idx({i, mm}), c);
        target.insert(row);
      }
    }
  }
  const std::size_t ideal_rank = target.rank();

  for (const auto& mono : monos) {
    SparseRatRow row;
    for (int i = 1; i < n; ++i) {
      // Apply D_i to the monomial: for each factor x_{ab}, replace it.
      for (std::size_t k = 0; k < mono.size(); ++k) {
        if (k > 0 && mono[k] == mono[k - 1]) continue;
        int mult = static_cast<int>(std::count(mono.begin(), mono.end(), mono[k]));
        auto id = var_id(dims, mono[k]);
        auto replace = [&](int a, int b, int sign) {
          Monomial mm = mono;
          mm.erase(mm.begin() + static_cast<long>(k));
          mm.push_back(var_index(dims, {1, a, b}));
          std::sort(mm.begin(), mm.end());
          row.emplace_back(idx({i, mm}), Rational(sign * mult));
        };
        if (id.i == i) replace(i + 1, id.j, 1);
        if (id.j == i + 1) replace(id.i, i, -1);
      }
    }
    target.insert(row);
  }
  const std::size_t combined = target.rank();
  return monos.size() - (combined - ideal_rank) - ideal_chi.rank();
}

/// Affine map d = a·charge + b from charge to degree in k[N_n].
struct DegreeMap {
  int a = 1;
  int b = 0;
  bool operator==(const DegreeMap&) const = default;
};

struct GradedDimension {
  QPolynomial poly;
  DegreeMap map;
};

/// Charge generating function Σ q^{charge(T)} over semistandard T of shape
/// λ̄ = χ + s·1_n and weight s·1_n, with s = −χ_n.
inline QPolynomial nilcone_charge_polynomial(const std::vector<int>& chi) {
  require(!chi.empty(), "weight must be nonempty");
  require(is_dominant(chi), "weight must be dominant");
  int sum = 0;
  for (int v : chi) sum += v;
  require(sum == 0, "weight must have coordinate sum zero");
  const int n = static_cast<int>(chi.size());
  const int s = -chi.back();
  std::vector<int> lb;
  for (int v : chi) lb.push_back(v + s);
  return kostka_polynomial(Partition(lb), Partition(std::vector<int>(n, s)));
}

inline QPolynomial apply_degree_map(const QPolynomial& k, const DegreeMap& map) {
  QPolynomial out;
  for (const auto& [d, c] : k.coeffs) out.add(map.a * d + map.b, c);
  return out;
}

/// Dominant weights of length n with coordinate sum zero and Σχ_+ ≤ bound.
inline std::vector<std::vector<int>> dominant_zero_sum_weights(int n, int bound) {
  std::vector<std::vector<int>> out;
  for (int pos = 0; pos <= bound; ++pos) {
    for (const auto& lam : partitions_of(pos, n)) {
      for (const auto& mu : partitions_of(pos, n)) {
        if (lam.length() + mu.length() > n) continue;
        out.push_back(weight_from_pair(lam, mu, n));
      }
    }
  }
  return out;
}

struct Calibration {
  DegreeMap map;
  std::size_t instances = 0;
};

/// Fits d = a·charge + b (a = ±1, |b| ≤ 12) against the brute-force nilcone
/// dimensions (n ≤ 3, d ≤ 5) and against the closed form K̃_{λ̄',1^n} for
/// χ_n ≥ −1 (n ≤ 5). Throws unless exactly one map fits.
inline Calibration calibrate_degree_map() {
  static std::mutex mu;
  static std::optional<Calibration> cached;
  std::lock_guard<std::mutex> lock(mu);
  if (cached) return *cached;
  std::vector<DegreeMap> candidates;
  for (int a : {1, -1}) {
    for (int b = -12; b <= 12; ++b) candidates.push_back({a, b});
  }
  std::size_t instances = 0;
  auto keep = [&](auto&& ok) {
    std::erase_if(candidates, [&](const DegreeMap& m) { return !ok(m); });
    ++instances;
  };
  const int max_d = 5;
  for (int n = 2; n <= 3; ++n) {
    for (const auto& chi : dominant_zero_sum_weights(n, 3)) {
      auto k = nilcone_charge_polynomial(chi);
      std::vector<std::size_t> brute(max_d + 1);
      for (int d = 0; d <= max_d; ++d) brute[d] = brute_force_nilcone_hwv_dim(n, chi, d);
      keep([&](const DegreeMap& m) {
        auto g = apply_degree_map(k, m);
        for (int d = 0; d <= max_d; ++d) {
          if (g.coefficient(d) != Integer(static_cast<unsigned long>(brute[d]))) return false;
        }
        return true;
      });
    }
  }
  for (int n = 2; n <= 5; ++n) {
    for (const auto& chi : dominant_zero_sum_weights(n, 4)) {
      if (chi.back() < -1) continue;
      std::vector<int> lb;
      for (int v : chi) lb.push_back(v + 1);
      auto closed = modified_kostka_polynomial(transpose(Partition(lb)), Partition(std::vector<int>(n, 1)));
      auto k = nilcone_charge_polynomial(chi);
      keep([&](const DegreeMap& m) { return apply_degree_map(k, m) == closed; });
    }
  }
  if (candidates.size() != 1) {
    throw VerificationError("degree map calibration found " + std::to_string(candidates.size()) +
                            " consistent affine maps");
  }
  cached = Calibration{candidates.front(), instances};
  return *cached;
}

/// Graded dimension of k[N_n]^{U_n}_χ.
inline GradedDimension graded_nilcone_dim(const std::vector<int>& chi) {
  auto k = nilcone_charge_polynomial(chi);
  auto cal = calibrate_degree_map();
  return {apply_degree_map(k, cal.map), cal.map};
}

}  // namespace hwv
