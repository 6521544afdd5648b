#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hwv {

/// Raised when an input violates a documented precondition (shape mismatch,
/// size bound exceeded, ambient dimensions too small, ...).
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed object fails a structural check that the theory
/// guarantees (e.g. a picture that should be unique is not).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ConstraintError(what);
}

namespace limits {

namespace detail {
inline int env_override(int fallback) {
  if (const char* v = std::getenv("HWV_MAX_T")) {
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    if (end != v && parsed > 0 && parsed < 64) return static_cast<int>(parsed);
  }
  return fallback;
}
}  // namespace detail

/// Largest t for which group algebra elements of Sym_t are expanded (8! terms).
inline int group_algebra_max_t() { return detail::env_override(8); }

/// Largest t for the explicit highest weight vector constructions.
inline int construction_max_t() { return detail::env_override(6); }

/// Largest t for character tables.
inline constexpr int character_max_t = 10;

/// Monomial-space size above which the brute-force oracles refuse to run.
inline constexpr std::size_t brute_force_max_monomials = 20000;

/// Default instance bounds for the nilpotent-cone brute force.
inline constexpr int nilcone_max_n = 4;
inline constexpr int nilcone_max_degree = 6;

}  // namespace limits
}  // namespace hwv
