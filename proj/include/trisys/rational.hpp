#pragma once

// Exact rational scalar used everywhere in trisys. Values are kept canonical
// (gcd-reduced, positive denominator); GMP guarantees this for all arithmetic
// results, and the parser canonicalizes on entry.

#include <gmpxx.h>

#include <Eigen/Core>

#include <optional>
#include <string>
#include <string_view>

namespace trisys {

using Rational = mpq_class;

/// n/d with canonicalization (mpq_class(n,d) alone does not reduce).
inline Rational frac(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return ::sgn(q) == 0; }

/// Canonical text form: "p" or "p/q" with q > 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Strict literal grammar: '-'? digit+ ('/' digit+)? with nonzero denominator.
/// Non-canonical inputs such as "2/4" are accepted and reduced.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace trisys

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Literal = mpq_class;
  using Nested = mpq_class;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 120,
    MulCost = 100
  };
};

}  // namespace Eigen
