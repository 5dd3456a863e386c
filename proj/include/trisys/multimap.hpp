#pragma once

// Dense multilinear maps V^arity -> W by structure coefficients, and the
// constrained Yamaguti cochain subspaces. Indexing is lexicographic in the
// input tuple with the output coordinate innermost.

#include "trisys/errors.hpp"
#include "trisys/exactlin.hpp"

#include <span>
#include <vector>

namespace trisys {

class MultiMap {
 public:
  MultiMap() = default;
  MultiMap(int arity, int dim_in, int dim_out)
      : arity_(arity), dim_in_(dim_in), dim_out_(dim_out),
        coeffs_(flat_size(arity, dim_in, dim_out)) {}

  static long long flat_size(int arity, int dim_in, int dim_out) {
    long long n = dim_out;
    for (int k = 0; k < arity; ++k) n *= dim_in;
    return n;
  }

  int arity() const { return arity_; }
  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  long long tuple_count() const {
    long long n = 1;
    for (int k = 0; k < arity_; ++k) n *= dim_in_;
    return n;
  }

  long long flat_index(std::span<const int> idx) const {
    long long f = 0;
    for (int k = 0; k < arity_; ++k) f = f * dim_in_ + idx[k];
    return f;
  }

  Rational& at(std::span<const int> idx, int out) {
    return coeffs_[static_cast<size_t>(flat_index(idx) * dim_out_ + out)];
  }
  const Rational& at(std::span<const int> idx, int out) const {
    return coeffs_[static_cast<size_t>(flat_index(idx) * dim_out_ + out)];
  }

  Rational* cell(long long flat) {
    return coeffs_.data() + static_cast<size_t>(flat * dim_out_);
  }
  const Rational* cell(long long flat) const {
    return coeffs_.data() + static_cast<size_t>(flat * dim_out_);
  }

  /// Value on a basis tuple as a coordinate vector in W.
  Vector value(std::span<const int> idx) const;

  /// Full multilinear evaluation on coordinate vectors (zero entries are
  /// skipped, so sparse arguments stay cheap).
  Vector eval(std::span<const Vector> args) const;

  /// Evaluation with exactly one vector argument, the others basis indices;
  /// `slot` is 0-based. Used by coboundary formulas.
  Vector eval_one_vector(std::span<const int> idx, int slot,
                         const Vector& v) const;

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::vector<Rational>& coeffs() { return coeffs_; }

  /// Coefficients as one column vector (the canonical flattening).
  Vector to_vector() const;
  static MultiMap from_vector(int arity, int dim_in, int dim_out,
                              const Vector& v);

  bool is_zero() const;

  MultiMap& operator+=(const MultiMap& o);
  MultiMap& operator-=(const MultiMap& o);
  MultiMap& operator*=(const Rational& c);
  friend MultiMap operator+(MultiMap a, const MultiMap& b) { return a += b; }
  friend MultiMap operator-(MultiMap a, const MultiMap& b) { return a -= b; }
  friend MultiMap operator*(const Rational& c, MultiMap a) { return a *= c; }
  friend bool operator==(const MultiMap& a, const MultiMap& b) {
    return a.arity_ == b.arity_ && a.dim_in_ == b.dim_in_ &&
           a.dim_out_ == b.dim_out_ && a.coeffs_ == b.coeffs_;
  }

  /// Same map with input slots a and b exchanged.
  MultiMap swapped(int slot_a, int slot_b) const;

 private:
  int arity_ = 0;
  int dim_in_ = 0;
  int dim_out_ = 0;
  std::vector<Rational> coeffs_;
};

/// Advances a mixed-radix tuple; returns false after the last one.
inline bool next_tuple(std::span<int> idx, int dim) {
  for (int k = static_cast<int>(idx.size()) - 1; k >= 0; --k) {
    if (++idx[k] < dim) return true;
    idx[k] = 0;
  }
  return false;
}

struct ConstraintResidual {
  bool ok = true;
  Rational residual;        // first violated entry's value
  std::vector<int> where;   // basis tuple of the first violation
  int out_index = -1;
};

/// The two Yamaguti cochain constraints for a level-n cochain (arity 2n+1):
/// vanishing on a repeated argument in slots 2n-1, 2n and vanishing cyclic
/// sum over the last three slots. Level 0 is unconstrained.
ConstraintResidual constraint_residual(const MultiMap& psi, int level);

struct CochainSpaceBasis {
  int level = 0;  // arity = 2*level + 1
  long long ambient_dim = 0;
  std::vector<MultiMap> basis;
};

/// Canonical basis of the constrained cochain space, read off the RREF kernel
/// of the stacked constraint matrix.
CochainSpaceBasis cochain_space_basis(int dim_in, int dim_out, int level,
                                      long long budget = kDefaultBudget);

/// The constraint rows restricted to the last three input slots (the full
/// constraint matrix is block diagonal with this block).
Matrix last_three_constraint_block(int d);

}  // namespace trisys
