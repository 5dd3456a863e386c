#pragma once

// The Yamaguti cochain complex of a L.t.sRep pair: generic coboundary
// delta^{2n-1}, cocycle/coboundary queries, cohomology dimensions and the
// 3-cocycle checker. Level conventions: a level-n cochain has arity 2n+1
// (level 0 = Hom(L, M)); delta(n, .) maps arity 2n-1 to arity 2n+1.

#include "trisys/lts.hpp"

#include <map>
#include <optional>

namespace trisys {

struct CohomologyDims {
  Index z = 0;
  Index b = 0;
  Index h = 0;
};

/// phi: L -> M as an arity-1 MultiMap.
MultiMap multimap_from_matrix(const Matrix& m);
Matrix matrix_from_multimap1(const MultiMap& m);

class YamagutiComplex {
 public:
  /// Requires check_lts and check_rep to pass.
  YamagutiComplex(Lts l, Rep m, long long budget = kDefaultBudget);

  /// For pairs the caller has already verified (e.g. induced pairs whose
  /// axioms were just re-proved).
  struct already_verified_t {};
  YamagutiComplex(already_verified_t, Lts l, Rep m,
                  long long budget = kDefaultBudget);

  const Lts& lts() const { return l_; }
  const Rep& rep() const { return m_; }
  long long budget() const { return budget_; }

  /// Yamaguti coboundary delta^{2n-1}, n >= 1. Input of arity 2n-1 (for
  /// n >= 2 it must satisfy the cochain constraints), dense output of arity
  /// 2n+1.
  MultiMap delta(int n, const MultiMap& psi) const;

  bool is_cocycle(int level, const MultiMap& psi) const;

  /// Solves delta = psi over the cached bases; level >= 1.
  std::optional<MultiMap> coboundary_preimage(int level,
                                              const MultiMap& psi) const;

  /// (dim Z, dim B, dim H) at the given level; B at level 0 is 0 by
  /// definition (the complex starts at C^1).
  CohomologyDims cohomology_dims(int level) const;

  const CochainSpaceBasis& basis(int level) const;

  /// Matrix of delta(n, .) from the level-(n-1) basis to the level-n basis.
  /// Verifies that every image lies in the constrained span.
  const Matrix& delta_matrix(int n) const;

  /// Coordinates of a constrained cochain in the cached canonical basis
  /// (values at the free columns); verifies membership exactly.
  Vector coordinates(int level, const MultiMap& psi) const;

 private:
  Lts l_;
  Rep m_;
  long long budget_;
  mutable std::map<int, CochainSpaceBasis> bases_;
  mutable std::map<int, std::vector<long long>> free_columns_;
  mutable std::map<int, Matrix> delta_matrices_;
};

/// Hand-coded n = 1 coboundary (Eq. 2.10 shape), kept separate from the
/// generic formula for cross-validation. phi is dim_m x dim_l.
MultiMap delta1_hand(const Lts& l, const Rep& m, const Matrix& phi);

/// Skew + cyclic + the long compatibility law, on all basis tuples.
CheckReport check_three_cocycle(const Lts& l, const Rep& m,
                                const ThreeCocycle& h);

}  // namespace trisys
