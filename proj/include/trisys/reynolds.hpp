#pragma once

// Weighted Reynolds operators (Lie and L.t.s level), generalized Reynolds
// operators on L.t.sRep pairs, the structures they induce, the Reynolds
// cochain complex (partial_T, Lambda_T), gauge transforms and morphism
// transport.

#include "trisys/yamaguti.hpp"

#include <optional>

namespace trisys {

struct WeightedReynoldsLie {
  LieAlg carrier;
  Matrix r;
  Rational weight;  // the Lie definition requires a non-null weight
};

struct WeightedReynoldsLts {
  Lts carrier;
  Matrix r;
  Rational weight;  // any scalar
};

/// T: M -> L bundled with its ambient (L, theta, H) context.
struct GenReynolds {
  Lts l;
  Rep m;
  ThreeCocycle h;
  Matrix t;  // dim_l x dim_m
};

CheckReport check_weighted_reynolds(const WeightedReynoldsLie& op);
CheckReport check_weighted_reynolds(const WeightedReynoldsLts& op);

/// Same operator on the induced L.t.s with weight 2*lambda.
WeightedReynoldsLts weight_doubling(const WeightedReynoldsLie& op);

/// Raw descended-bracket tensor [x,y,z]_R (no preconditions; the checked
/// construction is descend_bracket).
MultiMap reynolds_bracket_tensor(const Lts& l, const Matrix& r,
                                 const Rational& weight);

struct DescendedBracket {
  WeightedReynoldsLts op;  // (L, [.,.,.]_R, R), same weight
};

/// Builds (L, [.,.,.]_R); verifies the descended L.t.s axioms, that R is a
/// morphism onto the original bracket, and that the operator passes its own
/// check again on the descended carrier.
DescendedBracket descend_bracket(const WeightedReynoldsLts& op);

CheckReport check_generalized_reynolds(const GenReynolds& g);

/// Weighted operator as a generalized Reynolds operator: regular
/// representation and H = weight * bracket.
GenReynolds embed_weighted(const WeightedReynoldsLts& op);

struct GraphCheck {
  bool ok = true;
  std::vector<int> first_failure;  // basis triple of M, when !ok
};

/// Gr(T) closed under the twisted semidirect bracket. No verification of T
/// is assumed; must agree with check_generalized_reynolds.
GraphCheck graph_subalgebra_check(const GenReynolds& g);

/// [u,v,w]_T tensor without any checks.
MultiMap induced_bracket_tensor(const GenReynolds& g);

/// The L.t.s (M, [.,.,.]_T); re-proves check_lts and the T-morphism
/// property on every call.
Lts induced_bracket(const GenReynolds& g);

/// theta_T making (L, theta_T) a representation of (M, [.,.,.]_T);
/// re-proves check_rep on every call.
Rep induced_rep_thetaT(const GenReynolds& g);

/// T_phi = T (Id + phi T)^{-1} for a T-admissible 1-cocycle phi: L -> M
/// (dim_m x dim_l). Verifies the result and that Id + phi T intertwines the
/// induced brackets.
GenReynolds admissible_gauge(const GenReynolds& g, const Matrix& phi);

/// kappa_phi = [[Id,0],[phi,Id]] as a morphism from the H-twisted to the
/// (H - delta^1 phi)-twisted semidirect product, for an arbitrary 1-cochain.
CheckReport kappa_twist_check(const Lts& l, const Rep& m, const ThreeCocycle& h,
                              const Matrix& phi);

struct MorphismWitness {
  Matrix phi;  // L -> L
  Matrix psi;  // M -> M
};

/// c1-c3 plus phi being a L.t.s morphism, from g to g2.
CheckReport morphism_check(const GenReynolds& g, const GenReynolds& g2,
                           const MorphismWitness& w);

/// Reynolds cochains: level 0 holds a pair chi in L (x) L (as a dim_l^2
/// vector); odd levels hold a multilinear map of that arity, M^arity -> L.
struct ReynoldsCochain {
  int level = 0;  // 0, 1, 3, 5, ...
  Vector chi;     // level 0 payload
  MultiMap f;     // payload for level >= 1 (arity == level)

  static ReynoldsCochain pair(Vector chi_pair) {
    return {0, std::move(chi_pair), {}};
  }
  static ReynoldsCochain map(MultiMap m) {
    return {m.arity(), {}, std::move(m)};
  }
};

/// Projection L (x) L -> L wedge L inside the pair space.
Vector skew_pair_projection(const Vector& chi, int dim_l);

/// The cochain complex of a verified generalized Reynolds operator: the
/// Yamaguti complex of (M, [.,.,.]_T) with coefficients in (L, theta_T),
/// prefixed by partial_T on pairs.
class ReynoldsComplex {
 public:
  explicit ReynoldsComplex(GenReynolds g, long long budget = kDefaultBudget);

  const GenReynolds& op() const { return g_; }
  const Lts& induced_lts() const { return induced_lts_; }
  const Rep& induced_rep() const { return induced_rep_; }
  const YamagutiComplex& yamaguti() const { return yam_; }

  /// partial_T(chi): M -> L, as a dim_l x dim_m matrix.
  Matrix partial_t(const Vector& chi) const;

  /// Matrix of partial_T as a linear map L(x)L -> Hom(M, L) (column-major
  /// vec of the Hom side).
  const Matrix& partial_t_matrix() const;

  /// Lambda_T on a cochain at its level; result level is the next odd level
  /// (0 -> 1 -> 3 -> 5).
  ReynoldsCochain lambda(const ReynoldsCochain& c) const;

  /// Cohomology at odd level 1 or 3 (paper superscripts): at level 1 the
  /// coboundary space is the image of partial_T.
  CohomologyDims cohomology_dims(int level) const;

 private:
  GenReynolds g_;
  Lts induced_lts_;
  Rep induced_rep_;
  YamagutiComplex yam_;
  mutable std::optional<Matrix> partial_matrix_;
};

/// Theta transport of cochains along a morphism witness with invertible psi;
/// verified to satisfy morphism_check first.
ReynoldsCochain transport_cochain(const GenReynolds& g, const GenReynolds& g2,
                                  const MorphismWitness& w,
                                  const ReynoldsCochain& c);

}  // namespace trisys
