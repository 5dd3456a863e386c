#pragma once

// Maurer-Cartan machinery for generalized Reynolds operators: the closed-form
// cubic and quartic brackets on degree-zero elements, their polarizations,
// the MC residual, the twisted brackets, and the differential d_T checked
// against Lambda_T.

#include "trisys/reynolds.hpp"

namespace trisys {

/// l3(T,T,T)(u,v,w) = 6([Tu,Tv,Tw] - T(theta(Tv,Tw)u - theta(Tu,Tw)v
///                      + D(Tu,Tv)w)).
MultiMap cubic_l3(const Lts& l, const Rep& m, const Matrix& t);

/// l4(T,T,T,T)(u,v,w) = -24 T(H(Tu,Tv,Tw)).
MultiMap quartic_l4(const Lts& l, const Rep& m, const ThreeCocycle& h,
                    const Matrix& t);

/// Symmetric trilinear/quadrilinear maps recovered from the diagonals by
/// inclusion-exclusion polarization (valid in characteristic 0).
MultiMap l3_polarized(const Lts& l, const Rep& m, const Matrix& a,
                      const Matrix& b, const Matrix& c);
MultiMap l4_polarized(const Lts& l, const Rep& m, const ThreeCocycle& h,
                      const Matrix& a, const Matrix& b, const Matrix& c,
                      const Matrix& d);

/// (1/6) l3(T,T,T) + (1/24) l4(T,T,T,T); zero exactly when T is a
/// generalized Reynolds operator. Always skew in the first two slots (this
/// is asserted).
MultiMap mc_residual(const Lts& l, const Rep& m, const ThreeCocycle& h,
                     const Matrix& t);

/// MC functional of the twisted brackets l_k^T at T', assembled from the
/// polarized brackets. Requires mc_residual(t) = 0. Equals
/// mc_residual(t + t') identically.
MultiMap twisted_mc(const Lts& l, const Rep& m, const ThreeCocycle& h,
                    const Matrix& t, const Matrix& tprime);

/// d_T(f) = (1/2) l3(T,T,f) + (1/6) l4(T,T,T,f). Arity-1 cochains are
/// degree 0, so both terms come from the polarized brackets; at arity >= 3
/// the coboundary of the induced pair is the normative value, with the sign
/// (-1)^{n-1} relating it to Lambda_T.
ReynoldsCochain d_t(const ReynoldsComplex& rc, const ReynoldsCochain& f);

}  // namespace trisys
