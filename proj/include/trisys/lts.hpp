#pragma once

// Lie triple systems, Lie algebras, their representations and 3-cocycles,
// stored as structure-coefficient tensors over a chosen basis. Axiom checks
// iterate all basis tuples (complete by multilinearity) and return violation
// reports as data; only declared preconditions throw.

#include "trisys/check.hpp"
#include "trisys/multimap.hpp"

#include <string>
#include <vector>

namespace trisys {

std::vector<std::string> default_labels(int dim, const std::string& stem = "e");

/// Lie algebra by structure constants: [e_i, e_j] = sum_k c2(i,j;k) e_k.
struct LieAlg {
  int dim = 0;
  std::vector<std::string> labels;
  MultiMap bracket;  // arity 2, dim -> dim

  LieAlg() = default;
  explicit LieAlg(int d)
      : dim(d), labels(default_labels(d)), bracket(2, d, d) {}
};

/// Lie triple system: [e_i, e_j, e_k] = sum_l c3(i,j,k;l) e_l.
struct Lts {
  int dim = 0;
  std::vector<std::string> labels;
  MultiMap bracket;  // arity 3, dim -> dim

  Lts() = default;
  explicit Lts(int d) : dim(d), labels(default_labels(d)), bracket(3, d, d) {}

  Vector bracket_of(const Vector& x, const Vector& y, const Vector& z) const {
    const Vector args[3] = {x, y, z};
    return bracket.eval(std::span<const Vector>(args, 3));
  }
};

/// Representation of a L.t.s on M: theta(e_i, e_j) as endomorphism matrices.
struct Rep {
  int dim_m = 0;
  std::vector<Matrix> theta;  // dim_l * dim_l entries, each dim_m x dim_m

  Rep() = default;
  Rep(int dim_l, int dm)
      : dim_m(dm),
        theta(static_cast<size_t>(dim_l) * dim_l, Matrix::Zero(dm, dm)),
        dim_l_(dim_l) {}

  int dim_l() const { return dim_l_; }
  Matrix& th(int i, int j) { return theta[static_cast<size_t>(i) * dim_l_ + j]; }
  const Matrix& th(int i, int j) const {
    return theta[static_cast<size_t>(i) * dim_l_ + j];
  }
  Matrix d_op(int i, int j) const { return th(j, i) - th(i, j); }

 private:
  int dim_l_ = 0;
};

/// 3-cochain H: tensor^3 L -> M used as twisting datum.
struct ThreeCocycle {
  MultiMap h;  // arity 3, dim_l -> dim_m

  ThreeCocycle() = default;
  ThreeCocycle(int dim_l, int dim_m) : h(3, dim_l, dim_m) {}
};

/// Lie-algebra representation rho: L -> End(M).
struct LieRep {
  int dim_m = 0;
  std::vector<Matrix> rho;  // dim_l entries

  LieRep() = default;
  LieRep(int dim_l, int dm)
      : dim_m(dm), rho(static_cast<size_t>(dim_l), Matrix::Zero(dm, dm)) {}
};

/// Skew bilinear phi: L x L -> M with the Chevalley-Eilenberg 2-cocycle law.
struct LieTwoCocycle {
  MultiMap phi;  // arity 2, dim_l -> dim_m

  LieTwoCocycle() = default;
  LieTwoCocycle(int dim_l, int dim_m) : phi(2, dim_l, dim_m) {}
};

// ---- evaluation helpers (zero entries of vector arguments are skipped) ----

/// theta(x, y) u for coordinate vectors x, y in L and u in M.
Vector apply_theta(const Rep& rep, const Vector& x, const Vector& y,
                   const Vector& u);
/// D(x, y) u = theta(y, x) u - theta(x, y) u.
Vector apply_d(const Rep& rep, const Vector& x, const Vector& y,
               const Vector& u);
/// Matrix-vector product that skips zero vector entries.
Vector apply_mat(const Matrix& m, const Vector& v);

Vector basis_vec(int dim, int i);

/// D(e_i, e_j) and R(e_i, e_j) = [., e_i, e_j] as matrices on L.
Matrix lts_d_op(const Lts& l, int i, int j);
Matrix lts_r_op(const Lts& l, int i, int j);

// ---- axiom checks (reports are data; nothing throws) ----

CheckReport check_lie(const LieAlg& g);
CheckReport check_lts(const Lts& l);
CheckReport check_rep(const Lts& l, const Rep& m);
CheckReport check_lie_rep(const LieAlg& g, const LieRep& r);
CheckReport check_lie_two_cocycle(const LieAlg& g, const LieRep& r,
                                  const LieTwoCocycle& phi);

// ---- constructions ----

/// theta(x, y) z = [z, x, y]; requires check_lts to pass.
Rep regular_rep(const Lts& l);

/// [x, y, z] := [[x, y], z]; requires check_lie to pass.
Lts lie_to_lts(const LieAlg& g);

/// theta_rho(x, y) = rho(y) rho(x); requires both Lie checks to pass.
Rep lie_rep_to_lts_rep(const LieAlg& g, const LieRep& r);

/// Twisted semidirect product bracket on L + M; preconditions (L, M, H all
/// pass their checks) are enforced.
Lts twisted_semidirect(const Lts& l, const Rep& m, const ThreeCocycle& h);

/// Same bracket with no precondition checks (used internally, e.g. by the
/// graph characterization, which must run on unverified T).
Lts twisted_semidirect_unchecked(const Lts& l, const Rep& m,
                                 const ThreeCocycle& h);

/// omega(x, y, z) = phi([x, y], z) - rho(z) phi(x, y); requires phi to pass
/// the Lie 2-cocycle check.
ThreeCocycle lie_two_cocycle_to_lts_three_cocycle(const LieAlg& g,
                                                  const LieRep& r,
                                                  const LieTwoCocycle& phi);

void require_ok(const CheckReport& report, const std::string& what);

}  // namespace trisys
