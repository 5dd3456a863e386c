#include "trisys/reynolds.hpp"

namespace trisys {

namespace {

void scan_nonzero(const Vector& v, const std::string& law,
                  std::vector<int> where, CheckReport& report) {
  for (Index a = 0; a < v.size(); ++a) {
    if (v(a) != 0) {
      report.add(law, std::move(where), v);
      return;
    }
  }
}

}  // namespace

CheckReport check_weighted_reynolds(const WeightedReynoldsLie& op) {
  CheckReport report{"weighted_reynolds_lie", {}};
  if (op.weight == 0) {
    report.add("weighted.lie.nonnull_weight", {}, Vector::Zero(1));
    return report;
  }
  const int d = op.carrier.dim;
  const MultiMap& br = op.carrier.bracket;
  for (int a = 0; a < d; ++a) {
    const Vector ra = op.r.col(a);
    for (int b = 0; b < d; ++b) {
      const Vector rb = op.r.col(b);
      const Vector args1[2] = {ra, rb};
      Vector lhs = br.eval(std::span<const Vector>(args1, 2));
      Vector inner = br.eval_one_vector(std::array{0, b}, 0, ra);
      inner += br.eval_one_vector(std::array{a, 0}, 1, rb);
      inner += op.weight * lhs;
      Vector diff = lhs - apply_mat(op.r, inner);
      scan_nonzero(diff, "weighted.lie.identity", {a, b}, report);
    }
  }
  return report;
}

CheckReport check_weighted_reynolds(const WeightedReynoldsLts& op) {
  CheckReport report{"weighted_reynolds_lts", {}};
  const int d = op.carrier.dim;
  const MultiMap& br = op.carrier.bracket;
  for (int a = 0; a < d; ++a) {
    const Vector ra = op.r.col(a);
    for (int b = 0; b < d; ++b) {
      const Vector rb = op.r.col(b);
      for (int c = 0; c < d; ++c) {
        const Vector rc = op.r.col(c);
        const Vector full[3] = {ra, rb, rc};
        Vector lhs = br.eval(std::span<const Vector>(full, 3));
        // [Rx,Ry,z] + [x,Ry,Rz] + [Rx,y,Rz] + weight [Rx,Ry,Rz]
        const Vector t1[3] = {ra, rb, basis_vec(d, c)};
        const Vector t2[3] = {basis_vec(d, a), rb, rc};
        const Vector t3[3] = {ra, basis_vec(d, b), rc};
        Vector inner = br.eval(std::span<const Vector>(t1, 3));
        inner += br.eval(std::span<const Vector>(t2, 3));
        inner += br.eval(std::span<const Vector>(t3, 3));
        inner += op.weight * lhs;
        Vector diff = lhs - apply_mat(op.r, inner);
        scan_nonzero(diff, "weighted.lts.identity", {a, b, c}, report);
      }
    }
  }
  return report;
}

WeightedReynoldsLts weight_doubling(const WeightedReynoldsLie& op) {
  require_ok(check_weighted_reynolds(op), "weight_doubling");
  WeightedReynoldsLts out{lie_to_lts(op.carrier), op.r, 2 * op.weight};
  require_ok(check_weighted_reynolds(out), "weight_doubling(result)");
  return out;
}

MultiMap reynolds_bracket_tensor(const Lts& l, const Matrix& r,
                                 const Rational& weight) {
  const int d = l.dim;
  MultiMap out(3, d, d);
  for (int a = 0; a < d; ++a) {
    const Vector ra = r.col(a);
    for (int b = 0; b < d; ++b) {
      const Vector rb = r.col(b);
      for (int c = 0; c < d; ++c) {
        const Vector rc = r.col(c);
        const Vector t1[3] = {ra, rb, basis_vec(d, c)};
        const Vector t2[3] = {ra, basis_vec(d, b), rc};
        const Vector t3[3] = {basis_vec(d, a), rb, rc};
        const Vector t4[3] = {ra, rb, rc};
        Vector v = l.bracket.eval(std::span<const Vector>(t1, 3));
        v += l.bracket.eval(std::span<const Vector>(t2, 3));
        v += l.bracket.eval(std::span<const Vector>(t3, 3));
        v += weight * l.bracket.eval(std::span<const Vector>(t4, 3));
        const int idx[3] = {a, b, c};
        Rational* cell = out.cell(out.flat_index(idx));
        for (int k = 0; k < d; ++k) cell[k] = v(k);
      }
    }
  }
  return out;
}

DescendedBracket descend_bracket(const WeightedReynoldsLts& op) {
  require_ok(check_weighted_reynolds(op), "descend_bracket");
  Lts descended(op.carrier.dim);
  descended.labels = op.carrier.labels;
  descended.bracket = reynolds_bracket_tensor(op.carrier, op.r, op.weight);
  require_ok(check_lts(descended), "descend_bracket(result lts)");
  // R [x,y,z]_R = [Rx, Ry, Rz]
  const int d = op.carrier.dim;
  CheckReport morph{"descend_bracket_morphism", {}};
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int c = 0; c < d; ++c) {
        const Vector t[3] = {op.r.col(a), op.r.col(b), op.r.col(c)};
        Vector diff =
            apply_mat(op.r, descended.bracket.value(std::array{a, b, c})) -
            op.carrier.bracket.eval(std::span<const Vector>(t, 3));
        scan_nonzero(diff, "descend.morphism", {a, b, c}, morph);
      }
    }
  }
  require_ok(morph, "descend_bracket(morphism)");
  DescendedBracket out{{std::move(descended), op.r, op.weight}};
  require_ok(check_weighted_reynolds(out.op), "descend_bracket(operator again)");
  return out;
}

CheckReport check_generalized_reynolds(const GenReynolds& g) {
  CheckReport report{"generalized_reynolds", {}};
  const int dm = g.m.dim_m;
  const int dl = g.l.dim;
  for (int a = 0; a < dm; ++a) {
    const Vector ta = g.t.col(a);
    for (int b = 0; b < dm; ++b) {
      const Vector tb = g.t.col(b);
      for (int c = 0; c < dm; ++c) {
        const Vector tc = g.t.col(c);
        const Vector full[3] = {ta, tb, tc};
        Vector lhs = g.l.bracket.eval(std::span<const Vector>(full, 3));
        Vector inner = apply_d(g.m, ta, tb, basis_vec(dm, c));
        inner += apply_theta(g.m, tb, tc, basis_vec(dm, a));
        inner -= apply_theta(g.m, ta, tc, basis_vec(dm, b));
        inner += g.h.h.eval(std::span<const Vector>(full, 3));
        Vector diff = lhs - apply_mat(g.t, inner);
        scan_nonzero(diff, "gen_reynolds.identity", {a, b, c}, report);
      }
    }
  }
  (void)dl;
  return report;
}

GenReynolds embed_weighted(const WeightedReynoldsLts& op) {
  require_ok(check_weighted_reynolds(op), "embed_weighted");
  GenReynolds g;
  g.l = op.carrier;
  g.m = regular_rep(op.carrier);
  g.h = ThreeCocycle(op.carrier.dim, op.carrier.dim);
  g.h.h = op.carrier.bracket;
  g.h.h *= op.weight;
  g.t = op.r;
  return g;
}

GraphCheck graph_subalgebra_check(const GenReynolds& g) {
  const int dl = g.l.dim;
  const int dm = g.m.dim_m;
  const Lts prod = twisted_semidirect_unchecked(g.l, g.m, g.h);
  auto graph_vec = [&](int a) {
    Vector v = Vector::Zero(dl + dm);
    for (int i = 0; i < dl; ++i) v(i) = g.t(i, a);
    v(dl + a) = 1;
    return v;
  };
  GraphCheck out;
  for (int a = 0; a < dm; ++a) {
    const Vector ga = graph_vec(a);
    for (int b = 0; b < dm; ++b) {
      const Vector gb = graph_vec(b);
      for (int c = 0; c < dm; ++c) {
        const Vector gc = graph_vec(c);
        const Vector args[3] = {ga, gb, gc};
        const Vector v = prod.bracket.eval(std::span<const Vector>(args, 3));
        // Membership in Gr(T): the L part must be T of the M part.
        Vector mpart(dm);
        for (int k = 0; k < dm; ++k) mpart(k) = v(dl + k);
        const Vector want = apply_mat(g.t, mpart);
        for (int i = 0; i < dl; ++i) {
          if (v(i) != want(i)) {
            out.ok = false;
            out.first_failure = {a, b, c};
            return out;
          }
        }
      }
    }
  }
  return out;
}

MultiMap induced_bracket_tensor(const GenReynolds& g) {
  const int dm = g.m.dim_m;
  MultiMap out(3, dm, dm);
  for (int a = 0; a < dm; ++a) {
    const Vector ta = g.t.col(a);
    for (int b = 0; b < dm; ++b) {
      const Vector tb = g.t.col(b);
      for (int c = 0; c < dm; ++c) {
        const Vector tc = g.t.col(c);
        Vector v = apply_theta(g.m, tb, tc, basis_vec(dm, a));
        v -= apply_theta(g.m, ta, tc, basis_vec(dm, b));
        v += apply_d(g.m, ta, tb, basis_vec(dm, c));
        const Vector full[3] = {ta, tb, tc};
        v += g.h.h.eval(std::span<const Vector>(full, 3));
        const int idx[3] = {a, b, c};
        Rational* cell = out.cell(out.flat_index(idx));
        for (int k = 0; k < dm; ++k) cell[k] = v(k);
      }
    }
  }
  return out;
}

Lts induced_bracket(const GenReynolds& g) {
  require_ok(check_generalized_reynolds(g), "induced_bracket");
  Lts out(g.m.dim_m);
  out.bracket = induced_bracket_tensor(g);
  require_ok(check_lts(out), "induced_bracket(lts axioms)");
  // T is a morphism (M, [.,.,.]_T) -> (L, [.,.,.]).
  CheckReport morph{"induced_bracket_t_morphism", {}};
  const int dm = g.m.dim_m;
  for (int a = 0; a < dm; ++a) {
    for (int b = 0; b < dm; ++b) {
      for (int c = 0; c < dm; ++c) {
        const Vector t[3] = {g.t.col(a), g.t.col(b), g.t.col(c)};
        Vector diff =
            apply_mat(g.t, out.bracket.value(std::array{a, b, c})) -
            g.l.bracket.eval(std::span<const Vector>(t, 3));
        scan_nonzero(diff, "induced.t_morphism", {a, b, c}, morph);
      }
    }
  }
  require_ok(morph, "induced_bracket(T morphism)");
  return out;
}

Rep induced_rep_thetaT(const GenReynolds& g) {
  require_ok(check_generalized_reynolds(g), "induced_rep_thetaT");
  const int dl = g.l.dim;
  const int dm = g.m.dim_m;
  Rep rep(dm, dl);
  for (int a = 0; a < dm; ++a) {
    const Vector ta = g.t.col(a);
    for (int b = 0; b < dm; ++b) {
      const Vector tb = g.t.col(b);
      Matrix th = Matrix::Zero(dl, dl);
      for (int x = 0; x < dl; ++x) {
        const Vector ex = basis_vec(dl, x);
        const Vector args[3] = {ex, ta, tb};
        Vector v = g.l.bracket.eval(std::span<const Vector>(args, 3));
        Vector inner = apply_d(g.m, ex, ta, basis_vec(dm, b));
        inner -= apply_theta(g.m, ex, tb, basis_vec(dm, a));
        inner += g.h.h.eval(std::span<const Vector>(args, 3));
        v -= apply_mat(g.t, inner);
        th.col(x) = v;
      }
      rep.th(a, b) = std::move(th);
    }
  }
  Lts induced = induced_bracket(g);
  require_ok(check_rep(induced, rep), "induced_rep_thetaT(rep axioms)");
  return rep;
}

GenReynolds admissible_gauge(const GenReynolds& g, const Matrix& phi) {
  if (!delta1_hand(g.l, g.m, phi).is_zero()) {
    throw precondition_error("admissible_gauge: phi is not a 1-cocycle");
  }
  const int dm = g.m.dim_m;
  Matrix k = Matrix::Identity(dm, dm) + phi * g.t;
  std::optional<Matrix> kinv = inverse<Rational>(k);
  if (!kinv) {
    throw precondition_error(
        "admissible_gauge: Id + phi T is not invertible (phi is not "
        "T-admissible)");
  }
  GenReynolds out = g;
  out.t = g.t * (*kinv);
  require_ok(check_generalized_reynolds(out), "admissible_gauge(T_phi)");
  // (Id + phi T) intertwines the induced brackets.
  const MultiMap bt = induced_bracket_tensor(g);
  const MultiMap btphi = induced_bracket_tensor(out);
  CheckReport inter{"gauge_intertwiner", {}};
  for (int a = 0; a < dm; ++a) {
    for (int b = 0; b < dm; ++b) {
      for (int c = 0; c < dm; ++c) {
        const Vector args[3] = {k.col(a), k.col(b), k.col(c)};
        Vector diff = btphi.eval(std::span<const Vector>(args, 3)) -
                      apply_mat(k, bt.value(std::array{a, b, c}));
        scan_nonzero(diff, "gauge.intertwiner", {a, b, c}, inter);
      }
    }
  }
  require_ok(inter, "admissible_gauge(intertwiner)");
  return out;
}

CheckReport kappa_twist_check(const Lts& l, const Rep& m, const ThreeCocycle& h,
                              const Matrix& phi) {
  const int dl = l.dim;
  const int dm = m.dim_m;
  ThreeCocycle h2 = h;
  h2.h -= delta1_hand(l, m, phi);
  const Lts prod = twisted_semidirect_unchecked(l, m, h);
  const Lts prod2 = twisted_semidirect_unchecked(l, m, h2);
  Matrix kappa = Matrix::Identity(dl + dm, dl + dm);
  for (int b = 0; b < dm; ++b) {
    for (int x = 0; x < dl; ++x) kappa(dl + b, x) = phi(b, x);
  }
  CheckReport report{"kappa_twist", {}};
  const int d = dl + dm;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int c = 0; c < d; ++c) {
        const Vector args[3] = {kappa.col(a), kappa.col(b), kappa.col(c)};
        Vector diff = prod2.bracket.eval(std::span<const Vector>(args, 3)) -
                      apply_mat(kappa, prod.bracket.value(std::array{a, b, c}));
        scan_nonzero(diff, "kappa.morphism", {a, b, c}, report);
      }
    }
  }
  return report;
}

CheckReport morphism_check(const GenReynolds& g, const GenReynolds& g2,
                           const MorphismWitness& w) {
  CheckReport report{"gen_reynolds_morphism", {}};
  const int dl = g.l.dim;
  const int dm = g.m.dim_m;
  // c1: phi T = T' psi
  {
    Matrix diff = w.phi * g.t - g2.t * w.psi;
    for (Index c = 0; c < diff.cols(); ++c) {
      scan_nonzero(diff.col(c), "morphism.c1", {static_cast<int>(c)}, report);
    }
  }
  // c2: psi theta(x, y) = theta'(phi x, phi y) psi, on basis pairs.
  for (int x = 0; x < dl; ++x) {
    for (int y = 0; y < dl; ++y) {
      for (int b = 0; b < dm; ++b) {
        Vector lhs = apply_mat(w.psi, g.m.th(x, y).col(b));
        Vector rhs =
            apply_theta(g2.m, w.phi.col(x), w.phi.col(y), w.psi.col(b));
        scan_nonzero(lhs - rhs, "morphism.c2", {x, y, b}, report);
      }
    }
  }
  // c3: psi H(x,y,z) = H'(phi x, phi y, phi z).
  for (int x = 0; x < dl; ++x) {
    for (int y = 0; y < dl; ++y) {
      for (int z = 0; z < dl; ++z) {
        const Vector args[3] = {w.phi.col(x), w.phi.col(y), w.phi.col(z)};
        Vector diff = apply_mat(w.psi, g.h.h.value(std::array{x, y, z})) -
                      g2.h.h.eval(std::span<const Vector>(args, 3));
        scan_nonzero(diff, "morphism.c3", {x, y, z}, report);
      }
    }
  }
  // phi is a morphism of the ambient brackets.
  for (int x = 0; x < dl; ++x) {
    for (int y = 0; y < dl; ++y) {
      for (int z = 0; z < dl; ++z) {
        const Vector args[3] = {w.phi.col(x), w.phi.col(y), w.phi.col(z)};
        Vector diff =
            apply_mat(w.phi, g.l.bracket.value(std::array{x, y, z})) -
            g2.l.bracket.eval(std::span<const Vector>(args, 3));
        scan_nonzero(diff, "morphism.lts", {x, y, z}, report);
      }
    }
  }
  return report;
}

Vector skew_pair_projection(const Vector& chi, int dim_l) {
  Vector out(chi.size());
  const Rational half = frac(1, 2);
  for (int i = 0; i < dim_l; ++i) {
    for (int j = 0; j < dim_l; ++j) {
      out(i * dim_l + j) =
          half * (chi(i * dim_l + j) - chi(j * dim_l + i));
    }
  }
  return out;
}

ReynoldsComplex::ReynoldsComplex(GenReynolds g, long long budget)
    : g_(std::move(g)), induced_lts_(induced_bracket(g_)),
      induced_rep_(induced_rep_thetaT(g_)),
      yam_(YamagutiComplex::already_verified_t{}, induced_lts_, induced_rep_,
           budget) {}

Matrix ReynoldsComplex::partial_t(const Vector& chi) const {
  const int dl = g_.l.dim;
  const int dm = g_.m.dim_m;
  Matrix out = Matrix::Zero(dl, dm);
  for (int u = 0; u < dm; ++u) {
    const Vector tu = g_.t.col(u);
    Vector acc = Vector::Zero(dl);
    Vector inner = Vector::Zero(dm);
    for (int i = 0; i < dl; ++i) {
      for (int j = 0; j < dl; ++j) {
        const Rational& c = chi(i * dl + j);
        if (c == 0) continue;
        inner += c * g_.m.d_op(i, j).col(u);
        inner += c * g_.h.h.eval_one_vector(std::array{i, j, 0}, 2, tu);
        acc -= c * g_.l.bracket.eval_one_vector(std::array{i, j, 0}, 2, tu);
      }
    }
    acc += apply_mat(g_.t, inner);
    out.col(u) = acc;
  }
  return out;
}

const Matrix& ReynoldsComplex::partial_t_matrix() const {
  if (partial_matrix_) return *partial_matrix_;
  const int dl = g_.l.dim;
  const int dm = g_.m.dim_m;
  Matrix m(static_cast<Index>(dl) * dm, static_cast<Index>(dl) * dl);
  for (int i = 0; i < dl; ++i) {
    for (int j = 0; j < dl; ++j) {
      Vector chi = Vector::Zero(static_cast<Index>(dl) * dl);
      chi(i * dl + j) = 1;
      const Matrix f = partial_t(chi);
      for (int u = 0; u < dm; ++u) {
        for (int x = 0; x < dl; ++x) {
          m(u * dl + x, i * dl + j) = f(x, u);
        }
      }
    }
  }
  partial_matrix_ = std::move(m);
  return *partial_matrix_;
}

ReynoldsCochain ReynoldsComplex::lambda(const ReynoldsCochain& c) const {
  if (c.level == 0) {
    return ReynoldsCochain::map(
        multimap_from_matrix(partial_t(c.chi)));
  }
  const int n = (c.level + 1) / 2;  // arity 2n-1 == level
  return ReynoldsCochain::map(yam_.delta(n, c.f));
}

CohomologyDims ReynoldsComplex::cohomology_dims(int level) const {
  const int dl = g_.l.dim;
  const int dm = g_.m.dim_m;
  CohomologyDims dims;
  if (level == 1) {
    const CochainSpaceBasis& src = yam_.basis(0);
    Matrix a(static_cast<Index>(MultiMap::flat_size(3, dm, dl)),
             static_cast<Index>(src.basis.size()));
    for (size_t j = 0; j < src.basis.size(); ++j) {
      a.col(static_cast<Index>(j)) = yam_.delta(1, src.basis[j]).to_vector();
    }
    dims.z = static_cast<Index>(src.basis.size()) - rank<Rational>(a);
    dims.b = rank<Rational>(partial_t_matrix());
  } else if (level == 3) {
    const CochainSpaceBasis& src = yam_.basis(1);
    Matrix a(static_cast<Index>(MultiMap::flat_size(5, dm, dl)),
             static_cast<Index>(src.basis.size()));
    for (size_t j = 0; j < src.basis.size(); ++j) {
      a.col(static_cast<Index>(j)) = yam_.delta(2, src.basis[j]).to_vector();
    }
    dims.z = static_cast<Index>(src.basis.size()) - rank<Rational>(a);
    const CochainSpaceBasis& below = yam_.basis(0);
    Matrix b(static_cast<Index>(MultiMap::flat_size(3, dm, dl)),
             static_cast<Index>(below.basis.size()));
    for (size_t j = 0; j < below.basis.size(); ++j) {
      b.col(static_cast<Index>(j)) = yam_.delta(1, below.basis[j]).to_vector();
    }
    dims.b = rank<Rational>(b);
  } else {
    throw precondition_error("cohomology_dims: supported levels are 1 and 3");
  }
  dims.h = dims.z - dims.b;
  return dims;
}

ReynoldsCochain transport_cochain(const GenReynolds& g, const GenReynolds& g2,
                                  const MorphismWitness& w,
                                  const ReynoldsCochain& c) {
  require_ok(morphism_check(g, g2, w), "transport_cochain(witness)");
  std::optional<Matrix> psi_inv = inverse<Rational>(w.psi);
  if (!psi_inv) {
    throw precondition_error("transport_cochain: psi is not invertible");
  }
  if (c.level == 0) {
    const int dl = g.l.dim;
    Vector out = Vector::Zero(static_cast<Index>(dl) * dl);
    for (int i = 0; i < dl; ++i) {
      for (int j = 0; j < dl; ++j) {
        const Rational& v = c.chi(i * dl + j);
        if (v == 0) continue;
        for (int a = 0; a < dl; ++a) {
          if (w.phi(a, i) == 0) continue;
          for (int b = 0; b < dl; ++b) {
            if (w.phi(b, j) == 0) continue;
            out(a * dl + b) += v * w.phi(a, i) * w.phi(b, j);
          }
        }
      }
    }
    return ReynoldsCochain::pair(std::move(out));
  }
  // Theta(f) = phi o f o (psi^{-1}, ..., psi^{-1})
  const int arity = c.level;
  const int dm = g.m.dim_m;
  const int dl = g.l.dim;
  MultiMap out(arity, dm, dl);
  std::vector<int> idx(static_cast<size_t>(arity), 0);
  std::vector<Vector> args(static_cast<size_t>(arity));
  do {
    for (int k = 0; k < arity; ++k) {
      args[static_cast<size_t>(k)] = psi_inv->col(idx[static_cast<size_t>(k)]);
    }
    Vector v = apply_mat(
        w.phi, c.f.eval(std::span<const Vector>(args.data(), args.size())));
    Rational* cell = out.cell(out.flat_index(idx));
    for (int x = 0; x < dl; ++x) cell[x] = v(x);
  } while (next_tuple(idx, dm));
  return ReynoldsCochain::map(std::move(out));
}

}  // namespace trisys
