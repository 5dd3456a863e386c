#include "trisys/lts.hpp"

#include "trisys/yamaguti.hpp"

#include <sstream>

namespace trisys {

std::vector<std::string> default_labels(int dim, const std::string& stem) {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

void require_ok(const CheckReport& report, const std::string& what) {
  if (report.ok()) return;
  std::ostringstream os;
  os << what << ": precondition check failed at law '"
     << report.violations.front().law << "' (";
  for (size_t i = 0; i < report.violations.front().where.size(); ++i) {
    os << (i ? "," : "") << report.violations.front().where[i];
  }
  os << "), " << report.violations.size() << " violation(s)";
  throw precondition_error(os.str());
}

Vector apply_mat(const Matrix& m, const Vector& v) {
  Vector out = Vector::Zero(m.rows());
  for (Index j = 0; j < v.size(); ++j) {
    if (v(j) == 0) continue;
    for (Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) != 0) out(i) += m(i, j) * v(j);
    }
  }
  return out;
}

Vector apply_theta(const Rep& rep, const Vector& x, const Vector& y,
                   const Vector& u) {
  Vector out = Vector::Zero(rep.dim_m);
  for (Index i = 0; i < x.size(); ++i) {
    if (x(i) == 0) continue;
    for (Index j = 0; j < y.size(); ++j) {
      if (y(j) == 0) continue;
      const Matrix& t = rep.th(static_cast<int>(i), static_cast<int>(j));
      const Rational c = x(i) * y(j);
      for (Index b = 0; b < u.size(); ++b) {
        if (u(b) == 0) continue;
        for (Index a = 0; a < t.rows(); ++a) {
          if (t(a, b) != 0) out(a) += c * t(a, b) * u(b);
        }
      }
    }
  }
  return out;
}

Vector apply_d(const Rep& rep, const Vector& x, const Vector& y,
               const Vector& u) {
  return apply_theta(rep, y, x, u) - apply_theta(rep, x, y, u);
}

Matrix lts_d_op(const Lts& l, int i, int j) {
  Matrix m = Matrix::Zero(l.dim, l.dim);
  for (int k = 0; k < l.dim; ++k) {
    const int idx[3] = {i, j, k};
    const Rational* c = l.bracket.cell(l.bracket.flat_index(idx));
    for (int a = 0; a < l.dim; ++a) m(a, k) = c[a];
  }
  return m;
}

Matrix lts_r_op(const Lts& l, int i, int j) {
  Matrix m = Matrix::Zero(l.dim, l.dim);
  for (int k = 0; k < l.dim; ++k) {
    const int idx[3] = {k, i, j};
    const Rational* c = l.bracket.cell(l.bracket.flat_index(idx));
    for (int a = 0; a < l.dim; ++a) m(a, k) = c[a];
  }
  return m;
}

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

CheckReport check_lie(const LieAlg& g) {
  CheckReport report{"lie_algebra", {}};
  const int d = g.dim;
  // antisymmetry (includes the diagonal)
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      Vector v = g.bracket.value(std::array{i, j}) +
                 g.bracket.value(std::array{j, i});
      scan_nonzero(v, "lie.antisymmetry", {i, j}, report);
    }
  }
  // Jacobi
  Vector acc = Vector::Zero(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        acc.setZero();
        acc += g.bracket.eval_one_vector(std::array{i, 0}, 1,
                                         g.bracket.value(std::array{j, k}));
        acc += g.bracket.eval_one_vector(std::array{j, 0}, 1,
                                         g.bracket.value(std::array{k, i}));
        acc += g.bracket.eval_one_vector(std::array{k, 0}, 1,
                                         g.bracket.value(std::array{i, j}));
        scan_nonzero(acc, "lie.jacobi", {i, j, k}, report);
      }
    }
  }
  return report;
}

CheckReport check_lts(const Lts& l) {
  CheckReport report{"lts", {}};
  const int d = l.dim;
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        Vector v = l.bracket.value(std::array{i, j, k}) +
                   l.bracket.value(std::array{j, i, k});
        scan_nonzero(v, "lts.skew", {i, j, k}, report);
      }
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        Vector v = l.bracket.value(std::array{i, j, k}) +
                   l.bracket.value(std::array{j, k, i}) +
                   l.bracket.value(std::array{k, i, j});
        scan_nonzero(v, "lts.cyclic", {i, j, k}, report);
      }
    }
  }
  // [x,y,[z,t,e]] = [[x,y,z],t,e] + [z,[x,y,t],e] + [z,t,[x,y,e]]
  Vector acc = Vector::Zero(d);
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) {
      for (int z = 0; z < d; ++z) {
        for (int t = 0; t < d; ++t) {
          for (int e = 0; e < d; ++e) {
            acc.setZero();
            acc += l.bracket.eval_one_vector(std::array{x, y, 0}, 2,
                                             l.bracket.value(std::array{z, t, e}));
            acc -= l.bracket.eval_one_vector(std::array{0, t, e}, 0,
                                             l.bracket.value(std::array{x, y, z}));
            acc -= l.bracket.eval_one_vector(std::array{z, 0, e}, 1,
                                             l.bracket.value(std::array{x, y, t}));
            acc -= l.bracket.eval_one_vector(std::array{z, t, 0}, 2,
                                             l.bracket.value(std::array{x, y, e}));
            scan_nonzero(acc, "lts.fundamental", {x, y, z, t, e}, report);
          }
        }
      }
    }
  }
  return report;
}

CheckReport check_rep(const Lts& l, const Rep& m) {
  CheckReport report{"lts_rep", {}};
  const int d = l.dim;
  const int dm = m.dim_m;
  Vector acc = Vector::Zero(dm);
  // All three identities are checked on theta applied to each basis vector
  // of M, which is complete by linearity.
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) {
      for (int z = 0; z < d; ++z) {
        for (int t = 0; t < d; ++t) {
          const Vector bryzt = l.bracket.value(std::array{y, z, t});
          const Vector brxyz = l.bracket.value(std::array{x, y, z});
          const Vector brxyt = l.bracket.value(std::array{x, y, t});
          for (int b = 0; b < dm; ++b) {
            Vector u = Vector::Zero(dm);
            u(b) = 1;
            // (2.3) theta(z,t)theta(x,y) - theta(y,t)theta(x,z)
            //        - theta(x,[y,z,t]) + D(y,z)theta(x,t) = 0
            acc.setZero();
            acc += apply_mat(m.th(z, t), m.th(x, y).col(b));
            acc -= apply_mat(m.th(y, t), m.th(x, z).col(b));
            for (int lidx = 0; lidx < d; ++lidx) {
              if (bryzt(lidx) == 0) continue;
              acc -= bryzt(lidx) * m.th(x, lidx).col(b);
            }
            acc += apply_d(m, basis_vec(d, y), basis_vec(d, z),
                           m.th(x, t).col(b));
            scan_nonzero(acc, "rep.eq2.3", {x, y, z, t, b}, report);
            // (2.4) theta(z,t)D(x,y) - D(x,y)theta(z,t)
            //        + theta([x,y,z],t) + theta(z,[x,y,t]) = 0
            acc.setZero();
            Vector dxy_u = m.d_op(x, y).col(b);
            acc += apply_mat(m.th(z, t), dxy_u);
            acc -= apply_mat(m.d_op(x, y), m.th(z, t).col(b));
            for (int lidx = 0; lidx < d; ++lidx) {
              if (brxyz(lidx) != 0) acc += brxyz(lidx) * m.th(lidx, t).col(b);
              if (brxyt(lidx) != 0) acc += brxyt(lidx) * m.th(z, lidx).col(b);
            }
            scan_nonzero(acc, "rep.eq2.4", {x, y, z, t, b}, report);
            // (2.5) D(z,t)D(x,y) - D(x,y)D(z,t)
            //        + D([x,y,z],t) + D(z,[x,y,t]) = 0
            acc.setZero();
            acc += apply_mat(m.d_op(z, t), dxy_u);
            acc -= apply_mat(m.d_op(x, y), m.d_op(z, t).col(b));
            for (int lidx = 0; lidx < d; ++lidx) {
              if (brxyz(lidx) != 0) acc += brxyz(lidx) * m.d_op(lidx, t).col(b);
              if (brxyt(lidx) != 0) acc += brxyt(lidx) * m.d_op(z, lidx).col(b);
            }
            scan_nonzero(acc, "rep.eq2.5", {x, y, z, t, b}, report);
          }
        }
      }
    }
  }
  return report;
}

CheckReport check_lie_rep(const LieAlg& g, const LieRep& r) {
  CheckReport report{"lie_rep", {}};
  const int d = g.dim;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Matrix lhs = Matrix::Zero(r.dim_m, r.dim_m);
      const Vector br = g.bracket.value(std::array{i, j});
      for (int k = 0; k < d; ++k) {
        if (br(k) != 0) lhs += br(k) * r.rho[static_cast<size_t>(k)];
      }
      Matrix diff = lhs -
                    (r.rho[static_cast<size_t>(i)] * r.rho[static_cast<size_t>(j)] -
                     r.rho[static_cast<size_t>(j)] * r.rho[static_cast<size_t>(i)]);
      for (Index b = 0; b < diff.cols(); ++b) {
        scan_nonzero(diff.col(b), "lie_rep.commutator",
                     {i, j, static_cast<int>(b)}, report);
      }
    }
  }
  return report;
}

CheckReport check_lie_two_cocycle(const LieAlg& g, const LieRep& r,
                                  const LieTwoCocycle& phi) {
  CheckReport report{"lie_two_cocycle", {}};
  const int d = g.dim;
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      Vector v = phi.phi.value(std::array{i, j}) +
                 phi.phi.value(std::array{j, i});
      scan_nonzero(v, "lie2cocycle.skew", {i, j}, report);
    }
  }
  Vector acc = Vector::Zero(r.dim_m);
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) {
      for (int z = 0; z < d; ++z) {
        acc.setZero();
        acc += apply_mat(r.rho[static_cast<size_t>(x)],
                         phi.phi.value(std::array{y, z}));
        acc += apply_mat(r.rho[static_cast<size_t>(y)],
                         phi.phi.value(std::array{z, x}));
        acc += apply_mat(r.rho[static_cast<size_t>(z)],
                         phi.phi.value(std::array{x, y}));
        acc += phi.phi.eval_one_vector(std::array{x, 0}, 1,
                                       g.bracket.value(std::array{y, z}));
        acc += phi.phi.eval_one_vector(std::array{y, 0}, 1,
                                       g.bracket.value(std::array{z, x}));
        acc += phi.phi.eval_one_vector(std::array{z, 0}, 1,
                                       g.bracket.value(std::array{x, y}));
        scan_nonzero(acc, "lie2cocycle.cocycle", {x, y, z}, report);
      }
    }
  }
  return report;
}

Vector basis_vec(int dim, int i) {
  Vector v = Vector::Zero(dim);
  v(i) = 1;
  return v;
}

Rep regular_rep(const Lts& l) {
  require_ok(check_lts(l), "regular_rep");
  Rep rep(l.dim, l.dim);
  for (int i = 0; i < l.dim; ++i) {
    for (int j = 0; j < l.dim; ++j) {
      rep.th(i, j) = lts_r_op(l, i, j);
    }
  }
  return rep;
}

Lts lie_to_lts(const LieAlg& g) {
  require_ok(check_lie(g), "lie_to_lts");
  Lts l(g.dim);
  l.labels = g.labels;
  for (int i = 0; i < g.dim; ++i) {
    for (int j = 0; j < g.dim; ++j) {
      const Vector inner = g.bracket.value(std::array{i, j});
      for (int k = 0; k < g.dim; ++k) {
        Vector v = g.bracket.eval_one_vector(std::array{0, k}, 0, inner);
        const int idx[3] = {i, j, k};
        Rational* c = l.bracket.cell(l.bracket.flat_index(idx));
        for (int a = 0; a < g.dim; ++a) c[a] = v(a);
      }
    }
  }
  return l;
}

Rep lie_rep_to_lts_rep(const LieAlg& g, const LieRep& r) {
  require_ok(check_lie(g), "lie_rep_to_lts_rep(carrier)");
  require_ok(check_lie_rep(g, r), "lie_rep_to_lts_rep(rep)");
  Rep rep(g.dim, r.dim_m);
  for (int i = 0; i < g.dim; ++i) {
    for (int j = 0; j < g.dim; ++j) {
      rep.th(i, j) =
          r.rho[static_cast<size_t>(j)] * r.rho[static_cast<size_t>(i)];
    }
  }
  return rep;
}

Lts twisted_semidirect_unchecked(const Lts& l, const Rep& m,
                                 const ThreeCocycle& h) {
  const int dl = l.dim;
  const int dm = m.dim_m;
  Lts prod(dl + dm);
  for (int i = 0; i < dl; ++i) {
    prod.labels[static_cast<size_t>(i)] = l.labels[static_cast<size_t>(i)];
  }
  for (int a = 0; a < dm; ++a) {
    prod.labels[static_cast<size_t>(dl + a)] = "m" + std::to_string(a);
  }
  auto put_m = [&](int i, int j, int k, const Vector& mpart) {
    const int idx[3] = {i, j, k};
    Rational* c = prod.bracket.cell(prod.bracket.flat_index(idx));
    for (int b = 0; b < dm; ++b) c[dl + b] = mpart(b);
  };
  for (int i = 0; i < dl; ++i) {
    for (int j = 0; j < dl; ++j) {
      for (int k = 0; k < dl; ++k) {
        const int idx[3] = {i, j, k};
        Rational* c = prod.bracket.cell(prod.bracket.flat_index(idx));
        const Vector lpart = l.bracket.value(std::array{i, j, k});
        const Vector mpart = h.h.value(std::array{i, j, k});
        for (int a = 0; a < dl; ++a) c[a] = lpart(a);
        for (int b = 0; b < dm; ++b) c[dl + b] = mpart(b);
      }
      const Matrix d_ij = m.d_op(i, j);
      for (int c = 0; c < dm; ++c) {
        put_m(i, j, dl + c, d_ij.col(c));  // D(x, y) w
      }
    }
  }
  for (int i = 0; i < dl; ++i) {
    for (int b = 0; b < dm; ++b) {
      for (int k = 0; k < dl; ++k) {
        put_m(i, dl + b, k, Vector(-m.th(i, k).col(b)));  // -theta(x, z) v
        put_m(dl + b, i, k, Vector(m.th(i, k).col(b)));   // theta(y, z) u
      }
    }
  }
  return prod;
}

Lts twisted_semidirect(const Lts& l, const Rep& m, const ThreeCocycle& h) {
  require_ok(check_lts(l), "twisted_semidirect(L)");
  require_ok(check_rep(l, m), "twisted_semidirect(M)");
  require_ok(check_three_cocycle(l, m, h), "twisted_semidirect(H)");
  return twisted_semidirect_unchecked(l, m, h);
}

ThreeCocycle lie_two_cocycle_to_lts_three_cocycle(const LieAlg& g,
                                                  const LieRep& r,
                                                  const LieTwoCocycle& phi) {
  require_ok(check_lie_two_cocycle(g, r, phi),
             "lie_two_cocycle_to_lts_three_cocycle");
  ThreeCocycle h(g.dim, r.dim_m);
  for (int x = 0; x < g.dim; ++x) {
    for (int y = 0; y < g.dim; ++y) {
      const Vector br = g.bracket.value(std::array{x, y});
      const Vector phixy = phi.phi.value(std::array{x, y});
      for (int z = 0; z < g.dim; ++z) {
        Vector v = phi.phi.eval_one_vector(std::array{0, z}, 0, br) -
                   apply_mat(r.rho[static_cast<size_t>(z)], phixy);
        const int idx[3] = {x, y, z};
        Rational* c = h.h.cell(h.h.flat_index(idx));
        for (int b = 0; b < r.dim_m; ++b) c[b] = v(b);
      }
    }
  }
  return h;
}

}  // namespace trisys
