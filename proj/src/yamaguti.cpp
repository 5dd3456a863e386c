#include "trisys/yamaguti.hpp"

#include <algorithm>

namespace trisys {

MultiMap multimap_from_matrix(const Matrix& m) {
  MultiMap r(1, static_cast<int>(m.cols()), static_cast<int>(m.rows()));
  for (int i = 0; i < m.cols(); ++i) {
    const int idx[1] = {i};
    Rational* c = r.cell(r.flat_index(idx));
    for (int b = 0; b < m.rows(); ++b) c[b] = m(b, i);
  }
  return r;
}

Matrix matrix_from_multimap1(const MultiMap& m) {
  Matrix r(m.dim_out(), m.dim_in());
  for (int i = 0; i < m.dim_in(); ++i) {
    const int idx[1] = {i};
    const Rational* c = m.cell(m.flat_index(idx));
    for (int b = 0; b < m.dim_out(); ++b) r(b, i) = c[b];
  }
  return r;
}

YamagutiComplex::YamagutiComplex(Lts l, Rep m, long long budget)
    : l_(std::move(l)), m_(std::move(m)), budget_(budget) {
  require_ok(check_lts(l_), "YamagutiComplex(L)");
  require_ok(check_rep(l_, m_), "YamagutiComplex(M)");
}

YamagutiComplex::YamagutiComplex(already_verified_t, Lts l, Rep m,
                                 long long budget)
    : l_(std::move(l)), m_(std::move(m)), budget_(budget) {}

MultiMap YamagutiComplex::delta(int n, const MultiMap& psi) const {
  const int d = l_.dim;
  const int dm = m_.dim_m;
  if (n < 1 || psi.arity() != 2 * n - 1 || psi.dim_in() != d ||
      psi.dim_out() != dm) {
    throw precondition_error("delta: cochain arity/dims do not match level");
  }
  if (n >= 2) {
    const ConstraintResidual cr = constraint_residual(psi, n - 1);
    if (!cr.ok) {
      throw precondition_error("delta: input violates cochain constraints");
    }
  }
  const int arity_out = 2 * n + 1;
  const long long out_size = MultiMap::flat_size(arity_out, d, dm);
  if (out_size > budget_) {
    throw resource_error("delta output exceeds coefficient budget", out_size,
                         budget_);
  }
  MultiMap out(arity_out, d, dm);
  std::vector<int> x(static_cast<size_t>(arity_out), 0);
  std::vector<int> args(static_cast<size_t>(2 * n - 1), 0);
  Vector acc = Vector::Zero(dm);
  do {
    acc.setZero();
    // theta(x_{2n}, x_{2n+1}) psi(x_1 ... x_{2n-1})   [1-based labels]
    for (int k = 0; k < 2 * n - 1; ++k) args[static_cast<size_t>(k)] = x[static_cast<size_t>(k)];
    acc += apply_mat(m_.th(x[static_cast<size_t>(2 * n - 1)], x[static_cast<size_t>(2 * n)]),
                     psi.value(args));
    // - theta(x_{2n-1}, x_{2n+1}) psi(x_1 ... x_{2n-2}, x_{2n})
    args[static_cast<size_t>(2 * n - 2)] = x[static_cast<size_t>(2 * n - 1)];
    acc -= apply_mat(m_.th(x[static_cast<size_t>(2 * n - 2)], x[static_cast<size_t>(2 * n)]),
                     psi.value(args));
    // sum_k (-1)^{n+k} D(x_{2k-1}, x_{2k}) psi(... hats ...)
    for (int k = 1; k <= n; ++k) {
      int pos = 0;
      for (int t = 0; t < arity_out; ++t) {
        if (t == 2 * k - 2 || t == 2 * k - 1) continue;
        args[static_cast<size_t>(pos++)] = x[static_cast<size_t>(t)];
      }
      Vector dv = apply_mat(
          m_.d_op(x[static_cast<size_t>(2 * k - 2)], x[static_cast<size_t>(2 * k - 1)]),
          psi.value(args));
      if (((n + k) % 2) == 0) {
        acc += dv;
      } else {
        acc -= dv;
      }
    }
    // sum_{k} sum_{j=2k+1}^{2n+1} (-1)^{n+k+1}
    //   psi(... hats ..., [x_{2k-1}, x_{2k}, x_j], ...)
    for (int k = 1; k <= n; ++k) {
      const bool plus = ((n + k + 1) % 2) == 0;
      for (int j = 2 * k; j < arity_out; ++j) {  // 0-based j
        int pos = 0;
        int slot_of_j = -1;
        for (int t = 0; t < arity_out; ++t) {
          if (t == 2 * k - 2 || t == 2 * k - 1) continue;
          if (t == j) slot_of_j = pos;
          args[static_cast<size_t>(pos++)] = x[static_cast<size_t>(t)];
        }
        const Vector br = l_.bracket.value(std::array{
            x[static_cast<size_t>(2 * k - 2)], x[static_cast<size_t>(2 * k - 1)],
            x[static_cast<size_t>(j)]});
        Vector term = psi.eval_one_vector(args, slot_of_j, br);
        if (plus) {
          acc += term;
        } else {
          acc -= term;
        }
      }
    }
    Rational* c = out.cell(out.flat_index(x));
    for (int b = 0; b < dm; ++b) c[b] = acc(b);
  } while (next_tuple(x, d));
  return out;
}

bool YamagutiComplex::is_cocycle(int level, const MultiMap& psi) const {
  return delta(level + 1, psi).is_zero();
}

std::optional<MultiMap> YamagutiComplex::coboundary_preimage(
    int level, const MultiMap& psi) const {
  if (level < 1) {
    throw precondition_error(
        "coboundary_preimage: the complex starts at C^1, level must be >= 1");
  }
  const CochainSpaceBasis& src = basis(level - 1);
  Matrix a(static_cast<Index>(psi.coeffs().size()),
           static_cast<Index>(src.basis.size()));
  for (size_t j = 0; j < src.basis.size(); ++j) {
    a.col(static_cast<Index>(j)) = delta(level, src.basis[j]).to_vector();
  }
  std::optional<Vector> c = solve<Rational>(a, psi.to_vector());
  if (!c) return std::nullopt;
  MultiMap pre(2 * level - 1, l_.dim, m_.dim_m);
  for (size_t j = 0; j < src.basis.size(); ++j) {
    if ((*c)(static_cast<Index>(j)) == 0) continue;
    MultiMap term = src.basis[j];
    term *= (*c)(static_cast<Index>(j));
    pre += term;
  }
  return pre;
}

CohomologyDims YamagutiComplex::cohomology_dims(int level) const {
  const CochainSpaceBasis& src = basis(level);
  CohomologyDims dims;
  {
    Matrix a(static_cast<Index>(
                 MultiMap::flat_size(2 * level + 3, l_.dim, m_.dim_m)),
             static_cast<Index>(src.basis.size()));
    for (size_t j = 0; j < src.basis.size(); ++j) {
      a.col(static_cast<Index>(j)) = delta(level + 1, src.basis[j]).to_vector();
    }
    dims.z = static_cast<Index>(src.basis.size()) - rank<Rational>(a);
  }
  if (level == 0) {
    dims.b = 0;
  } else {
    const CochainSpaceBasis& below = basis(level - 1);
    Matrix a(static_cast<Index>(
                 MultiMap::flat_size(2 * level + 1, l_.dim, m_.dim_m)),
             static_cast<Index>(below.basis.size()));
    for (size_t j = 0; j < below.basis.size(); ++j) {
      a.col(static_cast<Index>(j)) = delta(level, below.basis[j]).to_vector();
    }
    dims.b = rank<Rational>(a);
  }
  dims.h = dims.z - dims.b;
  return dims;
}

const CochainSpaceBasis& YamagutiComplex::basis(int level) const {
  auto it = bases_.find(level);
  if (it != bases_.end()) return it->second;
  CochainSpaceBasis b = cochain_space_basis(l_.dim, m_.dim_m, level, budget_);
  // Record the global free column of each basis element (its unit
  // coordinate), used to read coordinates back off.
  std::vector<long long> frees;
  if (level == 0) {
    for (long long i = 0; i < b.ambient_dim; ++i) frees.push_back(i);
  } else {
    const int d = l_.dim;
    const int dout = m_.dim_m;
    Matrix block = last_three_constraint_block(d);
    std::vector<Index> pivots = rref_in_place(block);
    std::vector<char> is_pivot(static_cast<size_t>(block.cols()), 0);
    for (Index p : pivots) is_pivot[static_cast<size_t>(p)] = 1;
    const long long d3 = static_cast<long long>(d) * d * d;
    long long prefixes = 1;
    for (int k = 0; k < 2 * level + 1 - 3; ++k) prefixes *= d;
    for (long long p = 0; p < prefixes; ++p) {
      for (long long t = 0; t < d3; ++t) {
        if (is_pivot[static_cast<size_t>(t)]) continue;
        for (int o = 0; o < dout; ++o) {
          frees.push_back((p * d3 + t) * dout + o);
        }
      }
    }
  }
  free_columns_[level] = std::move(frees);
  return bases_.emplace(level, std::move(b)).first->second;
}

Vector YamagutiComplex::coordinates(int level, const MultiMap& psi) const {
  const CochainSpaceBasis& b = basis(level);
  const std::vector<long long>& frees = free_columns_.at(level);
  Vector c(static_cast<Index>(frees.size()));
  for (size_t i = 0; i < frees.size(); ++i) {
    c(static_cast<Index>(i)) =
        psi.coeffs()[static_cast<size_t>(frees[i])];
  }
  // Exact membership check: the coordinates must reproduce psi.
  MultiMap rebuilt(psi.arity(), psi.dim_in(), psi.dim_out());
  for (size_t i = 0; i < b.basis.size(); ++i) {
    if (c(static_cast<Index>(i)) == 0) continue;
    MultiMap term = b.basis[i];
    term *= c(static_cast<Index>(i));
    rebuilt += term;
  }
  if (!(rebuilt == psi)) {
    throw precondition_error(
        "coordinates: cochain is not in the constrained subspace");
  }
  return c;
}

const Matrix& YamagutiComplex::delta_matrix(int n) const {
  auto it = delta_matrices_.find(n);
  if (it != delta_matrices_.end()) return it->second;
  const CochainSpaceBasis& src = basis(n - 1);
  const CochainSpaceBasis& dst = basis(n);
  Matrix m(static_cast<Index>(dst.basis.size()),
           static_cast<Index>(src.basis.size()));
  for (size_t j = 0; j < src.basis.size(); ++j) {
    m.col(static_cast<Index>(j)) = coordinates(n, delta(n, src.basis[j]));
  }
  return delta_matrices_.emplace(n, std::move(m)).first->second;
}

MultiMap delta1_hand(const Lts& l, const Rep& m, const Matrix& phi) {
  const int d = l.dim;
  const int dm = m.dim_m;
  MultiMap out(3, d, dm);
  for (int x1 = 0; x1 < d; ++x1) {
    for (int x2 = 0; x2 < d; ++x2) {
      const Matrix d12 = m.d_op(x1, x2);
      for (int x3 = 0; x3 < d; ++x3) {
        Vector acc = apply_mat(d12, phi.col(x3));
        acc -= apply_mat(m.th(x1, x3), phi.col(x2));
        acc += apply_mat(m.th(x2, x3), phi.col(x1));
        acc -= apply_mat(phi, l.bracket.value(std::array{x1, x2, x3}));
        const int idx[3] = {x1, x2, x3};
        Rational* c = out.cell(out.flat_index(idx));
        for (int b = 0; b < dm; ++b) c[b] = acc(b);
      }
    }
  }
  return out;
}

CheckReport check_three_cocycle(const Lts& l, const Rep& m,
                                const ThreeCocycle& h) {
  CheckReport report{"three_cocycle", {}};
  const int d = l.dim;
  const int dm = m.dim_m;
  auto scan = [&](const Vector& v, const char* law, std::vector<int> where) {
    for (Index a = 0; a < v.size(); ++a) {
      if (v(a) != 0) {
        report.add(law, std::move(where), v);
        return;
      }
    }
  };
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        Vector v = h.h.value(std::array{i, j, k}) +
                   h.h.value(std::array{j, i, k});
        scan(v, "cocycle3.skew", {i, j, k});
      }
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        Vector v = h.h.value(std::array{i, j, k}) +
                   h.h.value(std::array{j, k, i}) +
                   h.h.value(std::array{k, i, j});
        scan(v, "cocycle3.cyclic", {i, j, k});
      }
    }
  }
  // Long law (2.12), arranged as LHS - RHS = 0.
  Vector acc = Vector::Zero(dm);
  for (int x1 = 0; x1 < d; ++x1) {
    for (int x2 = 0; x2 < d; ++x2) {
      const Matrix d12 = m.d_op(x1, x2);
      for (int y1 = 0; y1 < d; ++y1) {
        for (int y2 = 0; y2 < d; ++y2) {
          const Matrix dy12 = m.d_op(y1, y2);
          for (int y3 = 0; y3 < d; ++y3) {
            acc.setZero();
            acc += h.h.eval_one_vector(std::array{x1, x2, 0}, 2,
                                       l.bracket.value(std::array{y1, y2, y3}));
            acc += apply_mat(d12, h.h.value(std::array{y1, y2, y3}));
            acc -= h.h.eval_one_vector(std::array{0, y2, y3}, 0,
                                       l.bracket.value(std::array{x1, x2, y1}));
            acc -= h.h.eval_one_vector(std::array{y1, 0, y3}, 1,
                                       l.bracket.value(std::array{x1, x2, y2}));
            acc -= h.h.eval_one_vector(std::array{y1, y2, 0}, 2,
                                       l.bracket.value(std::array{x1, x2, y3}));
            acc -= apply_mat(m.th(y2, y3), h.h.value(std::array{x1, x2, y1}));
            acc += apply_mat(m.th(y1, y3), h.h.value(std::array{x1, x2, y2}));
            acc -= apply_mat(dy12, h.h.value(std::array{x1, x2, y3}));
            scan(acc, "cocycle3.long", {x1, x2, y1, y2, y3});
          }
        }
      }
    }
  }
  return report;
}

}  // namespace trisys
