#include "trisys/multimap.hpp"

#include <algorithm>
#include <array>

namespace trisys {

Vector MultiMap::value(std::span<const int> idx) const {
  Vector out(dim_out_);
  const Rational* c = cell(flat_index(idx));
  for (int o = 0; o < dim_out_; ++o) out(o) = c[o];
  return out;
}

Vector MultiMap::eval(std::span<const Vector> args) const {
  Vector out = Vector::Zero(dim_out_);
  std::vector<int> idx(static_cast<size_t>(arity_), 0);
  // Depth-first over nonzero coordinates of each argument.
  Rational weight = 1;
  struct Frame {
    int pos;
    Rational w;
  };
  std::vector<Frame> stack;
  stack.reserve(static_cast<size_t>(arity_));
  int depth = 0;
  int pos = 0;
  Rational w = 1;
  while (true) {
    if (depth == arity_) {
      const Rational* c = cell(flat_index(idx));
      for (int o = 0; o < dim_out_; ++o) {
        if (c[o] != 0) out(o) += w * c[o];
      }
      if (stack.empty()) break;
      depth--;
      pos = stack.back().pos + 1;
      w = stack.back().w;
      stack.pop_back();
      continue;
    }
    const Vector& v = args[static_cast<size_t>(depth)];
    int p = pos;
    while (p < dim_in_ && v(p) == 0) ++p;
    if (p == dim_in_) {
      if (stack.empty()) break;
      depth--;
      pos = stack.back().pos + 1;
      w = stack.back().w;
      stack.pop_back();
      continue;
    }
    idx[static_cast<size_t>(depth)] = p;
    stack.push_back({p, w});
    w *= v(p);
    depth++;
    pos = 0;
  }
  return out;
}

Vector MultiMap::eval_one_vector(std::span<const int> idx, int slot,
                                 const Vector& v) const {
  Vector out = Vector::Zero(dim_out_);
  std::vector<int> work(idx.begin(), idx.end());
  for (int p = 0; p < dim_in_; ++p) {
    if (v(p) == 0) continue;
    work[static_cast<size_t>(slot)] = p;
    const Rational* c = cell(flat_index(work));
    for (int o = 0; o < dim_out_; ++o) {
      if (c[o] != 0) out(o) += v(p) * c[o];
    }
  }
  return out;
}

Vector MultiMap::to_vector() const {
  Vector v(static_cast<Index>(coeffs_.size()));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    v(static_cast<Index>(i)) = coeffs_[i];
  }
  return v;
}

MultiMap MultiMap::from_vector(int arity, int dim_in, int dim_out,
                               const Vector& v) {
  MultiMap m(arity, dim_in, dim_out);
  for (size_t i = 0; i < m.coeffs_.size(); ++i) {
    m.coeffs_[i] = v(static_cast<Index>(i));
  }
  return m;
}

bool MultiMap::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& q) { return q == 0; });
}

MultiMap& MultiMap::operator+=(const MultiMap& o) {
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

MultiMap& MultiMap::operator-=(const MultiMap& o) {
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

MultiMap& MultiMap::operator*=(const Rational& c) {
  for (auto& q : coeffs_) q *= c;
  return *this;
}

MultiMap MultiMap::swapped(int slot_a, int slot_b) const {
  MultiMap r(arity_, dim_in_, dim_out_);
  std::vector<int> idx(static_cast<size_t>(arity_), 0);
  do {
    std::vector<int> src = idx;
    std::swap(src[static_cast<size_t>(slot_a)], src[static_cast<size_t>(slot_b)]);
    const Rational* c = cell(flat_index(src));
    Rational* d = r.cell(flat_index(idx));
    for (int o = 0; o < dim_out_; ++o) d[o] = c[o];
  } while (next_tuple(idx, dim_in_));
  return r;
}

ConstraintResidual constraint_residual(const MultiMap& psi, int level) {
  if (psi.arity() != 2 * level + 1) {
    throw precondition_error("constraint_residual: arity does not match level");
  }
  ConstraintResidual res;
  if (level == 0) return res;
  const int arity = psi.arity();
  const int d = psi.dim_in();
  const int dout = psi.dim_out();
  const int s1 = arity - 3, s2 = arity - 2, s3 = arity - 1;  // last three slots

  std::vector<int> idx(static_cast<size_t>(arity), 0);
  // Repeated-argument condition on slots 2n-1, 2n, polarized: the value at
  // (..., i, j, y) plus the value at (..., j, i, y) must vanish.
  do {
    if (idx[static_cast<size_t>(s1)] > idx[static_cast<size_t>(s2)]) continue;
    std::vector<int> sw = idx;
    std::swap(sw[static_cast<size_t>(s1)], sw[static_cast<size_t>(s2)]);
    const Rational* a = psi.cell(psi.flat_index(idx));
    const Rational* b = psi.cell(psi.flat_index(sw));
    for (int o = 0; o < dout; ++o) {
      Rational v = a[o] + b[o];
      if (v != 0) {
        res.ok = false;
        res.residual = v;
        res.where = idx;
        res.out_index = o;
        return res;
      }
    }
  } while (next_tuple(idx, d));

  // Cyclic condition over the last three slots.
  std::fill(idx.begin(), idx.end(), 0);
  do {
    std::vector<int> r1 = idx, r2 = idx;
    r1[static_cast<size_t>(s1)] = idx[static_cast<size_t>(s2)];
    r1[static_cast<size_t>(s2)] = idx[static_cast<size_t>(s3)];
    r1[static_cast<size_t>(s3)] = idx[static_cast<size_t>(s1)];
    r2[static_cast<size_t>(s1)] = idx[static_cast<size_t>(s3)];
    r2[static_cast<size_t>(s2)] = idx[static_cast<size_t>(s1)];
    r2[static_cast<size_t>(s3)] = idx[static_cast<size_t>(s2)];
    const Rational* a = psi.cell(psi.flat_index(idx));
    const Rational* b = psi.cell(psi.flat_index(r1));
    const Rational* c = psi.cell(psi.flat_index(r2));
    for (int o = 0; o < dout; ++o) {
      Rational v = a[o] + b[o] + c[o];
      if (v != 0) {
        res.ok = false;
        res.residual = v;
        res.where = idx;
        res.out_index = o;
        return res;
      }
    }
  } while (next_tuple(idx, d));
  return res;
}

CochainSpaceBasis cochain_space_basis(int dim_in, int dim_out, int level,
                                      long long budget) {
  const int arity = 2 * level + 1;
  const long long ambient = MultiMap::flat_size(arity, dim_in, dim_out);
  if (ambient > budget) {
    throw resource_error("cochain space exceeds coefficient budget", ambient,
                         budget);
  }
  CochainSpaceBasis out;
  out.level = level;
  out.ambient_dim = ambient;
  if (level == 0) {
    for (long long i = 0; i < ambient; ++i) {
      Vector v = Vector::Zero(static_cast<Index>(ambient));
      v(static_cast<Index>(i)) = 1;
      out.basis.push_back(MultiMap::from_vector(arity, dim_in, dim_out, v));
    }
    return out;
  }

  // Both constraint families touch only the last three input slots, so the
  // stacked constraint matrix is block diagonal over (prefix, output
  // coordinate) with one identical block. The canonical RREF kernel of the
  // whole matrix is therefore the block kernel replayed at every
  // (prefix, out), ordered by increasing global column index.
  const Matrix block = last_three_constraint_block(dim_in);
  const std::vector<Vector> block_kernel = kernel_basis<Rational>(block);

  const long long d3 = static_cast<long long>(dim_in) * dim_in * dim_in;
  long long prefixes = 1;
  for (int k = 0; k < arity - 3; ++k) prefixes *= dim_in;

  // Free columns of the block, increasing (the kernel basis is already in
  // that order, one vector per free column).
  for (long long p = 0; p < prefixes; ++p) {
    for (const Vector& kv : block_kernel) {
      for (int o = 0; o < dim_out; ++o) {
        MultiMap m(arity, dim_in, dim_out);
        for (long long t = 0; t < d3; ++t) {
          if (kv(static_cast<Index>(t)) == 0) continue;
          m.cell(p * d3 + t)[o] = kv(static_cast<Index>(t));
        }
        out.basis.push_back(std::move(m));
      }
    }
  }
  return out;
}

Matrix last_three_constraint_block(int d) {
  const long long d3 = static_cast<long long>(d) * d * d;
  auto t_of = [d](int i, int j, int k) {
    return static_cast<Index>((static_cast<long long>(i) * d + j) * d + k);
  };
  std::vector<std::vector<std::pair<Index, int>>> rows;
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      for (int y = 0; y < d; ++y) {
        if (i == j) {
          rows.push_back({{t_of(i, i, y), 2}});
        } else {
          rows.push_back({{t_of(i, j, y), 1}, {t_of(j, i, y), 1}});
        }
      }
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        // One row per rotation class, anchored at its least rotation.
        std::array<std::array<int, 3>, 3> rot = {
            std::array<int, 3>{i, j, k}, {j, k, i}, {k, i, j}};
        if (rot[1] < rot[0] || rot[2] < rot[0]) continue;
        std::vector<std::pair<Index, int>> row;
        for (const auto& r : rot) {
          Index f = t_of(r[0], r[1], r[2]);
          bool found = false;
          for (auto& e : row) {
            if (e.first == f) {
              e.second += 1;
              found = true;
            }
          }
          if (!found) row.push_back({f, 1});
        }
        rows.push_back(std::move(row));
      }
    }
  }
  Matrix con = Matrix::Zero(static_cast<Index>(rows.size()),
                            static_cast<Index>(d3));
  for (size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [f, mult] : rows[r]) {
      con(static_cast<Index>(r), f) = mult;
    }
  }
  return con;
}

}  // namespace trisys
