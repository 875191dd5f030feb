#include "liealg/linalg.hpp"

#include <algorithm>

namespace liealg {

template <class S>
Vector<S> to_dense(const SparseVector<S>& v, int n) {
  Vector<S> out = Vector<S>::Zero(n);
  for (const auto& [i, c] : v) out(i) = c;
  return out;
}

template <class S>
SparseVector<S> to_sparse(const Vector<S>& v) {
  SparseVector<S> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!is_zero(v(i))) out.emplace_back(static_cast<int>(i), v(i));
  }
  return out;
}

template <class S>
Vector<S> unit_vector(int n, int i) {
  Vector<S> out = Vector<S>::Zero(n);
  out(i) = S(1);
  return out;
}

namespace {

// row_target -= factor * row_source, starting at column `from`.
template <class S>
void axpy_row(Matrix<S>& m, Eigen::Index target, const S& factor, Eigen::Index source,
              Eigen::Index from) {
  for (Eigen::Index c = from; c < m.cols(); ++c) {
    if (!is_zero(m(source, c))) m(target, c) -= factor * m(source, c);
  }
}

template <class S>
void axpy(Vector<S>& target, const S& factor, const Vector<S>& source, Eigen::Index from) {
  for (Eigen::Index c = from; c < target.size(); ++c) {
    if (!is_zero(source(c))) target(c) -= factor * source(c);
  }
}

}  // namespace

template <class S>
Rref<S> rref(Matrix<S> m) {
  std::vector<int> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const S scale = m(row, col).inverse();
    for (Eigen::Index c = col; c < m.cols(); ++c) {
      if (!is_zero(m(row, c))) m(row, c) *= scale;
    }
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const S factor = m(r, col);
      axpy_row(m, r, factor, row, col);
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class S>
int rank(const Matrix<S>& m) {
  return static_cast<int>(rref(m).pivots.size());
}

template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw SingularMatrix("matrix is not square");
  const Eigen::Index n = m.rows();
  Matrix<S> augmented(n, 2 * n);
  augmented.leftCols(n) = m;
  augmented.rightCols(n).setZero();
  for (Eigen::Index i = 0; i < n; ++i) augmented(i, n + i) = S(1);
  Rref<S> r = rref(std::move(augmented));
  if (static_cast<Eigen::Index>(r.pivots.size()) < n || (n > 0 && r.pivots[n - 1] != n - 1)) {
    throw SingularMatrix("matrix is singular");
  }
  return r.reduced.rightCols(n);
}

// ------------------------------------------------------------------ Subspace

template <class S>
Subspace<S> Subspace<S>::zero(int ambient_dim) {
  Subspace out;
  out.ambient_ = ambient_dim;
  out.basis_.resize(0, ambient_dim);
  return out;
}

template <class S>
Subspace<S> Subspace<S>::full(int ambient_dim) {
  Subspace out;
  out.ambient_ = ambient_dim;
  out.basis_ = Matrix<S>::Identity(ambient_dim, ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) out.pivots_.push_back(i);
  return out;
}

template <class S>
Subspace<S> Subspace<S>::span(const Matrix<S>& rows) {
  Rref<S> r = rref(rows);
  Subspace out;
  out.ambient_ = static_cast<int>(rows.cols());
  out.basis_ = r.reduced.topRows(static_cast<Eigen::Index>(r.pivots.size()));
  out.pivots_ = std::move(r.pivots);
  return out;
}

template <class S>
Subspace<S> Subspace<S>::span(const std::vector<Vector<S>>& vectors, int ambient_dim) {
  EchelonBasis<S> builder(ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw DimensionMismatch("vector length differs from ambient");
    builder.insert(v);
  }
  return builder.subspace();
}

template <class S>
Vector<S> Subspace<S>::reduce(Vector<S> x) const {
  if (x.size() != ambient_) throw DimensionMismatch("vector length differs from ambient");
  for (Eigen::Index r = 0; r < basis_.rows(); ++r) {
    const int p = pivots_[r];
    if (is_zero(x(p))) continue;
    const S factor = x(p);
    for (Eigen::Index c = p; c < basis_.cols(); ++c) {
      if (!is_zero(basis_(r, c))) x(c) -= factor * basis_(r, c);
    }
  }
  return x;
}

template <class S>
bool Subspace<S>::contains(const Vector<S>& x) const {
  const Vector<S> rem = reduce(x);
  for (Eigen::Index i = 0; i < rem.size(); ++i) {
    if (!is_zero(rem(i))) return false;
  }
  return true;
}

template <class S>
bool Subspace<S>::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("ambient dimensions differ");
  for (int r = 0; r < other.dim(); ++r) {
    if (!contains(other.vector(r))) return false;
  }
  return true;
}

template <class S>
Vector<S> Subspace<S>::coordinates(const Vector<S>& x) const {
  if (!contains(x)) throw NotContained("vector is not in the subspace");
  Vector<S> out(dim());
  for (int r = 0; r < dim(); ++r) out(r) = x(pivots_[r]);
  return out;
}

// -------------------------------------------------------------- EchelonBasis

template <class S>
bool EchelonBasis<S>::insert(Vector<S> v) {
  if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int p = pivots_[r];
    if (is_zero(v(p))) continue;
    const S factor = v(p);
    axpy(v, factor, rows_[r], p);
  }
  Eigen::Index lead = 0;
  while (lead < v.size() && is_zero(v(lead))) ++lead;
  if (lead == v.size()) return false;
  const S scale = v(lead).inverse();
  for (Eigen::Index c = lead; c < v.size(); ++c) {
    if (!is_zero(v(c))) v(c) *= scale;
  }
  for (auto& row : rows_) {
    if (is_zero(row(lead))) continue;
    const S factor = row(lead);
    axpy(row, factor, v, lead);
  }
  const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), static_cast<int>(lead));
  const auto offset = at - pivots_.begin();
  pivots_.insert(at, static_cast<int>(lead));
  rows_.insert(rows_.begin() + offset, std::move(v));
  return true;
}

template <class S>
bool EchelonBasis<S>::insert(const SparseVector<S>& v) {
  if (v.empty()) return false;
  return insert(to_dense(v, ambient_));
}

template <class S>
Subspace<S> EchelonBasis<S>::subspace() const {
  Subspace<S> out;
  out.ambient_ = ambient_;
  out.basis_.resize(static_cast<Eigen::Index>(rows_.size()), ambient_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    out.basis_.row(static_cast<Eigen::Index>(r)) = rows_[r].transpose();
  }
  out.pivots_ = pivots_;
  return out;
}

// ----------------------------------------------------------- free functions

template <class S>
Subspace<S> kernel(const Matrix<S>& m) {
  const Rref<S> r = rref(m);
  const int cols = static_cast<int>(m.cols());
  std::vector<bool> is_pivot(cols, false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<Vector<S>> vectors;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector<S> x = Vector<S>::Zero(cols);
    x(f) = S(1);
    for (std::size_t row = 0; row < r.pivots.size(); ++row) {
      const S& entry = r.reduced(static_cast<Eigen::Index>(row), f);
      if (!is_zero(entry)) x(r.pivots[row]) = -entry;
    }
    vectors.push_back(std::move(x));
  }
  return Subspace<S>::span(vectors, cols);
}

template <class S>
Subspace<S> subspace_sum(const Subspace<S>& u, const Subspace<S>& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("ambient dimensions differ");
  Matrix<S> stacked(u.dim() + v.dim(), u.ambient_dim());
  stacked.topRows(u.dim()) = u.basis();
  stacked.bottomRows(v.dim()) = v.basis();
  return Subspace<S>::span(stacked);
}

template <class S>
Subspace<S> subspace_intersect(const Subspace<S>& u, const Subspace<S>& v) {
  const int n = u.ambient_dim();
  if (n != v.ambient_dim()) throw DimensionMismatch("ambient dimensions differ");
  // Coefficient pairs (a, b) with a U = b V.
  Matrix<S> system(n, u.dim() + v.dim());
  system.leftCols(u.dim()) = u.basis().transpose();
  system.rightCols(v.dim()) = -v.basis().transpose();
  const Subspace<S> relations = kernel(system);
  Matrix<S> rows(relations.dim(), n);
  for (int r = 0; r < relations.dim(); ++r) {
    rows.row(r) = relations.basis().row(r).leftCols(u.dim()) * u.basis();
  }
  return Subspace<S>::span(rows);
}

template <class S>
Subspace<S> complement(const Subspace<S>& inner, const Subspace<S>& outer) {
  if (inner.ambient_dim() != outer.ambient_dim()) {
    throw DimensionMismatch("ambient dimensions differ");
  }
  if (!outer.contains(inner)) throw NotContained("inner subspace is not inside outer");
  const auto& taken = inner.pivots();
  std::vector<Vector<S>> rows;
  for (int r = 0; r < outer.dim(); ++r) {
    if (!std::binary_search(taken.begin(), taken.end(), outer.pivots()[r])) {
      rows.push_back(outer.vector(r));
    }
  }
  return Subspace<S>::span(rows, outer.ambient_dim());
}

template <class S>
Subspace<S> preimage(const Matrix<S>& m, const Subspace<S>& w) {
  if (m.rows() != w.ambient_dim()) throw DimensionMismatch("target dimension differs");
  // m x lies in w iff its reduction modulo w vanishes on the non-pivot coordinates.
  const auto& pivots = w.pivots();
  std::vector<Vector<S>> equations;
  for (int c = 0; c < w.ambient_dim(); ++c) {
    if (std::binary_search(pivots.begin(), pivots.end(), c)) continue;
    Vector<S> eq = m.row(c).transpose();
    for (int r = 0; r < w.dim(); ++r) {
      const S& coeff = w.basis()(r, c);
      if (!is_zero(coeff)) eq -= coeff * m.row(pivots[r]).transpose();
    }
    equations.push_back(std::move(eq));
  }
  Matrix<S> system(static_cast<Eigen::Index>(equations.size()), m.cols());
  for (std::size_t i = 0; i < equations.size(); ++i) {
    system.row(static_cast<Eigen::Index>(i)) = equations[i].transpose();
  }
  return kernel(system);
}

template <class S>
Subspace<S> image(const Matrix<S>& m, const Subspace<S>& u) {
  if (m.cols() != u.ambient_dim()) throw DimensionMismatch("source dimension differs");
  return Subspace<S>::span(Matrix<S>(u.basis() * m.transpose()));
}

#define LIEALG_INSTANTIATE_LINALG(S)                                              \
  template Vector<S> to_dense(const SparseVector<S>&, int);                       \
  template SparseVector<S> to_sparse(const Vector<S>&);                           \
  template Vector<S> unit_vector(int, int);                                       \
  template Rref<S> rref(Matrix<S>);                                               \
  template int rank(const Matrix<S>&);                                            \
  template Matrix<S> inverse(const Matrix<S>&);                                   \
  template class Subspace<S>;                                                     \
  template class EchelonBasis<S>;                                                 \
  template Subspace<S> kernel(const Matrix<S>&);                                  \
  template Subspace<S> subspace_sum(const Subspace<S>&, const Subspace<S>&);      \
  template Subspace<S> subspace_intersect(const Subspace<S>&, const Subspace<S>&); \
  template Subspace<S> complement(const Subspace<S>&, const Subspace<S>&);        \
  template Subspace<S> preimage(const Matrix<S>&, const Subspace<S>&);            \
  template Subspace<S> image(const Matrix<S>&, const Subspace<S>&);

LIEALG_INSTANTIATE_LINALG(Rational)
LIEALG_INSTANTIATE_LINALG(Zp)

}  // namespace liealg
