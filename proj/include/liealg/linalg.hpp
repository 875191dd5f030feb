#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "liealg/field.hpp"

namespace liealg {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// Sorted (index, coefficient) pairs with no zero coefficients.
template <class S>
using SparseVector = std::vector<std::pair<int, S>>;

template <class S>
Vector<S> to_dense(const SparseVector<S>& v, int n);
template <class S>
SparseVector<S> to_sparse(const Vector<S>& v);

/// Standard basis vector e_i (0-based).
template <class S>
Vector<S> unit_vector(int n, int i);

template <class S>
struct Rref {
  Matrix<S> reduced;        // same shape as the input
  std::vector<int> pivots;  // one column per nonzero row, increasing
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
template <class S>
Rref<S> rref(Matrix<S> m);

template <class S>
int rank(const Matrix<S>& m);

/// Throws SingularMatrix if m is not square and invertible.
template <class S>
Matrix<S> inverse(const Matrix<S>& m);

/// A subspace of S^n, held as its unique reduced row-echelon basis.
///
/// Equality of subspaces is entry-wise equality of these bases.
template <class S>
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);
  /// Row space of an arbitrary generating matrix.
  static Subspace span(const Matrix<S>& rows);
  static Subspace span(const std::vector<Vector<S>>& vectors, int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.rows()); }
  const Matrix<S>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  Vector<S> vector(int r) const { return basis_.row(r).transpose(); }

  bool contains(const Vector<S>& x) const;
  bool contains(const Subspace& other) const;
  /// x minus its projection along the basis; zero exactly when x is contained.
  Vector<S> reduce(Vector<S> x) const;
  /// Coordinates of x against basis(); throws NotContained otherwise.
  Vector<S> coordinates(const Vector<S>& x) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  template <class>
  friend class EchelonBasis;

  int ambient_ = 0;
  Matrix<S> basis_;
  std::vector<int> pivots_;
};

/// Incrementally maintained reduced echelon basis. Used where the
/// generating set is large and mostly dependent, e.g. stacked adjoint maps.
template <class S>
class EchelonBasis {
 public:
  explicit EchelonBasis(int ambient_dim) : ambient_(ambient_dim) {}

  /// Returns true if v was independent of the rows seen so far.
  bool insert(Vector<S> v);
  bool insert(const SparseVector<S>& v);

  int rank() const { return static_cast<int>(rows_.size()); }
  bool is_full() const { return rank() == ambient_; }
  const std::vector<int>& pivots() const { return pivots_; }
  Subspace<S> subspace() const;

 private:
  int ambient_;
  std::vector<Vector<S>> rows_;  // kept sorted by pivot
  std::vector<int> pivots_;
};

/// {x : m x = 0}.
template <class S>
Subspace<S> kernel(const Matrix<S>& m);

template <class S>
Subspace<S> subspace_sum(const Subspace<S>& u, const Subspace<S>& v);

template <class S>
Subspace<S> subspace_intersect(const Subspace<S>& u, const Subspace<S>& v);

/// Direct complement of `inner` inside `outer`: the rows of outer's echelon
/// basis whose pivots are not pivots of inner, in increasing pivot order.
template <class S>
Subspace<S> complement(const Subspace<S>& inner, const Subspace<S>& outer);

template <class S>
bool contains(const Subspace<S>& u, const Vector<S>& x) {
  return u.contains(x);
}

/// {x : m x in w}.
template <class S>
Subspace<S> preimage(const Matrix<S>& m, const Subspace<S>& w);

/// Image of u under x -> m x.
template <class S>
Subspace<S> image(const Matrix<S>& m, const Subspace<S>& u);

}  // namespace liealg
