#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "liealg/field.hpp"
#include "liealg/linalg.hpp"

namespace liealg {

/// One tabulated bracket [e_i, e_j] = sum_k value_k e_k. Indices are 0-based.
template <class S>
struct BracketSpec {
  int i = 0;
  int j = 0;
  SparseVector<S> value;
};

/// A finite-dimensional Lie algebra given by structure constants in a basis
/// e_0, ..., e_{n-1}.
///
/// Only pairs i < j are stored; [e_j, e_i] is the negation and [e_i, e_i] = 0,
/// so the bracket is alternating in every characteristic. Instances are
/// immutable and pass the Jacobi identity.
template <class S>
class LieAlgebra {
 public:
  struct Entry {
    int i;
    int j;
    SparseVector<S> value;
    friend bool operator==(const Entry& a, const Entry& b) {
      return a.i == b.i && a.j == b.j && a.value == b.value;
    }
  };

  const FieldSpec& field() const { return field_; }
  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  LieAlgebra with_name(std::string name) const;

  /// Nonzero brackets, sorted by (i, j).
  const std::vector<Entry>& entries() const { return entries_; }
  /// [e_i, e_j] as a sparse vector.
  SparseVector<S> basis_bracket(int i, int j) const;
  /// [e_a, v].
  Vector<S> ad(int a, const Vector<S>& v) const;
  /// [e_a, v] without touching coordinates the bracket cannot reach.
  SparseVector<S> ad_sparse(int a, const Vector<S>& v) const;
  /// Matrix of x -> [e_a, x].
  Matrix<S> adjoint_matrix(int a) const;

  /// Structural equality (field, dimension, structure constants); names are ignored.
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const LieAlgebra& a, const LieAlgebra& b) { return !(a == b); }

  /// Builds without the Jacobi check. Callers guarantee validity, e.g. a
  /// conjugate of an algebra that already passed it.
  static LieAlgebra assemble(FieldSpec field, int dim, std::vector<BracketSpec<S>> brackets,
                             std::string name = {});

 private:
  LieAlgebra(FieldSpec field, int dim) : field_(field), dim_(dim) {}
  const Entry* find(int i, int j) const;

  FieldSpec field_;
  int dim_;
  std::string name_;
  std::vector<Entry> entries_;
  std::vector<int> lookup_;                // dim * dim, entry index or -1 for i < j
  std::vector<std::vector<int>> incident_;  // entries touching each basis index
};

/// Linear map between Lie algebras; column i of `matrix` is the image of e_i.
template <class S>
struct Homomorphism {
  LieAlgebra<S> source;
  LieAlgebra<S> target;
  Matrix<S> matrix;

  Vector<S> apply(const Vector<S>& x) const { return matrix * x; }
  /// phi([e_i, e_j]) == [phi(e_i), phi(e_j)] for every basis pair.
  bool preserves_brackets() const;
  bool is_isomorphism() const;
};

/// Validated constructor. Pairs given as (j, i) with i < j are negated into
/// place; duplicates, diagonal pairs, out-of-range indices and Jacobi
/// violations are rejected.
template <class S>
LieAlgebra<S> new_algebra(const FieldSpec& field, int dim, std::vector<BracketSpec<S>> brackets,
                          std::string name = {});

template <class S>
Vector<S> bracket(const LieAlgebra<S>& lie, const Vector<S>& x, const Vector<S>& y);

/// Triples i < j < k (0-based) whose Jacobiator is nonzero.
template <class S>
std::vector<std::array<int, 3>> check_jacobi(const LieAlgebra<S>& lie);

template <class S>
LieAlgebra<S> direct_sum(const LieAlgebra<S>& a, const LieAlgebra<S>& b);

/// [U, V]: span of all brackets of basis vectors.
template <class S>
Subspace<S> product_subspace(const LieAlgebra<S>& lie, const Subspace<S>& u,
                             const Subspace<S>& v);

template <class S>
bool is_ideal(const LieAlgebra<S>& lie, const Subspace<S>& ideal);

template <class S>
struct Quotient {
  LieAlgebra<S> algebra;
  Homomorphism<S> projection;
  /// Lifts of the quotient basis: the pivot complement of the ideal.
  Subspace<S> transversal;
};

/// L / I on the basis e_c + I for columns c outside the ideal's pivots.
template <class S>
Quotient<S> quotient(const LieAlgebra<S>& lie, const Subspace<S>& ideal);

/// The same algebra written in the basis given by the columns of p.
template <class S>
LieAlgebra<S> change_basis(const LieAlgebra<S>& lie, const Matrix<S>& p);

/// Random invertible matrix: a row-permuted product of unit triangular
/// factors, so over Q it is unimodular with small integer entries.
template <class S>
Matrix<S> random_invertible(int n, const FieldSpec& field, std::mt19937_64& rng);

template <class S>
Vector<S> random_vector(int n, const FieldSpec& field, std::mt19937_64& rng);

}  // namespace liealg
