#pragma once

#include <random>
#include <vector>

#include "liealg/algebra.hpp"

namespace liealg::test {

inline const FieldSpec kQ = FieldSpec::rationals();
inline const FieldSpec kGF2 = FieldSpec::prime(2);
inline const FieldSpec kGF3 = FieldSpec::prime(3);
inline const FieldSpec kGF5 = FieldSpec::prime(5);

template <class S>
Matrix<S> random_matrix(int rows, int cols, const FieldSpec& f, std::mt19937_64& rng,
                        int magnitude = 2) {
  Matrix<S> m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = random_scalar<S>(rng, f, magnitude);
  }
  return m;
}

template <class S>
Vector<S> column(const Matrix<S>& m, int c) {
  return m.col(c);
}

template <class S>
bool is_zero_vector(const Vector<S>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!is_zero(v(i))) return false;
  }
  return true;
}

/// Every basis vector of u lies in v and vice versa.
template <class S>
bool same_subspace(const Subspace<S>& u, const Subspace<S>& v) {
  return u.contains(v) && v.contains(u);
}

}  // namespace liealg::test
