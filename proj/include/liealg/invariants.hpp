#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liealg/algebra.hpp"

namespace liealg {

/// Isomorphism-invariant dimensions attached to an algebra.
struct InvariantReport {
  int dim = 0;
  int dim_derived = 0;
  int dim_center = 0;
  int dim_second_center = 0;
  std::vector<int> lcs_dims;  // dim L^1, dim L^2, ... until stable
  std::vector<int> ucs_dims;  // dim Z_1, dim Z_2, ... until stable
  std::optional<int> nilpotency_class;
  std::optional<int> d_central_quotient;  // d(L/Z(L)); nilpotent only
  std::optional<int> t;                   // nilpotent only
  int dim_centralizer_derived = 0;

  int quotient_dim() const { return dim - dim_center; }
  bool nilpotent() const { return nilpotency_class.has_value(); }
  std::string to_string() const;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// L^2 = [L, L].
template <class S>
Subspace<S> derived_subalgebra(const LieAlgebra<S>& lie);

/// Z(L): the joint kernel of all adjoint maps.
template <class S>
Subspace<S> center(const LieAlgebra<S>& lie);

/// {x : [x, L] is contained in w}. With w = Z_i this is Z_{i+1}.
template <class S>
Subspace<S> central_preimage(const LieAlgebra<S>& lie, const Subspace<S>& w);

/// Z_2(L).
template <class S>
Subspace<S> second_center(const LieAlgebra<S>& lie);

/// L^1 = L, L^{i+1} = [L, L^i], listed until the series stabilizes.
template <class S>
std::vector<Subspace<S>> lower_central_series(const LieAlgebra<S>& lie);

/// Z_1, Z_2, ... listed until the series stabilizes.
template <class S>
std::vector<Subspace<S>> upper_central_series(const LieAlgebra<S>& lie);

/// Least c with L^{c+1} = 0, or nullopt when L is not nilpotent.
template <class S>
std::optional<int> nilpotency_class(const LieAlgebra<S>& lie);

template <class S>
bool is_nilpotent(const LieAlgebra<S>& lie) {
  return nilpotency_class(lie).has_value();
}

/// Minimal number of generators, dim L - dim L^2; throws NotNilpotent.
template <class S>
int min_generators(const LieAlgebra<S>& lie);

/// C_L(U) = {x : [x, u] = 0 for all u in U}.
template <class S>
Subspace<S> centralizer(const LieAlgebra<S>& lie, const Subspace<S>& u);

/// d(L/Z(L)) = dim L/Z(L) - dim (L^2 + Z(L))/Z(L); throws NotNilpotent.
template <class S>
int central_quotient_generators(const LieAlgebra<S>& lie);

/// t(L) = d(L/Z(L)) dim L^2 - dim L/Z(L); throws NotNilpotent.
template <class S>
int t_invariant(const LieAlgebra<S>& lie);

/// dim L^2 <= q(q-1)/2 with q = dim L/Z(L).
template <class S>
bool moneyhun_check(const LieAlgebra<S>& lie);

template <class S>
InvariantReport report(const LieAlgebra<S>& lie);

/// The report together with the subspaces it was computed from.
template <class S>
struct DetailedReport {
  InvariantReport report;
  Subspace<S> derived;
  Subspace<S> center;
};

template <class S>
DetailedReport<S> detailed_report(const LieAlgebra<S>& lie);

}  // namespace liealg
