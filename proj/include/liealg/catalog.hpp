#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liealg/algebra.hpp"

namespace liealg {

/// (dim L/Z(L), d(L/Z(L)), dim L^2), the three tabulated columns.
struct Table1Row {
  int quotient_dim = 0;
  int d = 0;
  int derived_dim = 0;
  friend bool operator==(const Table1Row&, const Table1Row&) = default;
  std::string to_string() const;
};

enum class FieldConstraint { Any, CharNot2, Char2 };
enum class ParamDomain { None, NonzeroEpsilon, Epsilon, Eta };

bool admits(FieldConstraint constraint, const FieldSpec& field);

/// One named algebra from the nilpotent list, possibly with its parameter fixed.
struct CatalogEntry {
  std::string key;                 // e.g. "L6_19", "L2_6_7"
  std::optional<long long> param;  // epsilon or eta
  ParamDomain domain = ParamDomain::None;
  FieldConstraint constraint = FieldConstraint::Any;
  Table1Row expected_row;

  /// Key plus parameter, e.g. "L6_19(1)".
  std::string label() const;
};

/// Keys of the tabulated list, in presentation order.
const std::vector<std::string>& catalog_keys();

/// Metadata for a tabulated key; throws CatalogError for unknown keys.
CatalogEntry catalog_entry(std::string_view key);

/// Entries valid over `field` at their default parameters: epsilon = 1 where
/// it must be nonzero, both 0 and 1 where zero is allowed, eta in {0, 1}.
std::vector<CatalogEntry> list_all(const FieldSpec& field);

/// A(n): n-dimensional, all brackets zero.
template <class S>
LieAlgebra<S> abelian(int n, const FieldSpec& field);

/// H(m) on x_1, y_1, ..., x_m, y_m, z with [x_i, y_i] = z.
template <class S>
LieAlgebra<S> heisenberg(int m, const FieldSpec& field);

/// The defect-t construction on s, s_1, ..., s_{t+2} with [s, s_i] = s_{i+1}.
template <class S>
LieAlgebra<S> filiform(int t, const FieldSpec& field);

/// Any catalog algebra by key (`A<n>`, `H<m>`, `F<t>`, `L<d>_<k>`, `L2_6_<k>`).
template <class S>
LieAlgebra<S> get(std::string_view key, const FieldSpec& field, const std::vector<S>& params = {});

template <class S>
LieAlgebra<S> build(const CatalogEntry& entry, const FieldSpec& field);

}  // namespace liealg
