#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "liealg/algebra.hpp"

namespace liealg {

/// Structure constants of an alternating tensor over GF(p), flattened as
/// digit[pair * n + k] = c_{ij}^k with pairs (0,1), (0,2), ..., (n-2,n-1).
using TensorDigits = std::vector<int>;

int pair_count(int n);
int digit_count(int n);

/// Candidates p^(n * C(n,2)); throws BudgetExceeded if it does not fit in 63 bits.
std::uint64_t candidate_count(int n, std::uint32_t p);

/// Little-endian base-p value of the digits.
std::uint64_t encode(const TensorDigits& digits, std::uint32_t p);
TensorDigits decode(std::uint64_t tensor_id, int n, std::uint32_t p);

/// The algebra a tensor describes, without the Jacobi check.
LieAlgebra<Zp> tensor_algebra(const TensorDigits& digits, int n, const FieldSpec& field);

/// Jacobi identity and nilpotency on raw residues, for the census inner loop.
bool tensor_is_lie(const TensorDigits& digits, int n, std::uint32_t p);
bool tensor_is_nilpotent(const TensorDigits& digits, int n, std::uint32_t p);

struct CensusRow {
  std::uint64_t tensor_id = 0;
  int n = 0;
  int dim_derived = 0;
  int dim_center = 0;
  int d = 0;
  int t = 0;
  std::string verdict;

  int quotient_dim() const { return n - dim_center; }
  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusSummary {
  int n = 0;
  FieldSpec field = FieldSpec::prime(2);
  std::uint64_t candidates = 0;
  std::uint64_t lie_algebras = 0;
  std::uint64_t nilpotent = 0;
  std::map<int, std::uint64_t> t_tally;
  std::vector<CensusRow> rows;  // nilpotent tensors, by tensor_id

  /// `tensor_id,n,dim_derived,dim_center,d,t,verdict` header plus one line per row.
  void write_csv(std::ostream& os) const;
  /// Counts and tallies as text, one item per line.
  std::string summary_text() const;

  friend bool operator==(const CensusSummary&, const CensusSummary&) = default;
};

/// Candidate limit applied unless the caller forces the run.
inline constexpr std::uint64_t kCensusBudget = std::uint64_t{1} << 24;

struct CensusOptions {
  int jobs = 1;
  bool force = false;
  /// Called on each row in tensor_id order after the run completes.
  std::function<void(const CensusRow&)> consumer;
};

/// Every alternating tensor of dimension n over the prime field f, filtered by
/// Jacobi and then nilpotency; nilpotent ones are classified.
CensusSummary enumerate_algebras(int n, const FieldSpec& field, const CensusOptions& options = {});

struct BoundsVerdict {
  bool passed = true;
  std::vector<std::string> failures;  // each names the tensor_id
};

/// t >= 0; dim L^2 >= 2, 3, 4 force t >= 1, 2, 3; dim L^2 <= q(q-1)/2 with
/// q = dim L/Z(L); no COUNTEREXAMPLE verdicts.
BoundsVerdict verify_bounds(const CensusSummary& census);

}  // namespace liealg
