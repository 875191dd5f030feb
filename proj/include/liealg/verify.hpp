#pragma once

#include <string>
#include <vector>

namespace liealg {

struct CheckLine {
  std::string label;
  bool ok = false;
  std::string detail;
};

/// Tabulated (dim L/Z, d, dim L^2) for every catalog entry: the characteristic
/// other than 2 list over Q with epsilon in {0, 1, 2, -1} where admissible,
/// and the any-field and characteristic 2 lists over GF(2).
std::vector<CheckLine> table1_checks();

/// table1_checks plus classification round trips, catalog classification,
/// t(L + A(k)) = t(L) for k <= 3, and the filiform family up to t = 100.
std::vector<CheckLine> theorem_checks();

}  // namespace liealg
