#include "liealg/verify.hpp"

#include <random>

#include "liealg/catalog.hpp"
#include "liealg/classify.hpp"
#include "liealg/invariants.hpp"

namespace liealg {

namespace {

struct Instance {
  std::string label;
  CatalogEntry entry;
  FieldSpec field;
  long long param = 0;
};

std::vector<Instance> table1_instances() {
  std::vector<Instance> out;
  const FieldSpec q = FieldSpec::rationals();
  const FieldSpec gf2 = FieldSpec::prime(2);
  for (const auto& key : catalog_keys()) {
    const CatalogEntry entry = catalog_entry(key);
    std::vector<long long> params;
    switch (entry.domain) {
      case ParamDomain::None:
        params = {0};
        break;
      case ParamDomain::NonzeroEpsilon:
        params = {1, 2, -1};
        break;
      case ParamDomain::Epsilon:
        params = {0, 1, 2, -1};
        break;
      case ParamDomain::Eta:
        params = {0, 1};
        break;
    }
    for (const FieldSpec& field : {q, gf2}) {
      if (!admits(entry.constraint, field)) continue;
      for (long long param : params) {
        CatalogEntry e = entry;
        if (entry.domain != ParamDomain::None) {
          // Only eps = 1 is nonzero over GF(2); other values repeat 0 or 1.
          if (field.characteristic() == 2 && (param == 2 || param == -1)) continue;
          if (field.characteristic() == 2 && entry.domain == ParamDomain::NonzeroEpsilon &&
              param != 1) {
            continue;
          }
          e.param = param;
        }
        out.push_back({e.label() + " over " + field.to_string(), e, field, param});
      }
    }
  }
  return out;
}

template <class S>
InvariantReport entry_report(const Instance& inst) {
  return report(build<S>(inst.entry, inst.field));
}

InvariantReport entry_report_any(const Instance& inst) {
  return inst.field.is_rational() ? entry_report<Rational>(inst) : entry_report<Zp>(inst);
}

Table1Row row_of(const InvariantReport& r) {
  return {r.quotient_dim(), r.d_central_quotient.value_or(-1), r.dim_derived};
}

template <class S>
void round_trips(const FieldSpec& field, std::vector<CheckLine>& out) {
  std::mt19937_64 rng(20240611);
  std::vector<Verdict> verdicts;
  for (int n = 0; n <= 5; ++n) verdicts.push_back(Verdict::abelian(n));
  for (int m = 1; m <= 3; ++m) {
    for (int k = 0; k <= 3; ++k) verdicts.push_back(Verdict::heisenberg(m, k));
  }
  for (int k = 0; k <= 3; ++k) {
    verdicts.push_back(Verdict::l43(k));
    verdicts.push_back(Verdict::l55(k));
    verdicts.push_back(Verdict::l56(k));
    verdicts.push_back(Verdict::l57(k));
  }
  for (const auto& v : verdicts) {
    const LieAlgebra<S> base = build<S>(v, field);
    bool ok = classify_t012(base).verdict == v;
    for (int trial = 0; trial < 3 && ok; ++trial) {
      const auto moved = change_basis(base, random_invertible<S>(base.dim(), field, rng));
      ok = classify_t012(moved).verdict == v;
    }
    out.push_back({"round trip " + v.to_string() + " over " + field.to_string(), ok, ""});
  }
}

template <class S>
void catalog_theorems(const Instance& inst, std::vector<CheckLine>& out) {
  const LieAlgebra<S> lie = build<S>(inst.entry, inst.field);
  const auto result = classify_t012(lie);
  const Table1Row& row = inst.entry.expected_row;
  const int expected_t = row.d * row.derived_dim - row.quotient_dim;
  out.push_back({"classify " + inst.label,
                 result.verdict.kind != Verdict::Kind::Counterexample && result.t == expected_t,
                 result.verdict.to_string()});
  bool sums = true;
  for (int k = 1; k <= 3 && sums; ++k) {
    sums = t_invariant(direct_sum(lie, abelian<S>(k, inst.field))) == result.t;
  }
  out.push_back({"t(L+A(k)) = t(L), k <= 3, " + inst.label, sums, ""});
}

}  // namespace

std::vector<CheckLine> table1_checks() {
  std::vector<CheckLine> out;
  for (const auto& inst : table1_instances()) {
    const Table1Row got = row_of(entry_report_any(inst));
    const Table1Row& want = inst.entry.expected_row;
    out.push_back({"table1 " + inst.label, got == want,
                   "computed " + got.to_string() + " expected " + want.to_string()});
  }
  return out;
}

std::vector<CheckLine> theorem_checks() {
  std::vector<CheckLine> out = table1_checks();
  round_trips<Rational>(FieldSpec::rationals(), out);
  round_trips<Zp>(FieldSpec::prime(2), out);
  round_trips<Zp>(FieldSpec::prime(3), out);
  for (const auto& inst : table1_instances()) {
    if (inst.field.is_rational()) {
      catalog_theorems<Rational>(inst, out);
    } else {
      catalog_theorems<Zp>(inst, out);
    }
  }
  const FieldSpec q = FieldSpec::rationals();
  for (int t = 1; t <= 100; ++t) {
    const auto r = report(filiform<Rational>(t, q));
    const bool ok = r.t == t && r.dim == t + 3 && r.dim_center == 1 && r.nilpotency_class == t + 2;
    out.push_back({"filiform F(" + std::to_string(t) + ")", ok, r.to_string()});
  }
  return out;
}

}  // namespace liealg
