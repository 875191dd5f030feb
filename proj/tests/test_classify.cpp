#include <doctest.h>

#include <random>

#include "liealg/catalog.hpp"
#include "liealg/classify.hpp"
#include "support.hpp"

using namespace liealg;
using namespace liealg::test;

namespace {

template <class S>
LieAlgebra<S> plus_abelian(const LieAlgebra<S>& lie, int k) {
  return k == 0 ? lie : direct_sum(lie, abelian<S>(k, lie.field()));
}

template <class S>
void check_stem_properties(const LieAlgebra<S>& lie) {
  const int n = lie.dim();
  const auto split = stem_decomposition(lie);
  const auto& t = split.stem_subspace;
  const auto& a = split.abelian_subspace;
  const auto derived = derived_subalgebra(lie);
  const auto z = center(lie);
  const auto derived_center = subspace_intersect(derived, z);

  CHECK(subspace_sum(t, a).dim() == n);
  CHECK(subspace_intersect(t, a).dim() == 0);
  CHECK(z.contains(a));
  CHECK(t.contains(derived));
  CHECK(is_ideal(lie, t));
  CHECK(split.k == a.dim());
  CHECK(split.k == z.dim() - derived_center.dim());

  // Z(T), carried into L through the basis of T, is exactly L^2 cap Z(L).
  const auto zt = center(split.stem);
  std::vector<Vector<S>> image;
  for (int r = 0; r < zt.dim(); ++r) {
    Vector<S> v = Vector<S>::Zero(n);
    for (int c = 0; c < t.dim(); ++c) v += zt.vector(r)(c) * t.vector(c);
    image.push_back(v);
  }
  CHECK(Subspace<S>::span(image, n) == derived_center);
  // T is stem.
  CHECK(derived_subalgebra(split.stem).contains(zt));

  CHECK(split.witness.is_isomorphism());
  CHECK(report(split.witness.source) == report(lie));
  if (is_nilpotent(lie)) CHECK(t_invariant(split.stem) == t_invariant(lie));
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("stem decomposition examples") {
  const auto l43 = get<Rational>("L4_3", kQ);
  const auto split = stem_decomposition(plus_abelian(l43, 2));
  CHECK(split.k == 2);
  CHECK(report(split.stem) == report(l43));

  const auto a4 = stem_decomposition(abelian<Rational>(4, kQ));
  CHECK(a4.stem.dim() == 0);
  CHECK(a4.k == 4);

  const auto h2 = stem_decomposition(heisenberg<Rational>(2, kQ));
  CHECK(h2.k == 0);
  CHECK(h2.stem == heisenberg<Rational>(2, kQ));
}

TEST_CASE("stem decomposition properties on the catalog") {
  std::mt19937_64 rng(71);
  for (const auto& entry : list_all(kQ)) {
    CAPTURE(entry.label());
    const auto lie = build<Rational>(entry, kQ);
    for (int k = 0; k <= 3; ++k) {
      const auto sum = plus_abelian(lie, k);
      check_stem_properties(sum);
      check_stem_properties(change_basis(sum, random_invertible<Rational>(sum.dim(), kQ, rng)));
    }
  }
  for (const auto& entry : list_all(kGF2)) {
    CAPTURE(entry.label());
    const auto lie = build<Zp>(entry, kGF2);
    check_stem_properties(change_basis(plus_abelian(lie, 2),
                                       random_invertible<Zp>(lie.dim() + 2, kGF2, rng)));
  }
}

TEST_CASE("Heisenberg recognition") {
  const auto h1 = recognize_heisenberg(heisenberg<Rational>(1, kQ));
  CHECK(h1.m == 1);
  CHECK(h1.k == 0);
  CHECK(h1.witness.is_isomorphism());
  CHECK_THROWS_AS(recognize_heisenberg(get<Rational>("L4_3", kQ)), DerivedNotLine);
  CHECK_THROWS_AS(recognize_heisenberg(abelian<Rational>(3, kQ)), DerivedNotLine);
  // dim L^2 = 1 but not central.
  const auto solvable = new_algebra<Rational>(kQ, 2, {{0, 1, {{1, Rational(1)}}}});
  CHECK_THROWS_AS(recognize_heisenberg(solvable), NotNilpotent);

  std::mt19937_64 rng(73);
  for (const FieldSpec& f : {kQ, kGF2, kGF3}) {
    for (int trial = 0; trial < 10; ++trial) {
      if (f.is_rational()) {
        const auto base = direct_sum(heisenberg<Rational>(3, f), abelian<Rational>(2, f));
        const auto moved = change_basis(base, random_invertible<Rational>(9, f, rng));
        const auto rec = recognize_heisenberg(moved);
        CHECK(rec.m == 3);
        CHECK(rec.k == 2);
        CHECK(rec.witness.is_isomorphism());
        CHECK(rec.witness.target == moved);
      } else {
        const auto base = direct_sum(heisenberg<Zp>(2, f), abelian<Zp>(1, f));
        const auto rec = recognize_heisenberg(change_basis(base, random_invertible<Zp>(6, f, rng)));
        CHECK(rec.m == 2);
        CHECK(rec.k == 1);
        CHECK(rec.witness.is_isomorphism());
      }
    }
  }
}

TEST_CASE("verdict strings") {
  CHECK(Verdict::abelian(3).to_string() == "abelian(3)");
  CHECK(Verdict::heisenberg(2, 1).to_string() == "heisenberg(2)+A(1)");
  CHECK(Verdict::l43(0).to_string() == "L4_3+A(0)");
  CHECK(Verdict::l55(2).to_string() == "L5_5+A(2)");
  CHECK(Verdict::l56(1).to_string() == "L5_6+A(1)");
  CHECK(Verdict::l57(4).to_string() == "L5_7+A(4)");
  CHECK(Verdict::out_of_scope(6).to_string() == "out-of-scope(t=6)");
  CHECK(Verdict::counterexample().to_string() == "COUNTEREXAMPLE");
  CHECK_THROWS_AS(build<Rational>(Verdict::out_of_scope(3), kQ), Error);
}

TEST_CASE("classification examples") {
  const auto h = classify_t012(direct_sum(heisenberg<Rational>(2, kQ), abelian<Rational>(3, kQ)));
  CHECK(h.verdict == Verdict::heisenberg(2, 3));
  REQUIRE(h.witness.has_value());
  CHECK(h.witness->is_isomorphism());

  std::mt19937_64 rng(79);
  const auto l431 = plus_abelian(get<Rational>("L4_3", kQ), 1);
  CHECK(classify_t012(change_basis(l431, random_invertible<Rational>(5, kQ, rng))).verdict ==
        Verdict::l43(1));
  CHECK(classify_t012(get<Rational>("L5_6", kQ)).verdict == Verdict::l56(0));
  CHECK(classify_t012(get<Rational>("L5_7", kQ)).verdict == Verdict::l57(0));
  CHECK(classify_t012(get<Rational>("L5_5", kQ)).verdict == Verdict::l55(0));
  const auto oos = classify_t012(get<Rational>("L6_26", kQ));
  CHECK(oos.verdict == Verdict::out_of_scope(6));
  CHECK(oos.t == 6);
  CHECK(classify_t012(abelian<Rational>(0, kQ)).verdict == Verdict::abelian(0));
  CHECK_THROWS_AS(classify_t012(new_algebra<Rational>(kQ, 2, {{0, 1, {{1, Rational(1)}}}})),
                  NotNilpotent);
}

TEST_CASE("verdict round trips under change of basis") {
  std::mt19937_64 rng(83);
  std::vector<Verdict> verdicts;
  for (int n = 0; n <= 4; ++n) verdicts.push_back(Verdict::abelian(n));
  for (int m = 1; m <= 3; ++m) {
    for (int k = 0; k <= 2; ++k) verdicts.push_back(Verdict::heisenberg(m, k));
  }
  for (int k = 0; k <= 2; ++k) {
    for (auto v : {Verdict::l43(k), Verdict::l55(k), Verdict::l56(k), Verdict::l57(k)}) {
      verdicts.push_back(v);
    }
  }
  for (const auto& v : verdicts) {
    CAPTURE(v.to_string());
    const auto base = build<Rational>(v, kQ);
    CHECK(classify_t012(base).verdict == v);
    for (int trial = 0; trial < 50; ++trial) {
      const auto moved = change_basis(base, random_invertible<Rational>(base.dim(), kQ, rng));
      CHECK(classify_t012(moved).verdict == v);
    }
    for (const FieldSpec& f : {kGF2, kGF3}) {
      const auto base_p = build<Zp>(v, f);
      for (int trial = 0; trial < 10; ++trial) {
        const auto moved = change_basis(base_p, random_invertible<Zp>(base_p.dim(), f, rng));
        CHECK(classify_t012(moved).verdict == v);
      }
    }
  }
}

TEST_CASE("the catalog never yields a counterexample") {
  for (const auto& entry : list_all(kQ)) {
    const auto r = classify_t012(build<Rational>(entry, kQ));
    CAPTURE(entry.label());
    CHECK(r.verdict.kind != Verdict::Kind::Counterexample);
    CHECK((r.verdict.kind == Verdict::Kind::OutOfScope) == (r.t >= 3));
  }
  for (const auto& entry : list_all(kGF2)) {
    const auto r = classify_t012(build<Zp>(entry, kGF2));
    CAPTURE(entry.label());
    CHECK(r.verdict.kind != Verdict::Kind::Counterexample);
  }
}

}  // TEST_SUITE
