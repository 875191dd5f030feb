#include <doctest.h>

#include <random>
#include <set>

#include "liealg/linalg.hpp"
#include "support.hpp"

using namespace liealg;
using namespace liealg::test;

namespace {

// Number of distinct vectors in the row span over GF(p), by brute force.
std::size_t span_size_bruteforce(const Matrix<Zp>& rows, std::uint32_t p) {
  const int r = static_cast<int>(rows.rows());
  const int n = static_cast<int>(rows.cols());
  std::set<std::vector<long long>> seen;
  std::vector<int> coeff(r, 0);
  while (true) {
    std::vector<long long> v(n, 0);
    for (int i = 0; i < r; ++i) {
      for (int c = 0; c < n; ++c) v[c] = (v[c] + coeff[i] * rows(i, c).value()) % p;
    }
    seen.insert(v);
    int i = 0;
    while (i < r && ++coeff[i] == static_cast<int>(p)) coeff[i++] = 0;
    if (i == r) break;
  }
  return seen.size();
}

template <class S>
void subspace_laws(const FieldSpec& f, std::mt19937_64& rng, int trials) {
  std::uniform_int_distribution<int> dim_dist(1, 7);
  for (int trial = 0; trial < trials; ++trial) {
    const int n = dim_dist(rng);
    std::uniform_int_distribution<int> gen_dist(0, n + 1);
    const auto u = Subspace<S>::span(random_matrix<S>(gen_dist(rng), n, f, rng, 1));
    const auto v = Subspace<S>::span(random_matrix<S>(gen_dist(rng), n, f, rng, 1));
    const auto sum = subspace_sum(u, v);
    const auto meet = subspace_intersect(u, v);
    CHECK(sum.dim() + meet.dim() == u.dim() + v.dim());
    CHECK(sum.contains(u));
    CHECK(sum.contains(v));
    CHECK(u.contains(meet));
    CHECK(v.contains(meet));
    CHECK(subspace_sum(v, u) == sum);
    CHECK(subspace_intersect(v, u) == meet);
    const auto comp = complement(meet, u);
    CHECK(comp.dim() + meet.dim() == u.dim());
    CHECK(subspace_sum(comp, meet) == u);
    CHECK(subspace_intersect(comp, meet).dim() == 0);
  }
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rref of a known matrix") {
  Matrix<Rational> m(3, 4);
  m << 1, 2, 1, 0,  //
      2, 4, 0, 2,   //
      3, 6, 1, 2;
  const auto r = rref(m);
  CHECK(r.pivots == std::vector<int>{0, 2});
  Matrix<Rational> expected(3, 4);
  expected << 1, 2, 0, 1,  //
      0, 0, 1, -1,         //
      0, 0, 0, 0;
  CHECK(r.reduced == expected);
  CHECK(rank(m) == 2);
  const auto ker = kernel(m);
  CHECK(ker.dim() == 2);
  for (int b = 0; b < ker.dim(); ++b) CHECK(is_zero_vector<Rational>(m * ker.vector(b)));
}

TEST_CASE("inverse and singular matrices") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_matrix<Rational>(4, 4, kQ, rng, 3);
    if (rank(m) < 4) {
      CHECK_THROWS_AS(inverse(m), SingularMatrix);
      continue;
    }
    const Matrix<Rational> prod = m * inverse(m);
    CHECK(prod == Matrix<Rational>::Identity(4, 4));
  }
  Matrix<Zp> singular(2, 2);
  singular << Zp::from_integer(1, 3), Zp::from_integer(2, 3), Zp::from_integer(2, 3),
      Zp::from_integer(1, 3);
  CHECK_THROWS_AS(inverse(singular), SingularMatrix);
  CHECK_THROWS_AS(inverse(Matrix<Rational>(2, 3)), SingularMatrix);
}

TEST_CASE("rank over GF(p) matches brute-force span size") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (int trial = 0; trial < 100; ++trial) {
      const auto m = random_matrix<Zp>(4, 4, f, rng);
      std::size_t expected = 1;
      for (int i = 0; i < rank(m); ++i) expected *= p;
      CHECK(span_size_bruteforce(m, p) == expected);
    }
  }
}

TEST_CASE("subspace dimension formula on 500 random pairs") {
  std::mt19937_64 rng(17);
  subspace_laws<Rational>(kQ, rng, 200);
  subspace_laws<Zp>(kGF2, rng, 150);
  subspace_laws<Zp>(kGF3, rng, 150);
}

TEST_CASE("echelon basis agrees with span") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix<Rational>(6, 5, kQ, rng, 2);
    EchelonBasis<Rational> eb(5);
    for (int r = 0; r < 6; ++r) eb.insert(Vector<Rational>(m.row(r).transpose()));
    CHECK(eb.subspace() == Subspace<Rational>::span(m));
    CHECK(eb.rank() == rank(m));
  }
}

TEST_CASE("reduce, coordinates and containment") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = Subspace<Rational>::span(random_matrix<Rational>(3, 6, kQ, rng));
    const auto coeffs = random_matrix<Rational>(1, u.dim(), kQ, rng);
    Vector<Rational> x = Vector<Rational>::Zero(6);
    for (int b = 0; b < u.dim(); ++b) x += coeffs(0, b) * u.vector(b);
    CHECK(u.contains(x));
    CHECK(u.coordinates(x) == Vector<Rational>(coeffs.row(0).transpose()));
    CHECK(is_zero_vector(u.reduce(x)));
    if (u.dim() < 6) {
      const auto outside = complement(u, Subspace<Rational>::full(6)).vector(0);
      CHECK_FALSE(u.contains(outside));
      CHECK_THROWS_AS(u.coordinates(outside), NotContained);
    }
  }
  CHECK_THROWS_AS(complement(Subspace<Rational>::full(3), Subspace<Rational>::zero(3)),
                  NotContained);
}

TEST_CASE("preimage and image") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix<Rational>(5, 5, kQ, rng, 1);
    const auto w = Subspace<Rational>::span(random_matrix<Rational>(2, 5, kQ, rng));
    const auto pre = preimage(m, w);
    for (int b = 0; b < pre.dim(); ++b) CHECK(w.contains(Vector<Rational>(m * pre.vector(b))));
    const auto range = image(m, Subspace<Rational>::full(5));
    CHECK(range.dim() == rank(m));
    CHECK(pre.dim() == kernel(m).dim() + subspace_intersect(w, range).dim());
    CHECK(image(m, pre) == subspace_intersect(w, range));
  }
}

TEST_CASE("sparse and dense conversions") {
  SparseVector<Rational> s{{1, Rational(2)}, {4, Rational(-1, 3)}};
  const auto d = to_dense(s, 5);
  CHECK(d(0).is_zero());
  CHECK(d(4) == Rational(-1, 3));
  CHECK(to_sparse(d) == s);
  CHECK(unit_vector<Rational>(3, 2) == Vector<Rational>(Eigen::Vector<Rational, 3>(0, 0, 1)));
}

}  // TEST_SUITE
