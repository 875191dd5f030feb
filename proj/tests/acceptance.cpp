// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "liealg/catalog.hpp"
#include "liealg/classify.hpp"
#include "liealg/enumerate.hpp"
#include "liealg/invariants.hpp"
#include "liealg/io.hpp"
#include "liealg/verify.hpp"

using namespace liealg;

namespace {

// Wall-clock limits in seconds; 0 means untimed.
constexpr double kLimitTable1 = 1.0;
constexpr double kLimitTZero = 5.0;
constexpr double kLimitFiliform = 10.0;
constexpr double kLimitCensusGF2Dim4 = 120.0;
constexpr int kCensusJobs = 4;

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kGF2 = FieldSpec::prime(2);
const FieldSpec kGF3 = FieldSpec::prime(3);
const FieldSpec kGF5 = FieldSpec::prime(5);

class Criterion {
 public:
  explicit Criterion(std::string label) : label_(std::move(label)) {}

  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }

  int failed() const { return failed_; }
  const std::string& label() const { return label_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::string label_;
  std::vector<std::string> failures_;
  int failed_ = 0;
};

template <class S>
LieAlgebra<S> plus_abelian(const LieAlgebra<S>& lie, int k) {
  return k == 0 ? lie : direct_sum(lie, abelian<S>(k, lie.field()));
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void c1(Criterion& c, double&) {
  for (const auto& line : table1_checks()) c.expect(line.ok, line.label + ": " + line.detail);
}

void c2(Criterion& c, double&) {
  std::mt19937_64 rng(2);
  auto check = [&](const LieAlgebra<Rational>& lie, const Verdict& expected, const std::string& tag) {
    c.expect(t_invariant(lie) == 0, tag + " t != 0");
    c.expect(classify_t012(lie).verdict == expected, tag + " verdict");
    for (int trial = 0; trial < 20; ++trial) {
      const auto moved = change_basis(lie, random_invertible<Rational>(lie.dim(), kQ, rng));
      const auto r = classify_t012(moved);
      c.expect(r.t == 0 && r.verdict == expected, tag + " after base change " + str(trial));
    }
  };
  for (int n = 1; n <= 10; ++n) check(abelian<Rational>(n, kQ), Verdict::abelian(n), "A(" + str(n) + ")");
  for (int m = 1; m <= 10; ++m) {
    for (int k = 0; k <= 5; ++k) {
      check(plus_abelian(heisenberg<Rational>(m, kQ), k), Verdict::heisenberg(m, k),
            "H(" + str(m) + ")+A(" + str(k) + ")");
    }
  }
}

void c3(Criterion& c, double&) {
  std::mt19937_64 rng(3);
  for (int k = 0; k <= 5; ++k) {
    const auto lie = plus_abelian(get<Rational>("L4_3", kQ), k);
    const std::string tag = "L4_3+A(" + str(k) + ")";
    c.expect(t_invariant(lie) == 1, tag + " t != 1");
    c.expect(classify_t012(lie).verdict == Verdict::l43(k), tag + " verdict");
    for (int trial = 0; trial < 20; ++trial) {
      const auto r = classify_t012(change_basis(lie, random_invertible<Rational>(lie.dim(), kQ, rng)));
      c.expect(r.t == 1 && r.verdict == Verdict::l43(k), tag + " after base change " + str(trial));
    }
  }
}

void c4(Criterion& c, double&) {
  std::mt19937_64 rng(4);
  const std::vector<std::pair<std::string, Verdict (*)(int)>> stems{
      {"L5_5", &Verdict::l55}, {"L5_6", &Verdict::l56}, {"L5_7", &Verdict::l57}};
  for (const auto& [key, make] : stems) {
    for (int k = 0; k <= 5; ++k) {
      const auto lie = plus_abelian(get<Rational>(key, kQ), k);
      const Verdict expected = make(k);
      const std::string tag = key + "+A(" + str(k) + ")";
      c.expect(t_invariant(lie) == 2, tag + " t != 2");
      for (int trial = 0; trial < 50; ++trial) {
        const auto moved = change_basis(lie, random_invertible<Rational>(lie.dim(), kQ, rng));
        const auto r = classify_t012(moved);
        c.expect(r.t == 2 && r.verdict == expected, tag + " verdict after base change " + str(trial));
        // C(L^2) picks up the abelian summand.
        if (key == "L5_6") c.expect(r.report.dim_centralizer_derived == 3 + k, tag + " dim C(L^2)");
        if (key == "L5_7") c.expect(r.report.dim_centralizer_derived == 4 + k, tag + " dim C(L^2)");
      }
    }
  }
}

void c5(Criterion& c, double&) {
  for (int t = 1; t <= 100; ++t) {
    const auto f = filiform<Rational>(t, kQ);
    const auto r = report(f);
    const std::string tag = "F(" + str(t) + ")";
    c.expect(r.t == t, tag + " t");
    c.expect(r.dim == t + 3, tag + " dim");
    c.expect(r.dim_center == 1, tag + " dim Z");
    c.expect(r.nilpotency_class == t + 2, tag + " class");
  }
  c.expect(report(filiform<Rational>(1, kQ)) == report(get<Rational>("L4_3", kQ)), "F(1) vs L4_3");
  c.expect(report(filiform<Rational>(2, kQ)) == report(get<Rational>("L5_7", kQ)), "F(2) vs L5_7");
}

// Reused by the serial comparison in C9.
CensusSummary g_parallel_gf2_dim4;

void c6(Criterion& c, double& timed) {
  auto check = [&](const CensusSummary& s, std::uint64_t candidates, const std::string& tag) {
    c.expect(s.candidates == candidates, tag + " candidate count " + str(s.candidates));
    const auto v = verify_bounds(s);
    c.expect(v.passed, tag + " bounds: " + (v.failures.empty() ? "" : v.failures.front()));
    std::uint64_t counterexamples = 0;
    for (const auto& row : s.rows) counterexamples += row.verdict == "COUNTEREXAMPLE";
    c.expect(counterexamples == 0, tag + " counterexamples " + str(counterexamples));
    std::uint64_t tallied = 0;
    for (const auto& [t, count] : s.t_tally) tallied += count;
    c.expect(tallied == s.nilpotent && s.rows.size() == s.nilpotent, tag + " tally");
  };
  check(enumerate_algebras(2, kGF2), 4, "GF(2) dim 2");
  check(enumerate_algebras(3, kGF2), 512, "GF(2) dim 3");
  check(enumerate_algebras(3, kGF3), 19683, "GF(3) dim 3");

  CensusOptions options;
  options.jobs = kCensusJobs;
  const auto start = std::chrono::steady_clock::now();
  g_parallel_gf2_dim4 = enumerate_algebras(4, kGF2, options);
  timed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check(g_parallel_gf2_dim4, 16777216, "GF(2) dim 4");
}

template <class S>
void stem_check(Criterion& c, const LieAlgebra<S>& lie, const std::string& key) {
  const int inside = stem_decomposition(lie).k;
  for (int k = 0; k <= 3; ++k) {
    const auto sum = plus_abelian(lie, k);
    const auto split = stem_decomposition(sum);
    const std::string tag = key + "+A(" + str(k) + ")";
    c.expect(split.k == k + inside, tag + " k'");
    const auto target = subspace_intersect(derived_subalgebra(sum), center(sum));
    const auto zt = center(split.stem);
    std::vector<Vector<S>> carried;
    for (int r = 0; r < zt.dim(); ++r) {
      Vector<S> v = Vector<S>::Zero(sum.dim());
      for (int i = 0; i < split.stem_subspace.dim(); ++i) {
        v += zt.vector(r)(i) * split.stem_subspace.vector(i);
      }
      carried.push_back(v);
    }
    c.expect(Subspace<S>::span(carried, sum.dim()) == target, tag + " Z(T)");
    if (is_nilpotent(sum)) c.expect(t_invariant(sum) == t_invariant(split.stem), tag + " t");
  }
}

void c7(Criterion& c, double&) {
  for (const auto& e : list_all(kQ)) stem_check(c, build<Rational>(e, kQ), e.label());
  for (const auto& e : list_all(kGF2)) stem_check(c, build<Zp>(e, kGF2), e.label() + "/GF(2)");
}

void c8(Criterion& c, double&) {
  std::mt19937_64 rng(8);
  for (int m = 1; m <= 4; ++m) {
    for (int k = 0; k <= 3; ++k) {
      const auto base = plus_abelian(heisenberg<Rational>(m, kQ), k);
      for (int trial = 0; trial < 20; ++trial) {
        const auto moved = change_basis(base, random_invertible<Rational>(base.dim(), kQ, rng));
        const std::string tag = "H(" + str(m) + ")+A(" + str(k) + ") trial " + str(trial);
        const auto rec = recognize_heisenberg(moved);
        c.expect(rec.m == m && rec.k == k, tag + " (m,k)");
        c.expect(rec.witness.target == moved, tag + " witness target");
        c.expect(rec.witness.preserves_brackets() && rank(rec.witness.matrix) == moved.dim(),
                 tag + " witness");
      }
    }
  }
}

void c9(Criterion& c, double&) {
  for (const FieldSpec& f : {kQ, kGF2, kGF3, kGF5}) {
    for (const auto& e : list_all(f)) {
      const bool ok = f.is_rational() ? check_jacobi(build<Rational>(e, f)).empty()
                                      : check_jacobi(build<Zp>(e, f)).empty();
      c.expect(ok, "Jacobi " + e.label() + " over " + f.to_string());
    }
  }

  std::mt19937_64 rng(9);
  auto pairs = [&](const FieldSpec& f, auto tag, int count) {
    using S = decltype(tag);
    std::uniform_int_distribution<int> dim(1, 7);
    for (int trial = 0; trial < count; ++trial) {
      const int n = dim(rng);
      std::uniform_int_distribution<int> gens(0, n + 1);
      auto random_span = [&](int g, Matrix<S>& stacked) {
        std::vector<Vector<S>> vs;
        for (int i = 0; i < g; ++i) vs.push_back(random_vector<S>(n, f, rng));
        const Eigen::Index offset = stacked.rows();
        stacked.conservativeResize(offset + g, n);
        for (int i = 0; i < g; ++i) stacked.row(offset + i) = vs[i].transpose();
        return Subspace<S>::span(vs, n);
      };
      Matrix<S> all(0, n);
      const auto u = random_span(gens(rng), all);
      const auto v = random_span(gens(rng), all);
      const int sum_rank = all.rows() == 0 ? 0 : rank(all);
      const auto sum = subspace_sum(u, v);
      const auto meet = subspace_intersect(u, v);
      bool ok = sum.dim() == sum_rank && sum.dim() + meet.dim() == u.dim() + v.dim();
      for (int r = 0; r < meet.dim(); ++r) {
        ok = ok && u.contains(Vector<S>(meet.vector(r))) && v.contains(Vector<S>(meet.vector(r)));
      }
      c.expect(ok, "dimension formula over " + f.to_string() + " trial " + str(trial));
    }
  };
  pairs(kQ, Rational(), 200);
  pairs(kGF2, Zp(), 150);
  pairs(kGF3, Zp(), 150);

  for (const FieldSpec& f : {kQ, kGF2, kGF3}) {
    for (const auto& e : list_all(f)) {
      bool ok;
      if (f.is_rational()) {
        const auto lie = build<Rational>(e, f);
        ok = std::get<LieAlgebra<Rational>>(parse_document(render_document(lie))) == lie;
      } else {
        const auto lie = build<Zp>(e, f);
        ok = std::get<LieAlgebra<Zp>>(parse_document(render_document(lie))) == lie;
      }
      c.expect(ok, "round trip " + e.label() + " over " + f.to_string());
    }
  }

  auto bytes = [](const CensusSummary& s) {
    std::ostringstream os;
    s.write_csv(os);
    return s.summary_text() + os.str();
  };
  const auto serial = enumerate_algebras(4, kGF2);
  CensusSummary parallel = g_parallel_gf2_dim4;
  if (parallel.candidates == 0) {
    CensusOptions options;
    options.jobs = kCensusJobs;
    parallel = enumerate_algebras(4, kGF2, options);
  }
  c.expect(bytes(serial) == bytes(parallel), "GF(2) dim 4 parallel output differs from serial");
  for (const FieldSpec& f : {kGF2, kGF3}) {
    CensusOptions options;
    options.jobs = 3;
    c.expect(bytes(enumerate_algebras(3, f)) == bytes(enumerate_algebras(3, f, options)),
             "dim 3 parallel output differs over " + f.to_string());
  }
}

struct Spec {
  int number;
  std::string label;
  double limit;  // seconds, 0 = none
  bool limit_on_inner;  // the limit applies to the time the body reports
  std::function<void(Criterion&, double&)> body;
};

}  // namespace

int main() {
  const std::vector<Spec> specs{
      {1, "tabulated rows reproduced", kLimitTable1, false, c1},
      {2, "t = 0: abelian and Heisenberg sums", kLimitTZero, false, c2},
      {3, "t = 1: L4_3 sums", 0, false, c3},
      {4, "t = 2: L5_5, L5_6, L5_7 sums", 0, false, c4},
      {5, "filiform family realizes every t up to 100", kLimitFiliform, false, c5},
      {6, "census bounds over GF(2) dims 2-4 and GF(3) dim 3", kLimitCensusGF2Dim4, true, c6},
      {7, "stem decomposition", 0, false, c7},
      {8, "Heisenberg recognition witnesses", 0, false, c8},
      {9, "infrastructure properties", 0, false, c9},
  };
  int failed = 0;
  for (const auto& spec : specs) {
    Criterion c(spec.label);
    double inner = 0;
    const auto start = std::chrono::steady_clock::now();
    try {
      spec.body(c, inner);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double measured = spec.limit_on_inner ? inner : elapsed;
    if (spec.limit > 0 && measured >= spec.limit) {
      c.expect(false, "took " + str(measured) + " s, limit " + str(spec.limit) + " s");
    }
    std::ostringstream line;
    line << (c.failed() == 0 ? "PASS" : "FAIL") << " C" << spec.number << " " << spec.label << " ("
         << std::fixed;
    line.precision(2);
    line << elapsed << " s";
    if (spec.limit > 0) line << "; limit " << spec.limit << " s" << (spec.limit_on_inner ? " on GF(2) dim 4" : "");
    line << ")";
    std::cout << line.str() << "\n";
    for (const auto& f : c.failures()) std::cout << "    " << f << "\n";
    if (c.failed() > 5) std::cout << "    ... " << c.failed() - 5 << " more\n";
    failed += c.failed() != 0;
  }
  std::cout << (failed == 0 ? "all criteria passed" : str(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
