#include "liealg/classify.hpp"

#include "liealg/catalog.hpp"

namespace liealg {

namespace {

template <class S>
Matrix<S> columns(const std::vector<Vector<S>>& cols, int n) {
  Matrix<S> out(n, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) out.col(static_cast<int>(c)) = cols[c];
  return out;
}

template <class S>
LieAlgebra<S> with_abelian(const LieAlgebra<S>& base, int k) {
  if (k == 0) return base;
  return direct_sum(base, abelian<S>(k, base.field()));
}

}  // namespace

template <class S>
StemDecomposition<S> stem_decomposition(const LieAlgebra<S>& lie) {
  const int n = lie.dim();
  const Subspace<S> derived = derived_subalgebra(lie);
  const Subspace<S> z = center(lie);
  const Subspace<S> a = complement(subspace_intersect(derived, z), z);
  const Subspace<S> c = complement(subspace_sum(derived, a), Subspace<S>::full(n));
  const Subspace<S> t = subspace_sum(derived, c);

  // Brackets of T land in L^2, which T contains.
  std::vector<BracketSpec<S>> brackets;
  for (int p = 0; p < t.dim(); ++p) {
    const Vector<S> tp = t.vector(p);
    for (int q = p + 1; q < t.dim(); ++q) {
      const Vector<S> value = bracket(lie, tp, Vector<S>(t.vector(q)));
      auto coords = to_sparse(Vector<S>(t.coordinates(value)));
      if (!coords.empty()) brackets.push_back({p, q, std::move(coords)});
    }
  }
  LieAlgebra<S> stem = LieAlgebra<S>::assemble(lie.field(), t.dim(), std::move(brackets));

  std::vector<Vector<S>> cols;
  for (int p = 0; p < t.dim(); ++p) cols.push_back(t.vector(p));
  for (int p = 0; p < a.dim(); ++p) cols.push_back(a.vector(p));
  Homomorphism<S> witness{direct_sum(stem, abelian<S>(a.dim(), lie.field())), lie,
                          columns(cols, n)};
  return {std::move(stem), a.dim(), t, a, std::move(witness)};
}

namespace {

template <class S>
HeisenbergRecognition<S> recognize_with(const LieAlgebra<S>& lie, const Subspace<S>& derived,
                                        const Subspace<S>& z) {
  const int n = lie.dim();
  const FieldSpec& field = lie.field();
  if (derived.dim() != 1) throw DerivedNotLine(derived.dim());
  const Vector<S> zvec = derived.vector(0);
  if (!z.contains(zvec)) throw NotNilpotent();

  // Gram matrix of B(x, y) = [x, y] / z on the standard basis.
  Matrix<S> gram = Matrix<S>::Zero(n, n);
  for (const auto& e : lie.entries()) {
    const S c = derived.coordinates(to_dense(e.value, n))(0);
    gram(e.i, e.j) = c;
    gram(e.j, e.i) = -c;
  }

  const Subspace<S> w = complement(z, Subspace<S>::full(n));
  std::vector<Vector<S>> pool;
  for (int r = 0; r < w.dim(); ++r) pool.push_back(w.vector(r));

  std::vector<Vector<S>> cols;
  while (!pool.empty()) {
    const Vector<S> a = pool.front();
    pool.erase(pool.begin());
    const Vector<S> gta = gram.transpose() * a;  // form(a, v) = v . gta
    auto partner = pool.end();
    for (auto it = pool.begin(); it != pool.end(); ++it) {
      if (!is_zero(it->dot(gta))) {
        partner = it;
        break;
      }
    }
    // a is outside Z and orthogonal to the pairs already split off, so only
    // a vector still in the pool can pair with it.
    if (partner == pool.end()) throw Error("bilinear form is degenerate modulo the center");
    const Vector<S> b = *partner / partner->dot(gta);
    pool.erase(partner);
    const Vector<S> ga = gram * a;
    const Vector<S> gb = gram * b;
    for (auto& v : pool) {
      const S vb = v.dot(gb);
      const S va = v.dot(ga);
      v = v - vb * a + va * b;
    }
    cols.push_back(a);
    cols.push_back(b);
  }
  const int m = static_cast<int>(cols.size()) / 2;
  cols.push_back(zvec);
  const Subspace<S> rest = complement(derived, z);
  for (int r = 0; r < rest.dim(); ++r) cols.push_back(rest.vector(r));
  const int k = z.dim() - 1;

  Homomorphism<S> witness{with_abelian(heisenberg<S>(m, field), k), lie, columns(cols, n)};
  // Every bracket of L is B(x, y) z, so the witness preserves brackets iff
  // P^T G P is the form of the source, whose brackets are multiples of its z.
  const Matrix<S> pulled = witness.matrix.transpose() * gram * witness.matrix;
  Matrix<S> source_form = Matrix<S>::Zero(n, n);
  bool ok = rank(witness.matrix) == n;
  for (const auto& e : witness.source.entries()) {
    ok = ok && e.value.size() == 1 && e.value.front().first == 2 * m;
    if (ok) {
      source_form(e.i, e.j) = e.value.front().second;
      source_form(e.j, e.i) = -e.value.front().second;
    }
  }
  if (!ok || pulled != source_form) throw Error("Heisenberg witness failed bracket verification");
  return {m, k, std::move(witness)};
}

}  // namespace

template <class S>
HeisenbergRecognition<S> recognize_heisenberg(const LieAlgebra<S>& lie) {
  return recognize_with(lie, derived_subalgebra(lie), center(lie));
}

std::string Verdict::to_string() const {
  const std::string plus = "+A(" + std::to_string(k) + ")";
  switch (kind) {
    case Kind::Abelian:
      return "abelian(" + std::to_string(n) + ")";
    case Kind::Heisenberg:
      return "heisenberg(" + std::to_string(m) + ")" + plus;
    case Kind::L43:
      return "L4_3" + plus;
    case Kind::L55:
      return "L5_5" + plus;
    case Kind::L56:
      return "L5_6" + plus;
    case Kind::L57:
      return "L5_7" + plus;
    case Kind::OutOfScope:
      return "out-of-scope(t=" + std::to_string(t) + ")";
    case Kind::Counterexample:
      break;
  }
  return "COUNTEREXAMPLE";
}

template <class S>
LieAlgebra<S> build(const Verdict& verdict, const FieldSpec& field) {
  using Kind = Verdict::Kind;
  switch (verdict.kind) {
    case Kind::Abelian:
      return abelian<S>(verdict.n, field);
    case Kind::Heisenberg:
      return with_abelian(heisenberg<S>(verdict.m, field), verdict.k);
    case Kind::L43:
      return with_abelian(get<S>("L4_3", field), verdict.k);
    case Kind::L55:
      return with_abelian(get<S>("L5_5", field), verdict.k);
    case Kind::L56:
      return with_abelian(get<S>("L5_6", field), verdict.k);
    case Kind::L57:
      return with_abelian(get<S>("L5_7", field), verdict.k);
    case Kind::OutOfScope:
    case Kind::Counterexample:
      break;
  }
  throw Error("verdict " + verdict.to_string() + " names no canonical algebra");
}

template <class S>
ClassificationResult<S> classify_t012(const LieAlgebra<S>& lie) {
  ClassificationResult<S> out;
  DetailedReport<S> detail = detailed_report(lie);
  out.report = detail.report;
  if (!out.report.nilpotent()) throw NotNilpotent();
  out.t = *out.report.t;
  const int n = lie.dim();

  auto counterexample = [&](std::string reason) {
    out.verdict = Verdict::counterexample();
    out.reason = std::move(reason);
    return out;
  };

  if (out.t < 0) return counterexample("negative t");
  if (out.t >= 3) {
    out.verdict = Verdict::out_of_scope(out.t);
    return out;
  }
  if (out.t == 0) {
    if (out.report.dim_derived == 0) {
      out.verdict = Verdict::abelian(n);
      return out;
    }
    if (out.report.dim_derived != 1) return counterexample("t = 0 with dim L^2 > 1");
    auto h = recognize_with(lie, detail.derived, detail.center);
    out.verdict = Verdict::heisenberg(h.m, h.k);
    out.witness = std::move(h.witness);
    return out;
  }

  const StemDecomposition<S> split = stem_decomposition(lie);
  const InvariantReport stem_report = report(split.stem);
  out.stem_fingerprint = stem_report;
  const int k = split.k;
  Verdict candidate;
  if (out.t == 1) {
    if (split.stem.dim() != 4) return counterexample("t = 1 with stem dimension " +
                                                     std::to_string(split.stem.dim()));
    candidate = Verdict::l43(k);
  } else {
    if (split.stem.dim() != 5) return counterexample("t = 2 with stem dimension " +
                                                     std::to_string(split.stem.dim()));
    if (stem_report.dim_derived == 2) {
      candidate = Verdict::l55(k);
    } else if (stem_report.dim_derived == 3 && stem_report.dim_centralizer_derived == 3) {
      candidate = Verdict::l56(k);
    } else if (stem_report.dim_derived == 3 && stem_report.dim_centralizer_derived == 4) {
      candidate = Verdict::l57(k);
    } else {
      return counterexample("t = 2 stem with dim T^2 = " +
                            std::to_string(stem_report.dim_derived) + ", dim C(T^2) = " +
                            std::to_string(stem_report.dim_centralizer_derived));
    }
  }
  Verdict stem_only = candidate;
  stem_only.k = 0;
  if (report(build<S>(stem_only, lie.field())) != stem_report) {
    return counterexample("stem fingerprint differs from " + stem_only.to_string());
  }
  out.verdict = candidate;
  return out;
}

#define LIEALG_INSTANTIATE_CLASSIFY(S)                                           \
  template StemDecomposition<S> stem_decomposition(const LieAlgebra<S>&);        \
  template HeisenbergRecognition<S> recognize_heisenberg(const LieAlgebra<S>&);  \
  template LieAlgebra<S> build(const Verdict&, const FieldSpec&);                \
  template ClassificationResult<S> classify_t012(const LieAlgebra<S>&);

LIEALG_INSTANTIATE_CLASSIFY(Rational)
LIEALG_INSTANTIATE_CLASSIFY(Zp)

}  // namespace liealg
