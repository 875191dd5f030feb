#include "liealg/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace liealg {

namespace {

template <class S>
Subspace<S> kernel_of_rows(std::vector<SparseVector<S>>& rows, int n) {
  EchelonBasis<S> builder(n);
  for (auto& row : rows) {
    if (row.empty()) continue;
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    builder.insert(row);
    if (builder.is_full()) break;
  }
  return kernel(builder.subspace().basis());
}

std::string join(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

std::string InvariantReport::to_string() const {
  std::ostringstream os;
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  os << "dim=" << dim << " dim_L2=" << dim_derived << " dim_Z=" << dim_center
     << " dim_Z2=" << dim_second_center << " dim_L/Z=" << quotient_dim()
     << " d(L/Z)=" << opt(d_central_quotient) << " t=" << opt(t)
     << " class=" << opt(nilpotency_class) << " lcs=" << join(lcs_dims)
     << " ucs=" << join(ucs_dims) << " dim_C(L2)=" << dim_centralizer_derived;
  return os.str();
}

template <class S>
Subspace<S> derived_subalgebra(const LieAlgebra<S>& lie) {
  const auto full = Subspace<S>::full(lie.dim());
  return product_subspace(lie, full, full);
}

template <class S>
Subspace<S> central_preimage(const LieAlgebra<S>& lie, const Subspace<S>& w) {
  const int n = lie.dim();
  if (w.ambient_dim() != n) throw DimensionMismatch("subspace ambient dimension differs");
  if (w.dim() == n) return w;
  // Every structure constant lies in L^2. Reducing a basis of L^2 modulo w
  // gives the span of all brackets modulo w; only its pivot coordinates need
  // to vanish.
  EchelonBasis<S> values(n);
  for (const auto& entry : lie.entries()) {
    values.insert(entry.value);
    if (values.is_full()) break;
  }
  const Subspace<S> derived = values.subspace();
  const int r = derived.dim();
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < r; ++a) slot[static_cast<std::size_t>(derived.pivots()[a])] = a;
  std::vector<Vector<S>> reduced;
  EchelonBasis<S> span(n);
  for (int a = 0; a < r; ++a) {
    reduced.push_back(w.reduce(derived.vector(a)));
    span.insert(reduced.back());
  }
  const std::vector<int> coords = span.pivots();
  const int q = static_cast<int>(coords.size());
  // Equation (j, t): coordinate coords[t] of [x, e_j] modulo w vanishes.
  std::vector<SparseVector<S>> rows(static_cast<std::size_t>(n) * q);
  // Row a of `image` holds the coords of basis vector a of L^2 modulo w.
  std::vector<SparseVector<S>> image(static_cast<std::size_t>(r));
  for (int a = 0; a < r; ++a) {
    for (int t = 0; t < q; ++t) {
      const S& c = reduced[static_cast<std::size_t>(a)](coords[t]);
      if (!is_zero(c)) image[static_cast<std::size_t>(a)].emplace_back(t, c);
    }
  }
  std::vector<S> acc(static_cast<std::size_t>(q));
  std::vector<int> touched;
  for (const auto& entry : lie.entries()) {
    touched.clear();
    for (const auto& [k, wa] : entry.value) {
      const int a = slot[static_cast<std::size_t>(k)];
      if (a < 0) continue;
      for (const auto& [t, c] : image[static_cast<std::size_t>(a)]) {
        auto& slot_t = acc[static_cast<std::size_t>(t)];
        if (is_zero(slot_t)) touched.push_back(t);
        slot_t += wa * c;
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int t : touched) {
      S c = acc[static_cast<std::size_t>(t)];
      acc[static_cast<std::size_t>(t)] = S(0);
      if (is_zero(c)) continue;
      // [e_i, e_j] = value contributes to x_i in row j and, negated, to x_j in row i.
      rows[static_cast<std::size_t>(entry.j) * q + t].emplace_back(entry.i, c);
      rows[static_cast<std::size_t>(entry.i) * q + t].emplace_back(entry.j, -c);
    }
  }
  return kernel_of_rows(rows, n);
}

template <class S>
Subspace<S> center(const LieAlgebra<S>& lie) {
  return central_preimage(lie, Subspace<S>::zero(lie.dim()));
}

template <class S>
Subspace<S> second_center(const LieAlgebra<S>& lie) {
  return central_preimage(lie, center(lie));
}

namespace {

// With the center at hand, [L, X] = 0 is free to detect whenever X is central.
template <class S>
std::vector<Subspace<S>> lcs_given_center(const LieAlgebra<S>& lie, const Subspace<S>* z) {
  const auto full = Subspace<S>::full(lie.dim());
  std::vector<Subspace<S>> series{full};
  while (true) {
    Subspace<S> next = z && z->contains(series.back()) ? Subspace<S>::zero(lie.dim())
                                                        : product_subspace(lie, full, series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

}  // namespace

template <class S>
std::vector<Subspace<S>> lower_central_series(const LieAlgebra<S>& lie) {
  return lcs_given_center<S>(lie, nullptr);
}

template <class S>
std::vector<Subspace<S>> upper_central_series(const LieAlgebra<S>& lie) {
  std::vector<Subspace<S>> series{center(lie)};
  while (series.back().dim() < lie.dim()) {
    Subspace<S> next = central_preimage(lie, series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

namespace {

std::optional<int> class_from_lcs(const std::vector<int>& dims) {
  if (dims.back() != 0) return std::nullopt;
  return static_cast<int>(dims.size()) - 1;
}

}  // namespace

template <class S>
std::optional<int> nilpotency_class(const LieAlgebra<S>& lie) {
  const auto series = lower_central_series(lie);
  std::vector<int> dims;
  for (const auto& s : series) dims.push_back(s.dim());
  return class_from_lcs(dims);
}

template <class S>
int min_generators(const LieAlgebra<S>& lie) {
  if (!is_nilpotent(lie)) throw NotNilpotent();
  return lie.dim() - derived_subalgebra(lie).dim();
}

namespace {

// [e_i, u_b] lies in L^2, so only the pivot coordinates of L^2 matter.
template <class S>
Subspace<S> centralizer_in(const LieAlgebra<S>& lie, const Subspace<S>& u,
                           const Subspace<S>& derived) {
  const int n = lie.dim();
  const std::vector<int>& coords = derived.pivots();
  const int q = static_cast<int>(coords.size());
  std::vector<SparseVector<S>> rows(static_cast<std::size_t>(u.dim()) * q);
  for (int b = 0; b < u.dim(); ++b) {
    const Vector<S> ub = u.vector(b);
    for (int i = 0; i < n; ++i) {
      const Vector<S> image = to_dense(lie.ad_sparse(i, ub), n);
      for (int t = 0; t < q; ++t) {
        if (!is_zero(image(coords[t]))) {
          rows[static_cast<std::size_t>(b) * q + t].emplace_back(i, image(coords[t]));
        }
      }
    }
  }
  return kernel_of_rows(rows, n);
}

}  // namespace

template <class S>
Subspace<S> centralizer(const LieAlgebra<S>& lie, const Subspace<S>& u) {
  if (u.ambient_dim() != lie.dim()) throw DimensionMismatch("subspace ambient dimension differs");
  return centralizer_in(lie, u, derived_subalgebra(lie));
}

namespace {

template <class S>
int central_quotient_generators(const LieAlgebra<S>& lie, const Subspace<S>& derived,
                                const Subspace<S>& z) {
  return lie.dim() - subspace_sum(derived, z).dim();
}

}  // namespace

template <class S>
int central_quotient_generators(const LieAlgebra<S>& lie) {
  if (!is_nilpotent(lie)) throw NotNilpotent();
  return central_quotient_generators(lie, derived_subalgebra(lie), center(lie));
}

template <class S>
int t_invariant(const LieAlgebra<S>& lie) {
  if (!is_nilpotent(lie)) throw NotNilpotent();
  const Subspace<S> derived = derived_subalgebra(lie);
  const Subspace<S> z = center(lie);
  const int d = central_quotient_generators(lie, derived, z);
  return d * derived.dim() - (lie.dim() - z.dim());
}

template <class S>
bool moneyhun_check(const LieAlgebra<S>& lie) {
  const long long q = lie.dim() - center(lie).dim();
  return 2LL * derived_subalgebra(lie).dim() <= q * (q - 1);
}

template <class S>
DetailedReport<S> detailed_report(const LieAlgebra<S>& lie) {
  InvariantReport r;
  r.dim = lie.dim();
  auto ucs = upper_central_series(lie);
  const auto lcs = lcs_given_center(lie, &ucs[0]);
  for (const auto& s : lcs) r.lcs_dims.push_back(s.dim());
  for (const auto& s : ucs) r.ucs_dims.push_back(s.dim());
  const Subspace<S>& derived = lcs.size() > 1 ? lcs[1] : lcs[0];
  const Subspace<S>& z = ucs[0];
  r.dim_derived = derived.dim();
  r.dim_center = z.dim();
  r.dim_second_center = ucs.size() > 1 ? ucs[1].dim() : ucs[0].dim();
  r.nilpotency_class = class_from_lcs(r.lcs_dims);
  if (r.nilpotency_class) {
    const int d = central_quotient_generators(lie, derived, z);
    r.d_central_quotient = d;
    r.t = d * r.dim_derived - r.quotient_dim();
  }
  r.dim_centralizer_derived =
      z.contains(derived) ? r.dim : centralizer_in(lie, derived, derived).dim();
  return {std::move(r), derived, std::move(ucs[0])};
}

template <class S>
InvariantReport report(const LieAlgebra<S>& lie) {
  return detailed_report(lie).report;
}

#define LIEALG_INSTANTIATE_INVARIANTS(S)                                              \
  template Subspace<S> derived_subalgebra(const LieAlgebra<S>&);                      \
  template Subspace<S> center(const LieAlgebra<S>&);                                  \
  template Subspace<S> central_preimage(const LieAlgebra<S>&, const Subspace<S>&);    \
  template Subspace<S> second_center(const LieAlgebra<S>&);                           \
  template std::vector<Subspace<S>> lower_central_series(const LieAlgebra<S>&);       \
  template std::vector<Subspace<S>> upper_central_series(const LieAlgebra<S>&);       \
  template std::optional<int> nilpotency_class(const LieAlgebra<S>&);                 \
  template int min_generators(const LieAlgebra<S>&);                                  \
  template Subspace<S> centralizer(const LieAlgebra<S>&, const Subspace<S>&);         \
  template int central_quotient_generators(const LieAlgebra<S>&);                     \
  template int t_invariant(const LieAlgebra<S>&);                                     \
  template bool moneyhun_check(const LieAlgebra<S>&);                                 \
  template InvariantReport report(const LieAlgebra<S>&);                               \
  template DetailedReport<S> detailed_report(const LieAlgebra<S>&);

LIEALG_INSTANTIATE_INVARIANTS(Rational)
LIEALG_INSTANTIATE_INVARIANTS(Zp)

}  // namespace liealg
