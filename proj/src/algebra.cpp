#include "liealg/algebra.hpp"

#include <algorithm>
#include <string>

namespace liealg {

namespace {

std::string pair_text(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Dense accumulator that remembers which coordinates it touched.
template <class S>
class Accumulator {
 public:
  explicit Accumulator(int n) : values_(n), used_(n, false) {}

  void add(int k, const S& v) {
    if (!used_[k]) {
      used_[k] = true;
      touched_.push_back(k);
      values_[k] = v;
    } else {
      values_[k] += v;
    }
  }
  void add_scaled(const SparseVector<S>& v, const S& scale, bool negate) {
    for (const auto& [k, c] : v) add(k, negate ? S(-(scale * c)) : S(scale * c));
  }
  bool is_zero_then_clear() {
    bool zero = true;
    for (int k : touched_) {
      if (!is_zero(values_[k])) zero = false;
      used_[k] = false;
    }
    touched_.clear();
    return zero;
  }

 private:
  std::vector<S> values_;
  std::vector<bool> used_;
  std::vector<int> touched_;
};

}  // namespace

// --------------------------------------------------------------- LieAlgebra

template <class S>
LieAlgebra<S> LieAlgebra<S>::assemble(FieldSpec field, int dim,
                                      std::vector<BracketSpec<S>> brackets, std::string name) {
  require_field<S>(field);
  if (dim < 0) throw InvalidAlgebra("negative dimension");
  LieAlgebra out(field, dim);
  out.name_ = std::move(name);
  out.lookup_.assign(static_cast<std::size_t>(dim) * dim, -1);
  out.incident_.assign(dim, {});

  std::vector<bool> seen(static_cast<std::size_t>(dim) * dim, false);
  for (auto& b : brackets) {
    if (b.i < 0 || b.j < 0 || b.i >= dim || b.j >= dim) {
      throw InvalidAlgebra("bracket " + pair_text(b.i, b.j) + " index out of range");
    }
    if (b.i == b.j) {
      throw InvalidAlgebra("bracket " + pair_text(b.i, b.j) + " pairs a basis vector with itself");
    }
    const bool flip = b.i > b.j;
    if (flip) std::swap(b.i, b.j);
    auto flag = seen[static_cast<std::size_t>(b.i) * dim + b.j];
    if (flag) throw InvalidAlgebra("duplicate bracket " + pair_text(b.i, b.j));
    flag = true;

    std::sort(b.value.begin(), b.value.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseVector<S> value;
    for (std::size_t t = 0; t < b.value.size(); ++t) {
      const int k = b.value[t].first;
      if (k < 0 || k >= dim) {
        throw InvalidAlgebra("bracket " + pair_text(b.i, b.j) + " has coefficient index " +
                             std::to_string(k + 1) + " out of range");
      }
      if (t > 0 && b.value[t - 1].first == k) {
        throw InvalidAlgebra("bracket " + pair_text(b.i, b.j) + " repeats coefficient index " +
                             std::to_string(k + 1));
      }
      S c = ScalarTraits<S>::in_field(b.value[t].second, field);
      if (flip) c = -c;
      if (!is_zero(c)) value.emplace_back(k, std::move(c));
    }
    if (!value.empty()) out.entries_.push_back({b.i, b.j, std::move(value)});
  }
  std::sort(out.entries_.begin(), out.entries_.end(), [](const Entry& x, const Entry& y) {
    return x.i != y.i ? x.i < y.i : x.j < y.j;
  });
  for (std::size_t e = 0; e < out.entries_.size(); ++e) {
    const auto& entry = out.entries_[e];
    out.lookup_[static_cast<std::size_t>(entry.i) * dim + entry.j] = static_cast<int>(e);
    out.incident_[entry.i].push_back(static_cast<int>(e));
    out.incident_[entry.j].push_back(static_cast<int>(e));
  }
  return out;
}

template <class S>
LieAlgebra<S> LieAlgebra<S>::with_name(std::string name) const {
  LieAlgebra out = *this;
  out.name_ = std::move(name);
  return out;
}

template <class S>
const typename LieAlgebra<S>::Entry* LieAlgebra<S>::find(int i, int j) const {
  const int e = lookup_[static_cast<std::size_t>(i) * dim_ + j];
  return e < 0 ? nullptr : &entries_[e];
}

template <class S>
SparseVector<S> LieAlgebra<S>::basis_bracket(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw DimensionMismatch("basis index out of range");
  if (i == j) return {};
  const Entry* e = find(std::min(i, j), std::max(i, j));
  if (e == nullptr) return {};
  if (i < j) return e->value;
  SparseVector<S> out = e->value;
  for (auto& term : out) term.second = -term.second;
  return out;
}

template <class S>
Vector<S> LieAlgebra<S>::ad(int a, const Vector<S>& v) const {
  if (v.size() != dim_) throw DimensionMismatch("vector length differs from dimension");
  Vector<S> out = Vector<S>::Zero(dim_);
  for (int e : incident_[a]) {
    const Entry& entry = entries_[e];
    // [e_i, e_j] = value; a == i pairs with v_j, a == j pairs with -v_i.
    const int other = entry.i == a ? entry.j : entry.i;
    if (is_zero(v(other))) continue;
    const S scale = entry.i == a ? v(other) : S(-v(other));
    for (const auto& [k, c] : entry.value) out(k) += scale * c;
  }
  return out;
}

template <class S>
SparseVector<S> LieAlgebra<S>::ad_sparse(int a, const Vector<S>& v) const {
  if (v.size() != dim_) throw DimensionMismatch("vector length differs from dimension");
  SparseVector<S> terms;
  for (int e : incident_[a]) {
    const Entry& entry = entries_[e];
    const int other = entry.i == a ? entry.j : entry.i;
    if (is_zero(v(other))) continue;
    const S scale = entry.i == a ? v(other) : S(-v(other));
    for (const auto& [k, c] : entry.value) terms.emplace_back(k, scale * c);
  }
  if (terms.size() > 1) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  SparseVector<S> out;
  for (auto& [k, c] : terms) {
    if (!out.empty() && out.back().first == k) {
      out.back().second += c;
      if (is_zero(out.back().second)) out.pop_back();
    } else if (!is_zero(c)) {
      out.emplace_back(k, std::move(c));
    }
  }
  return out;
}

template <class S>
Matrix<S> LieAlgebra<S>::adjoint_matrix(int a) const {
  Matrix<S> out = Matrix<S>::Zero(dim_, dim_);
  for (int b = 0; b < dim_; ++b) {
    for (const auto& [k, c] : basis_bracket(a, b)) out(k, b) = c;
  }
  return out;
}

// ------------------------------------------------------------- Homomorphism

template <class S>
bool Homomorphism<S>::preserves_brackets() const {
  const int n = source.dim();
  if (matrix.rows() != target.dim() || matrix.cols() != n) return false;
  const int m = target.dim();
  for (int i = 0; i < n; ++i) {
    // ad of the image of e_i, so each bracket below is one product.
    Matrix<S> ad_xi = Matrix<S>::Zero(m, m);
    for (const auto& e : target.entries()) {
      const S& xa = matrix(e.i, i);
      const S& xb = matrix(e.j, i);
      if (is_zero(xa) && is_zero(xb)) continue;
      for (const auto& [k, c] : e.value) {
        if (!is_zero(xa)) ad_xi(k, e.j) += xa * c;
        if (!is_zero(xb)) ad_xi(k, e.i) -= xb * c;
      }
    }
    for (int j = i + 1; j < n; ++j) {
      Vector<S> lhs = Vector<S>::Zero(m);
      for (const auto& [k, c] : source.basis_bracket(i, j)) lhs += c * matrix.col(k);
      if (lhs != ad_xi * matrix.col(j)) return false;
    }
  }
  return true;
}

template <class S>
bool Homomorphism<S>::is_isomorphism() const {
  return matrix.rows() == matrix.cols() && rank(matrix) == matrix.rows() &&
         preserves_brackets();
}

// ---------------------------------------------------------- free functions

template <class S>
LieAlgebra<S> new_algebra(const FieldSpec& field, int dim, std::vector<BracketSpec<S>> brackets,
                          std::string name) {
  LieAlgebra<S> out = LieAlgebra<S>::assemble(field, dim, std::move(brackets), std::move(name));
  const auto violations = check_jacobi(out);
  if (!violations.empty()) {
    const auto& [i, j, k] = violations.front();
    throw NotALieAlgebra("Jacobi identity fails for basis triple (" + std::to_string(i + 1) +
                             "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")",
                         i + 1, j + 1, k + 1);
  }
  return out;
}

template <class S>
Vector<S> bracket(const LieAlgebra<S>& lie, const Vector<S>& x, const Vector<S>& y) {
  const int n = lie.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("vector length differs from dimension");
  Vector<S> out = Vector<S>::Zero(n);
  for (const auto& entry : lie.entries()) {
    S coeff = x(entry.i) * y(entry.j) - x(entry.j) * y(entry.i);
    if (is_zero(coeff)) continue;
    for (const auto& [k, c] : entry.value) out(k) += coeff * c;
  }
  return out;
}

template <class S>
std::vector<std::array<int, 3>> check_jacobi(const LieAlgebra<S>& lie) {
  const int n = lie.dim();
  std::vector<std::array<int, 3>> violations;
  if (lie.entries().empty()) return violations;

  // Row-major cache of [e_a, e_b] for all ordered pairs.
  std::vector<SparseVector<S>> table(static_cast<std::size_t>(n) * n);
  for (const auto& entry : lie.entries()) {
    table[static_cast<std::size_t>(entry.i) * n + entry.j] = entry.value;
    auto& neg = table[static_cast<std::size_t>(entry.j) * n + entry.i];
    neg = entry.value;
    for (auto& term : neg) term.second = -term.second;
  }
  auto at = [&](int a, int b) -> const SparseVector<S>& {
    return table[static_cast<std::size_t>(a) * n + b];
  };

  Accumulator<S> acc(n);
  // [e_a, [e_b, e_c]] accumulated term by term.
  auto nested = [&](int a, int b, int c) {
    for (const auto& [l, w] : at(b, c)) acc.add_scaled(at(a, l), w, false);
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (at(j, k).empty() && at(k, i).empty() && at(i, j).empty()) continue;
        nested(i, j, k);
        nested(j, k, i);
        nested(k, i, j);
        if (!acc.is_zero_then_clear()) violations.push_back({i, j, k});
      }
    }
  }
  return violations;
}

template <class S>
LieAlgebra<S> direct_sum(const LieAlgebra<S>& a, const LieAlgebra<S>& b) {
  if (a.field() != b.field()) throw FieldMismatch("direct sum of algebras over different fields");
  std::vector<BracketSpec<S>> brackets;
  for (const auto& e : a.entries()) brackets.push_back({e.i, e.j, e.value});
  const int shift = a.dim();
  for (const auto& e : b.entries()) {
    SparseVector<S> value = e.value;
    for (auto& term : value) term.first += shift;
    brackets.push_back({e.i + shift, e.j + shift, std::move(value)});
  }
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + "+" + b.name();
  return LieAlgebra<S>::assemble(a.field(), a.dim() + b.dim(), std::move(brackets),
                                 std::move(name));
}

namespace {

template <class S>
bool is_full(const Subspace<S>& u) {
  return u.dim() == u.ambient_dim();
}

}  // namespace

template <class S>
Subspace<S> product_subspace(const LieAlgebra<S>& lie, const Subspace<S>& u,
                             const Subspace<S>& v) {
  const int n = lie.dim();
  if (u.ambient_dim() != n || v.ambient_dim() != n) {
    throw DimensionMismatch("subspace ambient dimension differs from algebra");
  }
  EchelonBasis<S> builder(n);
  if (is_full(u) && is_full(v)) {
    // [L, L] is spanned by the structure constants.
    for (const auto& e : lie.entries()) {
      if (builder.is_full()) break;
      builder.insert(e.value);
    }
  } else if (is_full(u) || is_full(v)) {
    // [L, W] is spanned by ad(e_a) applied to a basis of W.
    const Subspace<S>& w = is_full(u) ? v : u;
    for (int r = 0; r < w.dim() && !builder.is_full(); ++r) {
      const Vector<S> y = w.vector(r);
      for (int a = 0; a < n && !builder.is_full(); ++a) builder.insert(lie.ad_sparse(a, y));
    }
  } else {
    for (int r = 0; r < u.dim() && !builder.is_full(); ++r) {
      const Vector<S> x = u.vector(r);
      for (int s = 0; s < v.dim() && !builder.is_full(); ++s) {
        builder.insert(bracket(lie, x, v.vector(s)));
      }
    }
  }
  return builder.subspace();
}

template <class S>
bool is_ideal(const LieAlgebra<S>& lie, const Subspace<S>& ideal) {
  return ideal.contains(product_subspace(lie, Subspace<S>::full(lie.dim()), ideal));
}

template <class S>
Quotient<S> quotient(const LieAlgebra<S>& lie, const Subspace<S>& ideal) {
  const int n = lie.dim();
  if (ideal.ambient_dim() != n) throw DimensionMismatch("ideal ambient dimension differs");
  if (!is_ideal(lie, ideal)) throw NotAnIdeal("subspace is not an ideal");

  const Subspace<S> transversal = complement(ideal, Subspace<S>::full(n));
  std::vector<int> columns;  // coordinates of L/I
  std::vector<int> slot(n, -1);
  {
    const auto& pivots = ideal.pivots();
    for (int c = 0; c < n; ++c) {
      if (!std::binary_search(pivots.begin(), pivots.end(), c)) {
        slot[c] = static_cast<int>(columns.size());
        columns.push_back(c);
      }
    }
  }
  const int m = static_cast<int>(columns.size());
  auto project = [&](const Vector<S>& x) {
    const Vector<S> rem = ideal.reduce(x);
    SparseVector<S> out;
    for (int q = 0; q < m; ++q) {
      if (!is_zero(rem(columns[q]))) out.emplace_back(q, rem(columns[q]));
    }
    return out;
  };

  std::vector<BracketSpec<S>> brackets;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      auto value = project(to_dense(lie.basis_bracket(columns[a], columns[b]), n));
      if (!value.empty()) brackets.push_back({a, b, std::move(value)});
    }
  }
  std::string name = lie.name().empty() ? std::string() : lie.name() + "/I";
  LieAlgebra<S> algebra = new_algebra(lie.field(), m, std::move(brackets), std::move(name));

  Matrix<S> proj = Matrix<S>::Zero(m, n);
  for (int j = 0; j < n; ++j) {
    for (const auto& [q, c] : project(unit_vector<S>(n, j))) proj(q, j) = c;
  }
  Homomorphism<S> projection{lie, algebra, std::move(proj)};
  return {std::move(algebra), std::move(projection), transversal};
}

template <class S>
LieAlgebra<S> change_basis(const LieAlgebra<S>& lie, const Matrix<S>& p) {
  const int n = lie.dim();
  if (p.rows() != n || p.cols() != n) throw DimensionMismatch("base change must be n x n");
  const Matrix<S> p_inv = inverse(p);
  // Brackets only ever land in the span of the coordinates used by the table.
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (const auto& entry : lie.entries()) {
    for (const auto& term : entry.value) used[static_cast<std::size_t>(term.first)] = 1;
  }
  std::vector<int> support;
  for (int k = 0; k < n; ++k) {
    if (used[static_cast<std::size_t>(k)]) support.push_back(k);
  }
  std::vector<BracketSpec<S>> brackets;
  for (int i = 0; i < n; ++i) {
    const Vector<S> fi = p.col(i);
    for (int j = i + 1; j < n; ++j) {
      const Vector<S> image = bracket(lie, fi, Vector<S>(p.col(j)));
      Vector<S> coords = Vector<S>::Zero(n);
      bool zero = true;
      for (int k : support) {
        if (is_zero(image(k))) continue;
        zero = false;
        coords += image(k) * p_inv.col(k);
      }
      if (zero) continue;
      auto value = to_sparse(coords);
      if (value.empty()) continue;
      brackets.push_back({i, j, std::move(value)});
    }
  }
  // Conjugating a Lie algebra yields a Lie algebra; the Jacobi pass is skipped.
  return LieAlgebra<S>::assemble(lie.field(), n, std::move(brackets), lie.name());
}

template <class S>
Matrix<S> random_invertible(int n, const FieldSpec& field, std::mt19937_64& rng) {
  Matrix<S> lower = Matrix<S>::Zero(n, n);
  Matrix<S> upper = Matrix<S>::Zero(n, n);
  const S one = from_int<S>(1, field);
  for (int i = 0; i < n; ++i) {
    lower(i, i) = one;
    upper(i, i) = one;
    for (int j = 0; j < i; ++j) lower(i, j) = random_scalar<S>(rng, field, 1);
    for (int j = i + 1; j < n; ++j) upper(i, j) = random_scalar<S>(rng, field, 1);
  }
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  const Matrix<S> product = lower * upper;
  Matrix<S> out(n, n);
  for (int i = 0; i < n; ++i) out.row(i) = product.row(perm[i]);
  return out;
}

template <class S>
Vector<S> random_vector(int n, const FieldSpec& field, std::mt19937_64& rng) {
  Vector<S> out(n);
  for (int i = 0; i < n; ++i) out(i) = random_scalar<S>(rng, field, 3);
  return out;
}

#define LIEALG_INSTANTIATE_ALGEBRA(S)                                                      \
  template class LieAlgebra<S>;                                                            \
  template struct Homomorphism<S>;                                                         \
  template LieAlgebra<S> new_algebra(const FieldSpec&, int, std::vector<BracketSpec<S>>,   \
                                     std::string);                                        \
  template Vector<S> bracket(const LieAlgebra<S>&, const Vector<S>&, const Vector<S>&);    \
  template std::vector<std::array<int, 3>> check_jacobi(const LieAlgebra<S>&);             \
  template LieAlgebra<S> direct_sum(const LieAlgebra<S>&, const LieAlgebra<S>&);           \
  template Subspace<S> product_subspace(const LieAlgebra<S>&, const Subspace<S>&,          \
                                        const Subspace<S>&);                               \
  template bool is_ideal(const LieAlgebra<S>&, const Subspace<S>&);                        \
  template Quotient<S> quotient(const LieAlgebra<S>&, const Subspace<S>&);                 \
  template LieAlgebra<S> change_basis(const LieAlgebra<S>&, const Matrix<S>&);             \
  template Matrix<S> random_invertible(int, const FieldSpec&, std::mt19937_64&);           \
  template Vector<S> random_vector(int, const FieldSpec&, std::mt19937_64&);

LIEALG_INSTANTIATE_ALGEBRA(Rational)
LIEALG_INSTANTIATE_ALGEBRA(Zp)

}  // namespace liealg
