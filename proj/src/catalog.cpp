#include "liealg/catalog.hpp"

#include <algorithm>
#include <charconv>

namespace liealg {

namespace {

// Coefficient constant + param * (epsilon or eta) on basis vector k (1-based).
struct Term {
  int k;
  int constant;
  int param;
};

struct Relation {
  int i;
  int j;
  std::vector<Term> rhs;
};

struct Presentation {
  std::string key;
  int dim;
  ParamDomain domain;
  FieldConstraint constraint;
  Table1Row row;
  std::vector<Relation> relations;
};

Term x(int k) { return {k, 1, 0}; }
Term neg(int k) { return {k, -1, 0}; }
Term eps(int k) { return {k, 0, 1}; }

Relation rel(int i, int j, Term t) { return {i, j, {t}}; }
Relation rel(int i, int j, Term t, Term u) { return {i, j, {t, u}}; }

using enum ParamDomain;
using enum FieldConstraint;

const std::vector<Presentation>& presentations() {
  static const std::vector<Presentation> table = [] {
    const std::vector<Relation> l43{rel(1, 2, x(3)), rel(1, 3, x(4))};
    const std::vector<Relation> l55{rel(1, 2, x(3)), rel(1, 3, x(5)), rel(2, 4, x(5))};
    // The [x_2, x_3] = x_5 relation completes the usual L_{5,6} presentation.
    const std::vector<Relation> l56{rel(1, 2, x(3)), rel(1, 3, x(4)), rel(1, 4, x(5)),
                                    rel(2, 3, x(5))};
    const std::vector<Relation> l57{rel(1, 2, x(3)), rel(1, 3, x(4)), rel(1, 4, x(5))};
    const std::vector<Relation> l58{rel(1, 2, x(4)), rel(1, 3, x(5))};
    const std::vector<Relation> l59{rel(1, 2, x(3)), rel(1, 3, x(4)), rel(2, 3, x(5))};

    std::vector<Presentation> t{
        {"L4_3", 4, None, Any, {3, 2, 2}, l43},
        {"L5_3", 5, None, Any, {3, 2, 2}, l43},
        {"L5_5", 5, None, Any, {4, 3, 2}, l55},
        {"L5_6", 5, None, Any, {4, 2, 3}, l56},
        {"L5_7", 5, None, Any, {4, 2, 3}, l57},
        {"L5_8", 5, None, Any, {3, 3, 2}, l58},
        {"L5_9", 5, None, Any, {3, 2, 3}, l59},
        {"L6_3", 6, None, CharNot2, {3, 2, 2}, l43},
        {"L6_5", 6, None, CharNot2, {4, 3, 2}, l55},
        {"L6_6", 6, None, CharNot2, {4, 2, 3}, l56},
        {"L6_7", 6, None, CharNot2, {4, 2, 3}, l57},
        {"L6_8", 6, None, CharNot2, {3, 3, 2}, l58},
        {"L6_9", 6, None, CharNot2, {3, 2, 3}, l59},
        {"L6_10", 6, None, CharNot2, {5, 4, 2},
         {rel(1, 2, x(3)), rel(1, 3, x(6)), rel(4, 5, x(6))}},
        {"L6_11", 6, None, CharNot2, {5, 3, 3},
         {rel(1, 2, x(3)), rel(1, 3, x(4)), rel(1, 4, x(6)), rel(2, 3, x(6)), rel(2, 5, x(6))}},
        {"L6_12", 6, None, CharNot2, {5, 3, 3},
         {rel(1, 2, x(3)), rel(1, 3, x(4)), rel(1, 4, x(6)), rel(2, 5, x(6))}},
        {"L6_13", 6, None, CharNot2, {5, 3, 3},
         {rel(1, 2, x(3)), rel(1, 3, x(5)), rel(2, 4, x(5)), rel(1, 5, x(6)), rel(3, 4, x(6))}},
        {"L6_14", 6, None, CharNot2, {5, 2, 4},
         {rel(1, 2, x(3)), rel(1, 3, x(4)), rel(1, 4, x(5)), rel(2, 3, x(5)), rel(2, 5, x(6)),
          rel(3, 4, neg(6))}},
        {"L6_15", 6, None, CharNot2, {5, 2, 4},
         {rel(1, 2, x(3)), rel(1, 3, x(4)), rel(1, 4, x(5)), rel(2, 3, x(5)), rel(1, 5, x(6)),
          rel(2, 4, x(6))}},
        {"L6_16", 6, None, CharNot2, {5, 2, 4},
         {rel(1, 2, x(3)), rel(1, 3, x(4)), rel(1, 4, x(5)), rel(2, 5, x(6)), rel(3, 4, neg(6))}},
        {"L6_17", 6, None, CharNot2, {5, 2, 4},
         {rel(1, 2, x(3)), rel(1, 3, x(4)), rel(1, 4, x(5)), rel(1, 5, x(6)), rel(2, 3, x(6))}},
        {"L6_18", 6, None, CharNot2, {5, 2, 4},
         {rel(1, 2, x(3)), rel(1, 3, x(4)), rel(1, 4, x(5)), rel(1, 5, x(6))}},
        {"L6_19", 6, NonzeroEpsilon, CharNot2, {5, 3, 3},
         {rel(1, 2, x(4)), rel(1, 3, x(5)), rel(1, 5, x(6)), rel(2, 4, x(6)), rel(3, 5, eps(6))}},
        {"L6_20", 6, None, CharNot2, {5, 3, 3},
         {rel(1, 2, x(4)), rel(1, 3, x(5)), rel(1, 5, x(6)), rel(2, 4, x(6))}},
        {"L6_21", 6, NonzeroEpsilon, CharNot2, {5, 2, 4},
         {rel(1, 2, x(3)), rel(1, 3, x(4)), rel(2, 3, x(5)), rel(1, 4, x(6)), rel(2, 5, eps(6))}},
        {"L6_22", 6, Epsilon, CharNot2, {4, 4, 2},
         {rel(1, 2, x(5)), rel(1, 3, x(6)), rel(2, 4, eps(6)), rel(3, 4, x(5))}},
        {"L6_23", 6, None, CharNot2, {4, 3, 3},
         {rel(1, 2, x(3)), rel(1, 3, x(5)), rel(1, 4, x(6)), rel(2, 4, x(5))}},
        {"L6_24", 6, Epsilon, CharNot2, {4, 3, 3},
         {rel(1, 2, x(3)), rel(1, 3, x(5)), rel(1, 4, eps(6)), rel(2, 3, x(6)), rel(2, 4, x(5))}},
        {"L6_25", 6, None, CharNot2, {4, 3, 3},
         {rel(1, 2, x(3)), rel(1, 3, x(5)), rel(1, 4, x(6))}},
        {"L6_26", 6, None, CharNot2, {3, 3, 3},
         {rel(1, 2, x(4)), rel(1, 3, x(5)), rel(2, 3, x(6))}},
        {"L6_27", 6, None, CharNot2, {4, 3, 3},
         {rel(1, 2, x(3)), rel(1, 3, x(5)), rel(2, 4, x(6))}},
        {"L6_28", 6, None, CharNot2, {4, 2, 4},
         {rel(1, 2, x(3)), rel(1, 3, x(4)), rel(1, 4, x(5)), rel(2, 3, x(6))}},
        {"L2_6_1", 6, None, Char2, {5, 3, 3},
         {rel(1, 2, x(3)), rel(1, 3, x(5)), rel(1, 5, x(6)), rel(2, 4, x(5), x(6)),
          rel(3, 4, x(6))}},
        {"L2_6_2", 6, None, Char2, {5, 2, 4},
         {rel(1, 2, x(3)), rel(1, 3, x(4)), rel(1, 4, x(5)), rel(1, 5, x(6)),
          rel(2, 3, x(5), x(6)), rel(2, 4, x(6))}},
        // Printed with [x_2, x_4] = x_6, which breaks Jacobi on (x_1, x_2, x_3);
        // [x_3, x_4] = x_6 is the characteristic 2 form of L6_14.
        {"L2_6_3", 6, NonzeroEpsilon, Char2, {5, 2, 4},
         {rel(1, 2, x(3)), rel(1, 3, x(4)), rel(1, 4, x(5)), rel(2, 3, x(5), eps(6)),
          rel(2, 5, x(6)), rel(3, 4, x(6))}},
        {"L2_6_4", 6, NonzeroEpsilon, Char2, {5, 2, 4},
         {rel(1, 2, x(3)), rel(1, 3, x(4)), rel(1, 4, x(5)), rel(2, 3, eps(6)), rel(2, 5, x(6)),
          rel(3, 4, x(6))}},
        {"L2_6_5", 6, None, Char2, {5, 3, 3},
         {rel(1, 2, x(4)), rel(1, 3, x(5)), rel(2, 5, x(6)), rel(3, 4, x(6))}},
        {"L2_6_6", 6, None, Char2, {5, 2, 4},
         {rel(1, 2, x(3)), rel(1, 3, x(4)), rel(1, 5, x(6)), rel(2, 3, x(5)), rel(2, 4, x(6))}},
        {"L2_6_7", 6, Eta, Char2, {4, 4, 2},
         {rel(1, 2, x(5)), rel(1, 3, x(6)), rel(2, 4, eps(6)), rel(3, 4, x(5), x(6))}},
        {"L2_6_8", 6, Eta, Char2, {4, 3, 3},
         {rel(1, 2, x(3)), rel(1, 3, x(5)), rel(1, 4, eps(6)), rel(2, 3, x(6)),
          rel(2, 4, x(5), x(6))}},
    };
    return t;
  }();
  return table;
}

const Presentation* find_presentation(std::string_view key) {
  for (const auto& p : presentations()) {
    if (p.key == key) return &p;
  }
  return nullptr;
}

CatalogEntry entry_of(const Presentation& p, std::optional<long long> param) {
  return {p.key, param, p.domain, p.constraint, p.row};
}

template <class S>
LieAlgebra<S> realize(const Presentation& p, const FieldSpec& field, const S& param,
                      std::string name) {
  std::vector<BracketSpec<S>> brackets;
  for (const auto& r : p.relations) {
    SparseVector<S> value;
    for (const auto& term : r.rhs) {
      S c = from_int<S>(term.constant, field) + from_int<S>(term.param, field) * param;
      value.emplace_back(term.k - 1, std::move(c));
    }
    brackets.push_back({r.i - 1, r.j - 1, std::move(value)});
  }
  return new_algebra(field, p.dim, std::move(brackets), std::move(name));
}

// Parses the decimal suffix of keys like "A12"; nullopt if malformed.
std::optional<int> family_index(std::string_view key, char prefix) {
  if (key.size() < 2 || key.front() != prefix) return std::nullopt;
  int value = 0;
  const char* first = key.data() + 1;
  const char* last = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

std::string param_text(ParamDomain domain) {
  return domain == Eta ? "eta" : "epsilon";
}

}  // namespace

std::string Table1Row::to_string() const {
  return "(" + std::to_string(quotient_dim) + "," + std::to_string(d) + "," +
         std::to_string(derived_dim) + ")";
}

bool admits(FieldConstraint constraint, const FieldSpec& field) {
  switch (constraint) {
    case Any:
      return true;
    case CharNot2:
      return field.characteristic() != 2;
    case Char2:
      return field.characteristic() == 2;
  }
  return false;
}

std::string CatalogEntry::label() const {
  return param ? key + "(" + std::to_string(*param) + ")" : key;
}

const std::vector<std::string>& catalog_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const auto& p : presentations()) out.push_back(p.key);
    return out;
  }();
  return keys;
}

CatalogEntry catalog_entry(std::string_view key) {
  const Presentation* p = find_presentation(key);
  if (p == nullptr) throw CatalogError("unknown catalog key '" + std::string(key) + "'");
  return entry_of(*p, std::nullopt);
}

std::vector<CatalogEntry> list_all(const FieldSpec& field) {
  std::vector<CatalogEntry> out;
  for (const auto& p : presentations()) {
    if (!admits(p.constraint, field)) continue;
    switch (p.domain) {
      case None:
        out.push_back(entry_of(p, std::nullopt));
        break;
      case NonzeroEpsilon:
        out.push_back(entry_of(p, 1));
        break;
      case Epsilon:
      case Eta:
        out.push_back(entry_of(p, 0));
        out.push_back(entry_of(p, 1));
        break;
    }
  }
  return out;
}

template <class S>
LieAlgebra<S> abelian(int n, const FieldSpec& field) {
  if (n < 0) throw CatalogError("A(n) needs n >= 0");
  return new_algebra<S>(field, n, {}, "A" + std::to_string(n));
}

template <class S>
LieAlgebra<S> heisenberg(int m, const FieldSpec& field) {
  if (m < 1) throw CatalogError("H(m) needs m >= 1");
  std::vector<BracketSpec<S>> brackets;
  const S one = from_int<S>(1, field);
  for (int i = 0; i < m; ++i) brackets.push_back({2 * i, 2 * i + 1, {{2 * m, one}}});
  return new_algebra(field, 2 * m + 1, std::move(brackets), "H" + std::to_string(m));
}

template <class S>
LieAlgebra<S> filiform(int t, const FieldSpec& field) {
  if (t < 1) throw CatalogError("the filiform construction needs t >= 1");
  std::vector<BracketSpec<S>> brackets;
  const S one = from_int<S>(1, field);
  // Index 0 is s; index i is s_i.
  for (int i = 1; i <= t + 1; ++i) brackets.push_back({0, i, {{i + 1, one}}});
  return new_algebra(field, t + 3, std::move(brackets), "F" + std::to_string(t));
}

template <class S>
LieAlgebra<S> get(std::string_view key, const FieldSpec& field, const std::vector<S>& params) {
  require_field<S>(field);
  auto no_params = [&] {
    if (!params.empty()) throw CatalogError(std::string(key) + " takes no parameters");
  };
  if (const Presentation* p = find_presentation(key)) {
    if (!admits(p->constraint, field)) {
      throw CatalogError(std::string(key) + " is not defined over " + field.to_string() +
                         (p->constraint == Char2 ? " (needs characteristic 2)"
                                                 : " (needs characteristic other than 2)"));
    }
    if (p->domain == None) {
      no_params();
      return realize(*p, field, from_int<S>(0, field), p->key);
    }
    if (params.size() != 1) {
      throw CatalogError(std::string(key) + " takes exactly one parameter (" +
                         param_text(p->domain) + ")");
    }
    const S param = ScalarTraits<S>::in_field(params[0], field);
    if (p->domain == NonzeroEpsilon && is_zero(param)) {
      throw CatalogError(std::string(key) + " needs a nonzero epsilon");
    }
    return realize(*p, field, param, p->key + "(" + render_scalar(param) + ")");
  }
  if (auto n = family_index(key, 'A')) {
    no_params();
    return abelian<S>(*n, field);
  }
  if (auto m = family_index(key, 'H')) {
    no_params();
    return heisenberg<S>(*m, field);
  }
  if (auto t = family_index(key, 'F')) {
    no_params();
    return filiform<S>(*t, field);
  }
  throw CatalogError("unknown catalog key '" + std::string(key) + "'");
}

template <class S>
LieAlgebra<S> build(const CatalogEntry& entry, const FieldSpec& field) {
  std::vector<S> params;
  if (entry.param) params.push_back(from_int<S>(*entry.param, field));
  return get<S>(entry.key, field, params);
}

#define LIEALG_INSTANTIATE_CATALOG(S)                                                      \
  template LieAlgebra<S> abelian(int, const FieldSpec&);                                   \
  template LieAlgebra<S> heisenberg(int, const FieldSpec&);                                \
  template LieAlgebra<S> filiform(int, const FieldSpec&);                                  \
  template LieAlgebra<S> get(std::string_view, const FieldSpec&, const std::vector<S>&);   \
  template LieAlgebra<S> build(const CatalogEntry&, const FieldSpec&);

LIEALG_INSTANTIATE_CATALOG(Rational)
LIEALG_INSTANTIATE_CATALOG(Zp)

}  // namespace liealg
