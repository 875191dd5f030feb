#pragma once

#include <optional>
#include <string>

#include "liealg/algebra.hpp"
#include "liealg/invariants.hpp"

namespace liealg {

/// L = T + A with A central, T an ideal containing L^2, T and A meeting in 0.
template <class S>
struct StemDecomposition {
  LieAlgebra<S> stem;  // T in the echelon basis of stem_subspace
  int k = 0;           // dim A
  Subspace<S> stem_subspace;
  Subspace<S> abelian_subspace;
  /// T + A(k) -> L; columns are the basis of T followed by the basis of A.
  Homomorphism<S> witness;
};

template <class S>
StemDecomposition<S> stem_decomposition(const LieAlgebra<S>& lie);

template <class S>
struct HeisenbergRecognition {
  int m = 0;
  int k = 0;
  /// H(m) + A(k) -> L, checked bracket by bracket.
  Homomorphism<S> witness;
};

/// Needs dim L^2 = 1 (DerivedNotLine otherwise) and L^2 central (NotNilpotent otherwise).
template <class S>
HeisenbergRecognition<S> recognize_heisenberg(const LieAlgebra<S>& lie);

struct Verdict {
  enum class Kind { Abelian, Heisenberg, L43, L55, L56, L57, OutOfScope, Counterexample };

  Kind kind = Kind::Counterexample;
  int n = 0;  // Abelian
  int m = 0;  // Heisenberg
  int k = 0;  // abelian summand
  int t = 0;  // OutOfScope

  static Verdict abelian(int n) { return {Kind::Abelian, n, 0, 0, 0}; }
  static Verdict heisenberg(int m, int k) { return {Kind::Heisenberg, 0, m, k, 0}; }
  static Verdict l43(int k) { return {Kind::L43, 0, 0, k, 0}; }
  static Verdict l55(int k) { return {Kind::L55, 0, 0, k, 0}; }
  static Verdict l56(int k) { return {Kind::L56, 0, 0, k, 0}; }
  static Verdict l57(int k) { return {Kind::L57, 0, 0, k, 0}; }
  static Verdict out_of_scope(int t) { return {Kind::OutOfScope, 0, 0, 0, t}; }
  static Verdict counterexample() { return {}; }

  /// abelian(n), heisenberg(m)+A(k), L4_3+A(k), ..., out-of-scope(t=..), COUNTEREXAMPLE.
  std::string to_string() const;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

template <class S>
struct ClassificationResult {
  int t = 0;
  Verdict verdict;
  InvariantReport report;
  /// Explicit isomorphism onto H(m) + A(k); present for Heisenberg verdicts.
  std::optional<Homomorphism<S>> witness;
  /// Fingerprint of the stem part, matched against the canonical form for t in {1, 2}.
  std::optional<InvariantReport> stem_fingerprint;
  /// Why a Counterexample was produced.
  std::string reason;
};

/// Decides the isomorphism type for t(L) <= 2; throws NotNilpotent.
template <class S>
ClassificationResult<S> classify_t012(const LieAlgebra<S>& lie);

/// The canonical algebra a verdict names. Throws Error for OutOfScope and Counterexample.
template <class S>
LieAlgebra<S> build(const Verdict& verdict, const FieldSpec& field);

}  // namespace liealg
