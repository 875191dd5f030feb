#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <random>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <gmpxx.h>

#include "liealg/error.hpp"

namespace liealg {

/// Identifies the ground field: the rationals or a prime field GF(p), p < 2^31.
class FieldSpec {
 public:
  enum class Kind { Rational, Prime };

  static FieldSpec rationals() { return FieldSpec(Kind::Rational, 0); }
  /// Throws Error unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Parses the command-line descriptor `q` or `gf:P`.
  static FieldSpec parse(std::string_view descriptor);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  std::uint32_t modulus() const { return p_; }
  std::uint32_t characteristic() const { return p_; }

  /// "Q" or "GF(p)".
  std::string to_string() const;
  /// Inverse of parse(): "q" or "gf:p".
  std::string descriptor() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Exact rational number. Values that fit in 64-bit words are kept inline;
/// anything larger lives in a GMP rational. Always stored reduced with a
/// positive denominator.
class Rational {
 public:
  Rational() noexcept = default;
  // NOLINTNEXTLINE(google-explicit-constructor): Eigen needs Scalar(0), Scalar(1)
  Rational(long long value) : num_(value) {
    if (value == kMin) set_min();
  }
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Grammar `-?[0-9]+(/[1-9][0-9]*)?`; the value is reduced.
  static Rational parse(std::string_view text);
  std::string to_string() const;

  int sign() const;
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const;
  /// True while the value is held in native words.
  bool is_small() const { return !big_; }
  mpq_class to_mpq() const;
  std::string numerator_string() const;
  std::string denominator_string() const;

  Rational operator-() const {
    if (big_) return negate_big();
    Rational out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
  }
  Rational inverse() const;

  // Integer operands stay inline; everything else goes through the slow paths.
  friend Rational operator+(const Rational& a, const Rational& b) {
    std::int64_t s;
    if (!a.big_ && !b.big_ && a.den_ == 1 && b.den_ == 1 &&
        !__builtin_add_overflow(a.num_, b.num_, &s) && s != kMin) {
      return Rational(s);
    }
    return add_slow(a, b);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    std::int64_t s;
    if (!a.big_ && !b.big_ && a.den_ == 1 && b.den_ == 1 &&
        !__builtin_mul_overflow(a.num_, b.num_, &s) && s != kMin) {
      return Rational(s);
    }
    return mul_slow(a, b);
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
  void set_min();
  Rational negate_big() const;
  static Rational add_slow(const Rational& a, const Rational& b);
  static Rational mul_slow(const Rational& a, const Rational& b);
  static Rational from_wide(__int128 num, __int128 den);
  static Rational from_big(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

/// Element of GF(p) with the modulus carried alongside the residue.
///
/// A value built from a plain integer (as Eigen does for Scalar(0) and
/// Scalar(1)) is "unbound": it adopts the modulus of whatever bound value it
/// is combined with. Combining two bound values of different moduli throws
/// FieldMismatch.
class Zp {
 public:
  constexpr Zp() noexcept = default;
  constexpr Zp(long long value) noexcept : value_(value) {}  // NOLINT(google-explicit-constructor)

  /// Canonical residue of `value` modulo p.
  static Zp from_integer(long long value, std::uint32_t p);

  bool bound() const { return p_ != 0; }
  std::uint32_t modulus() const { return p_; }
  /// Residue in [0, p) for bound values; the raw integer otherwise.
  long long value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  Zp bind(std::uint32_t p) const;
  std::string to_string() const { return std::to_string(value_); }

  Zp operator-() const;
  Zp inverse() const;

  friend Zp operator+(const Zp& a, const Zp& b);
  friend Zp operator-(const Zp& a, const Zp& b);
  friend Zp operator*(const Zp& a, const Zp& b);
  friend Zp operator/(const Zp& a, const Zp& b);
  Zp& operator+=(const Zp& b) { return *this = *this + b; }
  Zp& operator-=(const Zp& b) { return *this = *this - b; }
  Zp& operator*=(const Zp& b) { return *this = *this * b; }
  Zp& operator/=(const Zp& b) { return *this = *this / b; }

  friend bool operator==(const Zp& a, const Zp& b);
  friend bool operator!=(const Zp& a, const Zp& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Zp& z) { return os << z.value_; }

 private:
  constexpr Zp(long long value, std::uint32_t p) noexcept : value_(value), p_(p) {}
  static std::uint32_t common_modulus(const Zp& a, const Zp& b);

  long long value_ = 0;
  std::uint32_t p_ = 0;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Zp& x) { return x.is_zero(); }

/// Per-scalar glue between a scalar type and the FieldSpec values it realizes.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static bool admits(const FieldSpec& f) { return f.is_rational(); }
  static Rational from_int(long long v, const FieldSpec&) { return Rational(v); }
  static Rational in_field(const Rational& x, const FieldSpec&) { return x; }
  static Rational parse(std::string_view text, const FieldSpec& f);
  static std::string render(const Rational& x) { return x.to_string(); }
};

template <>
struct ScalarTraits<Zp> {
  static bool admits(const FieldSpec& f) { return !f.is_rational(); }
  static Zp from_int(long long v, const FieldSpec& f) {
    return Zp::from_integer(v, f.modulus());
  }
  /// Binds x to f, throwing FieldMismatch if it already carries another modulus.
  static Zp in_field(const Zp& x, const FieldSpec& f) { return x.bind(f.modulus()); }
  static Zp parse(std::string_view text, const FieldSpec& f);
  static std::string render(const Zp& x) { return x.to_string(); }
};

template <class S>
S from_int(long long v, const FieldSpec& f) {
  return ScalarTraits<S>::from_int(v, f);
}

/// Strict scalar parser: rationals per `-?[0-9]+(/[1-9][0-9]*)?`, prime-field
/// residues as canonical decimals below p.
template <class S>
S parse_scalar(std::string_view text, const FieldSpec& f) {
  return ScalarTraits<S>::parse(text, f);
}

template <class S>
std::string render_scalar(const S& x) {
  return ScalarTraits<S>::render(x);
}

/// Throws FieldMismatch if the scalar type cannot represent f.
template <class S>
void require_field(const FieldSpec& f) {
  if (!ScalarTraits<S>::admits(f)) {
    throw FieldMismatch("scalar type does not realize field " + f.to_string());
  }
}

/// Uniform random element; rationals are drawn as integers in [-magnitude, magnitude].
Rational random_scalar(std::mt19937_64& rng, const FieldSpec& f, int magnitude,
                       const Rational* tag);
Zp random_scalar(std::mt19937_64& rng, const FieldSpec& f, int magnitude, const Zp* tag);

template <class S>
S random_scalar(std::mt19937_64& rng, const FieldSpec& f, int magnitude = 3) {
  return random_scalar(rng, f, magnitude, static_cast<const S*>(nullptr));
}

}  // namespace liealg

namespace Eigen {

template <>
struct NumTraits<liealg::Rational> : GenericNumTraits<liealg::Rational> {
  using Real = liealg::Rational;
  using NonInteger = liealg::Rational;
  using Literal = liealg::Rational;
  using Nested = liealg::Rational;
  // Exact scalars: stream output needs no precision.
  static constexpr int digits10() { return 0; }
  static constexpr int max_digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
};

template <>
struct NumTraits<liealg::Zp> : GenericNumTraits<liealg::Zp> {
  using Real = liealg::Zp;
  using NonInteger = liealg::Zp;
  using Literal = liealg::Zp;
  using Nested = liealg::Zp;
  // Exact scalars: stream output needs no precision.
  static constexpr int digits10() { return 0; }
  static constexpr int max_digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
};

}  // namespace Eigen
