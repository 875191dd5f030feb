#include "liealg/field.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace liealg {

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(__int128 v) { return v <= kMax && v >= -static_cast<__int128>(kMax); }

unsigned __int128 gcd_wide(unsigned __int128 a, unsigned __int128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    unsigned __int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

mpz_class to_mpz(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : v;
  mpz_class hi(static_cast<unsigned long>(mag >> 64));
  mpz_class lo(static_cast<unsigned long>(mag & 0xffffffffffffffffULL));
  mpz_class out = (hi << 64) + lo;
  return negative ? mpz_class(-out) : out;
}

bool fits_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 &&
         z.get_si() != std::numeric_limits<long>::min();
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- FieldSpec

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31)) throw Error("prime modulus must be below 2^31");
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  return FieldSpec(Kind::Prime, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view descriptor) {
  if (descriptor == "q" || descriptor == "Q") return rationals();
  if (descriptor.substr(0, 3) == "gf:") {
    std::string_view digits = descriptor.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw ParseError("malformed field descriptor '" + std::string(descriptor) + "'");
    }
    return prime(p);
  }
  throw ParseError("unknown field descriptor '" + std::string(descriptor) +
                   "' (expected q or gf:P)");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

std::string FieldSpec::descriptor() const {
  return is_rational() ? "q" : "gf:" + std::to_string(p_);
}

// ----------------------------------------------------------------- Rational

void Rational::set_min() {
  big_ = std::make_unique<mpq_class>(mpz_class(static_cast<long>(kMin)));
  num_ = 0;
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw DivisionByZero();
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& value) { *this = from_big(value); }

Rational::Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
  if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_) {
    big_ = std::make_unique<mpq_class>(*other.big_);
  } else {
    big_.reset();
  }
  return *this;
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (fits(num) && fits(den)) {
    auto n64 = static_cast<std::int64_t>(num);
    auto d64 = static_cast<std::int64_t>(den);
    const std::int64_t g = std::gcd(n64, d64);
    Rational out;
    out.num_ = g > 1 ? n64 / g : n64;
    out.den_ = g > 1 ? d64 / g : d64;
    return out;
  }
  unsigned __int128 mag = num < 0 ? -static_cast<unsigned __int128>(num) : num;
  unsigned __int128 g = gcd_wide(mag, den);
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  Rational out;
  if (fits(num) && fits(den)) {
    out.num_ = static_cast<std::int64_t>(num);
    out.den_ = static_cast<std::int64_t>(den);
    return out;
  }
  out.big_ = std::make_unique<mpq_class>(to_mpz(num), to_mpz(den));
  out.big_->canonicalize();
  return out;
}

Rational Rational::from_big(mpq_class value) {
  value.canonicalize();
  Rational out;
  if (fits_small(value.get_num()) && fits_small(value.get_den())) {
    out.num_ = value.get_num().get_si();
    out.den_ = value.get_den().get_si();
  } else {
    out.big_ = std::make_unique<mpq_class>(std::move(value));
  }
  return out;
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num_text = body;
  std::string_view den_text;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_text = body.substr(0, slash);
    den_text = body.substr(slash + 1);
    if (!all_digits(den_text) || den_text.front() == '0') {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
  }
  if (!all_digits(num_text)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_text), 10);
  mpz_class den(den_text.empty() ? std::string("1") : std::string(den_text), 10);
  if (negative) num = -num;
  return from_big(mpq_class(num, den));
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str(10);
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::numerator_string() const {
  return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rational::denominator_string() const {
  return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

Rational Rational::negate_big() const { return from_big(-*big_); }

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (big_) return from_big(1 / *big_);
  Rational out;
  out.num_ = num_ < 0 ? -den_ : den_;
  out.den_ = num_ < 0 ? -num_ : num_;
  return out;
}

Rational Rational::add_slow(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_big(a.to_mpq() + b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) {
    __int128 s = static_cast<__int128>(a.num_) + b.num_;
    if (fits(s)) {
      Rational out;
      out.num_ = static_cast<std::int64_t>(s);
      return out;
    }
    return Rational::from_wide(s, 1);
  }
  if (a.num_ == 0) return b;
  if (b.num_ == 0) return a;
  return Rational::from_wide(
      static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
      static_cast<__int128>(a.den_) * b.den_);
}

Rational Rational::mul_slow(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (a.big_ || b.big_) return Rational::from_big(a.to_mpq() * b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) {
    __int128 p = static_cast<__int128>(a.num_) * b.num_;
    if (fits(p)) {
      Rational out;
      out.num_ = static_cast<std::int64_t>(p);
      return out;
    }
    return Rational::from_wide(p, 1);
  }
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  __int128 num = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
  __int128 den = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
  if (fits(num) && fits(den)) {
    Rational out;
    out.num_ = static_cast<std::int64_t>(num);
    out.den_ = static_cast<std::int64_t>(den);
    return out;
  }
  return Rational::from_wide(num, den);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    // Canonical forms: a big value never equals a small one.
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return a.to_mpq() < b.to_mpq();
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

// ----------------------------------------------------------------------- Zp

namespace {

long long mod_reduce(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  return r < 0 ? r + p : r;
}

}  // namespace

Zp Zp::from_integer(long long value, std::uint32_t p) {
  if (p == 0) throw FieldMismatch("prime-field element requires a modulus");
  return Zp(mod_reduce(value, p), p);
}

Zp Zp::bind(std::uint32_t p) const {
  if (p_ == p) return *this;
  if (p_ != 0) {
    throw FieldMismatch("GF(" + std::to_string(p_) + ") element used in GF(" +
                        std::to_string(p) + ")");
  }
  return from_integer(value_, p);
}

std::uint32_t Zp::common_modulus(const Zp& a, const Zp& b) {
  if (a.p_ == b.p_ || b.p_ == 0) return a.p_;
  if (a.p_ == 0) return b.p_;
  throw FieldMismatch("GF(" + std::to_string(a.p_) + ") and GF(" + std::to_string(b.p_) +
                      ") elements combined");
}

Zp Zp::operator-() const {
  if (p_ == 0) return Zp(-value_);
  return Zp(value_ == 0 ? 0 : p_ - value_, p_);
}

Zp Zp::inverse() const {
  if (value_ == 0) throw DivisionByZero();
  if (p_ == 0) {
    if (value_ == 1 || value_ == -1) return *this;
    throw FieldMismatch("cannot invert an integer without a modulus");
  }
  // Extended Euclid on (value, p).
  long long r0 = p_, r1 = value_, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    long long t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return Zp(mod_reduce(t0, p_), p_);
}

Zp operator+(const Zp& a, const Zp& b) {
  const std::uint32_t p = Zp::common_modulus(a, b);
  if (p == 0) return Zp(a.value_ + b.value_);
  const long long s = a.bind(p).value_ + b.bind(p).value_;
  return Zp(s >= p ? s - p : s, p);
}

Zp operator-(const Zp& a, const Zp& b) { return a + (-b); }

Zp operator*(const Zp& a, const Zp& b) {
  const std::uint32_t p = Zp::common_modulus(a, b);
  if (p == 0) return Zp(a.value_ * b.value_);
  return Zp(static_cast<long long>(
                (static_cast<unsigned long long>(a.bind(p).value_) * b.bind(p).value_) % p),
            p);
}

Zp operator/(const Zp& a, const Zp& b) {
  const std::uint32_t p = Zp::common_modulus(a, b);
  if (p == 0) return a * b.inverse();
  return a.bind(p) * b.bind(p).inverse();
}

bool operator==(const Zp& a, const Zp& b) {
  if (a.p_ == b.p_) return a.value_ == b.value_;
  if (a.p_ != 0 && b.p_ != 0) return false;
  const std::uint32_t p = a.p_ != 0 ? a.p_ : b.p_;
  return a.bind(p).value_ == b.bind(p).value_;
}

// ------------------------------------------------------------------ parsing

Rational ScalarTraits<Rational>::parse(std::string_view text, const FieldSpec& f) {
  require_field<Rational>(f);
  return Rational::parse(text);
}

Zp ScalarTraits<Zp>::parse(std::string_view text, const FieldSpec& f) {
  require_field<Zp>(f);
  if (!all_digits(text) || text.size() > 10) {
    throw ParseError("malformed residue '" + std::string(text) + "'");
  }
  std::uint64_t v = 0;
  std::from_chars(text.data(), text.data() + text.size(), v);
  if (v >= f.modulus()) {
    throw ParseError("residue " + std::string(text) + " is not below " +
                     std::to_string(f.modulus()));
  }
  return Zp::from_integer(static_cast<long long>(v), f.modulus());
}

Rational random_scalar(std::mt19937_64& rng, const FieldSpec& f, int magnitude,
                       const Rational*) {
  require_field<Rational>(f);
  std::uniform_int_distribution<int> dist(-magnitude, magnitude);
  return Rational(dist(rng));
}

Zp random_scalar(std::mt19937_64& rng, const FieldSpec& f, int, const Zp*) {
  require_field<Zp>(f);
  std::uniform_int_distribution<long long> dist(0, static_cast<long long>(f.modulus()) - 1);
  return Zp::from_integer(dist(rng), f.modulus());
}

}  // namespace liealg
