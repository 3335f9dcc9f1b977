#include "braidkit/scalar.hpp"

#include <charconv>
#include <limits>
#include <tuple>
#include <utility>

#include "braidkit/errors.hpp"

namespace braidkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > std::numeric_limits<std::uint32_t>::max()) {
    throw NotPrime("modulus " + std::to_string(p) + " exceeds 2^32");
  }
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  FieldSpec f;
  f.kind_ = FieldKind::PrimeField;
  f.p_ = p;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.starts_with("fp:")) {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw ParseError("bad field modulus in '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected q or fp:<p>)");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "q" : "fp:" + std::to_string(p_);
}

namespace detail {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  if (r != 1) throw NotInvertible("zero has no inverse in F_" + std::to_string(p));
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace detail

namespace {

std::uint64_t to_residue(const mpq_class& q, std::uint64_t p) {
  std::uint64_t den = detail::reduce(q.get_den(), p);
  if (den == 0) {
    throw NotInvertible("denominator vanishes modulo " + std::to_string(p));
  }
  return detail::reduce(q.get_num(), p) * detail::mod_inverse(den, p) % p;
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  mpz_class num, den(1);
  auto parse_int = [&](const std::string& part, mpz_class& out) {
    if (part.empty() || out.set_str(part, 10) != 0) {
      throw ParseError("malformed scalar '" + s + "'");
    }
  };
  // mpz set_str rejects a leading '+', which is fine.
  parse_int(s.substr(0, slash), num);
  if (slash != std::string::npos) parse_int(s.substr(slash + 1), den);
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Scalar::Scalar(const FieldSpec& field, long value) : Scalar(field, mpq_class(value)) {}

Scalar::Scalar(const FieldSpec& field, long numerator, long denominator) : field_(field) {
  if (denominator == 0) throw NotInvertible("zero denominator");
  mpq_class q(numerator, denominator);
  q.canonicalize();
  *this = Scalar(field, q);
}

Scalar::Scalar(const FieldSpec& field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    value_ = std::move(q);
  } else {
    value_ = to_residue(value, field.modulus());
  }
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  return Scalar(field, parse_rational(text));
}

Scalar Scalar::residue(const FieldSpec& field, std::uint64_t value) {
  if (field.is_rational() || value >= field.modulus()) {
    throw FieldMismatch("residue constructor needs F_p with value < p");
  }
  Scalar s;
  s.field_ = field;
  s.value_ = value;
  return s;
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(rational()) == 0;
  return residue() == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return rational() == 1;
  return residue() == 1;
}

void Scalar::check_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw FieldMismatch("scalar fields differ: " + field_.to_string() + " vs " +
                        other.field_.to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw NotInvertible("zero scalar has no inverse");
  if (field_.is_rational()) return Scalar(field_, mpq_class(1) / rational());
  return residue(field_, detail::mod_inverse(residue(), field_.modulus()));
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  Scalar result = one(field_);
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return rational().get_str();
  return std::to_string(residue());
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-rational()));
  std::uint64_t p = field_.modulus();
  return residue(field_, (p - residue()) % p);
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_field(other);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += other.rational();
  } else {
    value_ = (residue() + other.residue()) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  check_field(other);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= other.rational();
  } else {
    value_ = residue() * other.residue() % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_field(other);
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

}  // namespace braidkit
