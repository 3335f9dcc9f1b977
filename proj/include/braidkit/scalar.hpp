#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace braidkit {

enum class FieldKind { Rationals, PrimeField };

/// The base field: either Q or F_p for a prime p < 2^32.
class FieldSpec {
 public:
  /// Q.
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }
  /// Throws NotPrime unless p is a prime below 2^32 (trial division).
  static FieldSpec prime(std::uint64_t p);
  /// Parses "q" or "fp:<p>".
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  bool is_rational() const { return kind_ == FieldKind::Rationals; }
  /// 0 for Q.
  std::uint64_t modulus() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldKind kind_ = FieldKind::Rationals;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are kept as reduced fractions with positive
/// denominator; residues live in [0, p).
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(const FieldSpec& field, long value);
  Scalar(const FieldSpec& field, long numerator, long denominator);
  Scalar(const FieldSpec& field, const mpq_class& value);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }
  /// "a", "a/b" (any integers; reduced on read). Over F_p a/b means a·b⁻¹.
  static Scalar parse(const FieldSpec& field, std::string_view text);
  /// Residue constructor for F_p; value must already be in [0, p).
  static Scalar residue(const FieldSpec& field, std::uint64_t value);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Requires a rational scalar.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  /// Requires a prime-field scalar.
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

  Scalar inverse() const;
  Scalar pow(long exponent) const;

  /// Canonical string: "a/b" with b > 1, "a" otherwise; residue for F_p.
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

 private:
  void check_field(const Scalar& other) const;

  FieldSpec field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

namespace detail {
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
std::uint64_t reduce(const mpz_class& value, std::uint64_t p);
}  // namespace detail

}  // namespace braidkit
