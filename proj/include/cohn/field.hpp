#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cohn {

// The base field: either the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  enum class Kind : std::uint8_t { Rationals, PrimeField };

  static Field rationals() noexcept { return Field(Kind::Rationals, 0); }
  // Throws NONPRIME_Q when p is not a prime in [2, 2^31).
  static Field prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rationals; }
  bool is_prime() const noexcept { return kind_ == Kind::PrimeField; }
  // 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }

  // "Q" or "Fp:<p>".
  std::string name() const;
  // Inverse of name(); throws PARSE_ERROR or NONPRIME_Q.
  static Field parse(std::string_view text);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint32_t p) noexcept : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime_u64(std::uint64_t n) noexcept;

// Exact element of a Field. Rationals are kept reduced with positive
// denominator (GMP canonical form); residues are kept in [0, p).
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}
  explicit Scalar(Field field) : field_(field) {}
  Scalar(Field field, long value);
  Scalar(Field field, const mpz_class& value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return Scalar(f, 1L); }
  // Canonical literal syntax: "a/b" or "a" over Q, a residue "k" over F_p
  // (any integer is accepted and reduced). Throws PARSE_ERROR.
  static Scalar parse(Field f, std::string_view text);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  // Only meaningful over Q.
  const mpq_class& rational() const noexcept { return q_; }
  // Only meaningful over F_p.
  std::uint32_t residue() const noexcept { return r_; }

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  // Numeric order over Q, residue order over F_p. Mixed fields throw.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  Field field_;
  mpq_class q_;
  std::uint32_t r_ = 0;
};

Scalar pow(Scalar base, std::uint64_t exponent);

}  // namespace cohn
