#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace postlie {

/// Base exception for every library error (dimension mismatch, bad input, ...).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Coefficient domain: the rationals, or a prime field F_p with p < 2^16.
class Field {
public:
  constexpr Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws Error unless p is a prime below 65536.
  static Field prime(std::uint32_t p);
  /// Parses "Q" or "Fp:<p>".
  static Field parse(std::string_view tag);

  bool is_rational() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  /// 0 for Q.
  std::uint32_t characteristic() const { return p_; }
  std::string to_string() const;

  friend bool operator==(Field, Field) = default;

private:
  friend class Scalar;
  explicit constexpr Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint32_t p);

/// Exact scalar: a reduced rational or a residue mod p. Operations on scalars
/// of different fields throw.
class Scalar {
public:
  /// Rational zero.
  Scalar() : value_(mpq_class(0)) {}
  Scalar(Field f, long v);
  Scalar(Field f, long num, long den);
  explicit Scalar(mpq_class q);

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }
  /// Accepts "a", "-a", "a/b"; in F_p the denominator must be invertible.
  static Scalar parse(Field f, std::string_view text);
  /// Reduces a rational into f. Throws if the denominator vanishes mod p.
  static Scalar from_rational(Field f, const mpq_class& q);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint32_t residue() const { return std::get<Residue>(value_).r; }

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

  /// Total order used for canonical output: field first, then value
  /// (rationals numerically, residues by representative).
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// "a/b" with b > 0, or "a" when b = 1; residues print as their representative.
  std::string to_string() const;

private:
  struct Residue {
    std::uint32_t r;
    std::uint32_t p;
    friend bool operator==(const Residue&, const Residue&) = default;
  };
  explicit Scalar(Residue r) : value_(r) {}
  void require_same_field(const Scalar& o) const;

  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, Field f);

} // namespace postlie
