#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "extlie/errors.hpp"

namespace extlie {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coefficient field: GF(p) for a prime p < 2^31, or Q (characteristic 0).
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws DomainError unless p is a prime below 2^31.
  static Field gf(std::int64_t p);
  /// 0 selects Q, anything else is passed to gf().
  static Field of(std::int64_t characteristic);

  std::int64_t characteristic() const { return p_; }
  bool is_finite() const { return p_ != 0; }
  /// Lie-theoretic operations need char != 2, 3.
  bool supports_lie_theory() const { return p_ != 2 && p_ != 3; }
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::int64_t n);

/// Exact element of a Field. Residues are kept in [0, p); rationals are
/// always in lowest terms with a positive denominator, so equality is
/// representation equality.
class Scalar {
 public:
  /// Zero of Q.
  Scalar() = default;
  /// Zero of `f`.
  explicit Scalar(Field f) : field_(f) {}

  static Scalar from_int(Field f, std::int64_t v);
  static Scalar from_integer(Field f, const Integer& v);
  /// num/den in `f`; den == 0, or den divisible by p, raises DomainError.
  static Scalar from_fraction(Field f, const Integer& num, const Integer& den);
  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return from_int(f, 1); }

  /// Parses the canonical text form written by to_string(). With
  /// strict = false any decimal integer or fraction is accepted and reduced.
  static Scalar parse(Field f, std::string_view text, bool strict = true);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// GF(p) only.
  std::uint32_t residue() const { return residue_; }
  /// Q only.
  const Rational& rational() const { return q_; }

  std::string to_string() const;

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  void check_same_field(const Scalar& o) const;

  Field field_;
  std::uint32_t residue_ = 0;
  Rational q_;
};

}  // namespace extlie
