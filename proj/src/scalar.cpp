#include "extlie/scalar.hpp"

#include <cctype>

namespace extlie {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::gf(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p))
    throw DomainError("characteristic " + std::to_string(p) +
                      " is not a prime below 2^31");
  return Field(static_cast<std::uint32_t>(p));
}

Field Field::of(std::int64_t characteristic) {
  return characteristic == 0 ? rationals() : gf(characteristic);
}

std::string Field::name() const {
  return p_ == 0 ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

namespace {

std::uint32_t reduce_integer(const Integer& v, std::uint32_t p) {
  Integer r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

// Extended Euclid over machine integers; p is prime and a != 0 mod p.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

bool is_decimal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool has_leading_zero(std::string_view digits) {
  return digits.size() > 1 && digits[0] == '0';
}

}  // namespace

Scalar Scalar::from_int(Field f, std::int64_t v) {
  return from_integer(f, Integer(v));
}

Scalar Scalar::from_integer(Field f, const Integer& v) {
  Scalar s(f);
  if (f.is_finite())
    s.residue_ = reduce_integer(v, static_cast<std::uint32_t>(f.characteristic()));
  else
    s.q_ = Rational(v);
  return s;
}

Scalar Scalar::from_fraction(Field f, const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  if (f.is_finite()) {
    Scalar d = from_integer(f, den);
    if (d.is_zero())
      throw DomainError("denominator " + den.str() + " vanishes in " + f.name());
    return from_integer(f, num) / d;
  }
  Scalar s(f);
  // Rational(n, d) misbehaves for d < 0 in this Boost version.
  s.q_ = den < 0 ? Rational(-num, -den) : Rational(num, den);
  return s;
}

Scalar Scalar::parse(Field f, std::string_view text, bool strict) {
  auto fail = [&]() -> Scalar {
    throw ParseError("malformed " + f.name() + " coefficient '" +
                     std::string(text) + "'");
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos
                             ? std::string_view()
                             : text.substr(slash + 1);
  if (!is_decimal(num, true)) return fail();
  if (slash != std::string_view::npos && !is_decimal(den, false)) return fail();

  if (strict) {
    std::string_view digits = num[0] == '-' ? num.substr(1) : num;
    if (num[0] == '+' || has_leading_zero(digits)) return fail();
    if (f.is_finite()) {
      if (slash != std::string_view::npos || num[0] == '-') return fail();
      Integer v{std::string(num)};
      if (v >= f.characteristic()) return fail();
      return from_integer(f, v);
    }
    if (num == "-0") return fail();
    if (slash == std::string_view::npos) return from_integer(f, Integer(std::string(num)));
    if (has_leading_zero(den)) return fail();
    Integer n{std::string(num)}, d{std::string(den)};
    if (d <= 1 || n == 0 || boost::multiprecision::gcd(n, d) != 1) return fail();
    return from_fraction(f, n, d);
  }

  std::string n_str(num[0] == '+' ? num.substr(1) : num);
  Integer n(n_str);
  if (slash == std::string_view::npos) return from_integer(f, n);
  return from_fraction(f, n, Integer(std::string(den)));
}

bool Scalar::is_zero() const {
  return field_.is_finite() ? residue_ == 0 : q_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_finite() ? residue_ == 1 : q_ == 1;
}

std::string Scalar::to_string() const {
  if (field_.is_finite()) return std::to_string(residue_);
  if (denominator(q_) == 1) return numerator(q_).str();
  return numerator(q_).str() + "/" + denominator(q_).str();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero in " + field_.name());
  Scalar s(field_);
  if (field_.is_finite())
    s.residue_ = inverse_mod(residue_, static_cast<std::uint32_t>(field_.characteristic()));
  else
    s.q_ = 1 / q_;
  return s;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatch("mixing " + field_.name() + " and " + o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_finite())
    s.residue_ = residue_ == 0 ? 0 : static_cast<std::uint32_t>(field_.characteristic()) - residue_;
  else
    s.q_ = -q_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_finite()) {
    std::uint64_t p = static_cast<std::uint64_t>(field_.characteristic());
    residue_ = static_cast<std::uint32_t>((std::uint64_t{residue_} + o.residue_) % p);
  } else {
    q_ += o.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_finite()) {
    std::uint64_t p = static_cast<std::uint64_t>(field_.characteristic());
    residue_ = static_cast<std::uint32_t>((std::uint64_t{residue_} + p - o.residue_) % p);
  } else {
    q_ -= o.q_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_finite()) {
    std::uint64_t p = static_cast<std::uint64_t>(field_.characteristic());
    residue_ = static_cast<std::uint32_t>((std::uint64_t{residue_} * o.residue_) % p);
  } else {
    q_ *= o.q_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_finite() ? residue_ == o.residue_ : q_ == o.q_;
}

}  // namespace extlie
