#pragma once

// Exact coefficient rings: Laurent polynomials Z[A, A^-1] with
// arbitrary-precision coefficients, and reduced rationals.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace gluckkit {

using Integer = mpz_class;
using Exponent = std::int64_t;

class LaurentPolynomial {
 public:
  using TermMap = std::map<Exponent, Integer>;

  LaurentPolynomial() = default;
  LaurentPolynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPolynomial(const Integer& constant);

  static LaurentPolynomial monomial(const Integer& coefficient, Exponent exponent);
  static LaurentPolynomial from_terms(const std::vector<std::pair<Exponent, Integer>>& terms);

  // The skein variable A.
  static LaurentPolynomial A();
  // Value of a trivial loop, -A^2 - A^-2.
  static LaurentPolynomial delta();

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Integer coefficient(Exponent exponent) const;
  Exponent min_exponent() const;  // requires !is_zero()
  Exponent max_exponent() const;  // requires !is_zero()

  // Multiplication by A^k.
  LaurentPolynomial shifted(Exponent k) const;
  LaurentPolynomial pow(unsigned exponent) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);

  friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
    return lhs += rhs;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs);
  LaurentPolynomial operator-() const;

  friend bool operator==(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

  // Human form, descending exponents: "-A^3 + 2 + A^-2". Zero prints "0".
  std::string to_string() const;

 private:
  void add_term(Exponent exponent, const Integer& coefficient);

  TermMap terms_;  // no zero coefficients
};

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q);

// Image of p in Z[A^{+-1}]/(1 - A^d), with every exponent in [0, d).
LaurentPolynomial reduce_cyclic(const LaurentPolynomial& p, Exponent d);

// Inverse of LaurentPolynomial::to_string. Throws PreconditionError on
// malformed input.
LaurentPolynomial parse_laurent(std::string_view text);

// Exact rational with positive denominator in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& numerator, const Integer& denominator);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }

  // "num/den"; the denominator is always printed.
  std::string to_string() const;

 private:
  mpq_class value_;
};

}  // namespace gluckkit
